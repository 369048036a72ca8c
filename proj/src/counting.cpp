#include "pstab/counting.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pstab {

namespace {

unsigned shape_total(std::span<const std::uint32_t> shape)
{
    unsigned total = 0;
    for (auto part : shape) {
        if (part == 0)
            throw invalid_input("shape parts must be positive");
        total += part;
    }
    return total;
}

void check_shape(unsigned n, std::span<const std::uint32_t> shape)
{
    if (n == 0)
        throw invalid_input("alphabet size must be at least 1");
    if (shape_total(shape) != n)
        throw invalid_input("shape does not sum to " + std::to_string(n));
}

Evaluation positive_or_throw(std::span<const std::uint32_t> m)
{
    Evaluation ev = normalize(m);
    if (ev.empty())
        throw invalid_input("evaluation has no nonzero entry");
    return ev;
}

// Visits every vector j with 0 <= j[i] <= bound[i].
template <class Fn>
void for_each_bounded(std::span<const std::uint32_t> bound, Fn&& fn)
{
    std::vector<std::uint32_t> j(bound.size(), 0);
    while (true) {
        fn(std::span<const std::uint32_t>(j));
        std::size_t i = 0;
        while (i < j.size() && j[i] == bound[i])
            j[i++] = 0;
        if (i == j.size())
            return;
        ++j[i];
    }
}

Count lps_rec(std::uint32_t first, std::span<const std::uint32_t> rest)
{
    if (rest.empty())
        return 1;
    Count total = 0;
    for (std::uint32_t j2 = 0; j2 <= rest[0]; ++j2)
        total += binomial(first, static_cast<long long>(rest[0]) - j2) *
                 lps_rec(first + j2, rest.subspan(1));
    return total;
}

Count rps_rec(std::span<const std::uint32_t> m)
{
    if (m.size() <= 1)
        return 1;
    // j_2 = 0: the symbols 2 sit on the first column, leaving R(m_2, ..., m_n).
    Count total = rps_rec(m.subspan(1));
    // j_2 = 1: a column starting with 2, the other m_2 - 1 copies on the first one.
    const auto tail = m.subspan(2);
    const std::vector<std::uint32_t> ones(tail.size(), 1);
    for_each_bounded(ones, [&](std::span<const std::uint32_t> j) {
        total += Count(m[1]) * bracket_rps(tail, 1, j);
    });
    return total;
}

void compositions_rec(unsigned remaining, Shape& prefix,
                      const std::function<void(const Shape&)>& fn)
{
    if (remaining == 0) {
        fn(prefix);
        return;
    }
    for (unsigned first = remaining; first >= 1; --first) {
        prefix.push_back(first);
        compositions_rec(remaining - first, prefix, fn);
        prefix.pop_back();
    }
}

} // namespace

Count binomial(long long m, long long k)
{
    if (k < 0 || m < 0 || k > m)
        return 0;
    Count out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    return out;
}

Count factorial(unsigned n)
{
    Count out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Evaluation normalize(std::span<const std::uint32_t> m)
{
    Evaluation out;
    std::copy_if(m.begin(), m.end(), std::back_inserter(out), [](auto x) { return x != 0; });
    return out;
}

Count bracket_lps(std::span<const std::uint32_t> m, std::span<const std::uint32_t> j)
{
    if (m.empty() || j.size() + 1 != m.size())
        throw invalid_input("lps bracket needs j of length |m| - 1");
    Count product = 1;
    long long columns = m[0];
    for (std::size_t a = 1; a < m.size(); ++a) {
        product *= binomial(columns, static_cast<long long>(m[a]) - j[a - 1]);
        if (product == 0)
            return 0;
        columns += j[a - 1];
    }
    return product;
}

Count bracket_rps(std::span<const std::uint32_t> tail, std::uint32_t j1,
                  std::span<const std::uint32_t> j)
{
    if (j.size() != tail.size())
        throw invalid_input("rps bracket needs j of the same length as the tail");
    Count product = 1;
    long long offset = j1;
    for (std::size_t a = 0; a < tail.size(); ++a) {
        product *= binomial(tail[a] + offset, static_cast<long long>(tail[a]) - j[a]);
        if (product == 0)
            return 0;
        offset += j[a];
    }
    return product;
}

Count count_lps(std::span<const std::uint32_t> m)
{
    const Evaluation ev = positive_or_throw(m);
    const std::span<const std::uint32_t> all(ev);
    Count total = 0;
    for_each_bounded(all.subspan(1), [&](std::span<const std::uint32_t> j) {
        total += bracket_lps(all, j);
    });
    return total;
}

Count count_rps(std::span<const std::uint32_t> m)
{
    const Evaluation ev = positive_or_throw(m);
    const auto tail = std::span<const std::uint32_t>(ev).subspan(1);
    const std::vector<std::uint32_t> ones(tail.size(), 1);
    Count total = 0;
    for_each_bounded(ones, [&](std::span<const std::uint32_t> j) {
        total += bracket_rps(tail, 0, j);
    });
    return total;
}

Count count_lps_rec(std::span<const std::uint32_t> m)
{
    const Evaluation ev = positive_or_throw(m);
    return lps_rec(ev[0], std::span<const std::uint32_t>(ev).subspan(1));
}

Count count_rps_rec(std::span<const std::uint32_t> m)
{
    const Evaluation ev = positive_or_throw(m);
    return rps_rec(ev);
}

std::vector<Count> bell_rowsum_terms(unsigned n, unsigned max_n)
{
    if (n == 0)
        throw invalid_input("Bell numbers are indexed from 1");
    if (n > max_n)
        throw budget_exceeded("listing 2^" + std::to_string(n - 1) + " row-sum terms");
    const unsigned free_bits = n - 1;
    std::vector<Count> terms;
    terms.reserve(std::size_t{1} << free_bits);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << free_bits); ++code) {
        // p[0] is p_2, ..., p[n-2] is p_n.
        std::vector<unsigned> p(free_bits);
        for (unsigned b = 0; b < free_bits; ++b)
            p[b] = (code >> (free_bits - 1 - b)) & 1u;
        Count term = 1;
        unsigned base = 1;
        for (unsigned a = 1; a < free_bits; ++a) {
            base += p[a - 1];
            if (p[a] == 0)
                term *= base;
        }
        terms.push_back(term);
    }
    return terms;
}

Count bell_rowsum(unsigned n)
{
    if (n == 0)
        throw invalid_input("Bell numbers are indexed from 1");
    // by_base[b] = sum of the partial products whose running base 1 + p_2 + ... is b.
    // p_2 only raises the base; each later p_a either raises it or multiplies by it.
    std::vector<Count> by_base(n + 2, 0);
    by_base[1] = 1;
    if (n >= 2)
        by_base[2] = 1;
    for (unsigned a = 3; a <= n; ++a)
        for (unsigned b = a; b >= 1; --b)
            by_base[b] = by_base[b] * b + by_base[b - 1];
    return std::accumulate(by_base.begin(), by_base.end(), Count(0));
}

Count stirling2(unsigned n, unsigned k)
{
    if (k == 0 || k > n)
        return n == 0 && k == 0 ? 1 : 0;
    // Row-by-row recurrence S(i, c) = c S(i-1, c) + S(i-1, c-1).
    std::vector<Count> row(k + 1, 0);
    row[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned c = std::min(i, k); c >= 1; --c)
            row[c] = Count(c) * row[c] + row[c - 1];
        row[0] = 0;
    }
    return row[k];
}

std::vector<Shape> compositions(unsigned n)
{
    std::vector<Shape> out;
    for_each_composition(n, [&](const Shape& s) { out.push_back(s); });
    return out;
}

void for_each_composition(unsigned n, const std::function<void(const Shape&)>& fn)
{
    if (n == 0)
        throw invalid_input("compositions are taken of n >= 1");
    Shape prefix;
    compositions_rec(n, prefix, fn);
}

Count hook_count(unsigned n, std::span<const std::uint32_t> shape)
{
    check_shape(n, shape);
    Count denominator = 1;
    unsigned used = 0;
    for (std::size_t i = 0; i + 1 < shape.size(); ++i) {
        used += shape[i];
        denominator *= n - used;
    }
    for (auto part : shape)
        denominator *= factorial(part - 1);
    const Count numerator = factorial(n - 1);
    if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()))
        throw internal_error("hook count division is not exact");
    return numerator / denominator;
}

Count fiber_size(unsigned n, std::span<const std::uint32_t> shape)
{
    check_shape(n, shape);
    Count product = 1;
    unsigned used = 0;
    for (auto part : shape) {
        product *= n - used;
        used += part;
    }
    for (auto part : shape)
        product *= factorial(part - 1);
    return product;
}

Count bell_hook(unsigned n, unsigned max_n)
{
    if (n == 0)
        throw invalid_input("Bell numbers are indexed from 1");
    if (n > max_n)
        throw budget_exceeded("summing over 2^" + std::to_string(n - 1) + " compositions");
    Count total = 0;
    for_each_composition(n, [&](const Shape& s) { total += hook_count(n, s); });
    return total;
}

PlainTableau ps_project(const PlainTableau& t)
{
    if (!classify(t).is_pre)
        throw invalid_input("projection needs a pre-tableau with distinct entries");
    auto cols = t.columns();
    for (std::size_t i = 0; i < cols.size(); ++i) {
        std::size_t best_c = i, best_r = 0;
        for (std::size_t c = i; c < cols.size(); ++c)
            for (std::size_t r = 0; r < cols[c].size(); ++r)
                if (cols[c][r] < cols[best_c][best_r]) {
                    best_c = c;
                    best_r = r;
                }
        std::swap(cols[best_c][best_r], cols[i][0]);
        std::sort(cols[i].begin(), cols[i].end());
    }
    return PlainTableau(std::move(cols));
}

PlainTableau ps_project(const PlainTableau& t, std::span<const Symbol> alphabet)
{
    const auto content = t.content();
    if (!std::equal(content.begin(), content.end(), alphabet.begin(), alphabet.end()))
        throw invalid_input("tableau content differs from the alphabet");
    return ps_project(t);
}

} // namespace pstab
