#include <doctest.h>

#include <numeric>

#include "pstab/counting.hpp"
#include "pstab/errors.hpp"
#include "pstab/oracle.hpp"
#include "support.hpp"

using namespace pstab;

namespace {

using V = std::vector<std::uint32_t>;

PlainTableau tab(std::vector<std::vector<Symbol>> c)
{
    return PlainTableau(std::move(c));
}

// Stirling numbers by inclusion-exclusion: k! S(n,k) = sum (-1)^i C(k,i) (k-i)^n.
Count stirling_ie(unsigned n, unsigned k)
{
    Count sum = 0;
    for (unsigned i = 0; i <= k; ++i) {
        Count term;
        mpz_ui_pow_ui(term.get_mpz_t(), k - i, n);
        term *= Count(static_cast<unsigned long>(ref::binomial(k, i)));
        sum += i % 2 ? -term : term;
    }
    Count kf;
    mpz_fac_ui(kf.get_mpz_t(), k);
    return sum / kf;
}

} // namespace

TEST_CASE("binomial")
{
    CHECK(binomial(3, 2) == 3);
    CHECK(binomial(2, 5) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, -1) == 0);
    for (unsigned n = 0; n <= 30; ++n)
        for (unsigned k = 0; k <= n + 1; ++k)
            CHECK(binomial(n, k) == Count(static_cast<unsigned long>(ref::binomial(n, k))));
    CHECK(binomial(100, 50).get_str() == "100891344545564193334812497256");
}

TEST_CASE("lps bracket")
{
    CHECK(bracket_lps(V{2, 1, 2}, V{1, 1}) == 3);
    CHECK(bracket_lps(V{2, 1, 2}, V{0, 2}) == 2);
    CHECK(bracket_lps(V{2, 1, 2}, V{1, 2}) == 1);
    CHECK(bracket_lps(V{3, 4}, V{0}) == 0);
    CHECK(bracket_lps(V{5}, V{}) == 1);
    CHECK_THROWS_AS(bracket_lps(V{2, 1}, V{}), invalid_input);
}

TEST_CASE("rps bracket")
{
    CHECK(bracket_rps(V{2}, 1, V{0}) == 3);
    CHECK(bracket_rps(V{2}, 1, V{1}) == 3);
    CHECK(bracket_rps(V{5}, 0, V{1}) == 5);
    CHECK(bracket_rps(V{}, 0, V{}) == 1);
    CHECK_THROWS_AS(bracket_rps(V{2, 1}, 0, V{1}), invalid_input);
}

TEST_CASE("worked evaluation counts")
{
    CHECK(count_lps(V{2, 1, 2}) == 15);
    CHECK(count_rps(V{2, 1, 2}) == 9);
    CHECK(count_lps_rec(V{2, 1, 2}) == 15);
    CHECK(count_rps_rec(V{2, 1, 2}) == 9);
    CHECK(count_lps(V{7}) == 1);
    CHECK(count_rps(V{7}) == 1);
    CHECK(count_lps(V{1, 1, 1, 1}) == 15);
    CHECK(count_rps(V{4, 3}) == 4);
    CHECK_THROWS_AS(count_lps(V{}), invalid_input);
    CHECK_THROWS_AS(count_rps(V{0, 0}), invalid_input);
}

TEST_CASE("closed forms agree with the recursions")
{
    for (unsigned total = 1; total <= 10; ++total)
        for (const Shape& m : compositions(total)) {
            if (m.size() > 5)
                continue;
            CHECK(count_lps(m) == count_lps_rec(m));
            CHECK(count_rps(m) == count_rps_rec(m));
        }
}

TEST_CASE("counts ignore zero entries")
{
    CHECK(count_lps(V{0, 2, 0, 1, 2, 0}) == 15);
    CHECK(count_rps(V{2, 0, 1, 2}) == 9);
    CHECK(normalize(V{0, 3, 0, 1}) == V{3, 1});
}

TEST_CASE("rps counts do not depend on the first entry")
{
    for (std::uint32_t a = 1; a <= 6; ++a) {
        CHECK(count_rps(V{a, 1, 2}) == 9);
        CHECK(count_rps(V{a, 2, 2, 1}) == count_rps(V{1, 2, 2, 1}));
    }
}

TEST_CASE("counts match brute force")
{
    for (unsigned total = 1; total <= 7; ++total)
        for (const Shape& m : compositions(total)) {
            if (m.size() > 4)
                continue;
            CHECK(count_lps(m) == count_tableaux_bruteforce(m, Mode::lps));
            CHECK(count_rps(m) == count_tableaux_bruteforce(m, Mode::rps));
        }
}

TEST_CASE("Bell numbers, both routes")
{
    const unsigned long frozen[] = {1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
    for (unsigned n = 1; n <= 10; ++n) {
        CHECK(bell_rowsum(n) == frozen[n - 1]);
        CHECK(bell_hook(n) == frozen[n - 1]);
    }
    for (unsigned n = 1; n <= 20; ++n) {
        const Count b(static_cast<unsigned long>(ref::bell(n)));
        CHECK(bell_rowsum(n) == b);
        CHECK(bell_hook(n) == b);
        const V ones(n, 1);
        CHECK(count_lps(ones) == b);
        CHECK(count_rps(ones) == b);
    }
    for (unsigned n = 1; n <= 16; ++n) {
        const auto terms = bell_rowsum_terms(n);
        CHECK(bell_rowsum(n) == std::accumulate(terms.begin(), terms.end(), Count(0)));
    }
    CHECK(bell_rowsum(30).get_str() == "846749014511809332450147");
    CHECK_THROWS_AS(bell_rowsum_terms(25), budget_exceeded);
    CHECK_THROWS_AS(bell_hook(25), budget_exceeded);
    CHECK_THROWS_AS(bell_rowsum(0), invalid_input);
    CHECK_THROWS_AS(bell_hook(0), invalid_input);
}

TEST_CASE("B4 row-sum terms")
{
    // (p2,p3,p4) in the order 000,100,010,001,011,101,110,111.
    const auto t = bell_rowsum_terms(4);
    REQUIRE(t.size() == 8);
    const std::size_t order[] = {0, 4, 2, 1, 3, 5, 6, 7};
    const int expected[] = {1, 4, 2, 1, 1, 2, 3, 1};
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(t[order[i]] == expected[i]);
    CHECK(bell_rowsum_terms(1) == std::vector<Count>{1});
}

TEST_CASE("Stirling numbers")
{
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 0) == 0);
    CHECK(stirling2(3, 4) == 0);
    CHECK(stirling2(0, 0) == 1);
    for (unsigned n = 1; n <= 15; ++n)
        for (unsigned k = 1; k <= n; ++k)
            CHECK(stirling2(n, k) == stirling_ie(n, k));
}

TEST_CASE("hook counts summed by number of parts give Stirling numbers")
{
    for (unsigned n = 1; n <= 10; ++n) {
        std::vector<Count> by_parts(n + 1, 0);
        for (const Shape& s : compositions(n))
            by_parts[s.size()] += hook_count(n, s);
        for (unsigned k = 1; k <= n; ++k)
            CHECK(by_parts[k] == stirling2(n, k));
    }
}

TEST_CASE("compositions order")
{
    CHECK(compositions(3) == std::vector<Shape>{{3}, {2, 1}, {1, 2}, {1, 1, 1}});
    CHECK(compositions(4) == std::vector<Shape>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 3}, {1, 2, 1}, {1, 1, 2}, {1, 1, 1, 1}});
    for (unsigned n = 1; n <= 12; ++n)
        CHECK(compositions(n).size() == (std::size_t{1} << (n - 1)));
    CHECK_THROWS_AS(compositions(0), invalid_input);
}

TEST_CASE("hook counts for n = 4")
{
    const Shape listed[] = {{4}, {3, 1}, {1, 3}, {2, 2}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}, {1, 1, 1, 1}};
    const int expected[] = {1, 3, 1, 3, 3, 2, 1, 1};
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(hook_count(4, listed[i]) == expected[i]);
    CHECK_THROWS_AS(hook_count(4, V{2, 1}), invalid_input);
    CHECK_THROWS_AS(hook_count(3, V{2, 0, 1}), invalid_input);
}

TEST_CASE("fiber sizes")
{
    CHECK(fiber_size(4, V{3, 1}) == 8);
    CHECK(fiber_size(3, V{3}) == 6);
    CHECK(fiber_size(8, V{1, 3, 2, 2}) == 896);
    CHECK_THROWS_AS(fiber_size(5, V{3, 1}), invalid_input);
    for (unsigned n = 1; n <= 12; ++n)
        for (const Shape& s : compositions(n))
            CHECK(fiber_size(n, s) * hook_count(n, s) == factorial(n));
}

TEST_CASE("sum of squared hook counts bounds n!")
{
    for (unsigned n = 1; n <= 12; ++n) {
        Count squares = 0;
        for (const Shape& s : compositions(n))
            squares += hook_count(n, s) * hook_count(n, s);
        CHECK(factorial(n) <= squares);
    }
}

TEST_CASE("ps_project examples")
{
    CHECK(ps_project(tab({{9}, {8, 5, 4}, {6, 1}, {2, 7}})) == tab({{1}, {2, 4, 5}, {6, 9}, {7, 8}}));
    CHECK(ps_project(tab({{5, 2, 4}})) == tab({{2, 4, 5}}));
    CHECK(ps_project(tab({{2, 5}, {4, 6}})) == tab({{2, 5}, {4, 6}}));
    CHECK(ps_project(PlainTableau()).empty());
    CHECK_THROWS_AS(ps_project(tab({{1, 2}, {1}})), invalid_input);
    const std::vector<Symbol> wrong{1, 2, 3};
    CHECK_THROWS_AS(ps_project(tab({{1, 2}, {4}}), wrong), invalid_input);
}

TEST_CASE("ps_project is idempotent and keeps shape and content")
{
    for (unsigned n = 1; n <= 6; ++n) {
        std::vector<Symbol> a(n);
        std::iota(a.begin(), a.end(), 1u);
        for (const Shape& s : compositions(n)) {
            auto perm = a;
            do {
                std::vector<std::vector<Symbol>> cols;
                std::size_t at = 0;
                for (auto part : s) {
                    cols.emplace_back(perm.begin() + at, perm.begin() + at + part);
                    at += part;
                }
                const PlainTableau t(std::move(cols));
                const PlainTableau w = ps_project(t, a);
                CHECK(classify(w).is_standard_ps);
                CHECK(w.shape() == t.shape());
                CHECK(ps_project(w) == w);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
}
