#include "pstab/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "pstab/correspondence.hpp"
#include "pstab/errors.hpp"
#include "pstab/io.hpp"

namespace pstab {

namespace {

PlainTableau fill_shape(std::span<const Symbol> values, const Shape& shape)
{
    std::vector<std::vector<Symbol>> cols;
    std::size_t at = 0;
    for (auto part : shape) {
        cols.emplace_back(values.begin() + at, values.begin() + at + part);
        at += part;
    }
    return PlainTableau(std::move(cols));
}

std::vector<Symbol> sorted_alphabet(std::span<const Symbol> alphabet)
{
    std::vector<Symbol> a(alphabet.begin(), alphabet.end());
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
        throw invalid_input("alphabet has repeated symbols");
    if (!a.empty() && a.front() == 0)
        throw invalid_input("symbols are positive integers");
    return a;
}

void check_shape_for(const Shape& shape, std::size_t n)
{
    std::size_t total = 0;
    for (auto part : shape) {
        if (part == 0)
            throw invalid_input("shape parts must be positive");
        total += part;
    }
    if (total != n)
        throw invalid_input("shape does not match the alphabet size");
}

void refuse_if(bool over, const std::string& what)
{
    if (over)
        throw budget_exceeded(what);
}

// Every permutation of the sorted alphabet, lexicographically.
template <class Fn>
void for_each_permutation(std::vector<Symbol> a, Fn&& fn)
{
    do {
        fn(std::span<const Symbol>(a));
    } while (std::next_permutation(a.begin(), a.end()));
}

std::set<PlainTableau> insertion_images(std::span<const std::uint32_t> m, Mode mode)
{
    std::set<PlainTableau> images;
    for (const Word& w : words_with_evaluation(m))
        images.insert(ps_insert(w, mode));
    return images;
}

void direct_pstab(std::span<const Symbol> remaining, const Shape& shape, std::size_t column,
                  std::vector<std::vector<Symbol>>& cols, std::vector<PlainTableau>& out)
{
    if (column == shape.size()) {
        out.emplace_back(cols);
        return;
    }
    // The bottom of column i is the least symbol not used by columns 1..i-1.
    const Symbol bottom = remaining.front();
    const auto rest = remaining.subspan(1);
    const std::size_t extra = shape[column] - 1;
    std::vector<bool> pick(rest.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(extra), true);
    do {
        std::vector<Symbol> col{bottom}, left;
        for (std::size_t i = 0; i < rest.size(); ++i)
            (pick[i] ? col : left).push_back(rest[i]);
        cols.push_back(std::move(col));
        direct_pstab(left, shape, column + 1, cols, out);
        cols.pop_back();
    } while (std::prev_permutation(pick.begin(), pick.end()));
}

std::vector<PlainTableau> pstab_of_shape(const std::vector<Symbol>& a, const Shape& shape, PstabRoute route)
{
    std::vector<PlainTableau> out;
    switch (route) {
    case PstabRoute::direct: {
        std::vector<std::vector<Symbol>> cols;
        direct_pstab(a, shape, 0, cols, out);
        break;
    }
    case PstabRoute::filter:
        refuse_if(a.size() > 10, "filtering fillings is limited to 10 symbols");
        for_each_permutation(a, [&](std::span<const Symbol> p) {
            PlainTableau t = fill_shape(p, shape);
            if (classify(t).is_standard_ps)
                out.push_back(std::move(t));
        });
        break;
    case PstabRoute::projection: {
        refuse_if(a.size() > 10, "projecting fillings is limited to 10 symbols");
        std::set<PlainTableau> image;
        for_each_permutation(a, [&](std::span<const Symbol> p) { image.insert(ps_project(fill_shape(p, shape))); });
        out.assign(image.begin(), image.end());
        break;
    }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Word> words_with_evaluation(std::span<const std::uint32_t> m)
{
    Word w;
    for (std::size_t a = 0; a < m.size(); ++a)
        w.insert(w.end(), m[a], static_cast<Symbol>(a + 1));
    if (w.empty())
        throw invalid_input("evaluation must have a positive total");
    std::vector<Word> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

void for_each_word(unsigned alphabet_size, unsigned length, const std::function<void(const Word&)>& fn)
{
    if (alphabet_size == 0)
        throw invalid_input("alphabet must be nonempty");
    Word w(length, 1);
    while (true) {
        fn(w);
        std::size_t i = length;
        while (i > 0 && w[i - 1] == alphabet_size)
            w[--i] = 1;
        if (i == 0)
            return;
        ++w[i - 1];
    }
}

Count count_tableaux_bruteforce(std::span<const std::uint32_t> m, Mode mode, unsigned max_total)
{
    const unsigned total = std::accumulate(m.begin(), m.end(), 0u);
    refuse_if(total > max_total, "evaluation total " + std::to_string(total) + " exceeds the budget of " +
                                     std::to_string(max_total));
    return Count(static_cast<unsigned long>(insertion_images(m, mode).size()));
}

std::vector<PlainTableau> tableaux_of_kind(unsigned alphabet_size, unsigned boxes, Mode mode)
{
    if (boxes == 0)
        return {PlainTableau()};
    std::vector<PlainTableau> out;
    for_each_composition(boxes, [&](const Shape& shape) {
        for_each_word(alphabet_size, boxes, [&](const Word& w) {
            PlainTableau t = fill_shape(w, shape);
            if (classify(t).is_kind(mode))
                out.push_back(std::move(t));
        });
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PlainTableau> enumerate_pstab(std::span<const Symbol> alphabet, const std::optional<Shape>& shape,
                                          PstabRoute route)
{
    const auto a = sorted_alphabet(alphabet);
    if (shape) {
        check_shape_for(*shape, a.size());
        return a.empty() ? std::vector<PlainTableau>{PlainTableau()} : pstab_of_shape(a, *shape, route);
    }
    if (a.empty())
        return {PlainTableau()};
    std::vector<PlainTableau> out;
    for_each_composition(static_cast<unsigned>(a.size()), [&](const Shape& s) {
        auto part = pstab_of_shape(a, s, route);
        out.insert(out.end(), part.begin(), part.end());
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::map<PlainTableau, Count> fiber_tally(std::span<const Symbol> alphabet, const Shape& shape, unsigned max_n)
{
    const auto a = sorted_alphabet(alphabet);
    check_shape_for(shape, a.size());
    refuse_if(a.size() > max_n, "fiber sweep over " + std::to_string(a.size()) + "! fillings exceeds the budget");
    std::map<PlainTableau, unsigned long> tally;
    if (a.empty())
        return {};
    for_each_permutation(a, [&](std::span<const Symbol> p) { ++tally[ps_project(fill_shape(p, shape))]; });
    std::map<PlainTableau, Count> out;
    for (const auto& [t, k] : tally)
        out.emplace(t, Count(k));
    return out;
}

Count fiber_bruteforce(std::span<const Symbol> alphabet, const Shape& shape, const PlainTableau& target,
                       unsigned max_n)
{
    const auto tally = fiber_tally(alphabet, shape, max_n);
    const auto it = tally.find(target);
    return it == tally.end() ? Count(0) : it->second;
}

std::vector<Count> set_partitions_by_blocks(unsigned n, unsigned max_n)
{
    if (n == 0)
        throw invalid_input("set partitions are counted for n >= 1");
    refuse_if(n > max_n, "set partition listing beyond n = " + std::to_string(max_n));
    // Restricted growth strings: g[0] = 0, g[i] <= 1 + max(g[0..i-1]).
    std::vector<unsigned long> by_blocks(n + 1, 0);
    std::vector<unsigned> g(n, 0), peak(n, 0);
    while (true) {
        ++by_blocks[peak[n - 1] + 1];
        std::size_t i = n - 1;
        while (i > 0 && g[i] == peak[i - 1] + 1)
            --i;
        if (i == 0)
            break;
        ++g[i];
        peak[i] = std::max(peak[i - 1], g[i]);
        for (std::size_t k = i + 1; k < n; ++k) {
            g[k] = 0;
            peak[k] = peak[i];
        }
    }
    std::vector<Count> out;
    for (auto v : by_blocks)
        out.emplace_back(v);
    return out;
}

Count set_partitions(unsigned n, unsigned max_n)
{
    const auto by_blocks = set_partitions_by_blocks(n, max_n);
    return std::accumulate(by_blocks.begin(), by_blocks.end(), Count(0));
}

std::map<PlainTableau, std::vector<Word>> insertion_classes(unsigned n, Mode mode)
{
    std::map<PlainTableau, std::vector<Word>> out;
    if (n == 0)
        return out;
    Word sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1u);
    for_each_permutation(sigma, [&](std::span<const Symbol> p) {
        out[ps_insert(p, mode)].emplace_back(p.begin(), p.end());
    });
    return out;
}

// ---------------------------------------------------------------------------
// Verification suite

bool VerificationReport::passed() const
{
    return failures() == 0;
}

std::size_t VerificationReport::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [](const VerificationCase& c) { return !c.pass; }));
}

namespace {

using Cases = std::vector<VerificationCase>;
using Task = std::function<Cases()>;

std::string str(const Count& c)
{
    return c.get_str();
}

std::string shape_str(std::span<const std::uint32_t> s)
{
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + ")";
}

std::string mode_str(Mode m)
{
    return std::string(to_string(m));
}

void add(Cases& cases, std::string suite, std::string input, std::string formula, std::string oracle, bool pass)
{
    cases.push_back({std::move(suite), std::move(input), std::move(formula), std::move(oracle), pass});
}

void add_eq(Cases& cases, std::string suite, std::string input, const Count& formula, const Count& oracle)
{
    add(cases, std::move(suite), std::move(input), str(formula), str(oracle), formula == oracle);
}

// Tally of how many of `total` checks held, as one case.
struct Tally {
    unsigned long total = 0, held = 0;
    void operator()(bool ok)
    {
        ++total;
        held += ok;
    }
    void report(Cases& cases, std::string suite, std::string input) const
    {
        add(cases, std::move(suite), std::move(input), std::to_string(total) + " checked",
            std::to_string(held) + " held", held == total);
    }
};

template <class Fn>
bool holds(Fn&& fn)
{
    try {
        return fn();
    } catch (const std::exception&) {
        return false;
    }
}

std::vector<Symbol> iota_alphabet(unsigned n)
{
    std::vector<Symbol> a(n);
    std::iota(a.begin(), a.end(), 1u);
    return a;
}

constexpr Mode kModes[] = {Mode::lps, Mode::rps};

// ---- counting ------------------------------------------------------------

Cases evaluation_counts(unsigned total, const Budgets& b)
{
    Cases cases;
    Tally zeros, invariance, bounds;
    for (const Shape& m : compositions(total)) {
        if (m.size() > b.count_symbols)
            continue;
        for (Mode mode : kModes) {
            const Count closed = mode == Mode::lps ? count_lps(m) : count_rps(m);
            const Count rec = mode == Mode::lps ? count_lps_rec(m) : count_rps_rec(m);
            const auto images = insertion_images(m, mode);
            const Count brute(static_cast<unsigned long>(images.size()));
            add(cases, "counting/evaluation", mode_str(mode) + " m=" + shape_str(m),
                "closed=" + str(closed) + " rec=" + str(rec), str(brute), closed == rec && rec == brute);

            for (std::size_t at = 0; at <= m.size(); ++at) {
                Evaluation padded = m;
                padded.insert(padded.begin() + static_cast<std::ptrdiff_t>(at), 0u);
                zeros((mode == Mode::lps ? count_lps(padded) : count_rps(padded)) == closed);
            }
            if (mode == Mode::rps && m.size() >= 2)
                for (std::uint32_t a = 1; a <= 3; ++a) {
                    Evaluation shifted = m;
                    shifted[0] = a;
                    invariance(count_rps(shifted) == closed);
                }
            if (mode == Mode::lps) {
                const auto most = *std::max_element(m.begin(), m.end());
                for (const auto& t : images)
                    bounds(t.column_count() >= most && t.column_count() <= total);
            }
        }
    }
    zeros.report(cases, "counting/zero-entries", "total=" + std::to_string(total));
    invariance.report(cases, "counting/rps-first-entry", "total=" + std::to_string(total));
    bounds.report(cases, "counting/lps-bottom-row-bounds", "total=" + std::to_string(total));
    return cases;
}

Cases bell_numbers(unsigned n)
{
    Cases cases;
    const std::vector<std::uint32_t> ones(n, 1);
    const auto by_blocks = set_partitions_by_blocks(n);
    const Count oracle = std::accumulate(by_blocks.begin(), by_blocks.end(), Count(0));
    const Count values[] = {bell_rowsum(n), bell_hook(n), count_lps(ones), count_rps(ones), count_lps_rec(ones),
                            count_rps_rec(ones)};
    const bool agree = std::all_of(std::begin(values), std::end(values), [&](const Count& v) { return v == oracle; });
    add(cases, "bell/routes", "n=" + std::to_string(n),
        "rowsum=" + str(values[0]) + " hook=" + str(values[1]) + " L=" + str(values[2]) + " R=" + str(values[3]),
        str(oracle), agree);

    std::vector<Count> by_parts(n + 1, 0);
    for_each_composition(n, [&](const Shape& s) { by_parts[s.size()] += hook_count(n, s); });
    for (unsigned k = 1; k <= n; ++k)
        add(cases, "bell/stirling", "n=" + std::to_string(n) + " k=" + std::to_string(k),
            "hooks=" + str(by_parts[k]) + " S=" + str(stirling2(n, k)), str(by_blocks[k]),
            by_parts[k] == by_blocks[k] && stirling2(n, k) == by_blocks[k]);
    return cases;
}

Cases hook_formula(unsigned n)
{
    Cases cases;
    const auto a = iota_alphabet(n);
    for_each_composition(n, [&](const Shape& s) {
        const auto direct = enumerate_pstab(a, s, PstabRoute::direct);
        const auto filter = enumerate_pstab(a, s, PstabRoute::filter);
        const auto image = enumerate_pstab(a, s, PstabRoute::projection);
        const Count h = hook_count(n, s);
        add(cases, "hook/enumeration", "n=" + std::to_string(n) + " shape=" + shape_str(s), str(h),
            std::to_string(direct.size()) + (direct == filter && filter == image ? "" : " (routes disagree)"),
            h == Count(static_cast<unsigned long>(direct.size())) && direct == filter && filter == image);
    });
    return cases;
}

Cases hook_identities(unsigned n)
{
    Cases cases;
    Count squares = 0;
    Tally product;
    for_each_composition(n, [&](const Shape& s) {
        const Count h = hook_count(n, s);
        squares += h * h;
        product(fiber_size(n, s) * h == factorial(n));
    });
    product.report(cases, "hook/fiber-times-hook", "n=" + std::to_string(n));
    add(cases, "hook/square-sum-bound", "n=" + std::to_string(n), "sum h^2=" + str(squares), "n!=" + str(factorial(n)),
        factorial(n) <= squares);
    return cases;
}

Cases fiber_uniformity(unsigned n)
{
    Cases cases;
    const auto a = iota_alphabet(n);
    for_each_composition(n, [&](const Shape& s) {
        const auto tally = fiber_tally(a, s);
        const Count expected = fiber_size(n, s);
        bool uniform = true, fixed = true;
        for (const auto& [t, k] : tally) {
            uniform = uniform && k == expected;
            fixed = fixed && classify(t).is_standard_ps && ps_project(t) == t;
        }
        add(cases, "fiber/uniform", "n=" + std::to_string(n) + " shape=" + shape_str(s),
            str(expected) + " x " + str(hook_count(n, s)),
            std::to_string(tally.size()) + " targets" + (uniform ? "" : ", sizes differ") + (fixed ? "" : ", not fixed"),
            uniform && fixed && Count(static_cast<unsigned long>(tally.size())) == hook_count(n, s));
    });
    return cases;
}

Cases standard_bijection(unsigned n)
{
    Cases cases;
    const auto a = iota_alphabet(n);
    std::set<PlainPair> stable;
    for_each_composition(n, [&](const Shape& s) {
        const auto tabs = enumerate_pstab(a, s);
        for (const auto& p : tabs)
            for (const auto& q : tabs) {
                PlainPair pair{p, q};
                if (is_stable_pair(pair, Mode::lps, StablePairLevel::standard))
                    stable.insert(std::move(pair));
            }
    });
    for (Mode mode : kModes) {
        std::set<PlainPair> image;
        unsigned long words = 0;
        for_each_permutation(a, [&](std::span<const Symbol> p) {
            image.insert(extended_insert(p, mode));
            ++words;
        });
        add(cases, "bijection/standard", mode_str(mode) + " n=" + std::to_string(n),
            "stable pairs=" + std::to_string(stable.size()),
            "images=" + std::to_string(image.size()) + " of " + std::to_string(words) +
                (image == stable ? "" : " (sets differ)"),
            image.size() == words && image == stable && Count(words) == factorial(n));
    }
    return cases;
}

Cases insertion_image(unsigned n, const Budgets& b)
{
    Cases cases;
    const auto lps = insertion_classes(n, Mode::lps);
    const auto rps = insertion_classes(n, Mode::rps);
    bool same = lps.size() == rps.size();
    for (auto i = lps.begin(), j = rps.begin(); same && i != lps.end(); ++i, ++j)
        same = i->first == j->first;
    add(cases, "image/bell", "n=" + std::to_string(n), std::to_string(lps.size()) + (same ? "" : " (modes differ)"),
        str(set_partitions(n)), same && Count(static_cast<unsigned long>(lps.size())) == set_partitions(n));

    if (n <= b.fiber_n) {
        Tally bound;
        unsigned long strict = 0;
        for (const auto& [t, words] : lps) {
            const Count h = hook_count(n, t.shape());
            const Count size(static_cast<unsigned long>(words.size()));
            bound(size <= h);
            strict += size < h;
        }
        bound.report(cases, "image/fiber-bound", "n=" + std::to_string(n));
        // Strictness needs sum h^2 > n!, which first happens at n = 3.
        add(cases, "image/fiber-bound-strict", "n=" + std::to_string(n), n >= 3 ? "some" : "none required",
            std::to_string(strict), n < 3 || strict > 0);
    }
    return cases;
}

// ---- bijections over {1,2,3} --------------------------------------------

Cases word_level(unsigned k, Mode mode)
{
    Cases cases;
    const std::string where = mode_str(mode) + " length=" + std::to_string(k);
    Tally roundtrip, shape_ok;
    for_each_word(3, k, [&](const Word& w) {
        roundtrip(holds([&] { return rsk_inverse_word(rsk(w, mode), mode) == w; }));
        const auto pair = rsk(w, mode);
        const auto pc = classify(pair.p);
        shape_ok(pc.is_kind(mode) && classify(pair.q).is_recording && pair.p.shape() == pair.q.shape() &&
                 pair.p.content() == [&] {
                     Word s = w;
                     std::sort(s.begin(), s.end());
                     return s;
                 }());
    });
    roundtrip.report(cases, "words/roundtrip", where);
    shape_ok.report(cases, "words/insertion-output", where);

    unsigned long members = 0, hit = 0;
    const auto a = iota_alphabet(k);
    std::map<Shape, std::vector<PlainTableau>> recordings;
    for (const auto& p : tableaux_of_kind(3, k, mode)) {
        auto [it, fresh] = recordings.try_emplace(p.shape());
        if (fresh && k > 0)
            it->second = enumerate_pstab(a, p.shape());
        if (k == 0)
            it->second = {PlainTableau()};
        for (const auto& q : it->second) {
            const PlainPair pair{p, q};
            if (!holds([&] { return is_stable_pair(pair, mode, StablePairLevel::word); }))
                continue;
            ++members;
            hit += holds([&] { return rsk(rsk_inverse_word(pair, mode), mode) == pair; });
        }
    }
    unsigned long words = 1;
    for (unsigned i = 0; i < k; ++i)
        words *= 3;
    add(cases, "words/stable-pairs", where, "3^k=" + std::to_string(words),
        std::to_string(members) + " members, " + std::to_string(hit) + " hit", members == words && hit == members);
    return cases;
}

std::vector<Array> arrays_over_three(unsigned k, Mode mode)
{
    std::vector<Array> out;
    for_each_word(3, k, [&](const Word& u) {
        if (!std::is_sorted(u.begin(), u.end()))
            return;
        for_each_word(3, k, [&](const Word& v) {
            Array arr(u, v);
            if (arr.is_ordered_for(mode))
                out.push_back(std::move(arr));
        });
    });
    return out;
}

Cases array_level(unsigned k, Mode mode)
{
    Cases cases;
    const std::string where = mode_str(mode) + " length=" + std::to_string(k);
    const auto arrays = arrays_over_three(k, mode);
    Tally forward;
    for (const auto& arr : arrays)
        forward(holds([&] { return rsk_inverse_array(rsk(arr, mode), mode) == arr; }));
    forward.report(cases, "arrays/roundtrip", where);

    std::map<Shape, std::vector<PlainTableau>> by_shape;
    for (auto& t : tableaux_of_kind(3, k, mode))
        by_shape[t.shape()].push_back(std::move(t));
    unsigned long members = 0, back = 0;
    for (const auto& [shape, tabs] : by_shape)
        for (const auto& p : tabs)
            for (const auto& q : tabs) {
                const PlainPair pair{p, q};
                if (!holds([&] { return is_stable_pair(pair, mode, StablePairLevel::array); }))
                    continue;
                ++members;
                back += holds([&] { return rsk(rsk_inverse_array(pair, mode), mode) == pair; });
            }
    add(cases, "arrays/stable-pairs", where, std::to_string(arrays.size()) + " arrays",
        std::to_string(members) + " members, " + std::to_string(back) + " roundtrip",
        members == arrays.size() && back == members);
    return cases;
}

// ---- standardization laws ------------------------------------------------

Cases word_laws(unsigned k, Mode mode)
{
    Cases cases;
    const std::string where = mode_str(mode) + " length=" + std::to_string(k);
    const Direction dir = direction_of(mode);
    Tally std_insert, destd_insert, positions, recording, labelled;
    for_each_word(3, k, [&](const Word& w) {
        const StdWord s = standardize(w, dir);
        const auto plain = extended_insert(w, mode);
        const auto indexed = extended_insert(s, mode);
        std_insert(indexed.p == standardize_tableau(plain.p, mode));
        destd_insert(destandardize_tableau(indexed.p) == plain.p);
        positions(final_positions(w, mode) == final_positions(s, mode));
        recording(indexed.q == plain.q);
        labelled(array_insert(Array(iota_alphabet(k), w), mode) == plain);
    });
    std_insert.report(cases, "laws/std-of-insertion", where);
    destd_insert.report(cases, "laws/destd-of-insertion", where);
    positions.report(cases, "laws/equivalent-positions", where);
    recording.report(cases, "laws/equal-recording", where);
    labelled.report(cases, "laws/identity-top-row", where);

    // Every indexed word inserting to Std(R) is itself a standardization.
    if (k <= 4) {
        Tally form;
        std::set<PlainTableau> seen;
        for_each_word(3, k, [&](const Word& w) {
            const PlainTableau r = ps_insert(w, mode);
            if (!seen.insert(r).second)
                return;
            const StdTableau target = standardize_tableau(r, mode);
            auto letters = target.content();
            do {
                if (ps_insert(letters, mode) != target)
                    continue;
                const Word base = destandardize(letters);
                form(standardize(base, dir) == letters);
            } while (std::next_permutation(letters.begin(), letters.end()));
        });
        form.report(cases, "laws/preimages-are-standardized", where);
    }
    return cases;
}

Cases array_laws(unsigned k, Mode mode)
{
    Cases cases;
    const std::string where = mode_str(mode) + " length=" + std::to_string(k);
    const Direction dir = direction_of(mode);
    Tally q_laws, p_laws;
    for (const auto& arr : arrays_over_three(k, mode)) {
        const StdWord su = standardize(arr.top, Direction::left);
        const StdWord sv = standardize(arr.bottom, dir);
        const auto plain = array_insert(arr, mode);
        const auto top_std = array_insert(TwoRowedArray<StdSymbol, Symbol>(su, arr.bottom), mode);
        const auto both_std = array_insert(TwoRowedArray<StdSymbol, StdSymbol>(su, sv), mode);
        const auto bottom_std = array_insert(TwoRowedArray<Symbol, StdSymbol>(arr.top, sv), mode);
        const StdTableau q = standardize_tableau(plain.q, mode);
        const StdTableau p = standardize_tableau(plain.p, mode);
        q_laws(q == top_std.q && top_std.q == both_std.q);
        p_laws(p == both_std.p && both_std.p == bottom_std.p);
    }
    q_laws.report(cases, "laws/array-recording", where);
    p_laws.report(cases, "laws/array-insertion", where);
    return cases;
}

Cases pattern_symmetry(unsigned k)
{
    Cases cases;
    Tally same;
    const DashedPattern patterns[] = {DashedPattern::parse("31-2"), DashedPattern::parse("13-2"),
                                      DashedPattern::parse("23-1"), DashedPattern::parse("32-1")};
    for_each_permutation(iota_alphabet(k), [&](std::span<const Symbol> p) {
        Word relabelled(p.begin(), p.end());
        for (auto& x : relabelled)
            x = 2 * x + 3;
        for (const auto& pat : patterns)
            same(occurrences(p, pat) == occurrences(std::span<const Symbol>(relabelled), pat));
    });
    same.report(cases, "patterns/relabelling", "length=" + std::to_string(k));
    return cases;
}

// ---- fixed examples ------------------------------------------------------

PlainTableau tab(std::vector<std::vector<Symbol>> cols)
{
    return PlainTableau(std::move(cols));
}

Cases golden()
{
    Cases cases;
    const auto check = [&](std::string suite, std::string input, std::string expected, std::string got) {
        const bool pass = expected == got;
        add(cases, std::move(suite), std::move(input), std::move(expected), std::move(got), pass);
    };

    const Word w{4, 6, 2, 3, 2, 1, 4};
    const PlainPair golden_w{tab({{1, 2, 4}, {2, 3, 6}, {4}}), tab({{1, 3, 6}, {2, 4, 5}, {7}})};
    check("golden/insert", "lps 4623214", format_pair(golden_w), format_pair(rsk(w, Mode::lps)));
    check("golden/unrsk-word", format_pair(golden_w), format_word(w),
          format_word(holds([&] { return rsk_inverse_word(golden_w, Mode::lps) == w; }) ? w : Word{}));

    const Array golden_a({1, 1, 2, 3, 3, 3, 4}, {3, 4, 2, 1, 1, 2, 3});
    const PlainPair golden_a_pair{tab({{1, 2, 3}, {1, 4}, {2}, {3}}), tab({{1, 2, 3}, {1, 3}, {3}, {4}})};
    check("golden/rsk-array", "lps " + format_array(golden_a), format_pair(golden_a_pair), format_pair(rsk(golden_a, Mode::lps)));
    check("golden/unrsk-array", format_pair(golden_a_pair), format_array(golden_a),
          format_array(reverse_insertion(golden_a_pair, Mode::lps)));

    const PlainPair worked{tab({{1}, {1, 2}, {2}, {2, 3}, {3}, {3}}), tab({{1}, {1, 2}, {1}, {2, 3}, {4}, {4}})};
    check("golden/unrsk-array", format_pair(worked), "1 1 1 2 2 3 4 4 / 1 2 2 1 3 2 3 3",
          holds([&] { return is_stable_pair(worked, Mode::lps, StablePairLevel::array); })
              ? format_array(rsk_inverse_array(worked, Mode::lps))
              : "rejected");

    // Word-level counterexample: readable, but the reading inserts elsewhere.
    const PlainPair bad_word{tab({{1, 2, 3}, {1}}), tab({{1, 3, 4}, {2}})};
    const Word extracted = read_by_recording(bad_word);
    check("counterexample/word", format_pair(bad_word), "rejected; 3 1 2 1 inserts to ([[1,3],[1,2]], [[1,2],[3,4]])",
          std::string(is_stable_pair(bad_word, Mode::lps, StablePairLevel::word) ? "accepted" : "rejected") + "; " +
              format_word(extracted) + " inserts to " + format_pair(rsk(extracted, Mode::lps)));

    const PlainPair bad_array{tab({{1, 2, 3}, {1}}), tab({{1, 2, 3}, {1}})};
    // The extraction is not an l-array, so it is inserted without the ordering check.
    const Array bad_extracted = reverse_insertion(bad_array, Mode::lps);
    check("counterexample/array", format_pair(bad_array),
          "rejected; 1 1 2 3 / 3 1 2 1 inserts to ([[1,3],[1,2]], [[1,1],[2,3]])",
          std::string(is_stable_pair(bad_array, Mode::lps, StablePairLevel::array) ? "accepted" : "rejected") +
              "; " + format_array(bad_extracted) + " inserts to " +
              format_pair(detail::insert_with_labels<Symbol, Symbol>(bad_extracted.bottom, bad_extracted.top,
                                                                      Mode::lps)));

    const PlainTableau t = tab({{2, 5}, {4, 6}});
    std::string hits;
    for (const Word& sigma : {Word{5, 2, 6, 4}, Word{5, 6, 2, 4}, Word{5, 6, 4, 2}})
        hits += format_word(sigma) + (ps_insert(sigma, Mode::lps) == t ? " yes; " : " no; ");
    check("counterexample/fiber-bound", "T=" + format_columns(t), "5 2 6 4 yes; 5 6 2 4 yes; 5 6 4 2 no; ", hits);

    const PlainTableau pre = tab({{9}, {8, 5, 4}, {6, 1}, {2, 7}});
    check("golden/projection", format_columns(pre), "[[1],[2,4,5],[6,9],[7,8]]", format_columns(ps_project(pre)));

    check("golden/brackets", "lps (2,1,2) j=(1,1),(0,2); rps (2) j1=1 j=(0),(1)", "3 2 3 3",
          str(bracket_lps(std::vector<std::uint32_t>{2, 1, 2}, std::vector<std::uint32_t>{1, 1})) + " " +
              str(bracket_lps(std::vector<std::uint32_t>{2, 1, 2}, std::vector<std::uint32_t>{0, 2})) + " " +
              str(bracket_rps(std::vector<std::uint32_t>{2}, 1, std::vector<std::uint32_t>{0})) + " " +
              str(bracket_rps(std::vector<std::uint32_t>{2}, 1, std::vector<std::uint32_t>{1})));
    check("golden/counts", "L(2,1,2) R(2,1,2)", "15 9",
          str(count_lps(std::vector<std::uint32_t>{2, 1, 2})) + " " + str(count_rps(std::vector<std::uint32_t>{2, 1, 2})));

    // Listed by number of parts, not in the enumeration order of compositions().
    const Shape listed[] = {{4}, {3, 1}, {1, 3}, {2, 2}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}, {1, 1, 1, 1}};
    std::string hooks;
    for (const Shape& s : listed)
        hooks += str(hook_count(4, s)) + " ";
    check("golden/hooks", "n=4", "1 3 1 3 3 2 1 1 ", hooks);

    auto terms = bell_rowsum_terms(4);
    std::sort(terms.begin(), terms.end());
    std::string term_str;
    for (const auto& x : terms)
        term_str += str(x) + " ";
    check("golden/bell-terms", "n=4", "1 1 1 1 2 2 3 4 ", term_str);

    const std::vector<Symbol> b{2, 4, 5};
    check("golden/pstab", "{2,4,5}", "2 5",
          std::to_string(enumerate_pstab(b, Shape{2, 1}).size()) + " " +
              std::to_string(enumerate_pstab(b, std::nullopt).size()));
    return cases;
}

Cases large_fiber()
{
    Cases cases;
    const PlainTableau pre = tab({{9}, {8, 5, 4}, {6, 1}, {2, 7}});
    const std::vector<Symbol> b{1, 2, 4, 5, 6, 7, 8, 9};
    add_eq(cases, "fiber/worked-example", "W(" + format_columns(pre) + ")", fiber_size(8, Shape{1, 3, 2, 2}),
           fiber_bruteforce(b, Shape{1, 3, 2, 2}, ps_project(pre)));
    return cases;
}

std::vector<Task> plan(const VerifyOptions& o)
{
    const Budgets& b = o.budgets;
    const unsigned n = o.max_n;
    auto cap = [&](unsigned budget) { return std::min(n, budget); };
    std::vector<Task> tasks;
    tasks.push_back(golden);
    for (unsigned t = 1; t <= cap(b.count_total); ++t)
        tasks.push_back([t, b] { return evaluation_counts(t, b); });
    for (unsigned k = 1; k <= cap(b.bell_n); ++k)
        tasks.push_back([k] { return bell_numbers(k); });
    for (unsigned k = 1; k <= cap(b.pstab_n); ++k)
        tasks.push_back([k] { return hook_formula(k); });
    for (unsigned k = 1; k <= cap(b.formula_n); ++k)
        tasks.push_back([k] { return hook_identities(k); });
    for (unsigned k = 1; k <= cap(b.fiber_n); ++k)
        tasks.push_back([k] { return fiber_uniformity(k); });
    if (n >= 8)
        tasks.push_back(large_fiber);
    for (unsigned k = 1; k <= cap(b.bijection_n); ++k)
        tasks.push_back([k] { return standard_bijection(k); });
    for (unsigned k = 1; k <= cap(b.image_n); ++k)
        tasks.push_back([k, b] { return insertion_image(k, b); });
    for (Mode mode : kModes) {
        for (unsigned k = 0; k <= cap(b.word_length); ++k)
            tasks.push_back([k, mode] { return word_level(k, mode); });
        for (unsigned k = 0; k <= cap(b.array_length); ++k)
            tasks.push_back([k, mode] { return array_level(k, mode); });
        for (unsigned k = 0; k <= cap(b.law_length); ++k) {
            tasks.push_back([k, mode] { return word_laws(k, mode); });
            tasks.push_back([k, mode] { return array_laws(k, mode); });
        }
    }
    for (unsigned k = 1; k <= cap(5); ++k)
        tasks.push_back([k] { return pattern_symmetry(k); });
    if (o.inject_failure)
        tasks.push_back([] {
            Cases c;
            add(c, "injected", "deliberate mismatch", "1", "2", false);
            return c;
        });
    return tasks;
}

} // namespace

VerificationReport verify_suite(const VerifyOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    const auto tasks = plan(options);
    std::vector<Cases> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = tasks[i]();
            } catch (const std::exception& e) {
                results[i] = {{"error", "task " + std::to_string(i), "no exception", e.what(), false}};
            }
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    VerificationReport report;
    report.name = "pstab verify (max n = " + std::to_string(options.max_n) + ")";
    for (auto& r : results)
        report.cases.insert(report.cases.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string to_text(const VerificationReport& report)
{
    std::ostringstream out;
    out << report.name << '\n';
    for (const auto& c : report.cases)
        out << (c.pass ? "PASS " : "FAIL ") << c.suite << " [" << c.input << "] formula: " << c.formula
            << " oracle: " << c.oracle << '\n';
    out << (report.passed() ? "all " : "") << report.cases.size() - report.failures() << '/' << report.cases.size()
        << " passed";
    out.setf(std::ios::fixed);
    out.precision(3);
    out << " in " << report.elapsed_seconds << " s\n";
    return out.str();
}

nlohmann::json to_json(const VerificationReport& report)
{
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : report.cases)
        cases.push_back({{"suite", c.suite}, {"input", c.input}, {"formula", c.formula}, {"oracle", c.oracle},
                         {"pass", c.pass}});
    return {{"name", report.name},
            {"passed", report.passed()},
            {"failures", report.failures()},
            {"elapsed_seconds", report.elapsed_seconds},
            {"cases", std::move(cases)}};
}

} // namespace pstab
