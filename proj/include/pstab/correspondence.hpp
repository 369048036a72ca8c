#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pstab/errors.hpp"
#include "pstab/insertion.hpp"
#include "pstab/mode.hpp"
#include "pstab/tableau.hpp"
#include "pstab/words.hpp"

namespace pstab {

/// A dashed permutation pattern such as 31-2: letters inside a block must be
/// matched by adjacent positions, a dash allows (but does not require) a gap.
class DashedPattern {
public:
    explicit DashedPattern(std::vector<std::vector<std::uint32_t>> blocks);

    // Parses literals like "31-2" or "2-31".
    static DashedPattern parse(std::string_view text);

    const std::vector<std::vector<std::uint32_t>>& blocks() const { return blocks_; }
    std::vector<std::uint32_t> letters() const;
    std::size_t length() const;
    std::string to_string() const;

    friend bool operator==(const DashedPattern&, const DashedPattern&) = default;

private:
    std::vector<std::vector<std::uint32_t>> blocks_;
};

namespace detail {

// a and the pattern letters p are order isomorphic (all entries distinct).
template <class S>
bool order_isomorphic(std::span<const S> a, std::span<const std::uint32_t> p)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if ((a[i] < a[j]) != (p[i] < p[j]))
                return false;
    return true;
}

template <class S>
void collect_occurrences(std::span<const S> w, const DashedPattern& pat, std::size_t block,
                         std::size_t from, std::vector<std::size_t>& chosen,
                         const std::vector<std::uint32_t>& letters,
                         std::vector<std::vector<std::size_t>>& out)
{
    if (block == pat.blocks().size()) {
        std::vector<S> sub;
        for (std::size_t i : chosen)
            sub.push_back(w[i]);
        if (order_isomorphic<S>(sub, letters))
            out.push_back(chosen);
        return;
    }
    const std::size_t len = pat.blocks()[block].size();
    for (std::size_t start = from; start + len <= w.size(); ++start) {
        for (std::size_t k = 0; k < len; ++k)
            chosen.push_back(start + k);
        collect_occurrences(w, pat, block + 1, start + len, chosen, letters, out);
        chosen.resize(chosen.size() - len);
    }
}

} // namespace detail

/// Every occurrence of pat in w, as increasing 0-based index tuples in
/// lexicographic order. w must not repeat a symbol.
template <class S>
std::vector<std::vector<std::size_t>> occurrences(std::span<const S> w, const DashedPattern& pat)
{
    if (!is_standard(w))
        throw invalid_input("pattern occurrences need a word without repeated symbols");
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> chosen;
    const auto letters = pat.letters();
    detail::collect_occurrences(w, pat, 0, 0, chosen, letters, out);
    return out;
}

template <class S>
std::vector<std::vector<std::size_t>> occurrences(const BasicWord<S>& w, const DashedPattern& pat)
{
    return occurrences(std::span<const S>(w), pat);
}

enum class StablePairLevel { standard, word, array };

StablePairLevel parse_level(std::string_view s);
std::string_view to_string(StablePairLevel level);

// Forbidden simultaneous pattern pairs on (reading of P, reading of Q').
inline const std::array<std::pair<std::array<std::uint32_t, 3>, std::array<std::uint32_t, 3>>, 3>&
forbidden_pattern_pairs()
{
    static const std::array<std::pair<std::array<std::uint32_t, 3>, std::array<std::uint32_t, 3>>, 3>
        pairs{{{{3, 1, 2}, {1, 3, 2}}, {{3, 1, 2}, {2, 3, 1}}, {{3, 2, 1}, {1, 3, 2}}}};
    return pairs;
}

/// First index triple (i, i+1, j) at which the column readings of p and of
/// reverse_columns(q) simultaneously match a forbidden pattern pair
/// (31-2,13-2), (31-2,23-1) or (32-1,13-2). Both tableaux must be standard PS
/// tableaux of the same shape.
template <class SP, class SQ>
std::optional<std::array<std::size_t, 3>> simultaneous_occurrence(const TableauPair<SP, SQ>& pair)
{
    if (pair.p.shape() != pair.q.shape())
        throw invalid_input("stable pair test: tableaux differ in shape");
    if (!classify(pair.p).is_standard_ps || !classify(pair.q).is_standard_ps)
        throw invalid_input("stable pair test: both tableaux must be standard PS tableaux");
    const auto r = column_reading(pair.p);
    const auto s = column_reading(reverse_columns(pair.q));
    const std::size_t n = r.size();
    for (std::size_t i = 0; i + 2 < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j) {
            const std::array<SP, 3> a{r[i], r[i + 1], r[j]};
            const std::array<SQ, 3> b{s[i], s[i + 1], s[j]};
            for (const auto& [pa, pb] : forbidden_pattern_pairs())
                if (detail::order_isomorphic<SP>(a, pa) && detail::order_isomorphic<SQ>(b, pb))
                    return std::array<std::size_t, 3>{i, i + 1, j};
        }
    return std::nullopt;
}

// Membership in the standard stable pairs set (q may be any standard PS tableau).
template <class SP, class SQ>
bool is_standard_stable_pair(const TableauPair<SP, SQ>& pair)
{
    return !simultaneous_occurrence(pair).has_value();
}

/// Stable-pair membership at the requested level.
///
/// standard: both tableaux standard PS. word: p of the mode's kind and q a
/// recording tableau, tested as (Std_x(p), q). array: both of the mode's
/// kind, tested as (Std_x(p), Std_x(q)).
bool is_stable_pair(const PlainPair& pair, Mode m, StablePairLevel level);

PlainPair rsk(const Word& w, Mode m);
PlainPair rsk(const Array& arr, Mode m);

// Inverse at word level; throws not_in_stable_set for non-members.
Word rsk_inverse_word(const PlainPair& pair, Mode m);

// Inverse at array level; throws not_in_stable_set for non-members.
Array rsk_inverse_array(const PlainPair& pair, Mode m);

} // namespace pstab
