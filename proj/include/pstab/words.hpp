#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "pstab/errors.hpp"

namespace pstab {

// Symbols of the alphabet 1 < 2 < 3 < ...
using Symbol = std::uint32_t;

// A symbol carrying its occurrence index, ordered by base and then by index.
struct StdSymbol {
    Symbol base = 1;
    std::uint32_t index = 1;

    friend constexpr auto operator<=>(const StdSymbol&, const StdSymbol&) = default;
};

template <class S>
using BasicWord = std::vector<S>;

using Word = BasicWord<Symbol>;
using StdWord = BasicWord<StdSymbol>;

// Dense counts indexed by symbol: entry 0 counts symbol 1.
using Evaluation = std::vector<std::uint32_t>;

enum class Direction { left, right };

std::ostream& operator<<(std::ostream& os, const StdSymbol& s);

// Attach occurrence indices, counting left-to-right (left) or right-to-left (right).
StdWord standardize(std::span<const Symbol> w, Direction dir);

// Erase the occurrence indices.
Word destandardize(std::span<const StdSymbol> w);

// Occurrence counts of 1..alphabet_size; throws invalid_input on a symbol out of range.
Evaluation evaluation(std::span<const Symbol> w, std::size_t alphabet_size);

// True iff no symbol occurs twice.
template <class S>
bool is_standard(std::span<const S> w)
{
    std::set<S> seen;
    for (const S& s : w)
        if (!seen.insert(s).second)
            return false;
    return true;
}

template <class S>
bool is_standard(const BasicWord<S>& w)
{
    return is_standard(std::span<const S>(w));
}

inline Symbol base_of(Symbol s) { return s; }
inline Symbol base_of(const StdSymbol& s) { return s.base; }

} // namespace pstab
