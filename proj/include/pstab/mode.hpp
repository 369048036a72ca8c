#pragma once

#include <string_view>

#include "pstab/errors.hpp"
#include "pstab/words.hpp"

namespace pstab {

// lps: append when r_k <= x, bump the first column with x < r_i.
// rps: append when r_k <  x, bump the first column with x <= r_i.
enum class Mode { lps, rps };

constexpr Direction direction_of(Mode m)
{
    return m == Mode::lps ? Direction::left : Direction::right;
}

constexpr std::string_view to_string(Mode m)
{
    return m == Mode::lps ? "lps" : "rps";
}

inline Mode parse_mode(std::string_view s)
{
    if (s == "lps" || s == "l")
        return Mode::lps;
    if (s == "rps" || s == "r")
        return Mode::rps;
    throw invalid_input("unknown mode '" + std::string(s) + "' (expected lps or rps)");
}

} // namespace pstab
