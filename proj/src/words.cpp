#include "pstab/words.hpp"

#include <algorithm>
#include <unordered_map>

namespace pstab {

std::ostream& operator<<(std::ostream& os, const StdSymbol& s)
{
    return os << s.base << '_' << s.index;
}

StdWord standardize(std::span<const Symbol> w, Direction dir)
{
    StdWord out(w.size());
    std::unordered_map<Symbol, std::uint32_t> seen;
    auto tag = [&](std::size_t p) { out[p] = StdSymbol{w[p], ++seen[w[p]]}; };
    if (dir == Direction::left) {
        for (std::size_t p = 0; p < w.size(); ++p)
            tag(p);
    } else {
        for (std::size_t p = w.size(); p-- > 0;)
            tag(p);
    }
    return out;
}

Word destandardize(std::span<const StdSymbol> w)
{
    Word out;
    out.reserve(w.size());
    std::transform(w.begin(), w.end(), std::back_inserter(out),
                   [](const StdSymbol& s) { return s.base; });
    return out;
}

Evaluation evaluation(std::span<const Symbol> w, std::size_t alphabet_size)
{
    Evaluation ev(alphabet_size, 0);
    for (Symbol s : w) {
        if (s < 1 || s > alphabet_size)
            throw invalid_input("symbol " + std::to_string(s) + " outside alphabet 1.." +
                                std::to_string(alphabet_size));
        ++ev[s - 1];
    }
    return ev;
}

} // namespace pstab
