#include "pstab/tableau.hpp"

#include <unordered_map>

namespace pstab {

StdTableau standardize_tableau(const PlainTableau& t, Direction dir)
{
    const TableauClass cls = classify(t);
    if (dir == Direction::left && !cls.is_lps)
        throw invalid_input("left standardization needs an lPS tableau");
    if (dir == Direction::right && !cls.is_rps)
        throw invalid_input("right standardization needs an rPS tableau");

    std::vector<StdTableau::Column> cols(t.column_count());
    for (std::size_t i = 0; i < cols.size(); ++i)
        cols[i].resize(t.column(i).size());

    std::unordered_map<Symbol, std::uint32_t> seen;
    auto tag = [&](std::size_t c, std::size_t r) {
        const Symbol a = t.column(c)[r];
        cols[c][r] = StdSymbol{a, ++seen[a]};
    };
    if (dir == Direction::left) {
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t r = cols[c].size(); r-- > 0;)
                tag(c, r);
    } else {
        for (std::size_t c = cols.size(); c-- > 0;)
            for (std::size_t r = 0; r < cols[c].size(); ++r)
                tag(c, r);
    }
    return StdTableau(std::move(cols));
}

PlainTableau destandardize_tableau(const StdTableau& t)
{
    std::vector<PlainTableau::Column> cols;
    cols.reserve(t.column_count());
    for (const auto& col : t.columns()) {
        PlainTableau::Column c;
        c.reserve(col.size());
        for (const StdSymbol& s : col)
            c.push_back(s.base);
        cols.push_back(std::move(c));
    }
    return PlainTableau(std::move(cols));
}

} // namespace pstab
