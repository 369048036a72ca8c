#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "pstab/errors.hpp"
#include "pstab/mode.hpp"
#include "pstab/words.hpp"

namespace pstab {

// Column lengths, left to right. The empty shape is the empty vector.
using Shape = std::vector<std::uint32_t>;

// 0-based column-row position; row 0 is the bottom row.
struct Position {
    std::size_t column = 0;
    std::size_t row = 0;

    friend constexpr auto operator<=>(const Position&, const Position&) = default;
};

/// A composition-shaped, bottom-justified arrangement of symbols.
///
/// Columns are stored bottom-to-top, so the bottom row is the sequence of
/// column fronts. Every stored column is nonempty.
template <class S>
class Tableau {
public:
    using symbol_type = S;
    using Column = std::vector<S>;

    Tableau() = default;

    explicit Tableau(std::vector<Column> columns) : columns_(std::move(columns))
    {
        for (const Column& c : columns_)
            if (c.empty())
                throw invalid_input("tableau columns must be nonempty");
    }

    const std::vector<Column>& columns() const { return columns_; }
    const Column& column(std::size_t i) const { return columns_.at(i); }
    std::size_t column_count() const { return columns_.size(); }
    bool empty() const { return columns_.empty(); }

    std::size_t size() const
    {
        std::size_t n = 0;
        for (const Column& c : columns_)
            n += c.size();
        return n;
    }

    std::size_t height() const
    {
        std::size_t h = 0;
        for (const Column& c : columns_)
            h = std::max(h, c.size());
        return h;
    }

    Shape shape() const
    {
        Shape s;
        s.reserve(columns_.size());
        for (const Column& c : columns_)
            s.push_back(static_cast<std::uint32_t>(c.size()));
        return s;
    }

    std::vector<S> bottom_row() const
    {
        std::vector<S> row;
        row.reserve(columns_.size());
        for (const Column& c : columns_)
            row.push_back(c.front());
        return row;
    }

    const S& at(Position p) const { return columns_.at(p.column).at(p.row); }

    // All entries, sorted.
    std::vector<S> content() const
    {
        std::vector<S> all;
        for (const Column& c : columns_)
            all.insert(all.end(), c.begin(), c.end());
        std::sort(all.begin(), all.end());
        return all;
    }

    friend auto operator<=>(const Tableau&, const Tableau&) = default;
    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    std::vector<Column> columns_;
};

using PlainTableau = Tableau<Symbol>;
using StdTableau = Tableau<StdSymbol>;

struct TableauClass {
    bool is_pre = false;
    bool is_lps = false;
    bool is_rps = false;
    bool is_standard_ps = false;
    bool is_recording = false;

    bool is_kind(Mode m) const { return m == Mode::lps ? is_lps : is_rps; }
};

/// Computes every class flag in one pass.
///
/// lPS: columns strictly increasing bottom-to-top, bottom row weakly increasing.
/// rPS: columns weakly increasing bottom-to-top, bottom row strictly increasing.
/// A standard PS tableau has pairwise distinct entries (then lPS and rPS agree);
/// a recording tableau is a standard one with content exactly 1..|T|.
template <class S>
TableauClass classify(const Tableau<S>& t)
{
    TableauClass c;
    bool strict_cols = true, weak_cols = true;
    for (const auto& col : t.columns())
        for (std::size_t r = 1; r < col.size(); ++r) {
            if (!(col[r - 1] < col[r]))
                strict_cols = false;
            if (col[r] < col[r - 1])
                weak_cols = false;
        }
    bool strict_row = true, weak_row = true;
    const auto row = t.bottom_row();
    for (std::size_t i = 1; i < row.size(); ++i) {
        if (!(row[i - 1] < row[i]))
            strict_row = false;
        if (row[i] < row[i - 1])
            weak_row = false;
    }
    const auto all = t.content();
    c.is_pre = std::adjacent_find(all.begin(), all.end()) == all.end();
    c.is_lps = strict_cols && weak_row;
    c.is_rps = weak_cols && strict_row;
    c.is_standard_ps = c.is_pre && c.is_lps && c.is_rps;
    if constexpr (std::is_same_v<S, Symbol>) {
        bool exact = c.is_standard_ps;
        for (std::size_t i = 0; exact && i < all.size(); ++i)
            exact = all[i] == static_cast<Symbol>(i + 1);
        c.is_recording = exact;
    }
    return c;
}

// Columns left to right, each read top to bottom.
template <class S>
BasicWord<S> column_reading(const Tableau<S>& t)
{
    BasicWord<S> w;
    w.reserve(t.size());
    for (const auto& col : t.columns())
        w.insert(w.end(), col.rbegin(), col.rend());
    return w;
}

template <class S>
Tableau<S> reverse_columns(const Tableau<S>& t)
{
    auto cols = t.columns();
    for (auto& c : cols)
        std::reverse(c.begin(), c.end());
    return Tableau<S>(std::move(cols));
}

/// Attaches occurrence indices to an lPS (left) or rPS (right) tableau.
///
/// left reads columns left to right, each top to bottom; right reads columns
/// right to left, each bottom to top. The i-th occurrence of a gets index i.
StdTableau standardize_tableau(const PlainTableau& t, Direction dir);

// Same as above but for an arbitrary mode of the tableau.
inline StdTableau standardize_tableau(const PlainTableau& t, Mode m)
{
    return standardize_tableau(t, direction_of(m));
}

PlainTableau destandardize_tableau(const StdTableau& t);

// Relabels entries by their rank in the content, giving a tableau over 1..|T|.
template <class S>
PlainTableau rank_tableau(const Tableau<S>& t)
{
    const auto all = t.content();
    std::vector<typename PlainTableau::Column> cols;
    for (const auto& col : t.columns()) {
        typename PlainTableau::Column c;
        for (const S& s : col)
            c.push_back(static_cast<Symbol>(
                std::lower_bound(all.begin(), all.end(), s) - all.begin() + 1));
        cols.push_back(std::move(c));
    }
    return PlainTableau(std::move(cols));
}

} // namespace pstab
