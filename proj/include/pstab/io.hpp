#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pstab/insertion.hpp"
#include "pstab/tableau.hpp"
#include "pstab/words.hpp"

namespace pstab {

// Words: positive integers separated by whitespace and/or commas. Empty text is ε.
Word parse_word(std::string_view text);

// "2,1,2" style lists; zero entries allowed only when asked for.
std::vector<std::uint32_t> parse_uint_list(std::string_view text, bool allow_zero = false);

// "u1 ... uk / v1 ... vk", or JSON {"top": [...], "bottom": [...]}.
Array parse_array(std::string_view text);

// JSON {"columns": [[...], ...]} or a bare list of columns, bottom-to-top.
PlainTableau parse_tableau(std::string_view text);
PlainTableau tableau_from_json(const nlohmann::json& j);
StdTableau std_tableau_from_json(const nlohmann::json& j);

// JSON {"p": tableau, "q": tableau}.
PlainPair parse_pair(std::string_view text);
PlainPair pair_from_json(const nlohmann::json& j);

inline nlohmann::json to_json(Symbol s) { return s; }
inline nlohmann::json to_json(const StdSymbol& s) { return nlohmann::json::array({s.base, s.index}); }

template <class S>
nlohmann::json to_json(const Tableau<S>& t)
{
    nlohmann::json cols = nlohmann::json::array();
    for (const auto& c : t.columns()) {
        nlohmann::json col = nlohmann::json::array();
        for (const auto& x : c)
            col.push_back(to_json(x));
        cols.push_back(std::move(col));
    }
    return {{"columns", std::move(cols)}};
}

template <class SP, class SQ>
nlohmann::json to_json(const TableauPair<SP, SQ>& pair)
{
    return {{"p", to_json(pair.p)}, {"q", to_json(pair.q)}};
}

template <class U, class V>
nlohmann::json to_json(const TwoRowedArray<U, V>& arr)
{
    nlohmann::json top = nlohmann::json::array(), bottom = nlohmann::json::array();
    for (const auto& x : arr.top)
        top.push_back(to_json(x));
    for (const auto& x : arr.bottom)
        bottom.push_back(to_json(x));
    return {{"top", std::move(top)}, {"bottom", std::move(bottom)}};
}

inline std::string format_symbol(Symbol s) { return std::to_string(s); }
inline std::string format_symbol(const StdSymbol& s)
{
    return std::to_string(s.base) + "_" + std::to_string(s.index);
}

template <class S>
std::string format_word(std::span<const S> w)
{
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += ' ';
        out += format_symbol(w[i]);
    }
    return out;
}

template <class S>
std::string format_word(const BasicWord<S>& w)
{
    return format_word(std::span<const S>(w));
}

template <class U, class V>
std::string format_array(const TwoRowedArray<U, V>& arr)
{
    return format_word(arr.top) + " / " + format_word(arr.bottom);
}

// Compact column list, e.g. [[1,2,4],[2,3,6],[4]].
template <class S>
std::string format_columns(const Tableau<S>& t)
{
    std::string out = "[";
    for (std::size_t c = 0; c < t.column_count(); ++c) {
        out += c ? ",[" : "[";
        const auto& col = t.column(c);
        for (std::size_t r = 0; r < col.size(); ++r) {
            if (r)
                out += ',';
            out += format_symbol(col[r]);
        }
        out += ']';
    }
    return out + "]";
}

template <class SP, class SQ>
std::string format_pair(const TableauPair<SP, SQ>& pair)
{
    return "(" + format_columns(pair.p) + ", " + format_columns(pair.q) + ")";
}

// Rows top to bottom, bottom row last, columns bottom-justified.
template <class S>
std::vector<std::string> render_ascii_lines(const Tableau<S>& t)
{
    if (t.empty())
        return {"(empty)"};
    std::size_t width = 1;
    for (const auto& c : t.columns())
        for (const auto& x : c)
            width = std::max(width, format_symbol(x).size());
    std::vector<std::string> lines;
    for (std::size_t level = t.height(); level-- > 0;) {
        std::string line;
        for (std::size_t c = 0; c < t.column_count(); ++c) {
            if (c)
                line += ' ';
            const auto& col = t.column(c);
            std::string cell = level < col.size() ? format_symbol(col[level]) : std::string();
            line += std::string(width - cell.size(), ' ') + cell;
        }
        line.erase(line.find_last_not_of(' ') + 1);
        lines.push_back(std::move(line));
    }
    return lines;
}

template <class S>
std::string render_ascii(const Tableau<S>& t)
{
    std::string out;
    for (const auto& line : render_ascii_lines(t))
        out += line + '\n';
    return out;
}

// P and Q side by side, bottom rows aligned.
template <class SP, class SQ>
std::string render_ascii(const TableauPair<SP, SQ>& pair)
{
    auto left = render_ascii_lines(pair.p);
    auto right = render_ascii_lines(pair.q);
    const std::size_t rows = std::max(left.size(), right.size());
    left.insert(left.begin(), rows - left.size(), std::string());
    right.insert(right.begin(), rows - right.size(), std::string());
    std::size_t width = 0;
    for (const auto& l : left)
        width = std::max(width, l.size());
    std::string out;
    for (std::size_t i = 0; i < rows; ++i) {
        std::string line = left[i] + std::string(width - left[i].size() + 3, ' ') + right[i];
        line.erase(line.find_last_not_of(' ') + 1);
        out += line + '\n';
    }
    return out;
}

inline std::string latex_symbol(Symbol s) { return std::to_string(s); }
inline std::string latex_symbol(const StdSymbol& s)
{
    return std::to_string(s.base) + "_{" + std::to_string(s.index) + "}";
}

// ytableau rows, top row first; \none fills gaps left of taller columns.
template <class S>
std::string render_latex(const Tableau<S>& t)
{
    if (t.empty())
        return "\\varnothing\n";
    std::string out = "\\begin{ytableau}\n";
    for (std::size_t level = t.height(); level-- > 0;) {
        std::size_t last = 0;
        for (std::size_t c = 0; c < t.column_count(); ++c)
            if (level < t.column(c).size())
                last = c;
        std::string row;
        for (std::size_t c = 0; c <= last; ++c) {
            if (c)
                row += " & ";
            const auto& col = t.column(c);
            row += level < col.size() ? latex_symbol(col[level]) : "\\none";
        }
        out += row + (level ? " \\\\\n" : "\n");
    }
    return out + "\\end{ytableau}\n";
}

template <class SP, class SQ>
std::string render_latex(const TableauPair<SP, SQ>& pair)
{
    return render_latex(pair.p) + "\\quad\n" + render_latex(pair.q);
}

} // namespace pstab
