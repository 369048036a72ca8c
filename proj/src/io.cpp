#include "pstab/io.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "pstab/errors.hpp"

namespace pstab {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::uint32_t> parse_numbers(std::string_view text, bool allow_zero)
{
    std::vector<std::uint32_t> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
            ++i;
            continue;
        }
        std::uint32_t value = 0;
        const auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc() || end == text.data() + i)
            throw invalid_input("cannot parse '" + std::string(text) + "' as a list of integers");
        i = static_cast<std::size_t>(end - text.data());
        if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ',')
            throw invalid_input("unexpected character '" + std::string(1, text[i]) + "' in '" +
                                std::string(text) + "'");
        if (value == 0 && !allow_zero)
            throw invalid_input("symbols are positive integers, got 0");
        out.push_back(value);
    }
    return out;
}

nlohmann::json parse_json(std::string_view text)
{
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw invalid_input(std::string("malformed JSON: ") + e.what());
    }
}

Symbol symbol_from_json(const nlohmann::json& j)
{
    if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0 ||
        j.get<std::uint64_t>() > std::numeric_limits<Symbol>::max())
        throw invalid_input("tableau entries must be positive integers, got " + j.dump());
    return j.get<Symbol>();
}

StdSymbol std_symbol_from_json(const nlohmann::json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw invalid_input("standardized entries are [base, index] pairs, got " + j.dump());
    return StdSymbol{symbol_from_json(j[0]), symbol_from_json(j[1])};
}

template <class S, class F>
Tableau<S> columns_from_json(const nlohmann::json& j, F&& entry)
{
    const nlohmann::json& cols = j.is_object() ? j.value("columns", nlohmann::json()) : j;
    if (!cols.is_array())
        throw invalid_input("tableau JSON needs a list of columns");
    std::vector<std::vector<S>> out;
    for (const auto& c : cols) {
        if (!c.is_array())
            throw invalid_input("each tableau column must be a list");
        std::vector<S> col;
        for (const auto& x : c)
            col.push_back(entry(x));
        out.push_back(std::move(col));
    }
    return Tableau<S>(std::move(out));
}

Word word_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw invalid_input("expected a list of symbols");
    Word w;
    for (const auto& x : j)
        w.push_back(symbol_from_json(x));
    return w;
}

} // namespace

Word parse_word(std::string_view text)
{
    return parse_numbers(text, false);
}

std::vector<std::uint32_t> parse_uint_list(std::string_view text, bool allow_zero)
{
    auto out = parse_numbers(text, allow_zero);
    if (out.empty())
        throw invalid_input("expected at least one integer");
    return out;
}

Array parse_array(std::string_view text)
{
    text = trim(text);
    if (!text.empty() && text.front() == '{') {
        const auto j = parse_json(text);
        if (!j.contains("top") || !j.contains("bottom"))
            throw invalid_input("array JSON needs \"top\" and \"bottom\"");
        return Array(word_from_json(j["top"]), word_from_json(j["bottom"]));
    }
    const auto slash = text.find('/');
    if (slash == std::string_view::npos || text.find('/', slash + 1) != std::string_view::npos)
        throw invalid_input("an array is written 'u1 ... uk / v1 ... vk'");
    return Array(parse_word(text.substr(0, slash)), parse_word(text.substr(slash + 1)));
}

PlainTableau tableau_from_json(const nlohmann::json& j)
{
    return columns_from_json<Symbol>(j, symbol_from_json);
}

StdTableau std_tableau_from_json(const nlohmann::json& j)
{
    return columns_from_json<StdSymbol>(j, std_symbol_from_json);
}

PlainTableau parse_tableau(std::string_view text)
{
    return tableau_from_json(parse_json(text));
}

PlainPair pair_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("p") || !j.contains("q"))
        throw invalid_input("pair JSON needs \"p\" and \"q\"");
    return PlainPair{tableau_from_json(j["p"]), tableau_from_json(j["q"])};
}

PlainPair parse_pair(std::string_view text)
{
    return pair_from_json(parse_json(text));
}

} // namespace pstab
