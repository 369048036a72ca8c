#include "pstab/correspondence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pstab {

DashedPattern::DashedPattern(std::vector<std::vector<std::uint32_t>> blocks)
    : blocks_(std::move(blocks))
{
    auto all = letters();
    if (all.empty())
        throw invalid_input("empty pattern");
    for (const auto& b : blocks_)
        if (b.empty())
            throw invalid_input("pattern has an empty block");
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] != i + 1)
            throw invalid_input("pattern letters must be a permutation of 1..length");
}

DashedPattern DashedPattern::parse(std::string_view text)
{
    std::vector<std::vector<std::uint32_t>> blocks(1);
    for (char ch : text) {
        if (ch == '-')
            blocks.emplace_back();
        else if (ch >= '1' && ch <= '9')
            blocks.back().push_back(static_cast<std::uint32_t>(ch - '0'));
        else if (ch != ' ')
            throw invalid_input("bad pattern literal '" + std::string(text) + "'");
    }
    return DashedPattern(std::move(blocks));
}

std::vector<std::uint32_t> DashedPattern::letters() const
{
    std::vector<std::uint32_t> all;
    for (const auto& b : blocks_)
        all.insert(all.end(), b.begin(), b.end());
    return all;
}

std::size_t DashedPattern::length() const
{
    return letters().size();
}

std::string DashedPattern::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i > 0)
            os << '-';
        for (auto l : blocks_[i])
            os << l;
    }
    return os.str();
}

StablePairLevel parse_level(std::string_view s)
{
    if (s == "standard")
        return StablePairLevel::standard;
    if (s == "word")
        return StablePairLevel::word;
    if (s == "array")
        return StablePairLevel::array;
    throw invalid_input("unknown level '" + std::string(s) + "'");
}

std::string_view to_string(StablePairLevel level)
{
    switch (level) {
    case StablePairLevel::standard:
        return "standard";
    case StablePairLevel::word:
        return "word";
    case StablePairLevel::array:
        return "array";
    }
    return "?";
}

bool is_stable_pair(const PlainPair& pair, Mode m, StablePairLevel level)
{
    if (pair.p.shape() != pair.q.shape())
        throw invalid_input("stable pair test: tableaux differ in shape");
    const TableauClass pc = classify(pair.p);
    const TableauClass qc = classify(pair.q);
    switch (level) {
    case StablePairLevel::standard:
        return is_standard_stable_pair(pair);
    case StablePairLevel::word:
        if (!pc.is_kind(m))
            throw invalid_input("word-level stable pair test: p is not a " +
                                std::string(to_string(m)) + " tableau");
        if (!qc.is_recording)
            throw invalid_input("word-level stable pair test: q is not a recording tableau");
        return is_standard_stable_pair(
            TableauPair<StdSymbol, Symbol>{standardize_tableau(pair.p, m), pair.q});
    case StablePairLevel::array:
        if (!pc.is_kind(m) || !qc.is_kind(m))
            throw invalid_input("array-level stable pair test: both tableaux must be " +
                                std::string(to_string(m)) + " tableaux");
        return is_standard_stable_pair(TableauPair<StdSymbol, StdSymbol>{
            standardize_tableau(pair.p, m), standardize_tableau(pair.q, m)});
    }
    return false;
}

PlainPair rsk(const Word& w, Mode m)
{
    return extended_insert(w, m);
}

PlainPair rsk(const Array& arr, Mode m)
{
    return array_insert(arr, m);
}

Word rsk_inverse_word(const PlainPair& pair, Mode m)
{
    if (!is_stable_pair(pair, m, StablePairLevel::word))
        throw not_in_stable_set("pair is not in the " + std::string(to_string(m)) +
                                " stable pairs set");
    Word w = read_by_recording(pair);
    if (extended_insert(w, m) != pair)
        throw internal_error("word-level inverse did not reproduce the pair");
    return w;
}

Array rsk_inverse_array(const PlainPair& pair, Mode m)
{
    if (!is_stable_pair(pair, m, StablePairLevel::array))
        throw not_in_stable_set("pair is not in the semistandard " + std::string(to_string(m)) +
                                " stable pairs set");
    Array arr = reverse_insertion(pair, m);
    if (array_insert(arr, m) != pair)
        throw internal_error("array-level inverse did not reproduce the pair");
    return arr;
}

} // namespace pstab
