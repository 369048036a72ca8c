#include <doctest.h>

#include "pstab/errors.hpp"
#include "pstab/insertion.hpp"
#include "pstab/oracle.hpp"
#include "pstab/tableau.hpp"
#include "support.hpp"

using namespace pstab;

namespace {

PlainTableau tab(std::vector<std::vector<Symbol>> c)
{
    return PlainTableau(std::move(c));
}

StdTableau stab(std::vector<std::vector<std::pair<Symbol, std::uint32_t>>> c)
{
    std::vector<std::vector<StdSymbol>> cols;
    for (const auto& col : c) {
        cols.emplace_back();
        for (auto [b, i] : col)
            cols.back().push_back(StdSymbol{b, i});
    }
    return StdTableau(std::move(cols));
}

} // namespace

TEST_CASE("classify the three example tableaux")
{
    const auto q = classify(tab({{1, 2, 4}, {1, 2}, {2, 3, 4}}));
    CHECK(q.is_lps);
    CHECK_FALSE(q.is_rps);

    const auto r = classify(tab({{1, 1, 4}, {2, 2}, {3, 4}}));
    CHECK(r.is_rps);
    CHECK_FALSE(r.is_lps);

    const auto s = classify(tab({{1, 6}, {2, 3}, {4, 5, 7}}));
    CHECK(s.is_standard_ps);
    CHECK(s.is_recording);
    CHECK(s.is_lps);
    CHECK(s.is_rps);
}

TEST_CASE("class flags nest")
{
    const auto e = classify(PlainTableau());
    CHECK(e.is_lps);
    CHECK(e.is_rps);
    CHECK(e.is_recording);

    CHECK_FALSE(classify(tab({{2, 1}})).is_lps);
    CHECK_FALSE(classify(tab({{2}, {1}})).is_rps);
    CHECK(classify(tab({{2, 5}, {4, 6}})).is_standard_ps);
    CHECK_FALSE(classify(tab({{2, 5}, {4, 6}})).is_recording);
    CHECK_FALSE(classify(tab({{1, 2}, {1}})).is_pre);

    for (unsigned k = 1; k <= 4; ++k)
        for (const auto& t : tableaux_of_kind(3, k, Mode::lps)) {
            const auto c = classify(t);
            if (c.is_recording)
                CHECK(c.is_standard_ps);
            if (c.is_standard_ps)
                CHECK((c.is_lps && c.is_rps));
        }
}

TEST_CASE("tableaux reject empty columns")
{
    CHECK_THROWS_AS(tab({{1}, {}}), invalid_input);
}

TEST_CASE("shape, bottom row and positions")
{
    const auto t = tab({{1, 2, 4}, {2, 3, 6}, {4}});
    CHECK(t.shape() == Shape{3, 3, 1});
    CHECK(t.bottom_row() == std::vector<Symbol>{1, 2, 4});
    CHECK(t.size() == 7);
    CHECK(t.height() == 3);
    CHECK(t.at({1, 2}) == 6);
    CHECK(t.content() == std::vector<Symbol>{1, 2, 2, 3, 4, 4, 6});
}

TEST_CASE("column reading goes top to bottom, left to right")
{
    CHECK(column_reading(tab({{1, 2, 4}, {2, 3, 6}, {4}})) == Word{4, 2, 1, 6, 3, 2, 4});
    CHECK(column_reading(tab({{2, 4, 5}})) == Word{5, 4, 2});
    CHECK(column_reading(PlainTableau()).empty());
}

TEST_CASE("reverse_columns is a shape-preserving involution")
{
    const auto q = tab({{1, 3, 6}, {2, 4, 5}, {7}});
    CHECK(reverse_columns(q) == tab({{6, 3, 1}, {5, 4, 2}, {7}}));
    CHECK(reverse_columns(tab({{3}})) == tab({{3}}));
    for (const auto& t : tableaux_of_kind(3, 4, Mode::rps)) {
        CHECK(reverse_columns(t).shape() == t.shape());
        CHECK(reverse_columns(reverse_columns(t)) == t);
    }
}

TEST_CASE("standardize_tableau, left reading")
{
    const auto r = tab({{1}, {1, 2}, {2}, {2, 3}, {3}, {3}});
    CHECK(standardize_tableau(r, Direction::left) ==
          stab({{{1, 1}}, {{1, 2}, {2, 1}}, {{2, 2}}, {{2, 3}, {3, 1}}, {{3, 2}}, {{3, 3}}}));
    const auto s = tab({{1}, {1, 2}, {1}, {2, 3}, {4}, {4}});
    CHECK(standardize_tableau(s, Direction::left) ==
          stab({{{1, 1}}, {{1, 2}, {2, 1}}, {{1, 3}}, {{2, 2}, {3, 1}}, {{4, 1}}, {{4, 2}}}));
    CHECK(destandardize_tableau(standardize_tableau(r, Direction::left)) == r);
}

TEST_CASE("standardize_tableau, right reading")
{
    CHECK(standardize_tableau(tab({{2, 2}}), Direction::right) == stab({{{2, 1}, {2, 2}}}));
    CHECK(standardize_tableau(tab({{1, 1}, {2}}), Mode::rps) == stab({{{1, 1}, {1, 2}}, {{2, 1}}}));
}

TEST_CASE("standardize_tableau of a standard tableau only adds index 1")
{
    const auto t = tab({{2, 5}, {4, 6}});
    CHECK(standardize_tableau(t, Direction::left) == stab({{{2, 1}, {5, 1}}, {{4, 1}, {6, 1}}}));
    CHECK(standardize_tableau(t, Direction::right) == standardize_tableau(t, Direction::left));
    CHECK(destandardize_tableau(stab({{{2, 1}, {5, 1}}})) == tab({{2, 5}}));
    CHECK(destandardize_tableau(StdTableau()).empty());
}

TEST_CASE("standardize_tableau refuses the wrong class")
{
    CHECK_THROWS_AS(standardize_tableau(tab({{1, 1}}), Direction::left), invalid_input);
    CHECK_THROWS_AS(standardize_tableau(tab({{1}, {1}}), Direction::right), invalid_input);
}

TEST_CASE("standardized tableaux are standard and match an independent ranking")
{
    for (Mode m : {Mode::lps, Mode::rps})
        for (unsigned k = 1; k <= 5; ++k)
            for (const auto& t : tableaux_of_kind(3, k, m)) {
                const StdTableau s = standardize_tableau(t, m);
                CHECK(s.shape() == t.shape());
                CHECK(classify(s).is_standard_ps);
                CHECK(destandardize_tableau(s) == t);
                CHECK(rank_tableau(s) == ref::rank_standardized(t, m));
            }
}

TEST_CASE("rank_tableau relabels by rank")
{
    CHECK(rank_tableau(tab({{2, 5}, {4, 6}})) == tab({{1, 3}, {2, 4}}));
}
