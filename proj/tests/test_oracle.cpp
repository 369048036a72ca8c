#include <doctest.h>

#include <numeric>
#include <set>

#include "pstab/errors.hpp"
#include "pstab/oracle.hpp"
#include "support.hpp"

using namespace pstab;

namespace {

using V = std::vector<std::uint32_t>;

PlainTableau tab(std::vector<std::vector<Symbol>> c)
{
    return PlainTableau(std::move(c));
}

std::vector<Symbol> iota(unsigned n)
{
    std::vector<Symbol> a(n);
    std::iota(a.begin(), a.end(), 1u);
    return a;
}

} // namespace

TEST_CASE("words with a given evaluation")
{
    CHECK(words_with_evaluation(V{2, 1}) == std::vector<Word>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
    CHECK(words_with_evaluation(V{1, 1, 1}).size() == 6);
    CHECK(words_with_evaluation(V{2, 2}).size() == 6);
    CHECK(words_with_evaluation(V{2, 1, 2}).size() == 30);
    CHECK(words_with_evaluation(V{0, 2}) == std::vector<Word>{{2, 2}});
    CHECK_THROWS_AS(words_with_evaluation(V{0, 0}), invalid_input);
}

TEST_CASE("all words of a length")
{
    std::vector<Word> seen;
    for_each_word(2, 2, [&](const Word& w) { seen.push_back(w); });
    CHECK(seen == std::vector<Word>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});
    std::size_t empty = 0;
    for_each_word(3, 0, [&](const Word& w) { empty += w.empty(); });
    CHECK(empty == 1);
}

TEST_CASE("brute-force tableau counts")
{
    CHECK(count_tableaux_bruteforce(V{2, 1, 2}, Mode::lps) == 15);
    CHECK(count_tableaux_bruteforce(V{2, 1, 2}, Mode::rps) == 9);
    CHECK(count_tableaux_bruteforce(V{4}, Mode::lps) == 1);
    CHECK(count_tableaux_bruteforce(V{4}, Mode::rps) == 1);
    CHECK_THROWS_AS(count_tableaux_bruteforce(V{6, 5}, Mode::lps), budget_exceeded);
    CHECK(count_tableaux_bruteforce(V{6, 5}, Mode::rps, 11) == 6);
}

TEST_CASE("lps tableaux have between max(m) and sum(m) columns")
{
    for (unsigned k = 1; k <= 5; ++k)
        for (const auto& t : tableaux_of_kind(3, k, Mode::lps)) {
            const auto content = t.content();
            std::size_t most = 0;
            for (Symbol a = 1; a <= 3; ++a)
                most = std::max<std::size_t>(most, static_cast<std::size_t>(std::count(content.begin(), content.end(), a)));
            CHECK(t.column_count() >= most);
            CHECK(t.column_count() <= t.size());
        }
}

TEST_CASE("tableaux of a kind are exactly the insertion images")
{
    for (Mode m : {Mode::lps, Mode::rps})
        for (unsigned k = 0; k <= 5; ++k) {
            std::set<PlainTableau> images;
            for_each_word(3, k, [&](const Word& w) { images.insert(ps_insert(w, m)); });
            const auto all = tableaux_of_kind(3, k, m);
            CHECK(std::vector<PlainTableau>(images.begin(), images.end()) == all);
        }
}

TEST_CASE("enumerate_pstab examples")
{
    const std::vector<Symbol> b{2, 4, 5};
    CHECK(enumerate_pstab(b, Shape{2, 1}) == std::vector<PlainTableau>{tab({{2, 4}, {5}}), tab({{2, 5}, {4}})});
    CHECK(enumerate_pstab(b, std::nullopt).size() == 5);
    CHECK(enumerate_pstab(std::vector<Symbol>{1}, Shape{1}).size() == 1);
    CHECK_THROWS_AS(enumerate_pstab(b, Shape{2, 2}), invalid_input);
    CHECK_THROWS_AS(enumerate_pstab(std::vector<Symbol>{1, 1}, std::nullopt), invalid_input);
}

TEST_CASE("the three enumeration routes agree with the hook formula")
{
    for (unsigned n = 1; n <= 7; ++n)
        for (const Shape& s : compositions(n)) {
            const auto direct = enumerate_pstab(iota(n), s, PstabRoute::direct);
            CHECK(direct == enumerate_pstab(iota(n), s, PstabRoute::filter));
            CHECK(direct == enumerate_pstab(iota(n), s, PstabRoute::projection));
            CHECK(Count(static_cast<unsigned long>(direct.size())) == hook_count(n, s));
        }
}

TEST_CASE("standard PS tableaux are counted by Bell numbers")
{
    for (unsigned n = 1; n <= 8; ++n)
        CHECK(enumerate_pstab(iota(n), std::nullopt).size() == ref::bell(n));
}

TEST_CASE("fiber examples")
{
    CHECK(fiber_bruteforce(iota(3), Shape{3}, tab({{1, 2, 3}})) == 6);
    for (const auto& t : enumerate_pstab(iota(4), Shape{3, 1}))
        CHECK(fiber_bruteforce(iota(4), Shape{3, 1}, t) == 8);
    CHECK(fiber_bruteforce(iota(4), Shape{3, 1}, tab({{2, 3, 4}, {1}})) == 0);
    CHECK_THROWS_AS(fiber_bruteforce(iota(10), Shape{10}, tab({{1}})), budget_exceeded);
}

TEST_CASE("fibers are uniform")
{
    for (unsigned n = 1; n <= 6; ++n)
        for (const Shape& s : compositions(n)) {
            const auto tally = fiber_tally(iota(n), s);
            CHECK(Count(static_cast<unsigned long>(tally.size())) == hook_count(n, s));
            for (const auto& [t, k] : tally)
                CHECK(k == fiber_size(n, s));
        }
}

TEST_CASE("set partitions")
{
    for (unsigned n = 1; n <= 10; ++n)
        CHECK(set_partitions(n) == Count(static_cast<unsigned long>(ref::bell(n))));
    CHECK(set_partitions_by_blocks(4)[2] == 7);
    CHECK_THROWS_AS(set_partitions(13), budget_exceeded);
}

TEST_CASE("insertion classes of S4")
{
    const auto classes = insertion_classes(4, Mode::lps);
    CHECK(classes.size() == 15);
    const auto& t = classes.at(tab({{1, 3}, {2, 4}}));
    CHECK(t.size() == 2);
    std::size_t total = 0;
    for (const auto& [p, words] : classes) {
        total += words.size();
        CHECK(Count(static_cast<unsigned long>(words.size())) <= hook_count(4, p.shape()));
    }
    CHECK(total == 24);
}

TEST_CASE("verify_suite")
{
    const auto small = verify_suite(VerifyOptions{1});
    CHECK(small.passed());
    CHECK_FALSE(small.cases.empty());

    const auto report = verify_suite(VerifyOptions{4});
    CHECK(report.passed());
    std::set<std::string> suites;
    for (const auto& c : report.cases)
        suites.insert(c.suite.substr(0, c.suite.find('/')));
    for (const char* s : {"counting", "bell", "hook", "fiber", "bijection", "words", "arrays", "laws", "counterexample"})
        CHECK(suites.count(s) == 1);

    VerifyOptions parallel{4};
    parallel.jobs = 3;
    const auto again = verify_suite(parallel);
    REQUIRE(again.cases.size() == report.cases.size());
    for (std::size_t i = 0; i < report.cases.size(); ++i)
        CHECK(again.cases[i].input == report.cases[i].input);

    VerifyOptions broken{1};
    broken.inject_failure = true;
    const auto failed = verify_suite(broken);
    CHECK_FALSE(failed.passed());
    CHECK(failed.failures() == 1);
}

TEST_CASE("verify_suite records the rejected counterexamples")
{
    const auto report = verify_suite(VerifyOptions{3});
    std::size_t rejected = 0;
    for (const auto& c : report.cases)
        if (c.suite.rfind("counterexample/", 0) == 0) {
            CHECK(c.pass);
            rejected += c.oracle.rfind("rejected", 0) == 0;
        }
    CHECK(rejected == 2);
}

TEST_CASE("report serialization")
{
    VerifyOptions o{1};
    o.inject_failure = true;
    const auto report = verify_suite(o);
    const auto j = to_json(report);
    CHECK(j["passed"] == false);
    CHECK(j["failures"] == 1);
    CHECK(j["cases"].size() == report.cases.size());
    const std::string text = to_text(report);
    CHECK(text.find("FAIL injected") != std::string::npos);
}
