#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pstab/counting.hpp"
#include "pstab/insertion.hpp"
#include "pstab/mode.hpp"
#include "pstab/tableau.hpp"

namespace pstab {

// Every distinct word with evaluation m, in lexicographic order.
std::vector<Word> words_with_evaluation(std::span<const std::uint32_t> m);

// Every word of the given length over 1..alphabet_size, in lexicographic order.
void for_each_word(unsigned alphabet_size, unsigned length, const std::function<void(const Word&)>& fn);

// Distinct insertion tableaux over all words with evaluation m.
// Refuses (budget_exceeded) when the sum of m exceeds max_total.
Count count_tableaux_bruteforce(std::span<const std::uint32_t> m, Mode mode, unsigned max_total = 10);

// Every lPS / rPS tableau with entries in 1..alphabet_size and the given
// number of boxes, found by filtering all fillings of all compositions. Sorted.
std::vector<PlainTableau> tableaux_of_kind(unsigned alphabet_size, unsigned boxes, Mode mode);

enum class PstabRoute {
    direct,     // column by column: the bottom is forced, the rest is a subset
    filter,     // every filling of the shape, kept if standard PS
    projection, // ps_project image of every filling
};

// Standard PS tableaux with content `alphabet` and the given shape (all
// compositions when shape is empty). Sorted.
std::vector<PlainTableau> enumerate_pstab(std::span<const Symbol> alphabet,
                                          const std::optional<Shape>& shape,
                                          PstabRoute route = PstabRoute::direct);

// Fillings of the shape by `alphabet` projecting onto target.
// Refuses when |alphabet| exceeds max_n.
Count fiber_bruteforce(std::span<const Symbol> alphabet, const Shape& shape, const PlainTableau& target,
                       unsigned max_n = 9);

// Fiber size of every image of ps_project over all fillings of the shape.
std::map<PlainTableau, Count> fiber_tally(std::span<const Symbol> alphabet, const Shape& shape,
                                          unsigned max_n = 9);

// Set partitions of an n-set counted by listing restricted growth strings;
// entry k is the number with k blocks (entry 0 unused).
std::vector<Count> set_partitions_by_blocks(unsigned n, unsigned max_n = 12);
Count set_partitions(unsigned n, unsigned max_n = 12);

// Permutations of 1..n grouped by their insertion tableau.
std::map<PlainTableau, std::vector<Word>> insertion_classes(unsigned n, Mode mode);

struct Budgets {
    unsigned count_total = 8;   // sum of the evaluation in the L/R sweep
    unsigned count_symbols = 4; // length of the evaluation in the L/R sweep
    unsigned bell_n = 10;
    unsigned pstab_n = 8;
    unsigned fiber_n = 6;
    unsigned bijection_n = 6;
    unsigned image_n = 8;
    unsigned word_length = 6;   // words over {1,2,3}
    unsigned array_length = 5;  // arrays over {1,2,3}
    unsigned law_length = 5;
    unsigned formula_n = 12;
};

struct VerifyOptions {
    unsigned max_n = 4;
    Budgets budgets{};
    unsigned jobs = 1;
    bool inject_failure = false;
};

struct VerificationCase {
    std::string suite;
    std::string input;
    std::string formula;
    std::string oracle;
    bool pass = false;
};

struct VerificationReport {
    std::string name;
    std::vector<VerificationCase> cases;
    double elapsed_seconds = 0;

    bool passed() const;
    std::size_t failures() const;
};

// Every sweep is capped by both max_n and its budget. Case order is fixed
// regardless of the number of jobs.
VerificationReport verify_suite(const VerifyOptions& options);

std::string to_text(const VerificationReport& report);
nlohmann::json to_json(const VerificationReport& report);

} // namespace pstab
