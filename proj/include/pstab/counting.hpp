#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "pstab/errors.hpp"
#include "pstab/tableau.hpp"
#include "pstab/words.hpp"

namespace pstab {

// Exact nonnegative integer for every enumeration formula.
using Count = mpz_class;

// C(m, k), zero when k < 0 or k > m.
Count binomial(long long m, long long k);
Count factorial(unsigned n);

// Drops zero entries; the counts only depend on the nonzero ones.
Evaluation normalize(std::span<const std::uint32_t> m);

/// prod_{a=2..n} C(m_1 + j_2 + ... + j_{a-1}, m_a - j_a), with j = (j_2..j_n).
/// m must be positive and j one entry shorter than m.
Count bracket_lps(std::span<const std::uint32_t> m, std::span<const std::uint32_t> j);

/// prod_{a=2..n} C(m_a + j_1 + ... + j_{a-1}, m_a - j_a), with tail = (m_2..m_n)
/// and j = (j_2..j_n) of the same length.
Count bracket_rps(std::span<const std::uint32_t> tail, std::uint32_t j1,
                  std::span<const std::uint32_t> j);

// Number of lPS / rPS tableaux with evaluation m: sums of brackets over all
// admissible bottom-row evaluations. Zeros are dropped; an evaluation with no
// nonzero entry is invalid_input.
Count count_lps(std::span<const std::uint32_t> m);
Count count_rps(std::span<const std::uint32_t> m);

// Same counts through the recursions on the first entries.
Count count_lps_rec(std::span<const std::uint32_t> m);
Count count_rps_rec(std::span<const std::uint32_t> m);

// The 2^(n-1) products (1+p_2)^(1-p_3) ... (1+p_2+...+p_{n-1})^(1-p_n),
// indexed by (p_2..p_n) read as a binary number with p_2 most significant.
// Refuses (budget_exceeded) beyond max_n.
std::vector<Count> bell_rowsum_terms(unsigned n, unsigned max_n = 24);

// Sum of the row-sum terms, grouping terms by the running sum p_2 + ... + p_{a-1}.
Count bell_rowsum(unsigned n);

// Stirling numbers of the second kind; 0 outside 1 <= k <= n.
Count stirling2(unsigned n, unsigned k);

/// All 2^(n-1) compositions of n. Order: first part descending, then the
/// tail in the same order recursively, e.g. (3), (2,1), (1,2), (1,1,1).
std::vector<Shape> compositions(unsigned n);
void for_each_composition(unsigned n, const std::function<void(const Shape&)>& fn);

// Number of standard PS tableaux of shape lambda over an n-letter alphabet.
Count hook_count(unsigned n, std::span<const std::uint32_t> shape);

// Size of each fiber of the projection from fillings of lambda to standard PS tableaux.
Count fiber_size(unsigned n, std::span<const std::uint32_t> shape);

// Bell number as a sum of hook counts over all 2^(n-1) compositions of n.
// Refuses (budget_exceeded) beyond max_n.
Count bell_hook(unsigned n, unsigned max_n = 24);

/// Projects a pre-tableau (distinct entries) onto the standard PS tableau of
/// the same shape and content: at step i the smallest entry of columns i..m
/// is swapped into the bottom of column i, which is then sorted.
PlainTableau ps_project(const PlainTableau& t);

// As above, also checking that the content is exactly the given alphabet.
PlainTableau ps_project(const PlainTableau& t, std::span<const Symbol> alphabet);

} // namespace pstab
