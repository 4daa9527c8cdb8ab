#ifndef EPIKIT_ENUMERATE_HPP_
#define EPIKIT_ENUMERATE_HPP_

#include <cstddef>
#include <vector>

#include "epikit/epigroup.hpp"

namespace epikit {

// All associative tables of the given order in lexicographic order on the
// flattened table, optionally filtered by an identity system. Exhaustive
// search is capped at order 3 (3^9 = 19683 candidates); larger models come
// from the fixture catalog. The candidate space is partitioned by first row
// into independent work units, so the output is identical for any job count.
// Throws ORDER_TOO_LARGE above the cap.
std::vector<FiniteEpigroup> enumerate_epigroups(
    std::size_t order, const IdentitySystem* filter = nullptr,
    unsigned jobs = 1);

// Number of raw (not necessarily associative) tables of the given order.
std::size_t table_candidate_count(std::size_t order);

// Lexicographically least relabeling of the table under all permutations of
// the elements; equal keys mean isomorphic presentations.
std::vector<std::size_t> canonical_table(const FiniteEpigroup& S);

constexpr std::size_t kMaxEnumerationOrder = 3;

}  // namespace epikit

#endif  // EPIKIT_ENUMERATE_HPP_
