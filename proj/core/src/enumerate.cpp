#include "epikit/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "epikit/error.hpp"

namespace epikit {

std::size_t table_candidate_count(std::size_t order) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < order * order; ++i) count *= order;
  return count;
}

namespace {

bool is_associative(const std::vector<std::size_t>& t, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t ab = t[a * n + b];
      for (std::size_t c = 0; c < n; ++c)
        if (t[ab * n + c] != t[a * n + t[b * n + c]]) return false;
    }
  return true;
}

// Enumerates, within one first-row block, every associative table in
// lexicographic order of the remaining cells.
void scan_block(std::size_t n, std::vector<std::size_t> table,
                const IdentitySystem* filter,
                std::vector<FiniteEpigroup>& out) {
  std::size_t cells = n * n;
  std::fill(table.begin() + n, table.end(), 0);
  while (true) {
    if (is_associative(table, n)) {
      FiniteEpigroup S = FiniteEpigroup::validate(n, table);
      if (!filter || satisfies(S, *filter).holds) out.push_back(std::move(S));
    }
    // advance the tail cells as a base-n counter
    std::size_t i = cells;
    bool done = true;
    while (i > n) {
      --i;
      if (++table[i] < n) {
        done = false;
        break;
      }
      table[i] = 0;
    }
    if (done) break;
  }
}

}  // namespace

std::vector<FiniteEpigroup> enumerate_epigroups(std::size_t order,
                                                const IdentitySystem* filter,
                                                unsigned jobs) {
  if (order == 0)
    throw Error(ErrorCode::bad_shape, "order must be at least 1");
  if (order > kMaxEnumerationOrder)
    throw Error(ErrorCode::order_too_large,
                "exhaustive enumeration is capped at order " +
                    std::to_string(kMaxEnumerationOrder) + ", got " +
                    std::to_string(order));
  if (jobs == 0) jobs = 1;

  // one work unit per first row, in lexicographic order
  std::size_t units = 1;
  for (std::size_t i = 0; i < order; ++i) units *= order;

  std::vector<std::vector<FiniteEpigroup>> buckets(units);
  std::atomic<std::size_t> next_unit{0};

  auto worker = [&]() {
    while (true) {
      std::size_t unit = next_unit.fetch_add(1);
      if (unit >= units) return;
      std::vector<std::size_t> table(order * order, 0);
      std::size_t code = unit;
      for (std::size_t col = order; col-- > 0;) {
        table[col] = code % order;
        code /= order;
      }
      scan_block(order, std::move(table), filter, buckets[unit]);
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<FiniteEpigroup> out;
  for (auto& bucket : buckets)
    for (auto& S : bucket) out.push_back(std::move(S));
  return out;
}

std::vector<std::size_t> canonical_table(const FiniteEpigroup& S) {
  std::size_t n = S.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> best;
  std::vector<std::size_t> relabeled(n * n);
  do {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        relabeled[perm[a] * n + perm[b]] = perm[S.product(a, b)];
    if (best.empty() || relabeled < best) best = relabeled;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace epikit
