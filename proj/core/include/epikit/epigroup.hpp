#ifndef EPIKIT_EPIGROUP_HPP_
#define EPIKIT_EPIGROUP_HPP_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epikit/identity.hpp"
#include "epikit/word.hpp"

namespace epikit {

// A finite semigroup given by its Cayley table. Every finite semigroup is an
// epigroup, so pseudoinversion is total: some power of each element lies in a
// cyclic subgroup, and pinv(x) inverts x * e_x there. All derived structure
// (pseudoinverse map, idempotents, zero, group elements) is computed at
// validation; instances are immutable afterwards and safe to share.
class FiniteEpigroup {
 public:
  // Verifies shape and associativity, then computes the derived structure.
  // Throws BAD_SHAPE or NOT_ASSOCIATIVE (with a witness triple).
  static FiniteEpigroup validate(std::size_t order,
                                 std::vector<std::size_t> table,
                                 std::string name = "");
  static FiniteEpigroup validate(
      const std::vector<std::vector<std::size_t>>& rows,
      std::string name = "");

  std::size_t order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t product(std::size_t a, std::size_t b) const {
    return table_[a * order_ + b];
  }
  const std::vector<std::size_t>& table() const noexcept { return table_; }

  // Pseudoinverse and the idempotent power e_x, both computed from the
  // monogenic subsemigroup of x.
  std::size_t pseudoinverse(std::size_t x) const { return pinv_[x]; }
  std::size_t omega_power(std::size_t x) const { return omega_[x]; }

  const std::vector<std::size_t>& pseudoinverses() const noexcept {
    return pinv_;
  }
  const std::vector<std::size_t>& omega_powers() const noexcept {
    return omega_;
  }

  bool is_idempotent(std::size_t x) const { return product(x, x) == x; }
  const std::vector<std::size_t>& idempotents() const noexcept {
    return idempotents_;
  }
  std::optional<std::size_t> zero() const noexcept { return zero_; }

  // x lies in some subgroup iff pinv(pinv(x)) == x.
  bool is_group_element(std::size_t x) const { return pinv_[pinv_[x]] == x; }
  std::vector<std::size_t> group_elements() const;

  // x^k for k >= 1.
  std::size_t power(std::size_t x, std::size_t k) const;

 private:
  FiniteEpigroup() = default;
  void compute_derived();

  std::size_t order_ = 0;
  std::vector<std::size_t> table_;
  std::string name_;
  std::vector<std::size_t> pinv_;
  std::vector<std::size_t> omega_;
  std::vector<std::size_t> idempotents_;
  std::optional<std::size_t> zero_;
};

// Variable valuation in a finite epigroup.
using Assignment = std::map<Variable, std::size_t>;

// Homomorphic evaluation: products by the table, pseudoinversion by the
// derived map. Throws UNASSIGNED_VARIABLE.
std::size_t evaluate(const FiniteEpigroup& S, const Word& w,
                     const Assignment& assignment);

struct SatisfactionWitness {
  std::size_t identity_index;
  Assignment assignment;
  std::size_t lhs_value;
  std::size_t rhs_value;
};

struct SatisfactionResult {
  bool holds;
  std::optional<SatisfactionWitness> witness;
  explicit operator bool() const noexcept { return holds; }
};

// Universal satisfaction over all assignments, iterated in mixed-radix order
// with variables sorted and the last variable varying fastest; the witness is
// the first violation in that order.
SatisfactionResult satisfies(const FiniteEpigroup& S, const IdentitySystem& sys);
SatisfactionResult satisfies(const FiniteEpigroup& S, const Identity& id);

// Zero present and every element has a power equal to it.
bool is_nil(const FiniteEpigroup& S);

// Least n such that every product of n elements is zero.
// Throws NOT_NIL on non-nil input.
std::size_t nilpotency_index(const FiniteEpigroup& S);

bool is_commutative(const FiniteEpigroup& S);
bool is_semilattice(const FiniteEpigroup& S);

// Componentwise product on pairs (a, b) encoded as a * |T| + b.
FiniteEpigroup direct_product(const FiniteEpigroup& S, const FiniteEpigroup& T);

// The monogenic epigroup with the given index and period: elements
// a, a^2, ..., a^(index+period-1), with a^(index+period) = a^index.
FiniteEpigroup monogenic(std::size_t index, std::size_t period);

// The two-element meet-semilattice {0, 1}.
FiniteEpigroup semilattice2();

// Independent route to the group elements: search all subsets that are
// groups under the table. Intended as the cross-check for is_group_element.
std::vector<bool> group_elements_by_subgroup_search(const FiniteEpigroup& S);

// All nonempty product-closed subsets, each as a sorted element list,
// in deterministic (bitmask) order.
std::vector<std::vector<std::size_t>> all_subsemigroups(const FiniteEpigroup& S);

// The semigroup induced on a product-closed subset, reindexed by position.
FiniteEpigroup subsemigroup(const FiniteEpigroup& S,
                            const std::vector<std::size_t>& elements);

// Cayley file format: optional '# name: ...' header, line with the order n,
// then n rows of n space-separated 0-based indices.
FiniteEpigroup load_cayley(std::istream& in, const std::string& source);
FiniteEpigroup load_cayley_file(const std::string& path);
std::string to_cayley(const FiniteEpigroup& S);

}  // namespace epikit

#endif  // EPIKIT_EPIGROUP_HPP_
