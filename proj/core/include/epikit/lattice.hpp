#ifndef EPIKIT_LATTICE_HPP_
#define EPIKIT_LATTICE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace epikit {

// A finite lattice given by its order matrix. Validation checks the partial
// order axioms and the existence of all binary joins and meets, then fills
// the operation tables. Instances are immutable afterwards.
class FiniteLattice {
 public:
  // Throws NOT_POSET or NOT_LATTICE with a witness.
  static FiniteLattice validate(const std::vector<std::vector<bool>>& leq,
                                std::string name = "");
  // Order matrix from a cover relation (reflexive-transitive closure), then
  // the same validation.
  static FiniteLattice from_covers(
      std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& covers,
      std::string name = "");

  std::size_t size() const noexcept { return size_; }
  const std::string& name() const noexcept { return name_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size_ + b]; }
  std::size_t join(std::size_t a, std::size_t b) const {
    return join_[a * size_ + b];
  }
  std::size_t meet(std::size_t a, std::size_t b) const {
    return meet_[a * size_ + b];
  }

  // A nonempty finite lattice always has both.
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }

  // x covers the bottom. Total here: a validated nonempty lattice always
  // has a bottom.
  bool is_atom(std::size_t x) const;
  std::vector<std::size_t> atoms() const;

 private:
  FiniteLattice() = default;

  std::size_t size_ = 0;
  std::string name_;
  std::vector<bool> leq_;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> meet_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

// Element properties from the special-element theory. Each returns the first
// failing witness in scan order, or nullopt when the property holds.

// y <= z but (x v y) ^ z != (x ^ z) v y.
std::optional<std::pair<std::size_t, std::size_t>> modular_witness(
    const FiniteLattice& L, std::size_t x);
bool is_modular_element(const FiniteLattice& L, std::size_t x);

// x v y = x v z and x ^ y = x ^ z but y != z.
std::optional<std::pair<std::size_t, std::size_t>> cancellable_witness(
    const FiniteLattice& L, std::size_t x);
bool is_cancellable_element(const FiniteLattice& L, std::size_t x);

// Median identity (x v y) ^ (y v z) ^ (z v x) = (x ^ y) v (y ^ z) v (z ^ x).
bool neutral_via_median(const FiniteLattice& L, std::size_t x);
std::optional<std::pair<std::size_t, std::size_t>> neutral_median_witness(
    const FiniteLattice& L, std::size_t x);

// Every sublattice generated by {x, y, z} is distributive.
bool neutral_via_generated_sublattice(const FiniteLattice& L, std::size_t x);

// Runs both algorithms; they must coincide (throws std::logic_error if not,
// which would be an implementation defect).
bool is_neutral_element(const FiniteLattice& L, std::size_t x);

struct LatticeCheck {
  bool holds = true;
  std::string witness;  // human-readable; empty when holds
};

// Cancellability transfers across joining a neutral atom: for every neutral
// atom a and every x, x is cancellable iff x v a is.
LatticeCheck check_cancellable_join_atom(const FiniteLattice& L);

// If cancellation holds above a neutral atom a (equal joins/meets with x
// force y v a = z v a) then x is cancellable.
LatticeCheck check_cancellation_over_atom(const FiniteLattice& L);

// A modular non-cancellable x with witness (y, z) always refines to x' <= x
// with x' v y = x' v z, x' ^ y = x' ^ z and y v z = x' v y.
LatticeCheck check_modular_witness_refinement(const FiniteLattice& L);

// All lattices on {0..size-1}, distinct as raw labeled order matrices, in
// lexicographic order of the matrix bits. With dedupe, one representative
// per isomorphism class (the least matrix). Throws SIZE_TOO_LARGE above 7.
std::vector<FiniteLattice> enumerate_lattices(std::size_t size,
                                              bool dedupe = false);

// Streaming form of the above, for the larger sizes.
void for_each_lattice(std::size_t size, bool dedupe,
                      const std::function<void(const FiniteLattice&)>& fn);

constexpr std::size_t kMaxLatticeSize = 7;

// Least relabeling of the order matrix; equal keys mean isomorphic lattices.
std::uint64_t canonical_lattice_key(const FiniteLattice& L);

// Named fixtures: chain2..chain6, M3, N5, grid2x2, B3.
FiniteLattice lattice_fixture(const std::string& name);

// Lattice file format: a size line followed by size rows of 0/1 entries for
// leq, or a size line, a 'covers:' line and pairs i<j.
FiniteLattice load_lattice(std::istream& in, const std::string& source);
FiniteLattice load_lattice_file(const std::string& path);

}  // namespace epikit

#endif  // EPIKIT_LATTICE_HPP_
