#ifndef EPIKIT_IDENTITY_HPP_
#define EPIKIT_IDENTITY_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "epikit/word.hpp"

namespace epikit {

// An identity u ~ v between two nonempty words. Satisfaction is symmetric;
// the two sides are ordered only so rewrite rules can pick a direction.
struct Identity {
  Word lhs;
  Word rhs;

  bool is_trivial() const { return lhs == rhs; }
  bool operator==(const Identity& other) const;

  // "lhs = rhs" in the term grammar.
  std::string to_string() const;
};

// The shorthand w ~ 0: shorthand for the system {w x ~ w, x w ~ w} with a
// variable x not occurring in w. A semigroup satisfies it iff it has a zero
// and every value of w is that zero.
struct ZeroIdentity {
  Word w;
};

struct IdentitySystem {
  std::vector<Identity> items;

  bool empty() const { return items.empty(); }
  std::size_t size() const { return items.size(); }
};

// The two-identity expansion of z with the given fresh variable.
// Throws FRESH_NOT_FRESH if fresh occurs in z.w.
IdentitySystem expand_zero(const ZeroIdentity& z, const Variable& fresh);

// Expansion with the default fresh variable: the first of x1, x2, ... that
// does not occur in z.w.
IdentitySystem expand_zero(const ZeroIdentity& z);
Variable default_fresh_variable(const Word& w);

// Word problem for semilattices: u ~ v holds in every semilattice iff
// content(u) == content(v). Pseudoinversion is the identity map there, so
// the criterion covers unary words as well.
bool holds_in_semilattices(const Identity& id);

// The identity x1...xn ~ x1...x_{i-1} pinv(pinv(x_i...x_j)) x_{j+1}...xn
// whose satisfaction bounds the nilpotency degree by n. Indices are 1-based;
// throws BAD_INDICES unless 1 <= i <= j <= n.
Identity make_degree_identity(std::size_t n, std::size_t i, std::size_t j);

// True iff id has the shape that forces degree <= n: lhs a product of n
// pairwise-distinct variables, equal content on both sides, and rhs longer
// than n (infinite length counts).
bool matches_degree_criterion(const Identity& id, std::size_t n);

// Indices (a, b) with a < b of items equal as unordered identities.
std::vector<std::pair<std::size_t, std::size_t>> duplicate_pairs(
    const IdentitySystem& sys);

// One identity per line, "LHS = RHS" or "LHS = 0" (expanded at load with the
// default fresh variable); '#' starts a comment. Errors carry line numbers.
IdentitySystem load_identities(std::istream& in, const std::string& source);
IdentitySystem load_identities_file(const std::string& path);

}  // namespace epikit

#endif  // EPIKIT_IDENTITY_HPP_
