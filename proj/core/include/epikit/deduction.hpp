#ifndef EPIKIT_DEDUCTION_HPP_
#define EPIKIT_DEDUCTION_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "epikit/identity.hpp"
#include "epikit/word.hpp"

namespace epikit {

enum class Direction { left_to_right, right_to_left };

struct RewriteRule {
  std::string name;  // for diagnostics; may be empty for inline rules
  Identity identity;
  Direction direction = Direction::left_to_right;

  const Word& source() const {
    return direction == Direction::left_to_right ? identity.lhs : identity.rhs;
  }
  const Word& target() const {
    return direction == Direction::left_to_right ? identity.rhs : identity.lhs;
  }
};

// A rewrite locus: descend into pseudoinverse factors along `path` (each
// entry is a factor index whose factor must be pseudoinverse-rooted), then
// take factors [begin, end) of the flattened sequence at that level.
struct Position {
  std::vector<std::size_t> path;
  std::size_t begin = 0;
  std::size_t end = 0;

  std::string to_string() const;
};

struct DerivationStep {
  RewriteRule rule;
  Position position;
  // Explicit bindings; rule variables without a binding map to themselves.
  Substitution substitution;
};

struct DerivationChain {
  Word start;
  std::vector<DerivationStep> steps;
  Word end;
};

// Replaces the located subword, which must equal the substituted source side
// of the rule, by the substituted target side. Everything outside the
// position is unchanged. Throws NO_MATCH (expected vs found) or BAD_POSITION.
Word apply_step(const Word& current, const DerivationStep& step);

struct ChainReport {
  bool verified = false;
  // Index of the failing step; equal to steps.size() when every step applied
  // but the result differs from the declared end.
  std::optional<std::size_t> failed_step;
  std::string diagnostic;
  std::optional<Word> final_word;
};

ChainReport verify_chain(const DerivationChain& chain);

// Rules valid in every epigroup: the chain of identities around the omega
// power and the double pseudoinverse, commutation of an element with its
// pseudoinverse, idempotency and absorption at the omega power, and
// pseudoinversion of small powers. Each rule is checked against every
// epigroup of order <= 3 once per process before being handed out.
const std::vector<RewriteRule>& builtin_rules();

// nullopt when the name is not a builtin.
std::optional<RewriteRule> find_builtin_rule(const std::string& name);

// Chain file format ('#' starts a comment):
//   start: <term>
//   rule <name>: <term> = <term>          zero or more local rules
//   step: <rule> [dir=LR|RL] at=<lo>..<hi> [path=i,j,...] [sub=v=<term>, ...]
//   end: <term>
// <rule> is a local rule name, a builtin rule name, or an inline identity
// written {<term> = <term>}.
DerivationChain parse_chain(std::istream& in, const std::string& source);
DerivationChain load_chain_file(const std::string& path);

}  // namespace epikit

#endif  // EPIKIT_DEDUCTION_HPP_
