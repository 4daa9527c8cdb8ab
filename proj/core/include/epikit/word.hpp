#ifndef EPIKIT_WORD_HPP_
#define EPIKIT_WORD_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "epikit/variable.hpp"

namespace epikit {

// An element of the free unary semigroup: a tree built from variables with
// binary concatenation and unary pseudoinversion. Words are immutable values;
// concatenation is associative, so equality and positions are defined on the
// flattened factor sequence, never on the tree shape.
class Word {
 public:
  enum class Kind { variable, concat, pinv };

  static Word var(Variable v);
  static Word var(const std::string& name) { return var(Variable(name)); }

  Kind kind() const noexcept;
  bool is_variable() const noexcept { return kind() == Kind::variable; }
  bool is_concat() const noexcept { return kind() == Kind::concat; }
  bool is_pinv() const noexcept { return kind() == Kind::pinv; }

  // Preconditions: matching kind.
  const Variable& variable() const;
  Word left() const;
  Word right() const;
  Word pinv_operand() const;

  // Associativity-insensitive equality: flattened factor sequences compared
  // factor by factor, recursing through pseudoinversion.
  bool operator==(const Word& other) const;

  friend Word operator*(const Word& a, const Word& b);
  friend Word pinv(const Word& w);

 private:
  struct Node;
  explicit Word(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Word operator*(const Word& a, const Word& b);
Word pinv(const Word& w);

// w^k as k-fold concatenation; requires k >= 1.
Word pow(const Word& w, std::size_t k);

// The omega power w * pinv(w). There is no dedicated node for it: the
// abbreviation is expanded at construction.
Word omega(const Word& w);

// The left-to-right sequence of atomic factors (variables and
// pseudoinverse-rooted subwords). Concatenating the factors reproduces the
// word up to associativity, and every factor flattens to itself.
std::vector<Word> flatten(const Word& w);

// Rebuilds a word from a nonempty factor sequence.
Word concat_all(const std::vector<Word>& factors);

// The set of variables occurring in w, descending through pseudoinversion.
std::set<Variable> content(const Word& w);

// Number of variable occurrences for semigroup words; nullopt means the word
// involves pseudoinversion and its length is infinite.
std::optional<std::size_t> length(const Word& w);

// True when `length` is infinite or exceeds n.
bool length_greater(const Word& w, std::size_t n);

bool is_semigroup_word(const Word& w);

// Every variable occurs at most once. Defined for semigroup words only;
// throws NOT_SEMIGROUP_WORD otherwise.
bool is_linear(const Word& w);

using Substitution = std::map<Variable, Word>;

// Homomorphic replacement of variables. Throws UNMAPPED_VARIABLE if some
// variable of w has no image.
Word substitute(const Word& w, const Substitution& map);

// Normal form x^p pinv(x)^q of a one-variable word, valid in every epigroup.
// For semigroup words q = 0 and p is the length; otherwise q >= 1 and the
// pair is the least representative of its rewrite class.
struct OneVariablePowers {
  Variable var;
  std::size_t base_power;  // p
  std::size_t pinv_power;  // q

  Word as_word() const;
};

// Throws NOT_ONE_VARIABLE unless content(w) is a single variable.
OneVariablePowers one_variable_normal_form(const Word& w);

// x^p pinv(x)^q with p + q >= 1.
Word power_form(const Variable& x, std::size_t base_power,
                std::size_t pinv_power);

}  // namespace epikit

#endif  // EPIKIT_WORD_HPP_
