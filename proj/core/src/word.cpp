#include "epikit/word.hpp"

#include <cctype>

#include "epikit/error.hpp"
#include "epikit/parse.hpp"

namespace epikit {

Variable::Variable(std::string name) : name_(std::move(name)) {
  if (name_.empty() || name_[0] < 'a' || name_[0] > 'z')
    throw Error(ErrorCode::invalid_variable,
                "variable must start with a lowercase letter: '" + name_ + "'");
  if (name_.size() > 1) {
    for (std::size_t i = 1; i < name_.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name_[i])))
        throw Error(ErrorCode::invalid_variable,
                    "variable suffix must be decimal digits: '" + name_ + "'");
    suffix_ = std::stoull(name_.substr(1));
  }
}

std::strong_ordering Variable::operator<=>(const Variable& other) const noexcept {
  if (auto c = letter() <=> other.letter(); c != 0) return c;
  bool a = suffix_.has_value(), b = other.suffix_.has_value();
  if (a != b) return a <=> b;  // bare letter sorts before indexed
  if (a) return *suffix_ <=> *other.suffix_;
  return std::strong_ordering::equal;
}

Variable indexed_variable(char letter, std::size_t index) {
  return Variable(std::string(1, letter) + std::to_string(index));
}

struct Word::Node {
  Kind kind;
  std::optional<Variable> var;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

Word Word::var(Variable v) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::variable;
  node->var = std::move(v);
  return Word(std::move(node));
}

Word::Kind Word::kind() const noexcept { return node_->kind; }

const Variable& Word::variable() const { return *node_->var; }
Word Word::left() const { return Word(node_->a); }
Word Word::right() const { return Word(node_->b); }
Word Word::pinv_operand() const { return Word(node_->a); }

Word operator*(const Word& a, const Word& b) {
  auto node = std::make_shared<Word::Node>();
  node->kind = Word::Kind::concat;
  node->a = a.node_;
  node->b = b.node_;
  return Word(std::move(node));
}

Word pinv(const Word& w) {
  auto node = std::make_shared<Word::Node>();
  node->kind = Word::Kind::pinv;
  node->a = w.node_;
  return Word(std::move(node));
}

Word pow(const Word& w, std::size_t k) {
  if (k == 0)
    throw Error(ErrorCode::bad_indices, "power must be at least 1");
  Word out = w;
  for (std::size_t i = 1; i < k; ++i) out = out * w;
  return out;
}

Word omega(const Word& w) { return w * pinv(w); }

namespace {

void flatten_into(const Word& w, std::vector<Word>& out) {
  if (w.is_concat()) {
    flatten_into(w.left(), out);
    flatten_into(w.right(), out);
  } else {
    out.push_back(w);
  }
}

}  // namespace

std::vector<Word> flatten(const Word& w) {
  std::vector<Word> out;
  flatten_into(w, out);
  return out;
}

Word concat_all(const std::vector<Word>& factors) {
  if (factors.empty())
    throw Error(ErrorCode::bad_shape, "cannot build a word from zero factors");
  Word out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) out = out * factors[i];
  return out;
}

bool Word::operator==(const Word& other) const {
  if (node_ == other.node_) return true;
  auto fa = flatten(*this), fb = flatten(other);
  if (fa.size() != fb.size()) return false;
  for (std::size_t i = 0; i < fa.size(); ++i) {
    const Word& x = fa[i];
    const Word& y = fb[i];
    if (x.kind() != y.kind()) return false;
    if (x.is_variable()) {
      if (!(x.variable() == y.variable())) return false;
    } else {
      if (!(x.pinv_operand() == y.pinv_operand())) return false;
    }
  }
  return true;
}

std::set<Variable> content(const Word& w) {
  std::set<Variable> out;
  std::vector<Word> stack{w};
  while (!stack.empty()) {
    Word cur = stack.back();
    stack.pop_back();
    switch (cur.kind()) {
      case Word::Kind::variable: out.insert(cur.variable()); break;
      case Word::Kind::concat:
        stack.push_back(cur.left());
        stack.push_back(cur.right());
        break;
      case Word::Kind::pinv: stack.push_back(cur.pinv_operand()); break;
    }
  }
  return out;
}

std::optional<std::size_t> length(const Word& w) {
  switch (w.kind()) {
    case Word::Kind::variable: return 1;
    case Word::Kind::pinv: return std::nullopt;
    case Word::Kind::concat: {
      auto l = length(w.left());
      auto r = length(w.right());
      if (!l || !r) return std::nullopt;
      return *l + *r;
    }
  }
  return std::nullopt;
}

bool length_greater(const Word& w, std::size_t n) {
  auto len = length(w);
  return !len || *len > n;
}

bool is_semigroup_word(const Word& w) { return length(w).has_value(); }

bool is_linear(const Word& w) {
  if (!is_semigroup_word(w))
    throw Error(ErrorCode::not_semigroup_word,
                "linearity is defined for semigroup words only: " + render(w));
  return *length(w) == content(w).size();
}

Word substitute(const Word& w, const Substitution& map) {
  switch (w.kind()) {
    case Word::Kind::variable: {
      auto it = map.find(w.variable());
      if (it == map.end())
        throw Error(ErrorCode::unmapped_variable,
                    "no image for variable '" + w.variable().name() + "'");
      return it->second;
    }
    case Word::Kind::concat:
      return substitute(w.left(), map) * substitute(w.right(), map);
    case Word::Kind::pinv:
      return pinv(substitute(w.pinv_operand(), map));
  }
  throw Error(ErrorCode::bad_shape, "corrupt word node");
}

namespace {

struct PowerPair {
  std::size_t p;
  std::size_t q;
};

// Rewrites valid in every epigroup: factors over one variable commute with
// their pseudoinverses, pinv of x^k is pinv(x)^k, and a pair (p, q) with
// q >= 1 denotes a group element whose pseudoinverse is its group inverse.
PowerPair eval_powers(const Word& w) {
  switch (w.kind()) {
    case Word::Kind::variable: return {1, 0};
    case Word::Kind::concat: {
      auto l = eval_powers(w.left());
      auto r = eval_powers(w.right());
      return {l.p + r.p, l.q + r.q};
    }
    case Word::Kind::pinv: {
      auto u = eval_powers(w.pinv_operand());
      if (u.q == 0) return {0, u.p};       // pinv(x^p) = pinv(x)^p
      if (u.p == u.q) return {1, 1};       // pinv of the idempotent
      if (u.p > u.q) return {0, u.p - u.q};
      return {u.q - u.p + 1, 1};
    }
  }
  throw Error(ErrorCode::bad_shape, "corrupt word node");
}

// Least representative of the shift class {(p+k, q+k)}: multiplying a group
// element by the idempotent changes nothing, so any common surplus cancels.
PowerPair reduce_powers(PowerPair v) {
  if (v.q == 0) return v;
  if (v.p >= v.q) return {v.p - v.q + 1, 1};
  return {0, v.q - v.p};
}

}  // namespace

OneVariablePowers one_variable_normal_form(const Word& w) {
  auto vars = content(w);
  if (vars.size() != 1)
    throw Error(ErrorCode::not_one_variable,
                "expected exactly one variable, found " +
                    std::to_string(vars.size()) + " in " + render(w));
  PowerPair pq = reduce_powers(eval_powers(w));
  return OneVariablePowers{*vars.begin(), pq.p, pq.q};
}

Word power_form(const Variable& x, std::size_t base_power,
                std::size_t pinv_power) {
  if (base_power + pinv_power == 0)
    throw Error(ErrorCode::bad_indices, "p + q must be at least 1");
  std::vector<Word> factors;
  Word v = Word::var(x);
  for (std::size_t i = 0; i < base_power; ++i) factors.push_back(v);
  for (std::size_t i = 0; i < pinv_power; ++i) factors.push_back(pinv(v));
  return concat_all(factors);
}

Word OneVariablePowers::as_word() const {
  return power_form(var, base_power, pinv_power);
}

}  // namespace epikit
