#include "epikit/epigroup.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "epikit/error.hpp"

namespace epikit {

FiniteEpigroup FiniteEpigroup::validate(std::size_t order,
                                        std::vector<std::size_t> table,
                                        std::string name) {
  if (order == 0)
    throw Error(ErrorCode::bad_shape, "order must be at least 1");
  if (table.size() != order * order)
    throw Error(ErrorCode::bad_shape,
                "expected " + std::to_string(order * order) +
                    " table entries, got " + std::to_string(table.size()));
  for (std::size_t v : table)
    if (v >= order)
      throw Error(ErrorCode::bad_shape,
                  "table entry " + std::to_string(v) + " out of range");

  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      for (std::size_t c = 0; c < order; ++c) {
        std::size_t ab_c = table[table[a * order + b] * order + c];
        std::size_t a_bc = table[a * order + table[b * order + c]];
        if (ab_c != a_bc)
          throw Error(ErrorCode::not_associative,
                      "(a b) c != a (b c) for a=" + std::to_string(a) +
                          " b=" + std::to_string(b) +
                          " c=" + std::to_string(c));
      }

  FiniteEpigroup S;
  S.order_ = order;
  S.table_ = std::move(table);
  S.name_ = std::move(name);
  S.compute_derived();
  return S;
}

FiniteEpigroup FiniteEpigroup::validate(
    const std::vector<std::vector<std::size_t>>& rows, std::string name) {
  std::size_t n = rows.size();
  std::vector<std::size_t> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n)
      throw Error(ErrorCode::bad_shape, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate(n, std::move(flat), std::move(name));
}

std::size_t FiniteEpigroup::power(std::size_t x, std::size_t k) const {
  std::size_t out = x;
  for (std::size_t i = 1; i < k; ++i) out = product(out, x);
  return out;
}

void FiniteEpigroup::compute_derived() {
  pinv_.assign(order_, 0);
  omega_.assign(order_, 0);

  for (std::size_t x = 0; x < order_; ++x) {
    // Walk the power sequence x, x^2, ... to find index and period of the
    // monogenic subsemigroup.
    std::vector<std::size_t> first(order_, order_);  // element -> exponent
    std::vector<std::size_t> seq;
    std::size_t cur = x;
    std::size_t exponent = 1;
    while (first[cur] == order_) {
      first[cur] = exponent;
      seq.push_back(cur);
      cur = product(cur, x);
      ++exponent;
    }
    std::size_t index = first[cur];          // first exponent of the cycle
    std::size_t period = exponent - index;   // cycle length

    auto power_at = [&](std::size_t e) {  // e >= 1, folded into the cycle
      if (e <= seq.size()) return seq[e - 1];
      std::size_t folded = (e - index) % period + index;
      return seq[folded - 1];
    };

    // e_x = the unique idempotent power: exponent in [index, index+period)
    // divisible by the period.
    std::size_t m = index + (period - index % period) % period;
    omega_[x] = power_at(m);

    // pinv(x) = inverse of x * e_x in the kernel group: the power with
    // exponent congruent to -1 mod the period.
    std::size_t mp = index + (period + (m - 1) % period - index % period) % period;
    // mp is the exponent in [index, index+period) congruent to m-1 mod period
    pinv_[x] = power_at(mp);
  }

  idempotents_.clear();
  for (std::size_t x = 0; x < order_; ++x)
    if (is_idempotent(x)) idempotents_.push_back(x);

  zero_.reset();
  for (std::size_t z = 0; z < order_; ++z) {
    bool absorbing = true;
    for (std::size_t a = 0; a < order_ && absorbing; ++a)
      absorbing = product(z, a) == z && product(a, z) == z;
    if (absorbing) {
      if (zero_)  // impossible: z1 = z1 z2 = z2
        throw std::logic_error("two absorbing elements in one table");
      zero_ = z;
    }
  }
}

std::vector<std::size_t> FiniteEpigroup::group_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < order_; ++x)
    if (is_group_element(x)) out.push_back(x);
  return out;
}

std::size_t evaluate(const FiniteEpigroup& S, const Word& w,
                     const Assignment& assignment) {
  switch (w.kind()) {
    case Word::Kind::variable: {
      auto it = assignment.find(w.variable());
      if (it == assignment.end())
        throw Error(ErrorCode::unassigned_variable,
                    "no value for variable '" + w.variable().name() + "'");
      return it->second;
    }
    case Word::Kind::concat:
      return S.product(evaluate(S, w.left(), assignment),
                       evaluate(S, w.right(), assignment));
    case Word::Kind::pinv:
      return S.pseudoinverse(evaluate(S, w.pinv_operand(), assignment));
  }
  throw Error(ErrorCode::bad_shape, "corrupt word node");
}

namespace {

// Calls fn(assignment) for every valuation of vars, last variable fastest.
// fn returns false to stop early; the return value mirrors that.
bool for_each_assignment(const FiniteEpigroup& S,
                         const std::vector<Variable>& vars,
                         const std::function<bool(const Assignment&)>& fn) {
  std::vector<std::size_t> digits(vars.size(), 0);
  while (true) {
    Assignment asg;
    for (std::size_t i = 0; i < vars.size(); ++i) asg[vars[i]] = digits[i];
    if (!fn(asg)) return false;
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++digits[i] < S.order()) break;
      digits[i] = 0;
      if (i == 0) return true;
    }
    if (vars.empty()) return true;
  }
}

}  // namespace

SatisfactionResult satisfies(const FiniteEpigroup& S,
                             const IdentitySystem& sys) {
  for (std::size_t idx = 0; idx < sys.items.size(); ++idx) {
    const Identity& id = sys.items[idx];
    std::set<Variable> var_set = content(id.lhs);
    auto rhs_vars = content(id.rhs);
    var_set.insert(rhs_vars.begin(), rhs_vars.end());
    std::vector<Variable> vars(var_set.begin(), var_set.end());

    std::optional<SatisfactionWitness> witness;
    bool ok = for_each_assignment(S, vars, [&](const Assignment& asg) {
      std::size_t l = evaluate(S, id.lhs, asg);
      std::size_t r = evaluate(S, id.rhs, asg);
      if (l == r) return true;
      witness = SatisfactionWitness{idx, asg, l, r};
      return false;
    });
    if (!ok) return SatisfactionResult{false, witness};
  }
  return SatisfactionResult{true, std::nullopt};
}

SatisfactionResult satisfies(const FiniteEpigroup& S, const Identity& id) {
  return satisfies(S, IdentitySystem{{id}});
}

bool is_nil(const FiniteEpigroup& S) {
  auto zero = S.zero();
  if (!zero) return false;
  for (std::size_t x = 0; x < S.order(); ++x)
    if (S.power(x, S.order()) != *zero) return false;
  return true;
}

std::size_t nilpotency_index(const FiniteEpigroup& S) {
  if (!is_nil(S))
    throw Error(ErrorCode::not_nil,
                "nilpotency index is defined for nil semigroups only");
  std::size_t zero = *S.zero();
  // Products of length k, as a set; nil forces the chain to reach {zero}.
  std::vector<bool> cur(S.order(), true);
  for (std::size_t k = 1; k <= S.order(); ++k) {
    bool only_zero = true;
    for (std::size_t x = 0; x < S.order(); ++x)
      if (cur[x] && x != zero) only_zero = false;
    if (only_zero) return k;
    std::vector<bool> next(S.order(), false);
    for (std::size_t x = 0; x < S.order(); ++x)
      if (cur[x])
        for (std::size_t y = 0; y < S.order(); ++y)
          next[S.product(x, y)] = true;
    cur = std::move(next);
  }
  return S.order();  // a nil semigroup of order n has index <= n
}

bool is_commutative(const FiniteEpigroup& S) {
  for (std::size_t a = 0; a < S.order(); ++a)
    for (std::size_t b = a + 1; b < S.order(); ++b)
      if (S.product(a, b) != S.product(b, a)) return false;
  return true;
}

bool is_semilattice(const FiniteEpigroup& S) {
  if (!is_commutative(S)) return false;
  for (std::size_t a = 0; a < S.order(); ++a)
    if (!S.is_idempotent(a)) return false;
  return true;
}

FiniteEpigroup direct_product(const FiniteEpigroup& S,
                              const FiniteEpigroup& T) {
  std::size_t n = S.order() * T.order();
  std::vector<std::size_t> table(n * n);
  for (std::size_t a = 0; a < S.order(); ++a)
    for (std::size_t b = 0; b < T.order(); ++b)
      for (std::size_t c = 0; c < S.order(); ++c)
        for (std::size_t d = 0; d < T.order(); ++d) {
          std::size_t lhs = a * T.order() + b;
          std::size_t rhs = c * T.order() + d;
          table[lhs * n + rhs] =
              S.product(a, c) * T.order() + T.product(b, d);
        }
  std::string name;
  if (!S.name().empty() && !T.name().empty())
    name = S.name() + "x" + T.name();
  return FiniteEpigroup::validate(n, std::move(table), std::move(name));
}

FiniteEpigroup monogenic(std::size_t index, std::size_t period) {
  if (index == 0 || period == 0)
    throw Error(ErrorCode::bad_shape, "index and period must be at least 1");
  std::size_t n = index + period - 1;
  auto fold = [&](std::size_t e) {  // exponent -> element 0-based
    if (e <= n) return e - 1;
    return (e - index) % period + index - 1;
  };
  std::vector<std::size_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = fold(a + b + 2);
  return FiniteEpigroup::validate(
      n, std::move(table),
      "mono_i" + std::to_string(index) + "p" + std::to_string(period));
}

FiniteEpigroup semilattice2() {
  return FiniteEpigroup::validate(2, {0, 0, 0, 1}, "sl2");
}

std::vector<bool> group_elements_by_subgroup_search(const FiniteEpigroup& S) {
  std::size_t n = S.order();
  std::vector<bool> in_group(n, false);
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < n; ++x)
      if (mask & (std::size_t{1} << x)) members.push_back(x);

    bool closed = true;
    for (std::size_t a : members)
      for (std::size_t b : members)
        if (!(mask & (std::size_t{1} << S.product(a, b)))) closed = false;
    if (!closed) continue;

    // group = closed subset with a two-sided identity and inverses
    std::optional<std::size_t> identity;
    for (std::size_t e : members) {
      bool unit = true;
      for (std::size_t a : members)
        if (S.product(e, a) != a || S.product(a, e) != a) unit = false;
      if (unit) {
        identity = e;
        break;
      }
    }
    if (!identity) continue;
    bool group = true;
    for (std::size_t a : members) {
      bool has_inverse = false;
      for (std::size_t b : members)
        if (S.product(a, b) == *identity && S.product(b, a) == *identity)
          has_inverse = true;
      if (!has_inverse) group = false;
    }
    if (!group) continue;
    for (std::size_t a : members) in_group[a] = true;
  }
  return in_group;
}

std::vector<std::vector<std::size_t>> all_subsemigroups(
    const FiniteEpigroup& S) {
  std::size_t n = S.order();
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a) {
      if (!(mask & (std::size_t{1} << a))) continue;
      for (std::size_t b = 0; b < n && closed; ++b) {
        if (!(mask & (std::size_t{1} << b))) continue;
        closed = (mask >> S.product(a, b)) & 1;
      }
    }
    if (!closed) continue;
    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < n; ++x)
      if (mask & (std::size_t{1} << x)) members.push_back(x);
    out.push_back(std::move(members));
  }
  return out;
}

FiniteEpigroup subsemigroup(const FiniteEpigroup& S,
                            const std::vector<std::size_t>& elements) {
  std::vector<std::size_t> position(S.order(), S.order());
  for (std::size_t i = 0; i < elements.size(); ++i)
    position[elements[i]] = i;
  std::size_t n = elements.size();
  std::vector<std::size_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t p = S.product(elements[i], elements[j]);
      if (position[p] == S.order())
        throw Error(ErrorCode::bad_shape, "subset is not product-closed");
      table[i * n + j] = position[p];
    }
  return FiniteEpigroup::validate(n, std::move(table));
}

FiniteEpigroup load_cayley(std::istream& in, const std::string& source) {
  std::string name;
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::vector<std::size_t>> rows;
  std::optional<std::size_t> order;

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      std::string comment = line.substr(hash + 1);
      auto key = comment.find("name:");
      if (key != std::string::npos) {
        std::string value = comment.substr(key + 5);
        std::istringstream vs(value);
        vs >> name;
      }
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::vector<std::size_t> numbers;
    std::string tok;
    while (ls >> tok) {
      try {
        numbers.push_back(std::stoull(tok));
      } catch (...) {
        throw Error(ErrorCode::parse_error,
                    source + ":" + std::to_string(lineno) +
                        ": expected a number, got '" + tok + "'");
      }
    }
    if (numbers.empty()) continue;
    if (!order) {
      if (numbers.size() != 1)
        throw Error(ErrorCode::parse_error,
                    source + ":" + std::to_string(lineno) +
                        ": first line must contain the order only");
      order = numbers[0];
    } else {
      if (numbers.size() != *order)
        throw Error(ErrorCode::parse_error,
                    source + ":" + std::to_string(lineno) + ": expected " +
                        std::to_string(*order) + " entries in the row");
      rows.push_back(std::move(numbers));
    }
  }
  if (!order)
    throw Error(ErrorCode::parse_error, source + ": empty Cayley file");
  if (rows.size() != *order)
    throw Error(ErrorCode::parse_error,
                source + ": expected " + std::to_string(*order) + " rows, got " +
                    std::to_string(rows.size()));
  return FiniteEpigroup::validate(rows, name);
}

FiniteEpigroup load_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open Cayley file " + path);
  return load_cayley(in, path);
}

std::string to_cayley(const FiniteEpigroup& S) {
  std::ostringstream out;
  if (!S.name().empty()) out << "# name: " << S.name() << "\n";
  out << S.order() << "\n";
  for (std::size_t a = 0; a < S.order(); ++a) {
    for (std::size_t b = 0; b < S.order(); ++b) {
      if (b) out << ' ';
      out << S.product(a, b);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace epikit
