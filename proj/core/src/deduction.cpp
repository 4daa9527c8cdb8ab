#include "epikit/deduction.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "epikit/enumerate.hpp"
#include "epikit/error.hpp"
#include "epikit/parse.hpp"

namespace epikit {

std::string Position::to_string() const {
  std::string out;
  if (!path.empty()) {
    out += "path=";
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(path[i]);
    }
    out += ' ';
  }
  out += "at=" + std::to_string(begin) + ".." + std::to_string(end);
  return out;
}

namespace {

// Rewrites the factor range at the end of the path and rebuilds every
// enclosing pseudoinverse level on the way out.
Word replace_at(const Word& level, const Position& pos, std::size_t depth,
                const Word& expected, const Word& replacement) {
  std::vector<Word> factors = flatten(level);
  if (depth < pos.path.size()) {
    std::size_t idx = pos.path[depth];
    if (idx >= factors.size())
      throw Error(ErrorCode::bad_position,
                  "path index " + std::to_string(idx) +
                      " out of range (level has " +
                      std::to_string(factors.size()) + " factors)");
    if (!factors[idx].is_pinv())
      throw Error(ErrorCode::bad_position,
                  "path descends into factor " + std::to_string(idx) +
                      " which is not pseudoinverse-rooted");
    Word rebuilt = replace_at(factors[idx].pinv_operand(), pos, depth + 1,
                              expected, replacement);
    factors[idx] = pinv(rebuilt);
    return concat_all(factors);
  }

  if (pos.begin >= pos.end || pos.end > factors.size())
    throw Error(ErrorCode::bad_position,
                "range " + std::to_string(pos.begin) + ".." +
                    std::to_string(pos.end) + " invalid for " +
                    std::to_string(factors.size()) + " factors");
  std::vector<Word> located(factors.begin() + pos.begin,
                            factors.begin() + pos.end);
  Word sub = concat_all(located);
  if (!(sub == expected))
    throw Error(ErrorCode::no_match, "expected '" + render(expected) +
                                         "', found '" + render(sub) + "'");
  std::vector<Word> out(factors.begin(), factors.begin() + pos.begin);
  for (const Word& f : flatten(replacement)) out.push_back(f);
  out.insert(out.end(), factors.begin() + pos.end, factors.end());
  return concat_all(out);
}

Substitution effective_substitution(const RewriteRule& rule,
                                    const Substitution& given) {
  Substitution sub = given;
  auto vars = content(rule.identity.lhs);
  auto rhs_vars = content(rule.identity.rhs);
  vars.insert(rhs_vars.begin(), rhs_vars.end());
  for (const Variable& v : vars)
    if (!sub.count(v)) sub.emplace(v, Word::var(v));
  return sub;
}

}  // namespace

Word apply_step(const Word& current, const DerivationStep& step) {
  Substitution sub = effective_substitution(step.rule, step.substitution);
  Word src = substitute(step.rule.source(), sub);
  Word dst = substitute(step.rule.target(), sub);
  return replace_at(current, step.position, 0, src, dst);
}

ChainReport verify_chain(const DerivationChain& chain) {
  Word current = chain.start;
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    try {
      current = apply_step(current, chain.steps[i]);
    } catch (const Error& e) {
      std::string rule = chain.steps[i].rule.name.empty()
                             ? chain.steps[i].rule.identity.to_string()
                             : chain.steps[i].rule.name;
      return ChainReport{false, i,
                         "step " + std::to_string(i) + " (" + rule + ", " +
                             chain.steps[i].position.to_string() +
                             "): " + e.what(),
                         current};
    }
  }
  if (!(current == chain.end))
    return ChainReport{false, chain.steps.size(),
                       "all steps applied but result '" + render(current) +
                           "' differs from declared end '" +
                           render(chain.end) + "'",
                       current};
  return ChainReport{true, std::nullopt, "", current};
}

namespace {

std::vector<RewriteRule> make_builtin_rules() {
  auto rule = [](const char* name, const char* lhs, const char* rhs) {
    return RewriteRule{name, Identity{parse_word(lhs), parse_word(rhs)},
                       Direction::left_to_right};
  };
  return {
      // the omega-power chain around the double pseudoinverse
      rule("omega_shift", "x x~ x", "x x x~"),
      rule("dbar_expand", "x x x~", "x~~"),
      rule("dbar_absorb", "x~~", "x x~ x~~"),
      rule("dbar_omega_comm", "x x~ x~~", "x~~ x x~"),
      // commutation and absorption at the omega power
      rule("pinv_comm", "x x~", "x~ x"),
      rule("omega_idem", "x x~", "x x~ x x~"),
      rule("pinv_absorb", "x x~ x~", "x~"),
      // pseudoinversion of small powers
      rule("pinv_pow2", "(x x)~", "x~ x~"),
      rule("pinv_pow3", "(x x x)~", "x~ x~ x~"),
  };
}

// Semantic gate: a rule is admitted only if it holds in every epigroup of
// order <= 3.
void check_rules_hold_everywhere(const std::vector<RewriteRule>& rules) {
  for (std::size_t order = 1; order <= kMaxEnumerationOrder; ++order) {
    for (const FiniteEpigroup& S : enumerate_epigroups(order)) {
      for (const RewriteRule& r : rules) {
        if (!satisfies(S, r.identity).holds)
          throw std::logic_error("builtin rule '" + r.name +
                                 "' fails in an epigroup of order " +
                                 std::to_string(order));
      }
    }
  }
}

}  // namespace

const std::vector<RewriteRule>& builtin_rules() {
  static const std::vector<RewriteRule> rules = [] {
    auto r = make_builtin_rules();
    check_rules_hold_everywhere(r);
    return r;
  }();
  return rules;
}

std::optional<RewriteRule> find_builtin_rule(const std::string& name) {
  for (const RewriteRule& r : builtin_rules())
    if (r.name == name) return r;
  return std::nullopt;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

Identity parse_inline_identity(const std::string& text,
                               const std::string& where) {
  auto eq = text.find('=');
  if (eq == std::string::npos)
    throw Error(ErrorCode::parse_error,
                where + ": expected '<term> = <term>' in rule");
  Word lhs = parse_word(text.substr(0, eq));
  Word rhs = parse_word(text.substr(eq + 1));
  return Identity{lhs, rhs};
}

DerivationStep parse_step_line(const std::string& body,
                               const std::map<std::string, Identity>& local,
                               const std::string& where) {
  std::optional<RewriteRule> rule;
  Position position;
  Substitution substitution;
  std::string rest = trim(body);

  // rule reference: inline {u = v} or a name token
  if (!rest.empty() && rest[0] == '{') {
    auto close = rest.find('}');
    if (close == std::string::npos)
      throw Error(ErrorCode::parse_error, where + ": unterminated '{'");
    rule = RewriteRule{"", parse_inline_identity(rest.substr(1, close - 1), where),
                       Direction::left_to_right};
    rest = trim(rest.substr(close + 1));
  } else {
    auto space = rest.find_first_of(" \t");
    std::string name = space == std::string::npos ? rest : rest.substr(0, space);
    rest = space == std::string::npos ? "" : trim(rest.substr(space));
    auto it = local.find(name);
    if (it != local.end()) {
      rule = RewriteRule{name, it->second, Direction::left_to_right};
    } else if (auto builtin = find_builtin_rule(name)) {
      rule = *builtin;
    } else {
      throw Error(ErrorCode::unknown_rule,
                  where + ": '" + name + "' is neither a local nor a builtin rule");
    }
  }

  bool saw_at = false;
  while (!rest.empty()) {
    std::string key_value;
    if (rest.rfind("sub=", 0) == 0) {
      key_value = rest;  // substitution consumes the remainder of the line
      rest.clear();
    } else {
      auto space = rest.find_first_of(" \t");
      key_value = space == std::string::npos ? rest : rest.substr(0, space);
      rest = space == std::string::npos ? "" : trim(rest.substr(space));
    }
    auto eq = key_value.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::parse_error,
                  where + ": expected key=value, got '" + key_value + "'");
    std::string key = key_value.substr(0, eq);
    std::string value = key_value.substr(eq + 1);

    if (key == "dir") {
      if (value == "LR")
        rule->direction = Direction::left_to_right;
      else if (value == "RL")
        rule->direction = Direction::right_to_left;
      else
        throw Error(ErrorCode::parse_error,
                    where + ": dir must be LR or RL, got '" + value + "'");
    } else if (key == "at") {
      auto dots = value.find("..");
      if (dots == std::string::npos)
        throw Error(ErrorCode::parse_error,
                    where + ": at must be <lo>..<hi>, got '" + value + "'");
      try {
        position.begin = std::stoull(value.substr(0, dots));
        position.end = std::stoull(value.substr(dots + 2));
      } catch (...) {
        throw Error(ErrorCode::parse_error,
                    where + ": bad range '" + value + "'");
      }
      saw_at = true;
    } else if (key == "path") {
      std::istringstream ps(value);
      std::string tok;
      while (std::getline(ps, tok, ','))
        position.path.push_back(std::stoull(tok));
    } else if (key == "sub") {
      std::istringstream ss(value);
      std::string binding;
      while (std::getline(ss, binding, ',')) {
        auto beq = binding.find('=');
        if (beq == std::string::npos)
          throw Error(ErrorCode::parse_error,
                      where + ": sub binding must be var=<term>");
        Variable v{trim(binding.substr(0, beq))};
        substitution.emplace(v, parse_word(binding.substr(beq + 1)));
      }
    } else {
      throw Error(ErrorCode::parse_error,
                  where + ": unknown step attribute '" + key + "'");
    }
  }
  if (!saw_at)
    throw Error(ErrorCode::parse_error, where + ": step needs at=<lo>..<hi>");
  return DerivationStep{std::move(*rule), std::move(position),
                        std::move(substitution)};
}

}  // namespace

DerivationChain parse_chain(std::istream& in, const std::string& source) {
  std::optional<Word> start, end;
  std::map<std::string, Identity> local_rules;
  std::vector<DerivationStep> steps;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::string text = trim(line);
    if (text.empty()) continue;
    std::string where = source + ":" + std::to_string(lineno);

    try {
      if (text.rfind("start:", 0) == 0) {
        start = parse_word(text.substr(6));
      } else if (text.rfind("end:", 0) == 0) {
        end = parse_word(text.substr(4));
      } else if (text.rfind("rule ", 0) == 0) {
        auto colon = text.find(':');
        if (colon == std::string::npos)
          throw Error(ErrorCode::parse_error, "expected 'rule <name>: u = v'");
        std::string name = trim(text.substr(5, colon - 5));
        if (name.empty() || local_rules.count(name) ||
            find_builtin_rule(name))
          throw Error(ErrorCode::parse_error,
                      "bad or duplicate rule name '" + name + "'");
        local_rules.emplace(name,
                            parse_inline_identity(text.substr(colon + 1), where));
      } else if (text.rfind("step:", 0) == 0) {
        if (!start)
          throw Error(ErrorCode::parse_error, "step before start:");
        steps.push_back(parse_step_line(text.substr(5), local_rules, where));
      } else {
        throw Error(ErrorCode::parse_error, "unrecognized line '" + text + "'");
      }
    } catch (const Error& e) {
      if (std::string(e.what()).find(source) != std::string::npos) throw;
      throw Error(e.code(), where + ": " + e.what());
    }
  }
  if (!start || !end)
    throw Error(ErrorCode::parse_error,
                source + ": chain needs both start: and end:");
  return DerivationChain{*start, std::move(steps), *end};
}

DerivationChain load_chain_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open chain file " + path);
  return parse_chain(in, path);
}

}  // namespace epikit
