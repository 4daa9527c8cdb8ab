#include "epikit/identity.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "epikit/error.hpp"
#include "epikit/parse.hpp"

namespace epikit {

bool Identity::operator==(const Identity& other) const {
  return lhs == other.lhs && rhs == other.rhs;
}

std::string Identity::to_string() const {
  return render(lhs) + " = " + render(rhs);
}

IdentitySystem expand_zero(const ZeroIdentity& z, const Variable& fresh) {
  auto vars = content(z.w);
  if (vars.count(fresh))
    throw Error(ErrorCode::fresh_not_fresh,
                "variable '" + fresh.name() + "' occurs in " + render(z.w));
  Word x = Word::var(fresh);
  return IdentitySystem{{Identity{z.w * x, z.w}, Identity{x * z.w, z.w}}};
}

Variable default_fresh_variable(const Word& w) {
  auto vars = content(w);
  for (std::size_t i = 1;; ++i) {
    Variable candidate = indexed_variable('x', i);
    if (!vars.count(candidate)) return candidate;
  }
}

IdentitySystem expand_zero(const ZeroIdentity& z) {
  return expand_zero(z, default_fresh_variable(z.w));
}

bool holds_in_semilattices(const Identity& id) {
  return content(id.lhs) == content(id.rhs);
}

Identity make_degree_identity(std::size_t n, std::size_t i, std::size_t j) {
  if (!(1 <= i && i <= j && j <= n))
    throw Error(ErrorCode::bad_indices,
                "need 1 <= i <= j <= n, got n=" + std::to_string(n) +
                    " i=" + std::to_string(i) + " j=" + std::to_string(j));
  std::vector<Word> vars;
  vars.reserve(n);
  for (std::size_t k = 1; k <= n; ++k)
    vars.push_back(Word::var(indexed_variable('x', k)));

  std::vector<Word> lhs_factors = vars;

  std::vector<Word> block(vars.begin() + (i - 1), vars.begin() + j);
  std::vector<Word> rhs_factors(vars.begin(), vars.begin() + (i - 1));
  rhs_factors.push_back(pinv(pinv(concat_all(block))));
  rhs_factors.insert(rhs_factors.end(), vars.begin() + j, vars.end());

  return Identity{concat_all(lhs_factors), concat_all(rhs_factors)};
}

bool matches_degree_criterion(const Identity& id, std::size_t n) {
  auto len = length(id.lhs);
  if (!len || *len != n) return false;
  for (const Word& f : flatten(id.lhs))
    if (!f.is_variable()) return false;
  if (content(id.lhs).size() != n) return false;  // pairwise distinct
  if (content(id.rhs) != content(id.lhs)) return false;
  return length_greater(id.rhs, n);
}

namespace {

// u ~ v and v ~ u are the same constraint.
bool same_identity(const Identity& a, const Identity& b) {
  return (a.lhs == b.lhs && a.rhs == b.rhs) ||
         (a.lhs == b.rhs && a.rhs == b.lhs);
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> duplicate_pairs(
    const IdentitySystem& sys) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < sys.items.size(); ++a)
    for (std::size_t b = a + 1; b < sys.items.size(); ++b)
      if (same_identity(sys.items[a], sys.items[b])) out.emplace_back(a, b);
  return out;
}

IdentitySystem load_identities(std::istream& in, const std::string& source) {
  IdentitySystem sys;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;

    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::parse_error,
                  source + ":" + std::to_string(lineno) +
                      ": expected 'LHS = RHS' or 'LHS = 0'");
    std::string lhs_text = line.substr(0, eq);
    std::string rhs_text = line.substr(eq + 1);
    try {
      Word lhs = parse_word(lhs_text);
      std::string trimmed;
      for (char c : rhs_text)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
      if (trimmed == "0") {
        IdentitySystem expanded = expand_zero(ZeroIdentity{lhs});
        sys.items.insert(sys.items.end(), expanded.items.begin(),
                         expanded.items.end());
      } else {
        Word rhs = parse_word(rhs_text);
        sys.items.push_back(Identity{lhs, rhs});
      }
    } catch (const Error& e) {
      throw Error(ErrorCode::parse_error,
                  source + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return sys;
}

IdentitySystem load_identities_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::io_error, "cannot open identity file " + path);
  return load_identities(in, path);
}

}  // namespace epikit
