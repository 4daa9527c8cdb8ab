#include "epikit/lattice.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "epikit/error.hpp"

namespace epikit {

FiniteLattice FiniteLattice::validate(const std::vector<std::vector<bool>>& leq,
                                      std::string name) {
  std::size_t n = leq.size();
  if (n == 0)
    throw Error(ErrorCode::bad_shape, "lattice must have at least 1 element");
  for (const auto& row : leq)
    if (row.size() != n)
      throw Error(ErrorCode::bad_shape, "order matrix is not square");

  auto rel = [&](std::size_t a, std::size_t b) { return leq[a][b]; };

  for (std::size_t a = 0; a < n; ++a)
    if (!rel(a, a))
      throw Error(ErrorCode::not_poset,
                  "not reflexive at " + std::to_string(a));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && rel(a, b) && rel(b, a))
        throw Error(ErrorCode::not_poset, "not antisymmetric at (" +
                                              std::to_string(a) + ", " +
                                              std::to_string(b) + ")");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!rel(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (rel(b, c) && !rel(a, c))
          throw Error(ErrorCode::not_poset,
                      "not transitive at (" + std::to_string(a) + ", " +
                          std::to_string(b) + ", " + std::to_string(c) + ")");
    }

  FiniteLattice L;
  L.size_ = n;
  L.name_ = std::move(name);
  L.leq_.assign(n * n, false);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) L.leq_[a * n + b] = leq[a][b];
  L.join_.assign(n * n, 0);
  L.meet_.assign(n * n, 0);

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // least upper bound: an upper bound below every other upper bound
      std::optional<std::size_t> lub;
      for (std::size_t u = 0; u < n; ++u) {
        if (!rel(a, u) || !rel(b, u)) continue;
        bool least = true;
        for (std::size_t v = 0; v < n; ++v)
          if (rel(a, v) && rel(b, v) && !rel(u, v)) least = false;
        if (least) {
          lub = u;
          break;
        }
      }
      if (!lub)
        throw Error(ErrorCode::not_lattice,
                    "no least upper bound for (" + std::to_string(a) + ", " +
                        std::to_string(b) + ")");
      L.join_[a * n + b] = *lub;

      std::optional<std::size_t> glb;
      for (std::size_t u = 0; u < n; ++u) {
        if (!rel(u, a) || !rel(u, b)) continue;
        bool greatest = true;
        for (std::size_t v = 0; v < n; ++v)
          if (rel(v, a) && rel(v, b) && !rel(v, u)) greatest = false;
        if (greatest) {
          glb = u;
          break;
        }
      }
      if (!glb)
        throw Error(ErrorCode::not_lattice,
                    "no greatest lower bound for (" + std::to_string(a) +
                        ", " + std::to_string(b) + ")");
      L.meet_[a * n + b] = *glb;
    }

  std::size_t bottom = 0, top = 0;
  for (std::size_t a = 1; a < n; ++a) {
    bottom = L.meet(bottom, a);
    top = L.join(top, a);
  }
  L.bottom_ = bottom;
  L.top_ = top;
  return L;
}

FiniteLattice FiniteLattice::from_covers(
    std::size_t size,
    const std::vector<std::pair<std::size_t, std::size_t>>& covers,
    std::string name) {
  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
  for (std::size_t a = 0; a < size; ++a) leq[a][a] = true;
  for (auto [a, b] : covers) {
    if (a >= size || b >= size)
      throw Error(ErrorCode::bad_shape, "cover index out of range");
    leq[a][b] = true;
  }
  // reflexive-transitive closure
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t a = 0; a < size; ++a)
      if (leq[a][k])
        for (std::size_t b = 0; b < size; ++b)
          if (leq[k][b]) leq[a][b] = true;
  return validate(leq, std::move(name));
}

bool FiniteLattice::is_atom(std::size_t x) const {
  if (x == bottom_) return false;
  for (std::size_t t = 0; t < size_; ++t)
    if (t != bottom_ && t != x && leq(bottom_, t) && leq(t, x)) return false;
  return leq(bottom_, x);
}

std::vector<std::size_t> FiniteLattice::atoms() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size_; ++x)
    if (is_atom(x)) out.push_back(x);
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> modular_witness(
    const FiniteLattice& L, std::size_t x) {
  for (std::size_t y = 0; y < L.size(); ++y)
    for (std::size_t z = 0; z < L.size(); ++z) {
      if (!L.leq(y, z)) continue;
      if (L.meet(L.join(x, y), z) != L.join(L.meet(x, z), y))
        return std::make_pair(y, z);
    }
  return std::nullopt;
}

bool is_modular_element(const FiniteLattice& L, std::size_t x) {
  return !modular_witness(L, x).has_value();
}

std::optional<std::pair<std::size_t, std::size_t>> cancellable_witness(
    const FiniteLattice& L, std::size_t x) {
  for (std::size_t y = 0; y < L.size(); ++y)
    for (std::size_t z = 0; z < L.size(); ++z) {
      if (y == z) continue;
      if (L.join(x, y) == L.join(x, z) && L.meet(x, y) == L.meet(x, z))
        return std::make_pair(y, z);
    }
  return std::nullopt;
}

bool is_cancellable_element(const FiniteLattice& L, std::size_t x) {
  return !cancellable_witness(L, x).has_value();
}

std::optional<std::pair<std::size_t, std::size_t>> neutral_median_witness(
    const FiniteLattice& L, std::size_t x) {
  for (std::size_t y = 0; y < L.size(); ++y)
    for (std::size_t z = 0; z < L.size(); ++z) {
      std::size_t lhs =
          L.meet(L.meet(L.join(x, y), L.join(y, z)), L.join(z, x));
      std::size_t rhs =
          L.join(L.join(L.meet(x, y), L.meet(y, z)), L.meet(z, x));
      if (lhs != rhs) return std::make_pair(y, z);
    }
  return std::nullopt;
}

bool neutral_via_median(const FiniteLattice& L, std::size_t x) {
  return !neutral_median_witness(L, x).has_value();
}

namespace {

using Mask = std::uint32_t;

Mask close_under_operations(const FiniteLattice& L, Mask m) {
  while (true) {
    Mask next = m;
    for (std::size_t a = 0; a < L.size(); ++a) {
      if (!(m & (Mask{1} << a))) continue;
      for (std::size_t b = a; b < L.size(); ++b) {
        if (!(m & (Mask{1} << b))) continue;
        next |= Mask{1} << L.join(a, b);
        next |= Mask{1} << L.meet(a, b);
      }
    }
    if (next == m) return m;
    m = next;
  }
}

bool set_is_distributive(const FiniteLattice& L, Mask m) {
  for (std::size_t a = 0; a < L.size(); ++a) {
    if (!(m & (Mask{1} << a))) continue;
    for (std::size_t b = 0; b < L.size(); ++b) {
      if (!(m & (Mask{1} << b))) continue;
      for (std::size_t c = 0; c < L.size(); ++c) {
        if (!(m & (Mask{1} << c))) continue;
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)))
          return false;
      }
    }
  }
  return true;
}

}  // namespace

bool neutral_via_generated_sublattice(const FiniteLattice& L, std::size_t x) {
  for (std::size_t y = 0; y < L.size(); ++y)
    for (std::size_t z = 0; z < L.size(); ++z) {
      Mask seed = (Mask{1} << x) | (Mask{1} << y) | (Mask{1} << z);
      if (!set_is_distributive(L, close_under_operations(L, seed)))
        return false;
    }
  return true;
}

bool is_neutral_element(const FiniteLattice& L, std::size_t x) {
  bool a = neutral_via_median(L, x);
  bool b = neutral_via_generated_sublattice(L, x);
  if (a != b)
    throw std::logic_error(
        "neutrality algorithms disagree at element " + std::to_string(x) +
        " of lattice '" + L.name() + "'");
  return a;
}

LatticeCheck check_cancellable_join_atom(const FiniteLattice& L) {
  for (std::size_t a = 0; a < L.size(); ++a) {
    if (!L.is_atom(a) || !is_neutral_element(L, a)) continue;
    for (std::size_t x = 0; x < L.size(); ++x) {
      bool direct = is_cancellable_element(L, x);
      bool joined = is_cancellable_element(L, L.join(x, a));
      if (direct != joined)
        return LatticeCheck{false,
                            "neutral atom " + std::to_string(a) +
                                ", element " + std::to_string(x) +
                                ": cancellable=" + std::to_string(direct) +
                                " but join gives " + std::to_string(joined)};
    }
  }
  return LatticeCheck{};
}

LatticeCheck check_cancellation_over_atom(const FiniteLattice& L) {
  for (std::size_t a = 0; a < L.size(); ++a) {
    if (!L.is_atom(a) || !is_neutral_element(L, a)) continue;
    for (std::size_t x = 0; x < L.size(); ++x) {
      bool hypothesis = true;
      for (std::size_t y = 0; y < L.size() && hypothesis; ++y)
        for (std::size_t z = 0; z < L.size() && hypothesis; ++z) {
          std::size_t ya = L.join(y, a), za = L.join(z, a);
          if (L.join(x, ya) == L.join(x, za) &&
              L.meet(x, ya) == L.meet(x, za) && ya != za)
            hypothesis = false;
        }
      if (hypothesis && !is_cancellable_element(L, x))
        return LatticeCheck{false, "neutral atom " + std::to_string(a) +
                                       ", element " + std::to_string(x) +
                                       " meets the hypothesis but is not "
                                       "cancellable"};
    }
  }
  return LatticeCheck{};
}

LatticeCheck check_modular_witness_refinement(const FiniteLattice& L) {
  for (std::size_t x = 0; x < L.size(); ++x) {
    if (!is_modular_element(L, x) || is_cancellable_element(L, x)) continue;
    for (std::size_t y = 0; y < L.size(); ++y)
      for (std::size_t z = 0; z < L.size(); ++z) {
        if (y == z) continue;
        if (L.join(x, y) != L.join(x, z) || L.meet(x, y) != L.meet(x, z))
          continue;
        bool refined = false;
        for (std::size_t xp = 0; xp < L.size() && !refined; ++xp) {
          if (!L.leq(xp, x)) continue;
          refined = L.join(xp, y) == L.join(xp, z) &&
                    L.meet(xp, y) == L.meet(xp, z) &&
                    L.join(y, z) == L.join(xp, y);
        }
        if (!refined)
          return LatticeCheck{false,
                              "modular non-cancellable " + std::to_string(x) +
                                  " with witness (" + std::to_string(y) +
                                  ", " + std::to_string(z) +
                                  ") has no refinement below it"};
      }
  }
  return LatticeCheck{};
}

namespace {

std::uint64_t matrix_key(const std::vector<std::vector<bool>>& leq) {
  std::size_t n = leq.size();
  std::uint64_t key = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      key = (key << 1) | (leq[a][b] ? 1 : 0);
  return key;
}

std::vector<std::vector<bool>> key_matrix(std::uint64_t key, std::size_t n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t a = n; a-- > 0;)
    for (std::size_t b = n; b-- > 0;) {
      leq[a][b] = key & 1;
      key >>= 1;
    }
  return leq;
}

// Is this reflexive upper-triangular relation a lattice order? Used during
// the naturally-labeled search where leq(i, j) implies i <= j.
bool natural_matrix_is_lattice(const std::vector<std::vector<bool>>& leq) {
  std::size_t n = leq.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!leq[a][b]) continue;
      for (std::size_t c = b + 1; c < n; ++c)
        if (leq[b][c] && !leq[a][c]) return false;
    }
  // every pair needs a unique minimal upper bound and maximal lower bound
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      std::optional<std::size_t> lub;
      for (std::size_t u = 0; u < n; ++u) {
        if (!leq[a][u] || !leq[b][u]) continue;
        bool least = true;
        for (std::size_t v = 0; v < n; ++v)
          if (leq[a][v] && leq[b][v] && !leq[u][v]) least = false;
        if (least) {
          lub = u;
          break;
        }
      }
      if (!lub) return false;
      std::optional<std::size_t> glb;
      for (std::size_t u = n; u-- > 0;) {
        if (!leq[u][a] || !leq[u][b]) continue;
        bool greatest = true;
        for (std::size_t v = 0; v < n; ++v)
          if (leq[v][a] && leq[v][b] && !leq[v][u]) greatest = false;
        if (greatest) {
          glb = u;
          break;
        }
      }
      if (!glb) return false;
    }
  return true;
}

// All labeled lattice order matrices of the given size, as sorted keys.
// Every finite poset admits an ascending labeling, so relabeling the
// naturally-labeled lattices reaches every labeled one.
std::vector<std::uint64_t> all_lattice_keys(std::size_t n) {
  std::vector<std::vector<std::vector<bool>>> natural;
  std::size_t pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    std::size_t bit = 0;
    for (std::size_t a = 0; a < n; ++a) {
      leq[a][a] = true;
      for (std::size_t b = a + 1; b < n; ++b, ++bit)
        leq[a][b] = (mask >> bit) & 1;
    }
    if (natural_matrix_is_lattice(leq)) natural.push_back(std::move(leq));
  }

  std::set<std::uint64_t> keys;
  std::vector<std::size_t> perm(n);
  for (const auto& leq : natural) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::vector<bool>> relabeled(n, std::vector<bool>(n, false));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          relabeled[perm[a]][perm[b]] = leq[a][b];
      keys.insert(matrix_key(relabeled));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::vector<std::uint64_t>(keys.begin(), keys.end());
}

}  // namespace

std::uint64_t canonical_lattice_key(const FiniteLattice& L) {
  std::size_t n = L.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::vector<std::vector<bool>> relabeled(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        relabeled[perm[a]][perm[b]] = L.leq(a, b);
    best = std::min(best, matrix_key(relabeled));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void for_each_lattice(std::size_t size, bool dedupe,
                      const std::function<void(const FiniteLattice&)>& fn) {
  if (size == 0)
    throw Error(ErrorCode::bad_shape, "size must be at least 1");
  if (size > kMaxLatticeSize)
    throw Error(ErrorCode::size_too_large,
                "lattice enumeration is capped at size " +
                    std::to_string(kMaxLatticeSize) + ", got " +
                    std::to_string(size));
  for (std::uint64_t key : all_lattice_keys(size)) {
    FiniteLattice L = FiniteLattice::validate(key_matrix(key, size));
    if (dedupe && canonical_lattice_key(L) != key) continue;
    fn(L);
  }
}

std::vector<FiniteLattice> enumerate_lattices(std::size_t size, bool dedupe) {
  std::vector<FiniteLattice> out;
  for_each_lattice(size, dedupe,
                   [&](const FiniteLattice& L) { out.push_back(L); });
  return out;
}

FiniteLattice lattice_fixture(const std::string& name) {
  auto chain = [](std::size_t k) {
    std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a; b < k; ++b) leq[a][b] = true;
    return leq;
  };
  if (name.rfind("chain", 0) == 0 && name.size() == 6) {
    std::size_t k = name[5] - '0';
    if (k >= 2 && k <= 6)
      return FiniteLattice::validate(chain(k), name);
  }
  if (name == "M3") {
    // bottom 0, atoms 1 2 3, top 4
    std::vector<std::vector<bool>> leq(5, std::vector<bool>(5, false));
    for (std::size_t a = 0; a < 5; ++a) leq[a][a] = true;
    for (std::size_t a : {1, 2, 3}) {
      leq[0][a] = true;
      leq[a][4] = true;
    }
    leq[0][4] = true;
    return FiniteLattice::validate(leq, name);
  }
  if (name == "N5") {
    // 0 < 1 < 2 < 4 and 0 < 3 < 4, with 3 incomparable to 1 and 2
    return FiniteLattice::from_covers(
        5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}, name);
  }
  if (name == "grid2x2") {
    // product of two 2-chains; index = 2a + b, componentwise order
    std::vector<std::vector<bool>> leq(4, std::vector<bool>(4, false));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        leq[i][j] = (i / 2 <= j / 2) && (i % 2 <= j % 2);
    return FiniteLattice::validate(leq, name);
  }
  if (name == "B3") {
    // subsets of a 3-element set ordered by inclusion
    std::vector<std::vector<bool>> leq(8, std::vector<bool>(8, false));
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) leq[i][j] = (i & ~j) == 0;
    return FiniteLattice::validate(leq, name);
  }
  throw Error(ErrorCode::parse_error, "unknown lattice fixture '" + name + "'");
}

FiniteLattice load_lattice(std::istream& in, const std::string& source) {
  std::string name;
  std::vector<std::string> lines;
  std::string raw;
  std::size_t first_lineno = 0, lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      std::string comment = raw.substr(hash + 1);
      auto key = comment.find("name:");
      if (key != std::string::npos) {
        std::istringstream vs(comment.substr(key + 5));
        vs >> name;
      }
      raw.erase(hash);
    }
    bool blank = true;
    for (char c : raw)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    if (lines.empty()) first_lineno = lineno;
    lines.push_back(raw);
  }
  if (lines.empty())
    throw Error(ErrorCode::parse_error, source + ": empty lattice file");

  std::size_t size;
  try {
    size = std::stoull(lines[0]);
  } catch (...) {
    throw Error(ErrorCode::parse_error,
                source + ":" + std::to_string(first_lineno) +
                    ": first line must be the size");
  }

  if (lines.size() >= 2 && lines[1].find("covers:") != std::string::npos) {
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      std::istringstream ls(i == 1 ? lines[1].substr(lines[1].find("covers:") + 7)
                                   : lines[i]);
      std::string tok;
      while (ls >> tok) {
        auto lt = tok.find('<');
        if (lt == std::string::npos)
          throw Error(ErrorCode::parse_error,
                      source + ": expected pairs i<j, got '" + tok + "'");
        covers.emplace_back(std::stoull(tok.substr(0, lt)),
                            std::stoull(tok.substr(lt + 1)));
      }
    }
    return FiniteLattice::from_covers(size, covers, name);
  }

  if (lines.size() != size + 1)
    throw Error(ErrorCode::parse_error,
                source + ": expected " + std::to_string(size) +
                    " matrix rows, got " + std::to_string(lines.size() - 1));
  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
  for (std::size_t a = 0; a < size; ++a) {
    std::vector<bool> row;
    for (char c : lines[a + 1]) {
      if (c == '0') row.push_back(false);
      if (c == '1') row.push_back(true);
    }
    if (row.size() != size)
      throw Error(ErrorCode::parse_error,
                  source + ": row " + std::to_string(a) + " has " +
                      std::to_string(row.size()) + " entries, expected " +
                      std::to_string(size));
    leq[a] = std::move(row);
  }
  return FiniteLattice::validate(leq, name);
}

FiniteLattice load_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::io_error, "cannot open lattice file " + path);
  return load_lattice(in, path);
}

}  // namespace epikit
