#include <doctest.h>

#include <sstream>

#include "epikit/enumerate.hpp"
#include "epikit/epigroup.hpp"
#include "epikit/error.hpp"
#include "epikit/identity.hpp"
#include "epikit/parse.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace epikit;

namespace {

const Variable vx{"x"}, vy{"y"}, vz{"z"};
const Word x = Word::var(vx);
const Word y = Word::var(vy);
const Word z = Word::var(vz);

}  // namespace

TEST_SUITE_BEGIN("identities");

TEST_CASE("triviality") {
  CHECK(Identity{(x * y) * z, x * (y * z)}.is_trivial());
  CHECK_FALSE(Identity{x * y, y * x}.is_trivial());
}

TEST_CASE("expand_zero") {
  // x^2 y = 0 with fresh z
  auto sys = expand_zero(ZeroIdentity{pow(x, 2) * y}, vz);
  REQUIRE(sys.size() == 2);
  CHECK(sys.items[0] == Identity{pow(x, 2) * y * z, pow(x, 2) * y});
  CHECK(sys.items[1] == Identity{z * pow(x, 2) * y, pow(x, 2) * y});

  auto nil = expand_zero(ZeroIdentity{pinv(x)}, vy);
  CHECK(nil.items[0] == Identity{pinv(x) * y, pinv(x)});
  CHECK(nil.items[1] == Identity{y * pinv(x), pinv(x)});

  CHECK_THROWS_AS(expand_zero(ZeroIdentity{x}, vx), Error);
  try {
    expand_zero(ZeroIdentity{x}, vx);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::fresh_not_fresh);
  }
}

TEST_CASE("default fresh variable is the first unused indexed one") {
  CHECK(default_fresh_variable(x) == indexed_variable('x', 1));
  Word x1 = Word::var(indexed_variable('x', 1));
  Word x2 = Word::var(indexed_variable('x', 2));
  CHECK(default_fresh_variable(x1 * x2) == indexed_variable('x', 3));
}

TEST_CASE("expand_zero is sound on finite models") {
  // satisfied exactly when the model has a zero and w always lands on it
  std::vector<Word> test_words{x, pow(x, 2), x * y, pow(x, 2) * y, pinv(x)};
  for (std::size_t order = 1; order <= 3; ++order)
    for (const FiniteEpigroup& S : enumerate_epigroups(order))
      for (const Word& w : test_words) {
        bool via_system = satisfies(S, expand_zero(ZeroIdentity{w})).holds;

        bool via_zero_search = false;
        if (auto zero = S.zero()) {
          via_zero_search = true;
          auto word_vars = content(w);
          std::vector<Variable> vars(word_vars.begin(), word_vars.end());
          std::vector<std::size_t> digits(vars.size(), 0);
          while (true) {
            Assignment asg;
            for (std::size_t i = 0; i < vars.size(); ++i)
              asg[vars[i]] = digits[i];
            if (evaluate(S, w, asg) != *zero) via_zero_search = false;
            std::size_t i = vars.size();
            bool done = true;
            while (i > 0) {
              --i;
              if (++digits[i] < S.order()) {
                done = false;
                break;
              }
              digits[i] = 0;
            }
            if (done) break;
          }
        }
        REQUIRE(via_system == via_zero_search);
      }
}

TEST_CASE("semilattice word problem") {
  CHECK(holds_in_semilattices(Identity{x * y, y * x}));
  CHECK_FALSE(holds_in_semilattices(Identity{pow(x, 2) * y, pow(x, 2)}));
  // pseudoinversion is invisible to semilattices
  Identity unary{pow(x, 2), pinv(x)};
  CHECK(holds_in_semilattices(unary));
  CHECK(testing::sl2_satisfies(unary));
}

TEST_CASE("semilattice word problem matches the two-element model") {
  testing::RandomWords gen(2024, {vx, vy, vz, Variable{"t"}});
  for (int trial = 0; trial < 2000; ++trial) {
    Identity id = gen.next_identity(8);
    CHECK(holds_in_semilattices(id) == testing::sl2_satisfies(id));
  }
}

TEST_CASE("degree identity construction") {
  Word x1 = Word::var(indexed_variable('x', 1));
  Word x2 = Word::var(indexed_variable('x', 2));
  Word x3 = Word::var(indexed_variable('x', 3));

  Identity whole = make_degree_identity(2, 1, 2);
  CHECK(whole.lhs == x1 * x2);
  CHECK(whole.rhs == pinv(pinv(x1 * x2)));

  Identity middle = make_degree_identity(3, 2, 2);
  CHECK(middle.lhs == x1 * x2 * x3);
  CHECK(middle.rhs == x1 * pinv(pinv(x2)) * x3);

  CHECK_THROWS_AS(make_degree_identity(3, 3, 2), Error);
  try {
    make_degree_identity(3, 3, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::bad_indices);
  }
}

TEST_CASE("degree criterion shape recognition") {
  Word x1 = Word::var(indexed_variable('x', 1));
  Word x2 = Word::var(indexed_variable('x', 2));
  // longer right side with equal content
  CHECK(matches_degree_criterion(Identity{x1 * x2, x2 * x1 * x1}, 2));
  // permutation only: length equal, no degree bound
  CHECK_FALSE(matches_degree_criterion(Identity{x1 * x2, x2 * x1}, 2));
  // the doubled-block form has infinite right length
  CHECK(matches_degree_criterion(make_degree_identity(3, 1, 2), 3));
  // repeated variable on the left disqualifies
  CHECK_FALSE(matches_degree_criterion(Identity{x1 * x1, x1 * x1 * x1}, 2));
  // content mismatch disqualifies
  CHECK_FALSE(matches_degree_criterion(Identity{x1 * x2, x1 * x1 * x1}, 2));

  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i; j <= n; ++j)
        CHECK(matches_degree_criterion(make_degree_identity(n, i, j), n));
}

TEST_CASE("duplicate reporting treats the identity as unordered") {
  IdentitySystem sys{{Identity{x * y, y * x}, Identity{y * x, x * y},
                      Identity{x, x * x}}};
  auto dups = duplicate_pairs(sys);
  REQUIRE(dups.size() == 1);
  CHECK(dups[0] == std::make_pair(std::size_t{0}, std::size_t{1}));
}

TEST_CASE("identity file parsing") {
  std::istringstream in(
      "# a comment\n"
      "x y = y x\n"
      "x^2 y = 0\n"
      "\n"
      "x~ = x~\n");
  IdentitySystem sys = load_identities(in, "test");
  REQUIRE(sys.size() == 4);  // the zero line expands into two identities
  CHECK(sys.items[0] == Identity{x * y, y * x});
  Word x2y = pow(x, 2) * y;
  Word fresh = Word::var(indexed_variable('x', 1));
  CHECK(sys.items[1] == Identity{x2y * fresh, x2y});
  CHECK(sys.items[2] == Identity{fresh * x2y, x2y});

  std::istringstream bad("x y\n");
  CHECK_THROWS_AS(load_identities(bad, "bad"), Error);
  std::istringstream bad2("x = (y\n");
  try {
    load_identities(bad2, "bad2");
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("bad2:1") != std::string::npos);
  }
}

TEST_SUITE_END();
