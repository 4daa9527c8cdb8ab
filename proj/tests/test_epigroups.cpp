#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "epikit/enumerate.hpp"
#include "epikit/epigroup.hpp"
#include "epikit/error.hpp"
#include "epikit/identity.hpp"
#include "epikit/parse.hpp"
#include "support/oracles.hpp"

using namespace epikit;

namespace {

const Variable vx{"x"}, vy{"y"};
const Word x = Word::var(vx);
const Word y = Word::var(vy);

FiniteEpigroup z2() { return FiniteEpigroup::validate(2, {0, 1, 1, 0}, "z2"); }
FiniteEpigroup n2() { return FiniteEpigroup::validate(2, {0, 0, 0, 0}, "n2"); }

}  // namespace

TEST_SUITE_BEGIN("epigroups");

TEST_CASE("validation") {
  FiniteEpigroup sl = semilattice2();
  CHECK(sl.idempotents() == std::vector<std::size_t>{0, 1});

  // (ab)c != a(bc) witness
  CHECK_THROWS_AS(FiniteEpigroup::validate(2, {1, 0, 0, 0}), Error);
  try {
    FiniteEpigroup::validate(2, {1, 0, 0, 0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_associative);
  }

  CHECK(z2().idempotents() == std::vector<std::size_t>{0});

  CHECK_THROWS_AS(FiniteEpigroup::validate(2, {0, 0, 0}), Error);
  CHECK_THROWS_AS(FiniteEpigroup::validate(2, {0, 0, 0, 5}), Error);
}

TEST_CASE("pseudoinverse") {
  FiniteEpigroup sl = semilattice2();
  CHECK(sl.pseudoinverse(0) == 0);
  CHECK(sl.pseudoinverse(1) == 1);

  CHECK(z2().pseudoinverse(1) == 1);  // the group inverse

  // monogenic with index 2, period 2: elements a, a^2, a^3 with a^4 = a^2
  FiniteEpigroup m = monogenic(2, 2);
  CHECK(m.omega_power(0) == 1);     // e_a = a^2
  CHECK(m.pseudoinverse(0) == 2);   // pinv(a) = a^3
  Assignment a0{{vx, 0}};
  CHECK(evaluate(m, omega(x), a0) == 1);
  CHECK(evaluate(m, pinv(pinv(x)), a0) == 2);
}

TEST_CASE("pseudoinverse satisfies its defining equations") {
  // pinv(x) inverts x e_x in the subgroup at e_x, and is fixed by e_x
  std::vector<FiniteEpigroup> models;
  for (std::size_t order = 1; order <= 3; ++order)
    for (auto& S : enumerate_epigroups(order)) models.push_back(std::move(S));
  for (auto& S : testing::fixture_catalog()) models.push_back(std::move(S));

  for (const FiniteEpigroup& S : models)
    for (std::size_t a = 0; a < S.order(); ++a) {
      std::size_t e = S.omega_power(a);
      std::size_t p = S.pseudoinverse(a);
      REQUIRE(S.product(e, e) == e);
      REQUIRE(S.product(a, e) == S.product(e, a));
      REQUIRE(S.product(p, S.product(a, e)) == e);
      REQUIRE(S.product(S.product(a, e), p) == e);
      REQUIRE(S.product(p, e) == p);
      REQUIRE(S.product(e, p) == p);
    }
}

TEST_CASE("group elements") {
  FiniteEpigroup g = z2();
  CHECK(g.is_group_element(0));
  CHECK(g.is_group_element(1));

  FiniteEpigroup m = monogenic(2, 2);
  CHECK_FALSE(m.is_group_element(0));  // a itself is not in the kernel
  CHECK(m.is_group_element(1));
  CHECK(m.is_group_element(2));
  CHECK(m.group_elements() == std::vector<std::size_t>{1, 2});

  FiniteEpigroup n = n2();
  CHECK(n.is_group_element(0));  // the zero forms the trivial subgroup
  CHECK_FALSE(n.is_group_element(1));
}

TEST_CASE("group criterion agrees with subgroup search") {
  for (std::size_t order = 1; order <= 3; ++order)
    for (const FiniteEpigroup& S : enumerate_epigroups(order)) {
      auto searched = group_elements_by_subgroup_search(S);
      for (std::size_t a = 0; a < S.order(); ++a)
        REQUIRE(S.is_group_element(a) == searched[a]);
    }
}

TEST_CASE("evaluate") {
  FiniteEpigroup m = monogenic(2, 2);
  for (std::size_t a = 0; a < m.order(); ++a)
    CHECK(evaluate(m, x * pinv(x), Assignment{{vx, a}}) == m.omega_power(a));

  FiniteEpigroup n3 = FiniteEpigroup::validate(3, {0, 0, 0, 0, 2, 0, 0, 0, 0});
  REQUIRE(is_nil(n3));
  for (std::size_t a = 0; a < n3.order(); ++a)
    CHECK(evaluate(n3, pinv(x), Assignment{{vx, a}}) == *n3.zero());

  CHECK_THROWS_AS(evaluate(m, x * y, Assignment{{vx, 0}}), Error);
}

TEST_CASE("satisfies") {
  FiniteEpigroup sl = semilattice2();
  CHECK(satisfies(sl, IdentitySystem{{Identity{x * y, y * x},
                                      Identity{pow(x, 2), x}}})
            .holds);

  // commutative with annihilating squares
  IdentitySystem nil_class = expand_zero(ZeroIdentity{pow(x, 2) * y});
  nil_class.items.push_back(Identity{x * y, y * x});
  CHECK(satisfies(n2(), nil_class).holds);

  auto failed = satisfies(z2(), Identity{pow(x, 2), x});
  REQUIRE_FALSE(failed.holds);
  REQUIRE(failed.witness.has_value());
  CHECK(failed.witness->identity_index == 0);
  CHECK(failed.witness->assignment.at(vx) == 1);  // first violation in order
  CHECK(failed.witness->lhs_value == 0);
  CHECK(failed.witness->rhs_value == 1);
}

TEST_CASE("nil predicates") {
  CHECK(is_nil(n2()));
  CHECK(nilpotency_index(n2()) == 2);

  FiniteEpigroup n3 = FiniteEpigroup::validate(3, {0, 0, 0, 0, 2, 0, 0, 0, 0});
  CHECK(is_nil(n3));
  CHECK(nilpotency_index(n3) == 3);
  CHECK(testing::nilpotency_index_by_sequences(n3) == 3);

  CHECK_FALSE(is_nil(z2()));
  CHECK_THROWS_AS(nilpotency_index(z2()), Error);

  // index agrees with the all-sequences oracle on every nil fixture
  for (const FiniteEpigroup& S : testing::fixture_catalog())
    if (is_nil(S))
      CHECK(nilpotency_index(S) == testing::nilpotency_index_by_sequences(S));
}

TEST_CASE("commutativity and semilattice recognition") {
  CHECK(is_semilattice(semilattice2()));
  CHECK(is_commutative(z2()));
  CHECK_FALSE(is_semilattice(z2()));
  FiniteEpigroup lz = FiniteEpigroup::validate(2, {0, 0, 1, 1}, "lz2");
  CHECK_FALSE(is_commutative(lz));
}

TEST_CASE("direct products") {
  FiniteEpigroup sl_nil = direct_product(semilattice2(), n2());
  CHECK(sl_nil.order() == 4);
  CHECK(is_commutative(sl_nil));
  CHECK(satisfies(sl_nil, Identity{x * y, y * x}).holds);
  CHECK_FALSE(is_nil(sl_nil));

  // product with the trivial semigroup is an isomorphic copy
  FiniteEpigroup trivial = FiniteEpigroup::validate(1, {0});
  FiniteEpigroup m = monogenic(2, 3);
  CHECK(direct_product(m, trivial).table() == m.table());

  FiniteEpigroup nn = direct_product(n2(), n2());
  CHECK(is_nil(nn));
  CHECK(nilpotency_index(nn) == 2);
  CHECK(testing::nilpotency_index_by_sequences(nn) == 2);
}

TEST_CASE("pseudoinversion is componentwise on products") {
  std::vector<FiniteEpigroup> parts;
  parts.push_back(semilattice2());
  parts.push_back(z2());
  parts.push_back(monogenic(2, 2));
  parts.push_back(n2());
  for (const FiniteEpigroup& S : parts)
    for (const FiniteEpigroup& T : parts) {
      FiniteEpigroup P = direct_product(S, T);
      for (std::size_t a = 0; a < S.order(); ++a)
        for (std::size_t b = 0; b < T.order(); ++b) {
          std::size_t pair = a * T.order() + b;
          REQUIRE(P.pseudoinverse(pair) ==
                  S.pseudoinverse(a) * T.order() + T.pseudoinverse(b));
        }
    }
}

TEST_CASE("pseudoinversion commutes with relabeling") {
  std::mt19937_64 rng(4242);
  std::vector<FiniteEpigroup> samples;
  samples.push_back(monogenic(2, 2));
  for (auto& S : testing::fixture_catalog()) samples.push_back(std::move(S));
  for (const FiniteEpigroup& S : samples) {
    std::size_t n = S.order();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::size_t> relabeled(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        relabeled[perm[a] * n + perm[b]] = perm[S.product(a, b)];
    FiniteEpigroup T = FiniteEpigroup::validate(n, relabeled);
    for (std::size_t a = 0; a < n; ++a) {
      CHECK(T.pseudoinverse(perm[a]) == perm[S.pseudoinverse(a)]);
      CHECK(T.omega_power(perm[a]) == perm[S.omega_power(a)]);
    }
  }
}

TEST_CASE("canonical tables are relabeling invariants") {
  std::mt19937_64 rng(77);
  for (const FiniteEpigroup& S : enumerate_epigroups(3)) {
    std::vector<std::size_t> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::size_t> relabeled(9);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        relabeled[perm[a] * 3 + perm[b]] = perm[S.product(a, b)];
    FiniteEpigroup T = FiniteEpigroup::validate(3, relabeled);
    CHECK(canonical_table(T) == canonical_table(S));
  }
}

TEST_CASE("zero detection") {
  CHECK(n2().zero() == 0);
  CHECK_FALSE(z2().zero().has_value());
  FiniteEpigroup b2 = load_cayley_file(std::string(EPIKIT_DATA_DIR) +
                                       "/epigroups/b2.cayley");
  CHECK(b2.zero() == 0);
  CHECK_FALSE(is_nil(b2));

  // a zero is unique wherever one exists: recount absorbing elements
  for (std::size_t order = 1; order <= 3; ++order)
    for (const FiniteEpigroup& S : enumerate_epigroups(order)) {
      std::size_t absorbing = 0;
      for (std::size_t z = 0; z < S.order(); ++z) {
        bool all = true;
        for (std::size_t a = 0; a < S.order(); ++a)
          all = all && S.product(z, a) == z && S.product(a, z) == z;
        if (all) ++absorbing;
      }
      CHECK(absorbing <= 1);
      CHECK((absorbing == 1) == S.zero().has_value());
    }
}

TEST_CASE("cayley round trip") {
  for (const FiniteEpigroup& S : testing::fixture_catalog()) {
    std::istringstream in(to_cayley(S));
    FiniteEpigroup back = load_cayley(in, "roundtrip");
    CHECK(back.table() == S.table());
    CHECK(back.name() == S.name());
  }
  std::istringstream bad("2\n0 0\n0\n");
  try {
    load_cayley(bad, "bad");
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("bad:3") != std::string::npos);
  }
}

TEST_CASE("fixture catalog structure") {
  auto fromfile = [](const std::string& stem) {
    return load_cayley_file(std::string(EPIKIT_DATA_DIR) + "/epigroups/" +
                            stem + ".cayley");
  };
  FiniteEpigroup s3 = fromfile("s3");
  CHECK(s3.order() == 6);
  CHECK_FALSE(is_commutative(s3));
  CHECK(s3.group_elements().size() == 6);

  FiniteEpigroup a2 = fromfile("a2");
  CHECK(a2.zero() == 0);
  CHECK_FALSE(is_nil(a2));
  CHECK(a2.idempotents().size() == 4);  // zero and three idempotents

  FiniteEpigroup n6 = fromfile("n6");
  CHECK(is_nil(n6));
  CHECK(nilpotency_index(n6) == 6);

  FiniteEpigroup mono = fromfile("mono_i2p2");
  CHECK(mono.pseudoinverse(0) == 2);
  CHECK(mono.omega_power(0) == 1);
  CHECK(mono.group_elements() == std::vector<std::size_t>{1, 2});
}

TEST_CASE("subsemigroups") {
  FiniteEpigroup m = monogenic(2, 2);
  auto subs = all_subsemigroups(m);
  // {a^2}, {a^3}? a^3 a^3 = a^6 = a^2: not closed; closed subsets:
  // {a^2}, {a^2,a^3}, {a,a^2,a^3}
  REQUIRE(subs.size() == 3);
  CHECK(subs[0] == std::vector<std::size_t>{1});
  CHECK(subs[1] == std::vector<std::size_t>{1, 2});
  CHECK(subs[2] == std::vector<std::size_t>{0, 1, 2});

  FiniteEpigroup kernel = subsemigroup(m, {1, 2});
  CHECK(kernel.order() == 2);
  CHECK(kernel.group_elements().size() == 2);  // the kernel is a group
  CHECK_THROWS_AS(subsemigroup(m, {0}), Error);
}

TEST_SUITE_END();
