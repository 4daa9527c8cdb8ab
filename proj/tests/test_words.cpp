#include <doctest.h>

#include "epikit/enumerate.hpp"
#include "epikit/epigroup.hpp"
#include "epikit/error.hpp"
#include "epikit/parse.hpp"
#include "epikit/word.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace epikit;

namespace {

const Variable vx{"x"}, vy{"y"}, vz{"z"};
const Word x = Word::var(vx);
const Word y = Word::var(vy);
const Word z = Word::var(vz);

}  // namespace

TEST_SUITE_BEGIN("words");

TEST_CASE("variable names and ordering") {
  CHECK(Variable("x10").suffix() == 10);
  CHECK(Variable("x") < Variable("x1"));
  CHECK(Variable("x2") < Variable("x10"));
  CHECK(Variable("a9") < Variable("b"));
  CHECK_THROWS_AS(Variable("X"), Error);
  CHECK_THROWS_AS(Variable(""), Error);
  CHECK_THROWS_AS(Variable("xy"), Error);
}

TEST_CASE("flatten") {
  CHECK(flatten(x).size() == 1);
  auto assoc = flatten((x * y) * z);
  REQUIRE(assoc.size() == 3);
  CHECK(assoc[0] == x);
  CHECK(assoc[1] == y);
  CHECK(assoc[2] == z);
  // a pseudoinverse factor is atomic
  auto f = flatten(x * pinv(y * z) * x);
  REQUIRE(f.size() == 3);
  CHECK(f[1] == pinv(y * z));
}

TEST_CASE("flatten is idempotent on factors") {
  for (const Word& w : testing::words_up_to_size(6, {vx, vy})) {
    for (const Word& factor : flatten(w)) {
      auto again = flatten(factor);
      REQUIRE(again.size() == 1);
      CHECK(again[0] == factor);
    }
  }
}

TEST_CASE("equality is associativity-insensitive") {
  CHECK((x * y) * z == x * (y * z));
  CHECK(pinv((x * y) * z) == pinv(x * (y * z)));
  CHECK_FALSE(x * y == y * x);
  CHECK_FALSE(pinv(x) == x);
}

TEST_CASE("content") {
  CHECK(content(x * pinv(y) * x) == std::set<Variable>{vx, vy});
  // pairwise distinct product keeps all variables
  std::set<Variable> expected;
  std::vector<Word> factors;
  for (std::size_t k = 1; k <= 5; ++k) {
    expected.insert(indexed_variable('x', k));
    factors.push_back(Word::var(indexed_variable('x', k)));
  }
  CHECK(content(concat_all(factors)) == expected);
  CHECK(content(pinv(pinv(x))) == std::set<Variable>{vx});
}

TEST_CASE("length") {
  CHECK(length(x * y * x) == 3);
  CHECK(length(pinv(x)) == std::nullopt);
  CHECK(length(pow(x, 7)) == 7);
  CHECK(length_greater(pinv(x), 1000));
  CHECK(length_greater(x * y * x, 2));
  CHECK_FALSE(length_greater(x * y * x, 3));
}

TEST_CASE("semigroup words and linearity") {
  CHECK(is_semigroup_word(x * y));
  CHECK_FALSE(is_semigroup_word(x * pinv(y)));
  CHECK(is_linear(x * y * z));
  CHECK_FALSE(is_linear(x * y * x));
  CHECK_THROWS_AS(is_linear(pinv(x)), Error);
}

TEST_CASE("substitute") {
  // the central device: map x3 to (x2)^omega x3 inside x1 x2 x3
  Word x1 = Word::var(indexed_variable('x', 1));
  Word x2 = Word::var(indexed_variable('x', 2));
  Word x3 = Word::var(indexed_variable('x', 3));
  Substitution map{{indexed_variable('x', 1), x1},
                   {indexed_variable('x', 2), x2},
                   {indexed_variable('x', 3), omega(x2) * x3}};
  Word out = substitute(x1 * x2 * x3, map);
  CHECK(out == x1 * x2 * (x2 * pinv(x2)) * x3);

  Substitution ident{{vx, x}, {vy, y}};
  CHECK(substitute(x * y * x, ident) == x * y * x);

  CHECK(substitute(pinv(x), Substitution{{vx, y * z}}) == pinv(y * z));

  CHECK_THROWS_AS(substitute(x * y, Substitution{{vx, x}}), Error);
  try {
    substitute(x * y, Substitution{{vx, x}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unmapped_variable);
  }
}

TEST_CASE("substitution properties") {
  testing::RandomWords gen(11, {vx, vy});
  for (int trial = 0; trial < 200; ++trial) {
    Word w = gen.next(6);
    Word image_x = gen.next(4);
    Word image_y = gen.next(4);
    Substitution map{{vx, image_x}, {vy, image_y}};
    Word out = substitute(w, map);

    // content homomorphism
    std::set<Variable> expected;
    for (const Variable& v : content(w))
      for (const Variable& u : content(map.at(v))) expected.insert(u);
    CHECK(content(out) == expected);

    // length never shrinks when images are nonempty semigroup words
    if (is_semigroup_word(image_x) && is_semigroup_word(image_y) &&
        is_semigroup_word(w))
      CHECK(*length(out) >= *length(w));
  }
}

TEST_CASE("one-variable normal form examples") {
  // double pseudoinverse is x^2 pinv(x)
  auto dd = one_variable_normal_form(pinv(pinv(x)));
  CHECK(dd.base_power == 2);
  CHECK(dd.pinv_power == 1);

  auto cube = one_variable_normal_form(pow(x, 3));
  CHECK(cube.base_power == 3);
  CHECK(cube.pinv_power == 0);

  auto sq = one_variable_normal_form(pinv(pow(x, 2)));
  CHECK(sq.base_power == 0);
  CHECK(sq.pinv_power == 2);

  CHECK_THROWS_AS(one_variable_normal_form(x * y), Error);
}

TEST_CASE("one-variable normal form is semantically sound") {
  // oracle: element-wise evaluation over every small model and the fixtures
  std::vector<FiniteEpigroup> models;
  for (std::size_t order = 1; order <= 3; ++order)
    for (auto& S : enumerate_epigroups(order)) models.push_back(std::move(S));
  for (auto& S : testing::fixture_catalog()) models.push_back(std::move(S));

  for (const Word& w : testing::words_up_to_size(6, {vx})) {
    auto nf = one_variable_normal_form(w);
    CHECK(nf.base_power + nf.pinv_power >= 1);
    Word canonical = nf.as_word();
    if (is_semigroup_word(w)) {
      CHECK(nf.pinv_power == 0);
      CHECK(nf.base_power == *length(w));
    }
    for (const FiniteEpigroup& S : models)
      for (std::size_t a = 0; a < S.order(); ++a) {
        Assignment asg{{vx, a}};
        REQUIRE(evaluate(S, w, asg) == evaluate(S, canonical, asg));
      }
  }
}

TEST_CASE("parse examples") {
  CHECK(parse_word("x1 x2 (x3 x4)~~ x5") ==
        Word::var(indexed_variable('x', 1)) *
            Word::var(indexed_variable('x', 2)) *
            pinv(pinv(Word::var(indexed_variable('x', 3)) *
                      Word::var(indexed_variable('x', 4)))) *
            Word::var(indexed_variable('x', 5)));
  CHECK(parse_word("x^2 x~^3") == x * x * pinv(x) * pinv(x) * pinv(x));
  CHECK(parse_word("x*y") == x * y);
  CHECK(parse_word("xy") == x * y);  // digits, not letters, extend a name
  CHECK(parse_word("x y~") == x * pinv(y));
  CHECK(parse_word("(x y)~") == pinv(x * y));
  CHECK(parse_word("(x y)^2") == x * y * x * y);

  CHECK_THROWS_AS(parse_word(""), Error);
  CHECK_THROWS_AS(parse_word("x^0"), Error);
  CHECK_THROWS_AS(parse_word("(x"), Error);
  CHECK_THROWS_AS(parse_word("x )"), Error);
  CHECK_THROWS_AS(parse_word("~x"), Error);
}

TEST_CASE("parse after render is the identity") {
  for (const Word& w : testing::words_up_to_size(8, {vx, vy}))
    CHECK(parse_word(render(w)) == w);
}

TEST_CASE("omega abbreviation expands at construction") {
  CHECK(omega(x) == x * pinv(x));
  CHECK(omega(x * y) == (x * y) * pinv(x * y));
  CHECK(render(omega(x)) == "x x~");
}

TEST_CASE("power builders reject zero exponents") {
  CHECK_THROWS_AS(pow(x, 0), Error);
  CHECK_THROWS_AS(power_form(vx, 0, 0), Error);
  CHECK(power_form(vx, 0, 2) == pinv(x) * pinv(x));
}

TEST_SUITE_END();
