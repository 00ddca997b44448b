#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "hk/kdecomp.hpp"
#include "hk/oracle.hpp"

using namespace hk;
using test::w;

TEST_SUITE_BEGIN("kdecomp");

namespace {

const KDecomposer& decomposer() {
  static KDecomposer dec;
  return dec;
}

void check_shape(const KDecomposition& d) {
  CHECK(d.bounds_ok);
  CHECK(d.prefix.size() <= 10);
  CHECK(d.suffix.size() <= 10);
  REQUIRE(d.pattern.size() == 4);
  // {x,z} = {a,b} and {y,t} = {c,d}
  std::set<Letter> tails = {d.pattern[0], d.pattern[2]};
  std::set<Letter> heads = {d.pattern[1], d.pattern[3]};
  CHECK(tails == std::set<Letter>{0, 1});
  CHECK(heads == std::set<Letter>{2, 3});
}

}  // namespace

TEST_CASE("already in target shape: (acbd)^2") {
  auto d = decomposer().decompose(w({0, 2, 1, 3, 0, 2, 1, 3}));
  CHECK(d.prefix.empty());
  CHECK(d.suffix.empty());
  CHECK(d.pattern == w({0, 2, 1, 3}));
  CHECK(d.exponent == 2);
  CHECK(d.verified);
  check_shape(d);
}

TEST_CASE("aba collapses to the prefix with zero exponent") {
  auto d = decomposer().decompose(w({0, 1, 0}));
  CHECK(d.exponent == 0);
  CHECK(d.prefix == w({0, 1, 0}));
  CHECK(d.suffix.empty());
  CHECK(d.verified);
  check_shape(d);
}

TEST_CASE("letters outside the alphabet are rejected") {
  CHECK_THROWS_AS(decomposer().decompose(w({0, 4})), std::invalid_argument);
}

TEST_CASE("maximal exponent wins, ties toward the least pattern") {
  // adbc adbc acbd: the (adbc)^2 grouping beats any single acbd.
  auto d = decomposer().decompose(w({0, 3, 1, 2, 0, 3, 1, 2}));
  CHECK(d.exponent == 2);
  CHECK(d.pattern == w({0, 3, 1, 2}));
  check_shape(d);
}

TEST_CASE("interior absorption: b c ab d a loses a letter") {
  // = b c ab d after one composite move; congruence is oracle-checked.
  Word input = w({1, 2, 0, 1, 3, 0});
  auto d = decomposer().decompose(input);
  CHECK(d.verified);
  check_shape(d);
  auto oracle = test::oracle_for(digraph_k(), 6);
  CHECK(oracle.congruent(input, d.expansion()));
}

TEST_CASE("random words: decomposition is congruent and within bounds") {
  std::mt19937 rng(1234);
  auto oracle = test::oracle_for(digraph_k(), 8);
  for (int t = 0; t < 300; ++t) {
    Word x = test::random_word(4, 8, rng);
    auto d = decomposer().decompose(x);
    CHECK(d.verified);
    check_shape(d);
    CHECK(d.expansion().size() <= x.size());
    CHECK(oracle.congruent(x, d.expansion()));
  }
}

TEST_CASE("every oracle class of length <= 8 decomposes") {
  auto oracle = test::oracle_for(digraph_k(), 8);
  auto reps = oracle.representatives(8);
  std::size_t fallbacks = 0;
  for (const Word& rep : reps) {
    auto d = decomposer().decompose(rep);
    check_shape(d);
    if (!d.verified)
      ++fallbacks;
    CHECK(oracle.congruent(rep, d.expansion()));
  }
  CHECK(fallbacks == 0);
}

TEST_CASE("long central powers round-trip") {
  for (std::size_t n = 1; n <= 6; ++n) {
    Word x = repeat(w({0, 2, 1, 3}), n);  // (acbd)^n
    auto d = decomposer().decompose(x);
    CHECK(d.verified);
    CHECK(d.exponent >= n - 1);  // grouping may shift but cannot collapse
    check_shape(d);
  }
}

TEST_CASE("congruence fallback search is usable directly") {
  const auto& dec = decomposer();
  CHECK(dec.congruent_bounded(w({0, 2, 0}), w({0, 2})));        // aca = ac
  CHECK(dec.congruent_bounded(w({1, 0, 1}), w({0, 1, 0})));     // bab = aba
  CHECK_FALSE(dec.congruent_bounded(w({0}), w({1})));           // a != b
  CHECK_FALSE(dec.congruent_bounded(w({0, 2, 1, 3}), w({})));   // acbd != 1
}

TEST_SUITE_END();
