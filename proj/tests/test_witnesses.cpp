#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "hk/affine.hpp"
#include "hk/rewrite.hpp"

using namespace hk;
using test::w;

TEST_SUITE_BEGIN("witnesses");

TEST_CASE("cycle representation maps for n = 3") {
  auto maps = cycle_rep(3);
  REQUIRE(maps.size() == 3);
  std::vector<BigInt> m = {5, 7, 9};
  CHECK(maps[0].apply(m) == std::vector<BigInt>{7, 7, 9});
  CHECK(maps[1].apply(m) == std::vector<BigInt>{5, 9, 9});
  CHECK(maps[2].apply(m) == std::vector<BigInt>{5, 7, 6});
  CHECK_THROWS_AS(cycle_rep(2), std::invalid_argument);
}

TEST_CASE("each generator map is idempotent") {
  for (std::size_t n : {3, 4, 5, 6}) {
    for (const AffineMap& u : cycle_rep(n))
      CHECK(u.compose(u) == u);
  }
}

TEST_CASE("maps satisfy the defining relations for n = 3..8") {
  for (std::size_t n = 3; n <= 8; ++n) {
    auto check = check_relations(cycle_rep(n), oriented_cycle(n));
    CHECK(check.ok);
    CHECK(check.relations_checked > 0);
  }
}

TEST_CASE("perturbing one offset breaks a named relation") {
  auto maps = cycle_rep(3);
  maps[2].offset(0) += 1;
  auto check = check_relations(maps, oriented_cycle(3));
  CHECK_FALSE(check.ok);
  CHECK(!check.failing_relation.empty());
}

TEST_CASE("dimension mismatches are rejected") {
  auto maps = cycle_rep(3);
  CHECK_THROWS_AS(check_relations(maps, oriented_cycle(4)),
                  std::invalid_argument);
  auto m4 = cycle_rep(4);
  CHECK_THROWS_AS(maps[0].compose(m4[0]), std::invalid_argument);
  std::vector<AffineMap> mixed = {maps[0], maps[1], m4[0]};
  CHECK_THROWS_AS(check_relations(mixed, oriented_cycle(3)),
                  std::invalid_argument);
}

TEST_CASE("powers of the full cycle product are distinct; orbit is (j,...,j)") {
  for (std::size_t n : {3ul, 6ul}) {
    auto maps = cycle_rep(n);
    Word full;
    for (std::size_t g = 0; g < n; ++g)
      full.push_back(static_cast<Letter>(g));
    AffineMap prod = word_to_map(maps, full);
    CHECK(distinct_powers(prod, 100));
    std::vector<BigInt> v(n, 0);
    for (int j = 1; j <= 100; ++j) {
      v = prod.apply(v);
      for (const BigInt& x : v)
        CHECK(x == j);
    }
  }
}

TEST_CASE("degenerate powers repeat") {
  auto maps = cycle_rep(3);
  CHECK_FALSE(distinct_powers(AffineMap::identity(3), 2));
  CHECK_FALSE(distinct_powers(maps[0], 2));  // idempotent
  CHECK_THROWS_AS(distinct_powers(maps[0], 1), std::invalid_argument);
}

TEST_CASE("composition is associative (exact arithmetic)") {
  std::mt19937 rng(42);
  auto maps = cycle_rep(5);
  std::uniform_int_distribution<std::size_t> d(0, 4);
  for (int t = 0; t < 50; ++t) {
    const AffineMap &f = maps[d(rng)], &g = maps[d(rng)], &h = maps[d(rng)];
    CHECK(f.compose(g).compose(h) == f.compose(g.compose(h)));
  }
}

TEST_CASE("the representation factors through the monoid") {
  // For random words, the map of w equals the map of nf(w) under the
  // oriented cycle's rewrite rules.
  for (std::size_t n : {3ul, 4ul, 5ul}) {
    auto maps = cycle_rep(n);
    Digraph q = oriented_cycle(n);
    auto [rs, rep] = knuth_bendix(build_presentation(q), Caps{2000, 24, 200000});
    std::mt19937 rng(1000 + n);
    for (int t = 0; t < 60; ++t) {
      Word x = test::random_word(n, 10, rng);
      CHECK(word_to_map(maps, x) == word_to_map(maps, rs.normal_form(x)));
    }
  }
}

TEST_CASE("witness certificate JSON") {
  std::string cert = cycle_witness_certificate(3, 50);
  CHECK(cert.find("\"powers_distinct\": true") != std::string::npos);
  CHECK(cert.find("\"cycle_length\": 3") != std::string::npos);
  CHECK(cert.find("\"holds\": false") == std::string::npos);
}

TEST_SUITE_END();
