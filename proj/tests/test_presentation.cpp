#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "hk/presentation.hpp"

using namespace hk;
using test::dg;
using test::w;

TEST_SUITE_BEGIN("presentation");

TEST_CASE("shortlex: named comparisons") {
  CHECK(shortlex_compare(w({0, 1}), w({1})) == std::strong_ordering::greater);
  CHECK(shortlex_compare(w({0, 1}), w({1, 0})) == std::strong_ordering::less);
  CHECK(shortlex_compare(w({}), w({0})) == std::strong_ordering::less);
  CHECK(shortlex_compare(w({2}), w({2})) == std::strong_ordering::equal);
}

TEST_CASE("shortlex is a total order on all words of length <= 3") {
  std::vector<Word> all;
  all.push_back({});
  for (int a = 0; a < 3; ++a) {
    all.push_back(w({a}));
    for (int b = 0; b < 3; ++b) {
      all.push_back(w({a, b}));
      for (int c = 0; c < 3; ++c)
        all.push_back(w({a, b, c}));
    }
  }
  for (const Word& u : all)
    for (const Word& v : all) {
      auto uv = shortlex_compare(u, v);
      auto vu = shortlex_compare(v, u);
      // antisymmetry
      CHECK((uv == std::strong_ordering::equal) == (u == v));
      if (uv == std::strong_ordering::less)
        CHECK(vu == std::strong_ordering::greater);
      // transitivity
      for (const Word& x : all)
        if (uv == std::strong_ordering::less &&
            shortlex_compare(v, x) == std::strong_ordering::less)
          CHECK(shortlex_less(u, x));
    }
}

TEST_CASE("presentation of two non-connected vertices") {
  Presentation p = build_presentation(dg("vertex a\nvertex b"));
  REQUIRE(p.rules.size() == 3);
  CHECK(p.rules[0] == Rule{w({0, 0}), w({0})});
  CHECK(p.rules[1] == Rule{w({1, 1}), w({1})});
  CHECK(p.rules[2] == Rule{w({1, 0}), w({0, 1})});
}

TEST_CASE("presentation of a single arrow") {
  Presentation p = build_presentation(dg("a -> b"));
  REQUIRE(p.rules.size() == 4);
  CHECK(p.rules[2] == Rule{w({0, 1, 0}), w({0, 1})});
  CHECK(p.rules[3] == Rule{w({1, 0, 1}), w({0, 1})});
}

TEST_CASE("presentation of a single edge") {
  Presentation p = build_presentation(dg("a -- b"));
  REQUIRE(p.rules.size() == 3);
  CHECK(p.rules[2] == Rule{w({1, 0, 1}), w({0, 1, 0})});
}

TEST_CASE("arrow direction against vertex order") {
  // Arrow from the higher-indexed vertex: rules must follow the arrow, not
  // the index order.
  Presentation p = build_presentation(dg("b -> a\nvertex c"));
  // labels: b=0, a=1, c=2; arrow 0 -> 1
  bool has_rule = std::count(p.rules.begin(), p.rules.end(),
                             Rule{w({0, 1, 0}), w({0, 1})}) == 1;
  CHECK(has_rule);
}

TEST_CASE("rule count formula") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 100; ++t) {
    Digraph g = test::random_digraph(1 + t % 6, rng);
    Presentation p = build_presentation(g);
    std::size_t pairs = g.size() * (g.size() - 1) / 2;
    std::size_t non_connected = pairs - g.edge_count() - g.arrow_count();
    CHECK(p.rules.size() ==
          g.size() + non_connected + g.edge_count() + 2 * g.arrow_count());
    for (const Rule& r : p.rules) {
      CHECK(!r.lhs.empty());
      CHECK(shortlex_less(r.rhs, r.lhs));
    }
    std::set<std::pair<Word, Word>> dedup;
    for (const Rule& r : p.rules)
      dedup.insert({r.lhs, r.rhs});
    CHECK(dedup.size() == p.rules.size());
  }
}

TEST_CASE("presentation of the opposite digraph is the word-reversal") {
  // Reversing every word of P(Q) letter-by-letter and re-orienting gives
  // exactly P(opposite(Q)) as a rule set.
  std::mt19937 rng(5150);
  auto normalized = [](const Presentation& p) {
    std::set<std::pair<Word, Word>> out;
    for (const Rule& r : p.rules)
      out.insert({r.lhs, r.rhs});
    return out;
  };
  for (int t = 0; t < 60; ++t) {
    Digraph g = test::random_digraph(1 + t % 5, rng);
    Presentation p = build_presentation(g);
    Presentation q = build_presentation(g.opposite());
    std::set<std::pair<Word, Word>> reversed;
    for (const Rule& r : p.rules) {
      Rule rr = orient(hk::reversed(r.lhs), hk::reversed(r.rhs));
      reversed.insert({rr.lhs, rr.rhs});
    }
    CHECK(reversed == normalized(q));
  }
}

TEST_CASE("word rendering and parsing") {
  std::vector<std::string> single = {"a", "b", "c"};
  CHECK(word_to_string(w({0, 1, 2}), single) == "abc");
  CHECK(word_to_string(w({}), single) == "1");
  CHECK(parse_word("abc", single) == w({0, 1, 2}));
  CHECK(parse_word("1", single) == w({}));

  std::vector<std::string> multi = {"x1", "y2"};
  CHECK(word_to_string(w({0, 1}), multi) == "x1.y2");
  CHECK(parse_word("x1.y2", multi) == w({0, 1}));
  CHECK_THROWS_AS(parse_word("zz", single), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("x1y2", multi), std::invalid_argument);
}

TEST_SUITE_END();
