#ifndef HK_TESTS_HELPERS_HPP_
#define HK_TESTS_HELPERS_HPP_

#include <random>
#include <string>
#include <vector>

#include "hk/digraph.hpp"
#include "hk/oracle.hpp"
#include "hk/presentation.hpp"
#include "hk/rewrite.hpp"
#include "hk/word.hpp"

namespace hk::test {

inline Digraph dg(const std::string& text) { return Digraph::parse(text); }

inline Word w(std::initializer_list<int> letters) {
  Word out;
  for (int l : letters)
    out.push_back(static_cast<Letter>(l));
  return out;
}

// Random labeled digraph on n vertices, all pair states equally likely.
inline Digraph random_digraph(std::size_t n, std::mt19937& rng) {
  Digraph g(n);
  std::uniform_int_distribution<int> d(0, 3);
  for (VertexId j = 1; j < n; ++j)
    for (VertexId i = 0; i < j; ++i)
      switch (d(rng)) {
        case 1: g.add_edge(i, j); break;
        case 2: g.add_arrow(i, j); break;
        case 3: g.add_arrow(j, i); break;
        default: break;
      }
  return g;
}

inline Word random_word(std::size_t alphabet, std::size_t max_len,
                        std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(0,
                                            static_cast<int>(alphabet) - 1);
  Word out;
  std::size_t l = len(rng);
  for (std::size_t i = 0; i < l; ++i)
    out.push_back(static_cast<Letter>(letter(rng)));
  return out;
}

inline CongruenceOracle oracle_for(const Digraph& g, std::size_t report_len,
                                   std::size_t slack = 2) {
  Presentation p = build_presentation(g);
  OracleConfig cfg;
  cfg.report_len = report_len;
  cfg.slack = slack;
  return CongruenceOracle(g.size(), p.rules, cfg);
}

}  // namespace hk::test

#endif  // HK_TESTS_HELPERS_HPP_
