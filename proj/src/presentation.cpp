#include "hk/presentation.hpp"

#include <stdexcept>

namespace hk {

Rule orient(const Word& u, const Word& v) {
  auto c = shortlex_compare(u, v);
  if (c == std::strong_ordering::equal)
    throw std::invalid_argument("orient: sides are equal");
  return c == std::strong_ordering::greater ? Rule{u, v} : Rule{v, u};
}

Presentation build_presentation(const Digraph& q) {
  Presentation p;
  p.alphabet = q.size();
  p.labels = q.labels();
  if (p.alphabet > kMaxAlphabet)
    throw std::invalid_argument("build_presentation: too many vertices");

  auto w = [](std::initializer_list<VertexId> ls) {
    Word out;
    for (VertexId l : ls)
      out.push_back(static_cast<Letter>(l));
    return out;
  };

  for (VertexId i = 0; i < q.size(); ++i)
    p.rules.push_back({w({i, i}), w({i})});

  for (VertexId j = 1; j < q.size(); ++j)
    for (VertexId i = 0; i < j; ++i) {
      switch (q.pair_state(i, j)) {
        case Digraph::None:
          p.rules.push_back({w({j, i}), w({i, j})});
          break;
        case Digraph::Edge:
          p.rules.push_back({w({j, i, j}), w({i, j, i})});
          break;
        default: {
          VertexId from = q.has_arrow(i, j) ? i : j;
          VertexId to = from == i ? j : i;
          p.rules.push_back({w({from, to, from}), w({from, to})});
          p.rules.push_back({w({to, from, to}), w({from, to})});
          break;
        }
      }
    }
  return p;
}

std::string rule_to_string(const Rule& r,
                           const std::vector<std::string>& labels) {
  return word_to_string(r.lhs, labels) + " -> " + word_to_string(r.rhs, labels);
}

}  // namespace hk
