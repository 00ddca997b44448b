#ifndef HK_PRESENTATION_HPP_
#define HK_PRESENTATION_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "hk/digraph.hpp"
#include "hk/word.hpp"

namespace hk {

// A shortlex-oriented rewrite rule; lhs is strictly greater than rhs.
struct Rule {
  Word lhs;
  Word rhs;
  friend bool operator==(const Rule&, const Rule&) = default;
};

// Orient an equation into a Rule (bigger side becomes the lhs). Throws if the
// sides are equal.
Rule orient(const Word& u, const Word& v);

// The defining rules of the monoid attached to a digraph, one generator per
// vertex, all generators idempotent:
//   a_i a_i       -> a_i                            every vertex
//   a_j a_i       -> a_i a_j      (j > i)           non-connected pair
//   a_j a_i a_j   -> a_i a_j a_i  (j > i)           edge {i,j}
//   a_i a_j a_i   -> a_i a_j  and
//   a_j a_i a_j   -> a_i a_j                        arrow i -> j
struct Presentation {
  std::size_t alphabet = 0;
  std::vector<Rule> rules;
  std::vector<std::string> labels;  // generator display names, one per vertex
};

Presentation build_presentation(const Digraph& q);

std::string rule_to_string(const Rule& r, const std::vector<std::string>& labels);

}  // namespace hk

#endif  // HK_PRESENTATION_HPP_
