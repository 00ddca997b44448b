#ifndef HK_KDECOMP_HPP_
#define HK_KDECOMP_HPP_

#include <cstdint>
#include <string>

#include "hk/digraph.hpp"
#include "hk/rewrite.hpp"
#include "hk/word.hpp"

namespace hk {

// Decomposition of a word over the digraph K (edges a-b and c-d, all four
// arrows from {a,b} to {c,d}) into the shape  w (xyzt)^n w'  with
// {x,z} = {a,b}, {y,t} = {c,d} and l(w), l(w') <= 10, congruent to the input.
struct KDecomposition {
  Word prefix;
  Word pattern;  // xyzt, four letters
  std::size_t exponent = 0;
  Word suffix;

  bool bounds_ok = false;  // l(prefix) <= 10 and l(suffix) <= 10
  bool verified = false;   // expansion shown congruent to the input
  std::string note;        // how verification went (or why it failed)

  Word expansion() const;
  std::string str(const std::vector<std::string>& labels) const;
};

// Reusable decomposer; builds K's rewrite system once. The decomposition
// first normalizes, then splits the word into maximal blocks alternating
// between the {a,b}- and {c,d}-submonoids and applies length-reducing
// absorption moves to a fixpoint, and finally groups the central alternating
// run into the power (xyzt)^n, choosing the maximal exponent (ties toward
// the lexicographically least pattern).
class KDecomposer {
 public:
  explicit KDecomposer(const Caps& caps = {}, std::size_t search_depth = 16,
                       std::size_t search_budget = 250000);

  const Digraph& digraph() const { return k_; }
  const RewriteSystem& system() const { return rs_; }
  std::size_t search_depth() const { return search_depth_; }

  KDecomposition decompose(const Word& w) const;

  // Congruence test: normal-form comparison first, then a bounded
  // bidirectional search through single relation applications.
  bool congruent_bounded(const Word& u, const Word& v) const;

 private:
  Word fixpoint(Word w) const;

  Digraph k_;
  Presentation pres_;
  RewriteSystem rs_;
  std::size_t search_depth_;
  std::size_t search_budget_;
};

}  // namespace hk

#endif  // HK_KDECOMP_HPP_
