#ifndef HK_AFFINE_HPP_
#define HK_AFFINE_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "hk/digraph.hpp"
#include "hk/word.hpp"

namespace hk {

using BigInt = boost::multiprecision::cpp_int;

// An integer affine map m |-> matrix * m + offset on Z^n, stored explicitly
// so that equality of maps is decidable exactly. Arbitrary-precision entries
// keep long composition chains exact.
class AffineMap {
 public:
  AffineMap() = default;
  static AffineMap identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  BigInt& at(std::size_t row, std::size_t col) { return mat_[row * dim_ + col]; }
  const BigInt& at(std::size_t row, std::size_t col) const {
    return mat_[row * dim_ + col];
  }
  BigInt& offset(std::size_t row) { return off_[row]; }
  const BigInt& offset(std::size_t row) const { return off_[row]; }

  // (f.compose(g))(m) = f(g(m)).
  AffineMap compose(const AffineMap& g) const;
  std::vector<BigInt> apply(const std::vector<BigInt>& m) const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<BigInt> mat_;  // row-major
  std::vector<BigInt> off_;
};

// Word w = g_1 g_2 ... g_k acts as maps[g_1] o maps[g_2] o ... o maps[g_k]
// (rightmost letter applied first). The empty word is the identity.
AffineMap word_to_map(const std::vector<AffineMap>& maps, const Word& w);

// The canonical infinite representation of the oriented n-cycle
// 1 -> 2 -> ... -> n -> 1: generator i < n replaces coordinate i with
// coordinate i+1 duplicated, generator n replaces coordinate n with m_1 + 1.
// Requires n >= 3.
std::vector<AffineMap> cycle_rep(std::size_t n);

// The oriented n-cycle digraph itself (vertices a1..an or a,b,c,... for
// small n), arrows i -> i+1 mod n.
Digraph oriented_cycle(std::size_t n);

// Verifies that the maps satisfy every defining relation of the digraph's
// monoid as exact equality of composed affine maps.
struct RelationCheck {
  bool ok = true;
  std::string failing_relation;  // rendered, when !ok
  std::size_t relations_checked = 0;
};
RelationCheck check_relations(const std::vector<AffineMap>& maps,
                              const Digraph& q);

// True iff f^1, ..., f^k are pairwise distinct as affine maps.
bool distinct_powers(const AffineMap& f, std::size_t k);

// JSON certificate for the oriented n-cycle: the maps, the relation
// checklist, and the orbit of 0 under powers of u_1...u_n.
std::string cycle_witness_certificate(std::size_t n, std::size_t power_k = 50);

}  // namespace hk

#endif  // HK_AFFINE_HPP_
