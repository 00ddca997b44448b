#ifndef HK_MONOID_HPP_
#define HK_MONOID_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hk/digraph.hpp"
#include "hk/rewrite.hpp"
#include "hk/word.hpp"

namespace hk {

// The elements of a finite monoid as normal-form words, together with the
// right multiplication action of the generators. Element 0 is the identity.
class MonoidTable {
 public:
  // Breadth-first closure from the identity under right multiplication.
  // Requires a convergent system with a finite language; throws
  // std::domain_error when the language is infinite.
  static MonoidTable enumerate_elements(const RewriteSystem& rs);

  std::size_t size() const { return elements_.size(); }
  std::size_t alphabet() const { return alphabet_; }
  const std::vector<Word>& elements() const { return elements_; }
  const Word& element(std::size_t i) const { return elements_[i]; }

  std::uint32_t right_multiply(std::size_t element, Letter g) const {
    return table_[element * alphabet_ + static_cast<unsigned char>(g)];
  }
  // Index of the element with the given normal form, if present.
  std::optional<std::uint32_t> index_of(const Word& nf) const;
  // Product of two elements via the table (folds the right factor's word).
  std::uint32_t product(std::uint32_t x, std::uint32_t y) const;

  std::string to_csv(const std::vector<std::string>& labels) const;
  std::string to_json(const std::vector<std::string>& labels) const;

  std::size_t max_normal_form_length() const;

 private:
  std::size_t alphabet_ = 0;
  std::vector<Word> elements_;           // shortlex BFS order, [0] = identity
  std::vector<std::uint32_t> table_;     // size * alphabet
};

// Smallest i, p with x^i = x^{i+p} in the monoid presented by rs, found by
// iterating normalized powers; when no repeat shows up within cap steps the
// profile reports the powers distinct up to the cap.
struct PowerProfile {
  bool finite = false;
  std::size_t index = 0;   // valid when finite
  std::size_t period = 0;  // valid when finite
  std::size_t cap = 0;
  std::vector<Word> transcript;  // nf(x^1), nf(x^2), ... as far as computed

  std::string str(const std::vector<std::string>& labels) const;
};

PowerProfile power_profile(const RewriteSystem& rs, const Word& x,
                           std::size_t cap = 64);

// Checks a x a = a x for every source a and every x in the sample (and
// dually a x a = x a for sinks), as equality of normal forms.
struct IdentityCheck {
  bool ok = true;
  std::string failure;  // description of the first counterexample
};

IdentityCheck check_source_sink_identity(const RewriteSystem& rs,
                                         const Digraph& q,
                                         const std::vector<Word>& sample);

// Default sample: all elements when the language is finite, otherwise all
// irreducible words of length <= fallback_len.
std::vector<Word> identity_sample(const RewriteSystem& rs,
                                  std::size_t fallback_len = 8);

}  // namespace hk

#endif  // HK_MONOID_HPP_
