#ifndef HK_WORD_HPP_
#define HK_WORD_HPP_

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hk {

// A word over the generators of a monoid. Letters are raw byte values
// 0..alphabet-1 (one generator per digraph vertex); the empty word is the
// monoid identity. std::string is used as the container so that factor
// searches, hashing and substring slicing come for free.
using Letter = char;
using Word   = std::string;

inline constexpr std::size_t kMaxAlphabet = 64;

// Shortlex: compare by length first, then lexicographically by letter index.
inline std::strong_ordering shortlex_compare(std::string_view u,
                                             std::string_view v) {
  if (u.size() != v.size())
    return u.size() <=> v.size();
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i])
      return static_cast<unsigned char>(u[i]) <=>
             static_cast<unsigned char>(v[i]);
  return std::strong_ordering::equal;
}

inline bool shortlex_less(std::string_view u, std::string_view v) {
  return shortlex_compare(u, v) == std::strong_ordering::less;
}

struct ShortlexLess {
  bool operator()(std::string_view u, std::string_view v) const {
    return shortlex_less(u, v);
  }
};

// Rendering: single-character labels concatenate, otherwise dot-separated.
std::string word_to_string(const Word& w, const std::vector<std::string>& labels);

// Inverse of word_to_string for the same label set. Throws
// std::invalid_argument on unknown labels or ambiguous input.
Word parse_word(std::string_view text, const std::vector<std::string>& labels);

inline Word repeat(const Word& w, std::size_t k) {
  Word out;
  out.reserve(w.size() * k);
  for (std::size_t i = 0; i < k; ++i)
    out += w;
  return out;
}

inline Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

}  // namespace hk

#endif  // HK_WORD_HPP_
