#ifndef HK_AUTOMATON_HPP_
#define HK_AUTOMATON_HPP_

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "hk/rewrite.hpp"
#include "hk/word.hpp"

namespace hk {

// Deterministic acceptor of the words containing no rule lhs as a factor
// (the normal forms, once the system is convergent). States are the
// Aho-Corasick factor-index states of the lhs set; a run that reads a full
// lhs enters the dead state and stays there.
class NormalFormAutomaton {
 public:
  static NormalFormAutomaton build(const RewriteSystem& rs);

  std::size_t state_count() const { return transitions_.size(); }
  std::size_t alphabet() const { return alphabet_; }
  static constexpr std::uint32_t kDead = 0xffffffffu;

  std::uint32_t step(std::uint32_t state, Letter l) const {
    return transitions_[state][static_cast<unsigned char>(l)];
  }
  bool accepts(std::string_view w) const;

  // All live words in shortlex order, up to the given length (or unbounded
  // when the language is finite and max_len is npos-like large).
  std::vector<Word> enumerate(std::size_t max_len) const;

  struct Infinite {
    Word stem;   // path from the start into the cycle
    Word cycle;  // nonempty; stem + cycle^k is live for every k
  };
  using LanguageCount = std::variant<std::uint64_t, Infinite>;

  // Exact number of live words when the live reachable subgraph is acyclic,
  // otherwise a pumpable witness. Throws std::overflow_error if the count
  // exceeds uint64.
  LanguageCount count_language() const;

 private:
  std::size_t alphabet_ = 0;
  std::vector<std::vector<std::uint32_t>> transitions_;  // [state][letter]
};

}  // namespace hk

#endif  // HK_AUTOMATON_HPP_
