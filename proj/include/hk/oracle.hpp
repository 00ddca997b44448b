#ifndef HK_ORACLE_HPP_
#define HK_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "hk/presentation.hpp"
#include "hk/word.hpp"

namespace hk {

// Brute-force bounded congruence closure: the words of length <= report_len
// + slack form the nodes, single relation applications (both directions) the
// edges, and the congruence classes are the connected components, merged by
// union-find. Completely independent of the rewriting engine; serves as the
// ground truth all derived counts are checked against.
//
// Classes are canonically represented by their shortlex-least member. Words
// longer than report_len participate only as intermediate steps.
struct OracleConfig {
  std::size_t report_len = 8;
  std::size_t slack = 2;
  // Refuse domains larger than this many words (memory guard: 4 bytes each).
  std::uint64_t max_nodes = 450'000'000;
};

class CongruenceOracle {
 public:
  CongruenceOracle(std::size_t alphabet, const std::vector<Rule>& relations,
                   OracleConfig cfg);

  std::size_t alphabet() const { return alphabet_; }
  std::size_t report_len() const { return cfg_.report_len; }
  std::size_t bound() const { return bound_; }
  std::uint64_t node_count() const { return parent_.size(); }

  // Number of congruence classes met by some word of length <= up_to_len.
  std::uint64_t class_count(std::size_t up_to_len) const;

  // Shortlex-least representative of every class counted by class_count.
  std::vector<Word> representatives(std::size_t up_to_len) const;

  // Both words must have length <= bound().
  bool congruent(const Word& u, const Word& v) const;

  Word representative(const Word& w) const;

 private:
  std::uint64_t code_of(const Word& w) const;
  Word decode(std::uint64_t code) const;
  std::uint64_t find(std::uint64_t x) const;

  std::size_t alphabet_;
  OracleConfig cfg_;
  std::size_t bound_;
  std::vector<std::uint64_t> offset_;  // offset_[l] = first code of length l
  mutable std::vector<std::uint32_t> parent_;
};

}  // namespace hk

#endif  // HK_ORACLE_HPP_
