#ifndef HK_REWRITE_HPP_
#define HK_REWRITE_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "hk/presentation.hpp"
#include "hk/word.hpp"

namespace hk {

// Resource caps for completion. Hitting one is an observable report state,
// not an error: the partial interreduced system is still returned.
struct Caps {
  std::size_t max_rules = 20000;
  std::size_t max_lhs_len = 24;
  std::size_t max_pairs = 1'000'000;
};

struct CompletionReport {
  bool converged = false;
  std::size_t rule_count = 0;
  std::size_t pairs_examined = 0;
  std::size_t iterations = 0;
  std::string cap_fired;  // "", "rules", "lhs-length" or "pairs"
};

// Witness of a confluence failure: the overlap word rewrites to two distinct
// normal forms.
struct CriticalFailure {
  Word overlap;
  Word left_nf;
  Word right_nf;
  std::size_t rule_a = 0;
  std::size_t rule_b = 0;
};

enum class Strategy { Leftmost, Rightmost, Random };

namespace detail {
struct TransparentHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view sv) const {
    return std::hash<std::string_view>{}(sv);
  }
};
}  // namespace detail

// An interreduced, shortlex-oriented string rewriting system: no lhs is a
// factor of another lhs, every rhs is irreducible.
class RewriteSystem {
 public:
  RewriteSystem() = default;

  // Orients and interreduces the given rules; no completion is performed.
  static RewriteSystem interreduce(std::size_t alphabet,
                                   std::vector<Rule> rules);

  std::size_t alphabet() const { return alphabet_; }
  const std::vector<Rule>& rules() const { return rules_; }

  // Leftmost-innermost reduction to an irreducible word. When the system is
  // convergent this is the shortlex-least element of the congruence class.
  Word normal_form(std::string_view w) const;

  bool is_irreducible(std::string_view w) const;

  // Single rewrite step at the redex chosen by the strategy; nullopt when w
  // is irreducible. Test hook for the strategy-independence property.
  std::optional<Word> rewrite_once(std::string_view w, Strategy s,
                                   std::mt19937* rng = nullptr) const;

  // True iff every overlap of two left-hand sides resolves to a common
  // normal form; otherwise the first failure found.
  std::optional<CriticalFailure> confluence_failure() const;
  bool is_confluent() const { return !confluence_failure().has_value(); }

  // One `lhs -> rhs` per line, sorted by shortlex of lhs. Bit-exact output
  // for golden tests.
  std::string to_text(const std::vector<std::string>& labels) const;

 private:
  void rebuild_index();

  std::size_t alphabet_ = 0;
  std::vector<Rule> rules_;
  std::unordered_map<std::string, std::size_t, detail::TransparentHash,
                     std::equal_to<>>
      lhs_index_;
  std::vector<std::size_t> lhs_lengths_;  // distinct, ascending
};

// Knuth-Bendix completion of the presentation under shortlex. Returns the
// (complete or partial) interreduced system together with a report.
std::pair<RewriteSystem, CompletionReport> knuth_bendix(const Presentation& p,
                                                        const Caps& caps = {});

}  // namespace hk

#endif  // HK_REWRITE_HPP_
