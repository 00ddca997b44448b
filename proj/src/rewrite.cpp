#include "hk/rewrite.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

namespace hk {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view sv) const {
    return std::hash<std::string_view>{}(sv);
  }
};
using LhsMap =
    std::unordered_map<std::string, std::size_t, StringHash, std::equal_to<>>;

// Mutable lhs index shared by normal-form computation and completion.
struct RuleIndex {
  LhsMap map;
  std::vector<std::size_t> len_count;  // per lhs length

  void insert(const std::string& lhs, std::size_t idx) {
    map.emplace(lhs, idx);
    if (lhs.size() >= len_count.size())
      len_count.resize(lhs.size() + 1, 0);
    ++len_count[lhs.size()];
  }
  void erase(const std::string& lhs) {
    map.erase(lhs);
    --len_count[lhs.size()];
  }
  // Innermost match: the shortest lhs that is a suffix of w.
  std::size_t find_suffix(std::string_view w) const {
    if (len_count.empty())
      return npos;
    std::size_t max_len = std::min(w.size(), len_count.size() - 1);
    for (std::size_t len = 1; len <= max_len; ++len) {
      if (len_count[len] == 0)
        continue;
      auto it = map.find(w.substr(w.size() - len));
      if (it != map.end())
        return it->second;
    }
    return npos;
  }
};

Word normal_form_impl(std::string_view w, const RuleIndex& index,
                      const std::vector<Rule>& rules) {
  Word out;
  out.reserve(w.size());
  Word pending(w.rbegin(), w.rend());
  while (!pending.empty()) {
    out.push_back(pending.back());
    pending.pop_back();
    std::size_t idx = index.find_suffix(out);
    if (idx != npos) {
      const Rule& r = rules[idx];
      out.resize(out.size() - r.lhs.size());
      pending.append(r.rhs.rbegin(), r.rhs.rend());
    }
  }
  return out;
}

// Emit every critical pair arising from rule a over rule b: proper
// suffix-prefix overlaps, and (when include_factors) b's lhs occurring
// properly inside a's lhs.
template <typename Emit>
void overlaps(const Rule& a, const Rule& b, bool same_rule,
              bool include_factors, Emit&& emit) {
  std::size_t la = a.lhs.size(), lb = b.lhs.size();
  for (std::size_t k = 1; k < std::min(la, lb); ++k) {
    if (std::string_view(a.lhs).substr(la - k) !=
        std::string_view(b.lhs).substr(0, k))
      continue;
    Word overlap = a.lhs + b.lhs.substr(k);
    Word left = a.rhs + b.lhs.substr(k);
    Word right = a.lhs.substr(0, la - k) + b.rhs;
    emit(std::move(overlap), std::move(left), std::move(right));
  }
  if (include_factors && !same_rule && lb < la) {
    for (std::size_t p = a.lhs.find(b.lhs); p != Word::npos;
         p = a.lhs.find(b.lhs, p + 1)) {
      Word right = a.lhs.substr(0, p) + b.rhs + a.lhs.substr(p + lb);
      emit(Word(a.lhs), Word(a.rhs), std::move(right));
    }
  }
}

// Huet-style completion state: active rules stay interreduced at all times.
class Completion {
 public:
  Completion(const Presentation& p, const Caps& caps)
      : caps_(caps), alphabet_(p.alphabet) {
    for (const Rule& r : p.rules)
      equations_.push_back({r.lhs, r.rhs});
  }

  void run() {
    for (;;) {
      ++report_.iterations;
      if (!equations_.empty()) {
        auto [u, v] = std::move(equations_.front());
        equations_.pop_front();
        if (!process_equation(u, v))
          break;
        continue;
      }
      if (cursor_r_ >= rules_.size()) {
        report_.converged = true;
        break;
      }
      if (report_.pairs_examined >= caps_.max_pairs) {
        report_.cap_fired = "pairs";
        break;
      }
      std::size_t r = cursor_r_, s = cursor_s_;
      if (++cursor_s_ > cursor_r_) {
        cursor_s_ = 0;
        ++cursor_r_;
      }
      if (!active_[r] || !active_[s])
        continue;
      ++report_.pairs_examined;
      auto emit = [&](Word&&, Word&& left, Word&& right) {
        equations_.push_back({std::move(left), std::move(right)});
      };
      overlaps(rules_[r], rules_[s], r == s, false, emit);
      if (r != s)
        overlaps(rules_[s], rules_[r], false, false, emit);
    }
  }

  std::vector<Rule> active_rules() const {
    std::vector<Rule> out;
    for (std::size_t i = 0; i < rules_.size(); ++i)
      if (active_[i])
        out.push_back(rules_[i]);
    return out;
  }

  CompletionReport report() const {
    CompletionReport r = report_;
    r.rule_count = active_count_;
    return r;
  }

 private:
  Word nf(std::string_view w) const {
    return normal_form_impl(w, index_, rules_);
  }

  // Returns false when a cap fired.
  bool process_equation(const Word& u, const Word& v) {
    Word nu = nf(u), nv = nf(v);
    if (nu == nv)
      return true;
    Rule r = orient(nu, nv);
    if (r.lhs.size() > caps_.max_lhs_len) {
      report_.cap_fired = "lhs-length";
      return false;
    }
    if (active_count_ >= caps_.max_rules) {
      report_.cap_fired = "rules";
      return false;
    }
    add_rule(std::move(r));
    return true;
  }

  void add_rule(Rule r) {
    std::size_t idx = rules_.size();
    rules_.push_back(std::move(r));
    active_.push_back(true);
    ++active_count_;
    const Word& lhs = rules_[idx].lhs;
    index_.insert(lhs, idx);
    // Keep the active set interreduced: older rules whose lhs is now
    // reducible go back into the equation queue; reducible rhs sides are
    // simply renormalized.
    for (std::size_t s = 0; s < idx; ++s) {
      if (!active_[s])
        continue;
      if (rules_[s].lhs.find(lhs) != Word::npos) {
        active_[s] = false;
        --active_count_;
        index_.erase(rules_[s].lhs);
        equations_.push_back({rules_[s].lhs, rules_[s].rhs});
      } else if (rules_[s].rhs.find(lhs) != Word::npos) {
        rules_[s].rhs = nf(rules_[s].rhs);
      }
    }
  }

  Caps caps_;
  std::size_t alphabet_;
  std::vector<Rule> rules_;
  std::vector<bool> active_;
  std::size_t active_count_ = 0;
  RuleIndex index_;
  std::deque<std::pair<Word, Word>> equations_;
  std::size_t cursor_r_ = 0, cursor_s_ = 0;
  CompletionReport report_;
};

}  // namespace

// ---------------------------------------------------------------------------

void RewriteSystem::rebuild_index() {
  lhs_index_.clear();
  lhs_lengths_.clear();
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    lhs_index_.emplace(rules_[i].lhs, i);
    lhs_lengths_.push_back(rules_[i].lhs.size());
  }
  std::sort(lhs_lengths_.begin(), lhs_lengths_.end());
  lhs_lengths_.erase(std::unique(lhs_lengths_.begin(), lhs_lengths_.end()),
                     lhs_lengths_.end());
}

RewriteSystem RewriteSystem::interreduce(std::size_t alphabet,
                                         std::vector<Rule> rules) {
  // Repeatedly normalize every rule against the others until stable.
  RuleIndex index;
  std::vector<Rule> all;
  std::vector<bool> active;
  std::deque<std::pair<Word, Word>> queue;
  for (Rule& r : rules)
    queue.push_back({std::move(r.lhs), std::move(r.rhs)});
  while (!queue.empty()) {
    auto [u, v] = std::move(queue.front());
    queue.pop_front();
    Word nu = normal_form_impl(u, index, all);
    Word nv = normal_form_impl(v, index, all);
    if (nu == nv)
      continue;
    Rule r = orient(nu, nv);
    std::size_t idx = all.size();
    all.push_back(std::move(r));
    active.push_back(true);
    index.insert(all[idx].lhs, idx);
    for (std::size_t s = 0; s < idx; ++s) {
      if (!active[s])
        continue;
      if (all[s].lhs.find(all[idx].lhs) != Word::npos) {
        active[s] = false;
        index.erase(all[s].lhs);
        queue.push_back({all[s].lhs, all[s].rhs});
      } else if (all[s].rhs.find(all[idx].lhs) != Word::npos) {
        all[s].rhs = normal_form_impl(all[s].rhs, index, all);
      }
    }
  }
  RewriteSystem out;
  out.alphabet_ = alphabet;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (active[i])
      out.rules_.push_back(std::move(all[i]));
  std::sort(out.rules_.begin(), out.rules_.end(),
            [](const Rule& a, const Rule& b) {
              return shortlex_less(a.lhs, b.lhs);
            });
  out.rebuild_index();
  return out;
}

Word RewriteSystem::normal_form(std::string_view w) const {
  Word out;
  out.reserve(w.size());
  Word pending(w.rbegin(), w.rend());
  while (!pending.empty()) {
    out.push_back(pending.back());
    pending.pop_back();
    for (std::size_t len : lhs_lengths_) {
      if (len > out.size())
        break;
      auto it = lhs_index_.find(
          std::string_view(out).substr(out.size() - len));
      if (it != lhs_index_.end()) {
        const Rule& r = rules_[it->second];
        out.resize(out.size() - r.lhs.size());
        pending.append(r.rhs.rbegin(), r.rhs.rend());
        break;
      }
    }
  }
  return out;
}

bool RewriteSystem::is_irreducible(std::string_view w) const {
  for (const Rule& r : rules_)
    if (w.find(r.lhs) != std::string_view::npos)
      return false;
  return true;
}

std::optional<Word> RewriteSystem::rewrite_once(std::string_view w, Strategy s,
                                                std::mt19937* rng) const {
  struct Redex {
    std::size_t pos;
    std::size_t rule;
  };
  std::vector<Redex> redexes;
  for (std::size_t i = 0; i < rules_.size(); ++i)
    for (std::size_t p = w.find(rules_[i].lhs); p != std::string_view::npos;
         p = w.find(rules_[i].lhs, p + 1))
      redexes.push_back({p, i});
  if (redexes.empty())
    return std::nullopt;
  auto by_pos = [&](const Redex& a, const Redex& b) {
    if (a.pos != b.pos)
      return a.pos < b.pos;
    return rules_[a.rule].lhs.size() < rules_[b.rule].lhs.size();
  };
  Redex pick = redexes.front();
  switch (s) {
    case Strategy::Leftmost:
      pick = *std::min_element(redexes.begin(), redexes.end(), by_pos);
      break;
    case Strategy::Rightmost:
      pick = *std::max_element(redexes.begin(), redexes.end(), by_pos);
      break;
    case Strategy::Random: {
      if (!rng)
        throw std::invalid_argument("rewrite_once: Random needs an rng");
      std::uniform_int_distribution<std::size_t> d(0, redexes.size() - 1);
      pick = redexes[d(*rng)];
      break;
    }
  }
  const Rule& r = rules_[pick.rule];
  Word out(w.substr(0, pick.pos));
  out += r.rhs;
  out += w.substr(pick.pos + r.lhs.size());
  return out;
}

std::optional<CriticalFailure> RewriteSystem::confluence_failure() const {
  for (std::size_t a = 0; a < rules_.size(); ++a)
    for (std::size_t b = 0; b < rules_.size(); ++b) {
      std::optional<CriticalFailure> found;
      auto emit = [&](Word&& overlap, Word&& left, Word&& right) {
        if (found)
          return;
        Word ln = normal_form(left), rn = normal_form(right);
        if (ln != rn)
          found = CriticalFailure{std::move(overlap), std::move(ln),
                                  std::move(rn), a, b};
      };
      overlaps(rules_[a], rules_[b], a == b, true, emit);
      if (found)
        return found;
    }
  return std::nullopt;
}

std::string RewriteSystem::to_text(
    const std::vector<std::string>& labels) const {
  std::vector<const Rule*> sorted;
  for (const Rule& r : rules_)
    sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](const Rule* a, const Rule* b) {
    return shortlex_less(a->lhs, b->lhs);
  });
  std::string out;
  for (const Rule* r : sorted)
    out += rule_to_string(*r, labels) + "\n";
  return out;
}

std::pair<RewriteSystem, CompletionReport> knuth_bendix(const Presentation& p,
                                                        const Caps& caps) {
  if (caps.max_rules == 0 || caps.max_lhs_len == 0 || caps.max_pairs == 0)
    throw std::invalid_argument("knuth_bendix: caps must be positive");
  Completion c(p, caps);
  c.run();
  RewriteSystem rs = RewriteSystem::interreduce(p.alphabet, c.active_rules());
  CompletionReport report = c.report();
  report.rule_count = rs.rules().size();
  return {std::move(rs), report};
}

}  // namespace hk
