#include "hk/monoid.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "hk/automaton.hpp"
#include "json.hpp"

namespace hk {

MonoidTable MonoidTable::enumerate_elements(const RewriteSystem& rs) {
  auto nfa = NormalFormAutomaton::build(rs);
  auto count = nfa.count_language();
  if (std::holds_alternative<NormalFormAutomaton::Infinite>(count))
    throw std::domain_error(
        "enumerate_elements: language is infinite, refusing");
  auto expected = std::get<std::uint64_t>(count);

  MonoidTable t;
  t.alphabet_ = rs.alphabet();
  std::unordered_map<std::string, std::uint32_t, detail::TransparentHash,
                     std::equal_to<>>
      index;
  t.elements_.push_back(Word());
  index.emplace(Word(), 0);
  for (std::size_t e = 0; e < t.elements_.size(); ++e) {
    for (std::size_t g = 0; g < t.alphabet_; ++g) {
      Word w = t.elements_[e];
      w.push_back(static_cast<Letter>(g));
      Word nf = rs.normal_form(w);
      auto it = index.find(nf);
      std::uint32_t target;
      if (it == index.end()) {
        target = static_cast<std::uint32_t>(t.elements_.size());
        index.emplace(nf, target);
        t.elements_.push_back(std::move(nf));
      } else {
        target = it->second;
      }
      t.table_.push_back(target);
    }
  }
  if (t.elements_.size() != expected)
    throw std::logic_error(
        "enumerate_elements: closure size disagrees with automaton count");
  return t;
}

std::optional<std::uint32_t> MonoidTable::index_of(const Word& nf) const {
  auto it = std::find(elements_.begin(), elements_.end(), nf);
  if (it == elements_.end())
    return std::nullopt;
  return static_cast<std::uint32_t>(it - elements_.begin());
}

std::uint32_t MonoidTable::product(std::uint32_t x, std::uint32_t y) const {
  std::uint32_t cur = x;
  for (Letter g : elements_[y])
    cur = right_multiply(cur, g);
  return cur;
}

std::size_t MonoidTable::max_normal_form_length() const {
  std::size_t m = 0;
  for (const Word& w : elements_)
    m = std::max(m, w.size());
  return m;
}

std::string MonoidTable::to_csv(const std::vector<std::string>& labels) const {
  std::string out = "element";
  for (const auto& l : labels)
    out += "," + l;
  out += "\n";
  for (std::size_t e = 0; e < size(); ++e) {
    out += word_to_string(elements_[e], labels);
    for (std::size_t g = 0; g < alphabet_; ++g)
      out += "," + word_to_string(
                       elements_[right_multiply(e, static_cast<Letter>(g))],
                       labels);
    out += "\n";
  }
  return out;
}

std::string MonoidTable::to_json(
    const std::vector<std::string>& labels) const {
  nlohmann::json j;
  j["size"] = size();
  j["generators"] = labels;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t e = 0; e < size(); ++e) {
    nlohmann::json row;
    row["element"] = word_to_string(elements_[e], labels);
    nlohmann::json prods = nlohmann::json::array();
    for (std::size_t g = 0; g < alphabet_; ++g)
      prods.push_back(word_to_string(
          elements_[right_multiply(e, static_cast<Letter>(g))], labels));
    row["products"] = prods;
    rows.push_back(row);
  }
  j["table"] = rows;
  return j.dump(2);
}

PowerProfile power_profile(const RewriteSystem& rs, const Word& x,
                           std::size_t cap) {
  if (cap < 1)
    throw std::invalid_argument("power_profile: cap must be >= 1");
  PowerProfile out;
  out.cap = cap;
  std::unordered_map<std::string, std::size_t, detail::TransparentHash,
                     std::equal_to<>>
      seen;  // nf -> exponent
  Word cur;  // nf(x^k)
  for (std::size_t k = 1; k <= cap; ++k) {
    cur = rs.normal_form(cur + x);
    auto it = seen.find(cur);
    if (it != seen.end()) {
      out.finite = true;
      out.index = it->second;
      out.period = k - it->second;
      return out;
    }
    seen.emplace(cur, k);
    out.transcript.push_back(cur);
  }
  return out;
}

std::string PowerProfile::str(const std::vector<std::string>& labels) const {
  if (finite)
    return "index " + std::to_string(index) + ", period " +
           std::to_string(period);
  std::string tail =
      transcript.empty()
          ? ""
          : " (last nf: " + word_to_string(transcript.back(), labels) + ")";
  return "distinct up to cap " + std::to_string(cap) + tail;
}

IdentityCheck check_source_sink_identity(const RewriteSystem& rs,
                                         const Digraph& q,
                                         const std::vector<Word>& sample) {
  IdentityCheck out;
  auto check = [&](VertexId v, bool source) {
    Word a(1, static_cast<Letter>(v));
    for (const Word& x : sample) {
      Word axa = rs.normal_form(a + x + a);
      Word ax = source ? rs.normal_form(a + x) : rs.normal_form(x + a);
      if (axa != ax) {
        out.ok = false;
        out.failure = std::string(source ? "source " : "sink ") + q.label(v) +
                      " with x = " + word_to_string(x, q.labels()) + ": " +
                      word_to_string(axa, q.labels()) +
                      " != " + word_to_string(ax, q.labels());
        return false;
      }
    }
    return true;
  };
  for (VertexId v : q.sources())
    if (!check(v, true))
      return out;
  for (VertexId v : q.sinks())
    if (!check(v, false))
      return out;
  return out;
}

std::vector<Word> identity_sample(const RewriteSystem& rs,
                                  std::size_t fallback_len) {
  auto nfa = NormalFormAutomaton::build(rs);
  auto count = nfa.count_language();
  if (std::holds_alternative<std::uint64_t>(count) &&
      std::get<std::uint64_t>(count) <= 100000)
    return nfa.enumerate(static_cast<std::size_t>(-1));
  return nfa.enumerate(fallback_len);
}

}  // namespace hk
