#include "hk/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace hk {

namespace {

// Words are packed four bits per letter, letter i at nibble i, with every
// nibble past the end holding the 0xF sentinel. Supports alphabets up to 15
// letters and lengths up to 15 -- plenty for the desk-scale digraphs the
// oracle is asked about.
constexpr std::size_t kMaxPackedLen = 15;
constexpr std::size_t kMaxPackedAlpha = 15;
constexpr std::size_t kWindow = 4;  // longest relation side supported

std::uint64_t pack_word(const Word& w) {
  std::uint64_t p = ~0ull;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::uint64_t l = static_cast<unsigned char>(w[i]);
    p = (p & ~(0xFull << (4 * i))) | (l << (4 * i));
  }
  return p;
}

struct Substitution {
  std::uint8_t pat_len;
  std::uint8_t repl_len;
  std::uint16_t repl;  // packed nibbles, no sentinel
};

}  // namespace

CongruenceOracle::CongruenceOracle(std::size_t alphabet,
                                   const std::vector<Rule>& relations,
                                   OracleConfig cfg)
    : alphabet_(alphabet), cfg_(cfg), bound_(cfg.report_len + cfg.slack) {
  if (alphabet == 0 || alphabet > kMaxPackedAlpha)
    throw std::invalid_argument("oracle: alphabet must be 1..15");
  if (bound_ > kMaxPackedLen)
    throw std::invalid_argument("oracle: report_len + slack exceeds 15");
  for (const Rule& r : relations)
    if (r.lhs.size() > kWindow || r.rhs.size() > kWindow)
      throw std::invalid_argument("oracle: relation side longer than 4");

  std::uint64_t n = alphabet;
  offset_.assign(bound_ + 2, 0);
  std::uint64_t pow = 1;
  for (std::size_t l = 0; l <= bound_; ++l) {
    offset_[l + 1] = offset_[l] + pow;
    if (offset_[l + 1] > cfg.max_nodes)
      throw std::invalid_argument(
          "oracle: domain exceeds max_nodes; lower report_len or slack");
    pow *= n;
  }
  std::uint64_t total = offset_[bound_ + 1];
  parent_.resize(total);
  for (std::uint64_t i = 0; i < total; ++i)
    parent_[i] = static_cast<std::uint32_t>(i);

  // Window-indexed table of the applicable non-lengthening substitutions,
  // flattened into one contiguous array. Every congruence edge appears at
  // its longer endpoint, so applying only these while sweeping the whole
  // domain still yields the full closure.
  std::vector<std::vector<Substitution>> buckets(1u << (4 * kWindow));
  auto add_entries = [&](const Word& pat, const Word& repl) {
    if (pat.size() < repl.size())
      return;
    Substitution sub;
    sub.pat_len = static_cast<std::uint8_t>(pat.size());
    sub.repl_len = static_cast<std::uint8_t>(repl.size());
    sub.repl = static_cast<std::uint16_t>(pack_word(repl) &
                                          ((1u << (4 * repl.size())) - 1));
    std::uint64_t pat_packed = pack_word(pat) & ((1u << (4 * pat.size())) - 1);
    // Enumerate all windows whose prefix is the pattern.
    std::size_t free_nibbles = kWindow - pat.size();
    for (std::uint64_t rest = 0; rest < (1ull << (4 * free_nibbles)); ++rest) {
      std::uint64_t window = pat_packed | (rest << (4 * pat.size()));
      buckets[window].push_back(sub);
    }
  };
  for (const Rule& r : relations) {
    if (r.lhs.empty() || r.rhs.empty())
      throw std::invalid_argument("oracle: empty relation side");
    add_entries(r.lhs, r.rhs);
    add_entries(r.rhs, r.lhs);
  }
  std::vector<std::uint32_t> table_off(buckets.size() + 1, 0);
  std::vector<Substitution> table;
  for (std::size_t w = 0; w < buckets.size(); ++w) {
    table_off[w + 1] =
        table_off[w] + static_cast<std::uint32_t>(buckets[w].size());
    table.insert(table.end(), buckets[w].begin(), buckets[w].end());
  }
  buckets.clear();
  buckets.shrink_to_fit();

  auto unite = [&](std::uint64_t a, std::uint64_t b) {
    std::uint64_t ra = find(a), rb = find(b);
    if (ra == rb)
      return;
    if (ra > rb)
      std::swap(ra, rb);
    parent_[rb] = static_cast<std::uint32_t>(ra);  // min root wins
  };

  // Sweep the domain in code order; the packed word is kept as a base-n
  // counter alongside.
  std::uint64_t powv[kMaxPackedLen + 1];
  powv[0] = 1;
  for (std::size_t i = 1; i <= kMaxPackedLen; ++i)
    powv[i] = powv[i - 1] * n;

  for (std::size_t len = 1; len <= bound_; ++len) {
    std::uint64_t packed = ~0ull;
    for (std::size_t i = 0; i < len; ++i)
      packed &= ~(0xFull << (4 * i));  // word 00...0
    std::uint64_t base = offset_[len];
    std::uint64_t count = powv[len];
    for (std::uint64_t val = 0; val < count; ++val) {
      std::uint64_t code = base + val;
      for (std::size_t s = 0; s < len; ++s) {
        std::uint64_t window = (packed >> (4 * s)) & 0xFFFF;
        for (std::uint32_t e = table_off[window]; e < table_off[window + 1];
             ++e) {
          const Substitution& sub = table[e];
          if (s + sub.pat_len > len)
            continue;
          std::size_t new_len = len - sub.pat_len + sub.repl_len;
          std::uint64_t low = packed & ((1ull << (4 * s)) - 1);
          std::uint64_t rest = packed >> (4 * (s + sub.pat_len));
          std::uint64_t np = low | (static_cast<std::uint64_t>(sub.repl)
                                    << (4 * s)) |
                             (rest << (4 * (s + sub.repl_len)));
          if (new_len < kMaxPackedLen + 1)
            np |= ~((1ull << (4 * new_len)) - 1);
          // Horner over the nibbles, most significant letter first.
          std::uint64_t nval = 0;
          for (std::size_t i = 0; i < new_len; ++i)
            nval = nval * n + ((np >> (4 * i)) & 0xF);
          unite(code, offset_[new_len] + nval);
        }
      }
      // Increment the base-n counter (least significant letter is the last).
      for (std::size_t i = len; i-- > 0;) {
        std::uint64_t d = (packed >> (4 * i)) & 0xF;
        if (d + 1 < n) {
          packed += 1ull << (4 * i);
          break;
        }
        packed &= ~(0xFull << (4 * i));
      }
    }
  }
}

std::uint64_t CongruenceOracle::find(std::uint64_t x) const {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

std::uint64_t CongruenceOracle::code_of(const Word& w) const {
  if (w.size() > bound_)
    throw std::invalid_argument("oracle: word longer than closure bound");
  std::uint64_t val = 0;
  for (char c : w) {
    auto l = static_cast<std::uint64_t>(static_cast<unsigned char>(c));
    if (l >= alphabet_)
      throw std::invalid_argument("oracle: letter out of range");
    val = val * alphabet_ + l;
  }
  return offset_[w.size()] + val;
}

Word CongruenceOracle::decode(std::uint64_t code) const {
  std::size_t len = 0;
  while (offset_[len + 1] <= code)
    ++len;
  std::uint64_t val = code - offset_[len];
  Word w(len, 0);
  for (std::size_t i = len; i-- > 0;) {
    w[i] = static_cast<Letter>(val % alphabet_);
    val /= alphabet_;
  }
  return w;
}

std::uint64_t CongruenceOracle::class_count(std::size_t up_to_len) const {
  if (up_to_len > cfg_.report_len)
    throw std::invalid_argument("oracle: length beyond report_len");
  std::uint64_t out = 0;
  for (std::uint64_t c = 0; c < offset_[up_to_len + 1]; ++c)
    if (parent_[c] == c)
      ++out;
  return out;
}

std::vector<Word> CongruenceOracle::representatives(
    std::size_t up_to_len) const {
  if (up_to_len > cfg_.report_len)
    throw std::invalid_argument("oracle: length beyond report_len");
  std::vector<Word> out;
  for (std::uint64_t c = 0; c < offset_[up_to_len + 1]; ++c)
    if (parent_[c] == c)
      out.push_back(decode(c));
  return out;
}

bool CongruenceOracle::congruent(const Word& u, const Word& v) const {
  return find(code_of(u)) == find(code_of(v));
}

Word CongruenceOracle::representative(const Word& w) const {
  return decode(find(code_of(w)));
}

}  // namespace hk
