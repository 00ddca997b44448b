#include "hk/automaton.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace hk {

NormalFormAutomaton NormalFormAutomaton::build(const RewriteSystem& rs) {
  // Trie over the lhs set.
  struct Node {
    std::vector<std::int64_t> child;
    std::uint32_t fail = 0;
    bool terminal = false;
    explicit Node(std::size_t alpha) : child(alpha, -1) {}
  };
  std::size_t alpha = std::max<std::size_t>(rs.alphabet(), 1);
  std::vector<Node> trie;
  trie.emplace_back(alpha);
  for (const Rule& r : rs.rules()) {
    std::uint32_t cur = 0;
    for (Letter l : r.lhs) {
      auto ix = static_cast<std::size_t>(static_cast<unsigned char>(l));
      if (trie[cur].child[ix] < 0) {
        trie[cur].child[ix] = static_cast<std::int64_t>(trie.size());
        trie.emplace_back(alpha);
      }
      cur = static_cast<std::uint32_t>(trie[cur].child[ix]);
    }
    trie[cur].terminal = true;
  }

  // Failure links (BFS); a state whose suffix chain hits a terminal is dead.
  std::deque<std::uint32_t> queue;
  for (std::size_t a = 0; a < alpha; ++a)
    if (trie[0].child[a] >= 0)
      queue.push_back(static_cast<std::uint32_t>(trie[0].child[a]));
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    trie[v].terminal = trie[v].terminal || trie[trie[v].fail].terminal;
    for (std::size_t a = 0; a < alpha; ++a) {
      std::int64_t c = trie[v].child[a];
      if (c < 0)
        continue;
      std::uint32_t f = trie[v].fail;
      while (f != 0 && trie[f].child[a] < 0)
        f = trie[f].fail;
      if (trie[f].child[a] >= 0 && trie[f].child[a] != c)
        trie[c].fail = static_cast<std::uint32_t>(trie[f].child[a]);
      queue.push_back(static_cast<std::uint32_t>(c));
    }
  }

  // Complete the transition function, redirecting matches to the dead state.
  NormalFormAutomaton out;
  out.alphabet_ = rs.alphabet();
  std::vector<std::uint32_t> remap(trie.size(), kDead);
  std::uint32_t live = 0;
  for (std::size_t v = 0; v < trie.size(); ++v)
    if (!trie[v].terminal)
      remap[v] = live++;
  out.transitions_.assign(live, std::vector<std::uint32_t>(alpha, kDead));
  for (std::size_t v = 0; v < trie.size(); ++v) {
    if (trie[v].terminal)
      continue;
    for (std::size_t a = 0; a < alpha; ++a) {
      std::uint32_t f = static_cast<std::uint32_t>(v);
      while (f != 0 && trie[f].child[a] < 0)
        f = trie[f].fail;
      std::int64_t c = trie[f].child[a];
      std::uint32_t target = c < 0 ? 0 : static_cast<std::uint32_t>(c);
      out.transitions_[remap[v]][a] =
          trie[target].terminal ? kDead : remap[target];
    }
  }
  return out;
}

bool NormalFormAutomaton::accepts(std::string_view w) const {
  std::uint32_t s = 0;
  for (Letter l : w) {
    if (static_cast<std::size_t>(static_cast<unsigned char>(l)) >= alphabet_)
      return false;
    s = step(s, l);
    if (s == kDead)
      return false;
  }
  return true;
}

std::vector<Word> NormalFormAutomaton::enumerate(std::size_t max_len) const {
  std::vector<Word> out;
  std::deque<std::pair<Word, std::uint32_t>> queue;
  queue.push_back({Word(), 0});
  while (!queue.empty()) {
    auto [w, s] = std::move(queue.front());
    queue.pop_front();
    out.push_back(w);
    if (w.size() == max_len)
      continue;
    for (std::size_t a = 0; a < alphabet_; ++a) {
      std::uint32_t t = step(s, static_cast<Letter>(a));
      if (t != kDead)
        queue.push_back({w + static_cast<Letter>(a), t});
    }
  }
  return out;
}

NormalFormAutomaton::LanguageCount NormalFormAutomaton::count_language() const {
  std::size_t n = state_count();
  // Reachable live states.
  std::vector<bool> reach(n, false);
  std::vector<std::uint32_t> order;
  order.reserve(n);
  reach[0] = true;
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t a = 0; a < alphabet_; ++a) {
      std::uint32_t t = step(order[i], static_cast<Letter>(a));
      if (t != kDead && !reach[t]) {
        reach[t] = true;
        order.push_back(t);
      }
    }

  // Iterative DFS with colors; a back edge exposes a pumpable cycle.
  enum : std::uint8_t { White, Grey, Black };
  std::vector<std::uint8_t> color(n, White);
  struct Frame {
    std::uint32_t state;
    std::size_t next_letter;
  };
  std::vector<Frame> stack;
  std::vector<Letter> path;  // letters along the DFS stack
  color[0] = Grey;
  stack.push_back({0, 0});
  std::vector<std::uint32_t> topo;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next_letter == alphabet_) {
      color[f.state] = Black;
      topo.push_back(f.state);
      stack.pop_back();
      if (!path.empty())
        path.pop_back();
      continue;
    }
    auto l = static_cast<Letter>(f.next_letter++);
    std::uint32_t t = step(f.state, l);
    if (t == kDead)
      continue;
    if (color[t] == Grey) {
      // stem = path up to t's frame, cycle = rest plus the closing letter.
      std::size_t cut = 0;
      while (stack[cut].state != t)
        ++cut;
      Infinite w;
      w.stem.assign(path.begin(), path.begin() + cut);
      w.cycle.assign(path.begin() + cut, path.end());
      w.cycle.push_back(l);
      return w;
    }
    if (color[t] == White) {
      color[t] = Grey;
      stack.push_back({t, 0});
      path.push_back(l);
    }
  }

  // Acyclic: count paths from the start state, in topological order.
  std::vector<std::uint64_t> paths(n, 0);
  for (std::uint32_t s : topo) {
    std::uint64_t total = 1;  // the empty continuation
    for (std::size_t a = 0; a < alphabet_; ++a) {
      std::uint32_t t = step(s, static_cast<Letter>(a));
      if (t == kDead)
        continue;
      if (total > UINT64_MAX - paths[t])
        throw std::overflow_error("count_language: count exceeds uint64");
      total += paths[t];
    }
    paths[s] = total;
  }
  return paths[0];
}

}  // namespace hk
