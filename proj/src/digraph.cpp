#include "hk/digraph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hk {

namespace {

std::string default_label(std::size_t i) {
  if (i < 26)
    return std::string(1, static_cast<char>('a' + i));
  return "v" + std::to_string(i);
}

}  // namespace

std::string DynkinType::str() const {
  switch (family) {
    case A: return "A" + std::to_string(rank);
    case D: return "D" + std::to_string(rank);
    case E6: return "E6";
    case E7: return "E7";
    case E8: return "E8";
    default: return "not-Dynkin";
  }
}

Digraph::Digraph(std::size_t n, std::vector<std::string> labels) {
  if (labels.empty()) {
    labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      labels_.push_back(default_label(i));
  } else {
    if (labels.size() != n)
      throw std::invalid_argument("Digraph: label count != vertex count");
    labels_ = std::move(labels);
  }
  pairs_.assign(n * (n - (n > 0)) / 2, None);
}

std::size_t Digraph::pair_index(VertexId u, VertexId v) {
  auto [lo, hi] = std::minmax(u, v);
  return static_cast<std::size_t>(hi) * (hi - 1) / 2 + lo;
}

Digraph::PairState Digraph::pair_state(VertexId u, VertexId v) const {
  if (u == v || u >= size() || v >= size())
    throw std::out_of_range("pair_state: bad vertex pair");
  return static_cast<PairState>(pairs_[pair_index(u, v)]);
}

bool Digraph::has_arrow(VertexId from, VertexId to) const {
  PairState s = pair_state(from, to);
  if (from < to)
    return s == LoHi;
  return s == HiLo;
}

void Digraph::set_pair(VertexId u, VertexId v, PairState s, int line) {
  auto where = [&]() -> std::string {
    return line >= 0 ? " (line " + std::to_string(line) + ")" : "";
  };
  if (u == v)
    throw std::invalid_argument("self-loop on vertex '" + label(u) + "'" +
                                where());
  std::size_t ix = pair_index(u, v);
  if (pairs_[ix] != None)
    throw std::invalid_argument("duplicate side for pair {" +
                                label(std::min(u, v)) + "," +
                                label(std::max(u, v)) + "}" + where());
  pairs_[ix] = s;
}

void Digraph::add_edge(VertexId u, VertexId v) { set_pair(u, v, Edge); }

void Digraph::add_arrow(VertexId from, VertexId to) {
  set_pair(from, to, from < to ? LoHi : HiLo);
}

std::optional<VertexId> Digraph::vertex_by_label(std::string_view l) const {
  for (VertexId v = 0; v < size(); ++v)
    if (labels_[v] == l)
      return v;
  return std::nullopt;
}

std::vector<Side> Digraph::sides() const {
  std::vector<Side> out;
  for (VertexId hi = 1; hi < size(); ++hi)
    for (VertexId lo = 0; lo < hi; ++lo)
      switch (pairs_[pair_index(lo, hi)]) {
        case Edge: out.push_back({SideKind::Edge, lo, hi}); break;
        case LoHi: out.push_back({SideKind::Arrow, lo, hi}); break;
        case HiLo: out.push_back({SideKind::Arrow, hi, lo}); break;
        default: break;
      }
  return out;
}

std::size_t Digraph::edge_count() const {
  return static_cast<std::size_t>(
      std::count(pairs_.begin(), pairs_.end(), Edge));
}

std::size_t Digraph::arrow_count() const {
  return static_cast<std::size_t>(
      std::count_if(pairs_.begin(), pairs_.end(),
                    [](std::uint8_t s) { return s == LoHi || s == HiLo; }));
}

Digraph Digraph::parse(std::string_view text) {
  std::vector<std::string> labels;
  struct PendingSide {
    std::string a, b;
    bool edge;
    int line;
  };
  std::vector<PendingSide> pending;

  auto intern = [&](const std::string& l) {
    if (std::find(labels.begin(), labels.end(), l) == labels.end())
      labels.push_back(l);
  };

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos)
      nl = text.size();
    std::string line(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos)
      line.resize(h);
    std::istringstream ss(line);
    std::string tok1, tok2, tok3, extra;
    if (!(ss >> tok1))
      continue;  // blank
    auto bad = [&](const std::string& why) {
      throw std::invalid_argument("malformed line " + std::to_string(lineno) +
                                  ": " + why);
    };
    auto check_label = [&](const std::string& l) {
      if (l.empty() ||
          !std::all_of(l.begin(), l.end(), [](unsigned char c) {
            return std::isalnum(c);
          }))
        bad("label '" + l + "' is not alphanumeric");
    };
    if (tok1 == "vertex") {
      if (!(ss >> tok2) || (ss >> extra))
        bad("expected 'vertex <label>'");
      check_label(tok2);
      intern(tok2);
      continue;
    }
    if (!(ss >> tok2 >> tok3) || (ss >> extra))
      bad("expected '<label> -- <label>' or '<label> -> <label>'");
    if (tok2 != "--" && tok2 != "->")
      bad("unknown connective '" + tok2 + "'");
    check_label(tok1);
    check_label(tok3);
    intern(tok1);
    intern(tok3);
    pending.push_back({tok1, tok3, tok2 == "--", lineno});
  }

  Digraph g(labels.size(), labels);
  for (const auto& s : pending) {
    VertexId a = *g.vertex_by_label(s.a);
    VertexId b = *g.vertex_by_label(s.b);
    if (s.edge)
      g.set_pair(a, b, Edge, s.line);
    else
      g.set_pair(a, b, a < b ? LoHi : HiLo, s.line);
  }
  return g;
}

std::string Digraph::to_text() const {
  std::string out;
  for (VertexId v = 0; v < size(); ++v) {
    bool isolated = true;
    for (VertexId u = 0; u < size() && isolated; ++u)
      if (u != v && connected_pair(u, v))
        isolated = false;
    if (isolated)
      out += "vertex " + label(v) + "\n";
  }
  for (const Side& s : sides())
    out += label(s.from) + (s.kind == SideKind::Edge ? " -- " : " -> ") +
           label(s.to) + "\n";
  return out;
}

Digraph Digraph::opposite() const {
  Digraph g = *this;
  for (auto& s : g.pairs_) {
    if (s == LoHi)
      s = HiLo;
    else if (s == HiLo)
      s = LoHi;
  }
  return g;
}

Digraph Digraph::induced(const std::vector<VertexId>& vertices) const {
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (VertexId v : vertices)
    labels.push_back(label(v));
  Digraph g(vertices.size(), labels);
  for (VertexId i = 0; i < vertices.size(); ++i)
    for (VertexId j = i + 1; j < vertices.size(); ++j) {
      PairState s = pair_state(vertices[i], vertices[j]);
      if (s == None)
        continue;
      bool swapped = (vertices[i] < vertices[j]) != (i < j);
      PairState t = s;
      if (swapped && s == LoHi)
        t = HiLo;
      else if (swapped && s == HiLo)
        t = LoHi;
      g.pairs_[pair_index(i, j)] = t;
    }
  return g;
}

Digraph Digraph::remove_vertex(VertexId v) const {
  if (v >= size())
    throw std::out_of_range("remove_vertex: unknown vertex");
  std::vector<VertexId> keep;
  for (VertexId u = 0; u < size(); ++u)
    if (u != v)
      keep.push_back(u);
  return induced(keep);
}

Digraph Digraph::orient_edge(VertexId from, VertexId to) const {
  if (pair_state(from, to) != Edge)
    throw std::invalid_argument("orient_edge: pair {" + label(from) + "," +
                                label(to) + "} does not carry an edge");
  Digraph g = *this;
  g.pairs_[pair_index(from, to)] = from < to ? LoHi : HiLo;
  return g;
}

Digraph Digraph::remove_arrow(VertexId u, VertexId v) const {
  PairState s = pair_state(u, v);
  if (s != LoHi && s != HiLo)
    throw std::invalid_argument("remove_arrow: pair {" + label(u) + "," +
                                label(v) + "} does not carry an arrow");
  Digraph g = *this;
  g.pairs_[pair_index(u, v)] = None;
  return g;
}

// Mixed adjacency: an edge is traversable both ways, an arrow only forward.
static std::vector<std::vector<VertexId>> forward_adjacency(const Digraph& g) {
  std::vector<std::vector<VertexId>> adj(g.size());
  for (const Side& s : g.sides()) {
    adj[s.from].push_back(s.to);
    if (s.kind == SideKind::Edge)
      adj[s.to].push_back(s.from);
  }
  for (auto& a : adj)
    std::sort(a.begin(), a.end());
  return adj;
}

bool Digraph::is_cycle(const std::vector<VertexId>& seq) const {
  if (seq.size() < 3)
    return false;
  std::vector<VertexId> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  if (sorted.back() >= size())
    return false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    VertexId a = seq[i], b = seq[(i + 1) % seq.size()];
    PairState s = pair_state(a, b);
    bool ok = s == Edge || (a < b ? s == LoHi : s == HiLo);
    if (!ok)
      return false;
  }
  return true;
}

std::optional<std::vector<VertexId>> Digraph::find_cycle() const {
  auto adj = forward_adjacency(*this);
  std::vector<VertexId> path;
  std::vector<bool> on_path(size(), false);

  // Enumerate simple paths that start at the least vertex of the candidate
  // cycle and otherwise stay above it; the first closure of length >= 3 wins.
  std::optional<std::vector<VertexId>> found;
  auto dfs = [&](auto&& self, VertexId start, VertexId v) -> bool {
    for (VertexId w : adj[v]) {
      if (w == start && path.size() >= 3) {
        found = path;
        return true;
      }
      if (w <= start || on_path[w])
        continue;
      path.push_back(w);
      on_path[w] = true;
      if (self(self, start, w))
        return true;
      on_path[w] = false;
      path.pop_back();
    }
    return false;
  };
  for (VertexId s = 0; s < size(); ++s) {
    path.assign(1, s);
    std::fill(on_path.begin(), on_path.end(), false);
    on_path[s] = true;
    if (dfs(dfs, s, s))
      return found;
  }
  return std::nullopt;
}

std::vector<CoxeterComponent> Digraph::coxeter_components() const {
  std::vector<VertexId> parent(size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Side& s : sides())
    if (s.kind == SideKind::Edge) {
      VertexId a = find(s.from), b = find(s.to);
      if (a != b)
        parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<CoxeterComponent> out;
  std::vector<int> slot(size(), -1);
  for (VertexId v = 0; v < size(); ++v) {
    VertexId r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].vertices.push_back(v);
  }
  for (const Side& s : sides())
    if (s.kind == SideKind::Edge)
      out[slot[find(s.from)]].edges.push_back(
          {std::min(s.from, s.to), std::max(s.from, s.to)});
  for (auto& c : out)
    std::sort(c.edges.begin(), c.edges.end());
  return out;
}

std::vector<std::vector<VertexId>> Digraph::connected_components() const {
  std::vector<VertexId> parent(size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Side& s : sides()) {
    VertexId a = find(s.from), b = find(s.to);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<VertexId>> out;
  std::vector<int> slot(size(), -1);
  for (VertexId v = 0; v < size(); ++v) {
    VertexId r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

std::vector<VertexId> Digraph::sources() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < size(); ++v) {
    bool ok = true;
    for (VertexId u = 0; u < size() && ok; ++u) {
      if (u == v)
        continue;
      PairState s = pair_state(v, u);
      if (s == Edge)
        ok = false;
      else if (s != None && !has_arrow(v, u))
        ok = false;  // incoming arrow
    }
    if (ok)
      out.push_back(v);
  }
  return out;
}

std::vector<VertexId> Digraph::sinks() const {
  return opposite().sources();
}

Digraph::ComponentOrder Digraph::component_order() const {
  ComponentOrder result;
  auto comps = coxeter_components();
  std::vector<std::size_t> comp_of(size());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (VertexId v : comps[c].vertices)
      comp_of[v] = c;

  // Arrow relation between components; an intra-component arrow is a
  // self-loop and therefore a cycle all by itself.
  std::vector<std::vector<std::size_t>> succ(comps.size());
  std::vector<std::size_t> indeg(comps.size(), 0);
  for (const Side& s : sides()) {
    if (s.kind != SideKind::Arrow)
      continue;
    std::size_t a = comp_of[s.from], b = comp_of[s.to];
    if (a == b) {
      result.cycle_witness = {a};
      return result;
    }
    succ[a].push_back(b);
  }
  for (auto& v : succ) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (std::size_t b : v)
      ++indeg[b];
  }

  // Kahn from the top; ties broken by least vertex index.
  std::vector<bool> done(comps.size(), false);
  for (std::size_t step = 0; step < comps.size(); ++step) {
    std::size_t pick = comps.size();
    for (std::size_t c = 0; c < comps.size(); ++c)
      if (!done[c] && indeg[c] == 0) {
        pick = c;
        break;  // components are already ordered by least vertex
      }
    if (pick == comps.size()) {
      // Remaining components all have incoming arrows: extract a cycle by
      // walking predecessors until one repeats.
      std::vector<std::size_t> trail;
      std::vector<int> seen(comps.size(), -1);
      std::size_t c = 0;
      while (done[c]) ++c;
      while (seen[c] < 0) {
        seen[c] = static_cast<int>(trail.size());
        trail.push_back(c);
        for (std::size_t p = 0; p < comps.size(); ++p)
          if (!done[p] && std::find(succ[p].begin(), succ[p].end(), c) !=
                              succ[p].end()) {
            c = p;
            break;
          }
      }
      trail.erase(trail.begin(), trail.begin() + seen[c]);
      std::reverse(trail.begin(), trail.end());
      result.cycle_witness = trail;
      return result;
    }
    done[pick] = true;
    result.descending.push_back(comps[pick]);
    for (std::size_t b : succ[pick])
      --indeg[b];
  }
  result.ok = true;
  return result;
}

std::string Digraph::canonical_form() const {
  std::size_t n = size();
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string key;
    key.reserve(pairs_.size());
    // key digit for pair (i<j) of the relabeled graph: vertices perm[i],
    // perm[j] of *this.
    for (VertexId j = 1; j < n; ++j)
      for (VertexId i = 0; i < j; ++i) {
        PairState s = pair_state(perm[i], perm[j]);
        char digit = '0';
        if (s == Edge)
          digit = '1';
        else if (s != None)
          digit = has_arrow(perm[i], perm[j]) ? '2' : '3';
        key += digit;
      }
    if (best.empty() || key < best)
      best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

bool Digraph::isomorphic_to(const Digraph& other) const {
  if (size() != other.size())
    return false;
  return canonical_form() == other.canonical_form();
}

DynkinType dynkin_type(const CoxeterComponent& c) {
  std::size_t n = c.vertices.size();
  auto rank = static_cast<std::uint32_t>(n);
  if (n == 0)
    return {DynkinType::NotDynkin, 0};
  // Dynkin diagrams are trees.
  if (c.edges.size() != n - 1)
    return {DynkinType::NotDynkin, rank};
  std::vector<std::size_t> deg;
  deg.assign(n, 0);
  std::vector<int> pos(c.vertices.back() + 1, -1);
  for (std::size_t i = 0; i < n; ++i)
    pos[c.vertices[i]] = static_cast<int>(i);
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [u, v] : c.edges) {
    std::size_t a = pos[u], b = pos[v];
    ++deg[a];
    ++deg[b];
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // Connectivity is part of the component contract, but a disconnected
  // "component" with n-1 edges would contain a cycle; detect via BFS count.
  std::vector<bool> vis(n, false);
  std::vector<std::size_t> stack = {0};
  vis[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v])
      if (!vis[w]) {
        vis[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n)
    return {DynkinType::NotDynkin, rank};

  std::size_t forks = std::count_if(deg.begin(), deg.end(),
                                    [](std::size_t d) { return d >= 3; });
  if (std::any_of(deg.begin(), deg.end(),
                  [](std::size_t d) { return d >= 4; }) ||
      forks >= 2)
    return {DynkinType::NotDynkin, rank};
  if (forks == 0)
    return {DynkinType::A, rank};

  // One trivalent node: measure the three leg lengths.
  std::size_t center = 0;
  while (deg[center] != 3)
    ++center;
  std::vector<std::size_t> legs;
  for (std::size_t s : adj[center]) {
    std::size_t len = 1, prev = center, cur = s;
    while (deg[cur] == 2) {
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  if (legs[0] == 1 && legs[1] == 1)
    return {DynkinType::D, rank};
  if (legs[0] == 1 && legs[1] == 2 && legs[2] <= 4) {
    if (legs[2] == 2)
      return {DynkinType::E6, rank};
    if (legs[2] == 3)
      return {DynkinType::E7, rank};
    return {DynkinType::E8, rank};
  }
  return {DynkinType::NotDynkin, rank};
}

std::vector<Digraph> enumerate_digraphs(std::size_t n, bool up_to_iso,
                                        std::size_t max_n) {
  if (n > max_n)
    throw std::invalid_argument("enumerate_digraphs: n exceeds maximum " +
                                std::to_string(max_n));
  std::size_t pairs = n * (n - (n > 0)) / 2;
  std::vector<Digraph> out;
  std::vector<std::string> seen;
  std::vector<std::uint8_t> digits(pairs, 0);
  for (;;) {
    Digraph g(n);
    for (VertexId j = 1, ix = 0; j < n; ++j)
      for (VertexId i = 0; i < j; ++i, ++ix)
        switch (digits[ix]) {
          case 1: g.add_edge(i, j); break;
          case 2: g.add_arrow(i, j); break;
          case 3: g.add_arrow(j, i); break;
          default: break;
        }
    if (up_to_iso) {
      std::string key = g.canonical_form();
      if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
        seen.push_back(key);
        out.push_back(std::move(g));
      }
    } else {
      out.push_back(std::move(g));
    }
    std::size_t carry = 0;
    while (carry < pairs && ++digits[carry] == 4) {
      digits[carry] = 0;
      ++carry;
    }
    if (carry == pairs)
      break;
  }
  return out;
}

Digraph digraph_k() {
  return Digraph::parse("a -- b\nc -- d\na -> c\na -> d\nb -> c\nb -> d");
}

Digraph digraph_k_minus_bc() {
  return Digraph::parse("a -- b\nc -- d\na -> c\na -> d\nb -> d");
}

}  // namespace hk
