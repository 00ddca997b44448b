#ifndef HK_DIGRAPH_HPP_
#define HK_DIGRAPH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hk {

// A mixed digraph: at most one side per unordered vertex pair, each side
// either an undirected edge or a directed arrow. No self-loops. Vertices are
// 0-based contiguous indices carrying display labels. Values are immutable
// after construction; every operation returns a new digraph.

using VertexId = std::uint32_t;

enum class SideKind : std::uint8_t { Edge, Arrow };

struct Side {
  SideKind kind;
  VertexId from;  // for an Edge, from < to; for an Arrow, the tail
  VertexId to;
};

struct CoxeterComponent {
  std::vector<VertexId> vertices;                      // ascending
  std::vector<std::pair<VertexId, VertexId>> edges;    // lo < hi, sorted
};

// Simply laced diagram recognition result.
struct DynkinType {
  enum Family : std::uint8_t { A, D, E6, E7, E8, NotDynkin };
  Family family = NotDynkin;
  std::uint32_t rank = 0;  // vertex count for A_n / D_n / E_n

  bool is_dynkin() const { return family != NotDynkin; }
  std::string str() const;
  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

class Digraph {
 public:
  // Internal pair state, also the digit used by canonical encodings:
  // 0 none, 1 edge, 2 arrow lo->hi, 3 arrow hi->lo.
  enum PairState : std::uint8_t { None = 0, Edge = 1, LoHi = 2, HiLo = 3 };

  Digraph() = default;
  explicit Digraph(std::size_t n, std::vector<std::string> labels = {});

  static Digraph parse(std::string_view text);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_.at(v); }
  std::optional<VertexId> vertex_by_label(std::string_view label) const;

  PairState pair_state(VertexId u, VertexId v) const;
  bool connected_pair(VertexId u, VertexId v) const {
    return pair_state(u, v) != None;
  }
  bool has_edge(VertexId u, VertexId v) const {
    return pair_state(u, v) == Edge;
  }
  bool has_arrow(VertexId from, VertexId to) const;

  std::vector<Side> sides() const;
  std::size_t edge_count() const;
  std::size_t arrow_count() const;

  // Mutating construction helpers; throw on duplicate side or self-loop.
  void add_edge(VertexId u, VertexId v);
  void add_arrow(VertexId from, VertexId to);

  // -- transformations ------------------------------------------------------
  Digraph opposite() const;
  Digraph remove_vertex(VertexId v) const;
  Digraph orient_edge(VertexId from, VertexId to) const;
  Digraph remove_arrow(VertexId u, VertexId v) const;
  Digraph induced(const std::vector<VertexId>& vertices) const;

  // -- structure ------------------------------------------------------------
  // A cycle is a sequence of n >= 3 pairwise distinct vertices with an edge
  // or a forward arrow from each one to the next, cyclically. Returns the
  // witness sequence when one exists.
  std::optional<std::vector<VertexId>> find_cycle() const;
  bool has_cycle() const { return find_cycle().has_value(); }

  // Re-checks a witness against the cycle definition (test hook).
  bool is_cycle(const std::vector<VertexId>& seq) const;

  std::vector<CoxeterComponent> coxeter_components() const;

  // Components of the underlying mixed graph (edges and arrows alike).
  std::vector<std::vector<VertexId>> connected_components() const;

  std::vector<VertexId> sources() const;
  std::vector<VertexId> sinks() const;

  // Total order on Coxeter components with every arrow crossing from a
  // higher component to a strictly lower one (highest first). On failure
  // returns the offending component-level cycle instead.
  struct ComponentOrder {
    bool ok = false;
    std::vector<CoxeterComponent> descending;
    std::vector<std::size_t> cycle_witness;  // component indices, cyclic
  };
  ComponentOrder component_order() const;

  // -- isomorphism ----------------------------------------------------------
  // Minimum pair-state encoding over all vertex permutations, prefixed with
  // the vertex count. Equal keys iff isomorphic. Brute force; fine for n<=8.
  std::string canonical_form() const;
  bool isomorphic_to(const Digraph& other) const;

  std::string to_text() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  static std::size_t pair_index(VertexId u, VertexId v);
  void set_pair(VertexId u, VertexId v, PairState s, int line = -1);

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> pairs_;  // triangular, pair_index order
};

DynkinType dynkin_type(const CoxeterComponent& c);

// All 4^(n choose 2) labeled digraphs on n vertices in deterministic order
// (pair digits as a base-4 counter, least significant pair first). Labels are
// a, b, c, ... With up_to_iso, only the first representative of each
// isomorphism class is kept.
std::vector<Digraph> enumerate_digraphs(std::size_t n, bool up_to_iso = false,
                                        std::size_t max_n = 5);

// The two standard four-vertex examples used throughout: edges a-b and c-d,
// with every arrow from {a,b} to {c,d} (digraph_k), resp. all but b->c
// (digraph_k_minus_bc).
Digraph digraph_k();
Digraph digraph_k_minus_bc();

}  // namespace hk

#endif  // HK_DIGRAPH_HPP_
