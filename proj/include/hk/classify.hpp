#ifndef HK_CLASSIFY_HPP_
#define HK_CLASSIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hk/digraph.hpp"
#include "hk/monoid.hpp"
#include "hk/rewrite.hpp"
#include "json.hpp"

namespace hk {

// Options threaded through the finiteness pipeline.
struct ClassifyOptions {
  Caps caps;
  std::size_t power_cap = 64;
  // Bounded-closure growth evidence for undecided verdicts; lengths shrink
  // in steps of 2 until the closure domain fits the node budget.
  std::vector<std::size_t> evidence_lengths = {8, 10, 12};
  std::size_t evidence_slack = 2;
  std::uint64_t evidence_max_nodes = 450'000'000;
  std::size_t threads = 0;  // 0: HK_THREADS env, else hardware concurrency
  bool labeled = false;     // report per labeled digraph instead of per class
  std::size_t max_vertices_cap = 5;
};

enum class VerdictKind { Finite, Infinite, Undecided };

std::string to_string(VerdictKind k);

// Certificates are stored with vertex labels / rendered words so they stay
// meaningful independent of internal indices.
struct CycleCertificate {
  std::vector<std::string> vertices;  // cyclic order
};

struct NonDynkinCertificate {
  std::vector<std::string> vertices;  // the offending Coxeter component
};

struct AutomatonCertificate {
  std::string digraph_text;  // digraph whose completed system is meant
  std::string stem;          // rendered words over that digraph's labels
  std::string cycle;
};

struct GrowthPoint {
  std::size_t length;
  std::uint64_t classes;
};

struct Evidence {
  std::vector<GrowthPoint> growth;
  std::size_t slack = 0;
  std::string growth_digraph;  // text of the digraph the closure ran on
  // (word, profile) pairs for the candidate words of a two-A2 structure
  std::vector<std::pair<std::string, PowerProfile>> powers;
  std::string note;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Undecided;
  std::uint64_t cardinality = 0;  // valid when kind == Finite
  std::vector<std::string> via;   // reason chain, in pipeline order
  std::optional<CycleCertificate> cycle;
  std::optional<NonDynkinCertificate> non_dynkin;
  std::optional<AutomatonCertificate> automaton_cycle;
  std::optional<Evidence> evidence;
  CompletionReport completion;  // stats of the completion run, when any
  std::int64_t micros = 0;

  nlohmann::json to_json() const;
  std::string str() const;
};

// Necessary conditions for finiteness: acyclicity and Dynkin components.
struct NecessaryConditions {
  bool acyclic = false;
  std::optional<std::vector<VertexId>> cycle;
  bool all_dynkin = false;
  std::vector<DynkinType> component_types;
  std::size_t failing_component = static_cast<std::size_t>(-1);
};
NecessaryConditions necessary_conditions(const Digraph& q);

// Source/sink peeling; finiteness-equivalent to the input.
struct Reduction {
  Digraph result;
  std::vector<std::string> log;
};
Reduction reduce(const Digraph& q);

Verdict decide_finite(const Digraph& q, const ClassifyOptions& opts = {});

struct ClassEntry {
  std::size_t n = 0;
  std::string canonical_key;
  std::string representative_text;
  std::size_t labeled_count = 0;
  Verdict verdict;
};

struct ClassificationReport {
  std::size_t max_vertices = 0;
  bool labeled_mode = false;
  Caps caps;
  std::vector<ClassEntry> entries;  // sorted by (n, canonical key)

  nlohmann::json to_json() const;
  std::string summary_text() const;
};

// Decides every digraph with 1..max_vertices vertices, grouped by canonical
// form unless labeled mode is requested (decisions are cached per class
// either way). Workers run concurrently; output order is deterministic.
ClassificationReport classify_all(std::size_t max_vertices,
                                  const ClassifyOptions& opts = {});

}  // namespace hk

#endif  // HK_CLASSIFY_HPP_
