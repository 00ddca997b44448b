#include "hk/classify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>

#include "hk/automaton.hpp"
#include "hk/oracle.hpp"
#include "hk/presentation.hpp"

namespace hk {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > UINT64_MAX)
    throw std::overflow_error("cardinality product exceeds uint64");
  return static_cast<std::uint64_t>(p);
}

std::string components_summary(const std::vector<DynkinType>& types) {
  std::string out;
  for (std::size_t i = 0; i < types.size(); ++i)
    out += (i ? " " : "") + types[i].str();
  return out.empty() ? "(none)" : out;
}

std::uint64_t closure_nodes(std::size_t alphabet, std::size_t bound) {
  std::uint64_t total = 0, pow = 1;
  for (std::size_t l = 0; l <= bound; ++l) {
    total += pow;
    if (total > (1ull << 62))
      return total;
    pow *= alphabet;
  }
  return total;
}

// Growth counts and candidate power transcripts for an undecided verdict.
Evidence gather_evidence(const Digraph& target, const RewriteSystem& partial,
                         const ClassifyOptions& opts) {
  Evidence ev;
  ev.growth_digraph = target.to_text();
  ev.slack = opts.evidence_slack;

  std::vector<std::size_t> lengths = opts.evidence_lengths;
  std::sort(lengths.begin(), lengths.end());
  if (!lengths.empty() && target.size() >= 1) {
    while (!lengths.empty() &&
           closure_nodes(target.size(), lengths.back() + opts.evidence_slack) >
               opts.evidence_max_nodes) {
      bool shrunk = false;
      for (auto& l : lengths)
        if (l > 4) {
          l -= 2;
          shrunk = true;
        }
      if (!shrunk)
        lengths.pop_back();
      ev.note = "growth lengths shrunk to fit the closure node budget";
    }
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    if (!lengths.empty()) {
      Presentation p = build_presentation(target);
      OracleConfig cfg;
      cfg.report_len = lengths.back();
      cfg.slack = opts.evidence_slack;
      cfg.max_nodes = opts.evidence_max_nodes;
      CongruenceOracle oracle(target.size(), p.rules, cfg);
      for (std::size_t l : lengths)
        ev.growth.push_back({l, oracle.class_count(l)});
    }
  }

  // Candidate words of a two-A2 structure (Coxeter components {p,q} > {r,s}
  // with an edge inside each): p r q s and p s q r.
  auto comps = target.coxeter_components();
  if (comps.size() == 2 && comps[0].vertices.size() == 2 &&
      comps[1].vertices.size() == 2 && comps[0].edges.size() == 1 &&
      comps[1].edges.size() == 1) {
    auto order = target.component_order();
    if (order.ok && order.descending.size() == 2) {
      auto& tail = order.descending[0].vertices;
      auto& head = order.descending[1].vertices;
      Word w1{static_cast<Letter>(tail[0]), static_cast<Letter>(head[0]),
              static_cast<Letter>(tail[1]), static_cast<Letter>(head[1])};
      Word w2{static_cast<Letter>(tail[0]), static_cast<Letter>(head[1]),
              static_cast<Letter>(tail[1]), static_cast<Letter>(head[0])};
      for (const Word& w : {w1, w2})
        ev.powers.push_back({word_to_string(w, target.labels()),
                             power_profile(partial, w, opts.power_cap)});
    }
  }
  return ev;
}

Verdict decide_connected(const Digraph& q, const ClassifyOptions& opts);

Verdict decide_impl(const Digraph& q, const ClassifyOptions& opts) {
  Verdict v;
  if (q.size() == 0) {
    v.kind = VerdictKind::Finite;
    v.cardinality = 1;
    v.via.push_back("empty digraph: trivial monoid");
    return v;
  }

  auto comps = q.connected_components();
  if (comps.size() > 1) {
    v.via.push_back("split into " + std::to_string(comps.size()) +
                    " connected components; cardinalities multiply");
    std::uint64_t product = 1;
    bool any_undecided = false;
    for (const auto& cv : comps) {
      Verdict sub = decide_impl(q.induced(cv), opts);
      for (const std::string& s : sub.via)
        v.via.push_back("  [" + q.label(cv[0]) + "-component] " + s);
      if (sub.kind == VerdictKind::Infinite) {
        v.kind = VerdictKind::Infinite;
        v.cycle = sub.cycle;
        v.non_dynkin = sub.non_dynkin;
        v.automaton_cycle = sub.automaton_cycle;
        v.completion = sub.completion;
        return v;
      }
      if (sub.kind == VerdictKind::Undecided) {
        any_undecided = true;
        if (!v.evidence)
          v.evidence = sub.evidence;
      } else {
        product = checked_mul(product, sub.cardinality);
      }
    }
    if (any_undecided) {
      v.kind = VerdictKind::Undecided;
      return v;
    }
    v.kind = VerdictKind::Finite;
    v.cardinality = product;
    return v;
  }
  return decide_connected(q, opts);
}

Verdict decide_connected(const Digraph& q, const ClassifyOptions& opts) {
  Verdict v;

  NecessaryConditions nc = necessary_conditions(q);
  if (!nc.acyclic) {
    v.kind = VerdictKind::Infinite;
    CycleCertificate c;
    for (VertexId x : *nc.cycle)
      c.vertices.push_back(q.label(x));
    v.cycle = std::move(c);
    v.via.push_back("contains a cycle: infinite (oriented-cycle witness)");
    return v;
  }
  v.via.push_back("acyclic");
  if (!nc.all_dynkin) {
    v.kind = VerdictKind::Infinite;
    NonDynkinCertificate c;
    std::string members;
    for (VertexId x : q.coxeter_components()[nc.failing_component].vertices) {
      members += (members.empty() ? "" : ",") + q.label(x);
      c.vertices.push_back(q.label(x));
    }
    v.non_dynkin = std::move(c);
    v.via.push_back("Coxeter component {" + members +
                    "} is not a Dynkin diagram: infinite");
    return v;
  }
  v.via.push_back("Coxeter components: " +
                  components_summary(nc.component_types));

  Reduction red = reduce(q);
  for (const std::string& s : red.log)
    v.via.push_back(s);
  if (q.edge_count() == 0)
    v.via.push_back("arrow-only acyclic digraph (Kiselman quotient)");

  auto [rs, report] = knuth_bendix(build_presentation(q), opts.caps);
  v.completion = report;
  if (report.converged) {
    v.via.push_back("completion converged: " +
                    std::to_string(report.rule_count) + " rules");
    auto nfa = NormalFormAutomaton::build(rs);
    auto count = nfa.count_language();
    if (auto* fin = std::get_if<std::uint64_t>(&count)) {
      v.kind = VerdictKind::Finite;
      v.cardinality = *fin;
      v.via.push_back("normal-form language finite: " + std::to_string(*fin) +
                      " elements");
    } else {
      auto& inf = std::get<NormalFormAutomaton::Infinite>(count);
      v.kind = VerdictKind::Infinite;
      AutomatonCertificate c;
      c.digraph_text = q.to_text();
      c.stem = word_to_string(inf.stem, q.labels());
      c.cycle = word_to_string(inf.cycle, q.labels());
      v.via.push_back("normal-form language infinite: pumpable cycle " +
                      c.cycle + " after stem " + c.stem);
      v.automaton_cycle = std::move(c);
    }
    return v;
  }

  v.via.push_back("completion hit cap '" + report.cap_fired + "' after " +
                  std::to_string(report.pairs_examined) + " critical pairs");

  // The reduced digraph is finiteness-equivalent and often smaller; its
  // converged system settles the category (though not the cardinality).
  RewriteSystem evidence_system = rs;
  Digraph target = q;
  if (red.result.size() > 0 && red.result.size() < q.size()) {
    auto [rs2, report2] = knuth_bendix(build_presentation(red.result),
                                       opts.caps);
    target = red.result;
    evidence_system = rs2;
    if (report2.converged) {
      auto nfa2 = NormalFormAutomaton::build(rs2);
      auto count2 = nfa2.count_language();
      if (auto* inf = std::get_if<NormalFormAutomaton::Infinite>(&count2)) {
        v.kind = VerdictKind::Infinite;
        AutomatonCertificate c;
        c.digraph_text = red.result.to_text();
        c.stem = word_to_string(inf->stem, red.result.labels());
        c.cycle = word_to_string(inf->cycle, red.result.labels());
        v.automaton_cycle = std::move(c);
        v.via.push_back(
            "source/sink-reduced digraph completed with an infinite "
            "language; infinite by the source/sink equivalence");
        return v;
      }
      // Reduced digraph is finite, so q is of finite type; retry q once
      // with larger caps to recover the exact cardinality.
      Caps big = opts.caps;
      big.max_rules *= 4;
      big.max_pairs *= 4;
      auto [rs3, report3] = knuth_bendix(build_presentation(q), big);
      if (report3.converged) {
        auto count3 = NormalFormAutomaton::build(rs3).count_language();
        if (auto* fin = std::get_if<std::uint64_t>(&count3)) {
          v.kind = VerdictKind::Finite;
          v.cardinality = *fin;
          v.completion = report3;
          v.via.push_back(
              "retry with quadrupled caps converged; language finite: " +
              std::to_string(*fin) + " elements");
          return v;
        }
      }
      v.via.push_back(
          "reduced digraph is finite (" +
          std::to_string(std::get<std::uint64_t>(count2)) +
          " elements) so the digraph is of finite type, but its exact "
          "cardinality was not computed within caps");
    }
  }

  v.kind = VerdictKind::Undecided;
  v.evidence = gather_evidence(target, evidence_system, opts);
  return v;
}

std::size_t worker_count(const ClassifyOptions& opts) {
  if (opts.threads > 0)
    return opts.threads;
  if (const char* env = std::getenv("HK_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n >= 1)
      return static_cast<std::size_t>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Finite: return "finite";
    case VerdictKind::Infinite: return "infinite";
    default: return "undecided";
  }
}

NecessaryConditions necessary_conditions(const Digraph& q) {
  NecessaryConditions out;
  out.cycle = q.find_cycle();
  out.acyclic = !out.cycle.has_value();
  out.all_dynkin = true;
  auto comps = q.coxeter_components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    out.component_types.push_back(dynkin_type(comps[i]));
    if (!out.component_types.back().is_dynkin() && out.all_dynkin) {
      out.all_dynkin = false;
      out.failing_component = i;
    }
  }
  return out;
}

Reduction reduce(const Digraph& q) {
  Reduction out;
  out.result = q;
  for (;;) {
    auto sources = out.result.sources();
    auto sinks = out.result.sinks();
    VertexId victim;
    if (!sources.empty()) {
      victim = sources.front();
      out.log.push_back("removed source " + out.result.label(victim));
    } else if (!sinks.empty()) {
      victim = sinks.front();
      out.log.push_back("removed sink " + out.result.label(victim));
    } else {
      break;
    }
    out.result = out.result.remove_vertex(victim);
    if (out.result.size() == 0)
      break;
  }
  return out;
}

Verdict decide_finite(const Digraph& q, const ClassifyOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v = decide_impl(q, opts);
  v.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                 std::chrono::steady_clock::now() - t0)
                 .count();
  return v;
}

nlohmann::json Verdict::to_json() const {
  nlohmann::json j;
  j["kind"] = hk::to_string(kind);
  if (kind == VerdictKind::Finite)
    j["cardinality"] = cardinality;
  j["via"] = via;
  if (cycle) {
    j["certificate"]["type"] = "digraph-cycle";
    j["certificate"]["vertices"] = cycle->vertices;
  } else if (non_dynkin) {
    j["certificate"]["type"] = "non-dynkin-component";
    j["certificate"]["vertices"] = non_dynkin->vertices;
  } else if (automaton_cycle) {
    j["certificate"]["type"] = "automaton-cycle";
    j["certificate"]["digraph"] = automaton_cycle->digraph_text;
    j["certificate"]["stem"] = automaton_cycle->stem;
    j["certificate"]["cycle"] = automaton_cycle->cycle;
  }
  if (evidence) {
    nlohmann::json e;
    nlohmann::json growth = nlohmann::json::array();
    for (const GrowthPoint& g : evidence->growth) {
      nlohmann::json p;
      p["length"] = g.length;
      p["classes"] = g.classes;
      growth.push_back(p);
    }
    e["growth"] = growth;
    e["slack"] = evidence->slack;
    e["digraph"] = evidence->growth_digraph;
    nlohmann::json powers = nlohmann::json::array();
    for (const auto& [word, prof] : evidence->powers) {
      nlohmann::json p;
      p["word"] = word;
      p["finite"] = prof.finite;
      if (prof.finite) {
        p["index"] = prof.index;
        p["period"] = prof.period;
      } else {
        p["distinct_up_to"] = prof.cap;
      }
      powers.push_back(p);
    }
    e["powers"] = powers;
    if (!evidence->note.empty())
      e["note"] = evidence->note;
    j["evidence"] = e;
  }
  if (completion.iterations > 0) {
    j["completion"]["converged"] = completion.converged;
    j["completion"]["rules"] = completion.rule_count;
    j["completion"]["pairs_examined"] = completion.pairs_examined;
    if (!completion.cap_fired.empty())
      j["completion"]["cap_fired"] = completion.cap_fired;
  }
  j["micros"] = micros;
  return j;
}

std::string Verdict::str() const {
  std::string out = hk::to_string(kind);
  if (kind == VerdictKind::Finite)
    out += " (" + std::to_string(cardinality) + " elements)";
  for (const std::string& s : via)
    out += "\n  - " + s;
  if (evidence) {
    for (const GrowthPoint& g : evidence->growth)
      out += "\n  evidence: " + std::to_string(g.classes) +
             " classes at length " + std::to_string(g.length);
    for (const auto& [word, prof] : evidence->powers)
      out += "\n  evidence: powers of " + word + ": " +
             (prof.finite ? "index " + std::to_string(prof.index) +
                                ", period " + std::to_string(prof.period)
                          : "distinct up to " + std::to_string(prof.cap));
  }
  return out;
}

ClassificationReport classify_all(std::size_t max_vertices,
                                  const ClassifyOptions& opts) {
  if (max_vertices > opts.max_vertices_cap)
    throw std::invalid_argument("classify_all: max_vertices exceeds cap " +
                                std::to_string(opts.max_vertices_cap));
  ClassificationReport report;
  report.max_vertices = max_vertices;
  report.labeled_mode = opts.labeled;
  report.caps = opts.caps;

  // Group all labeled digraphs by canonical form, keeping first
  // representatives and labeled counts.
  struct ClassWork {
    std::size_t n;
    std::string key;
    Digraph rep;
    std::size_t labeled_count = 0;
  };
  std::vector<ClassWork> classes;
  std::map<std::string, std::size_t> index;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    for (Digraph& g : enumerate_digraphs(n, false, opts.max_vertices_cap)) {
      std::string key = g.canonical_form();
      auto it = index.find(key);
      if (it == index.end()) {
        index.emplace(key, classes.size());
        classes.push_back({n, key, std::move(g), 1});
      } else {
        ++classes[it->second].labeled_count;
      }
    }
  }

  // Decide every class; work is pulled from an atomic counter so the result
  // layout does not depend on the worker count.
  std::vector<Verdict> verdicts(classes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= classes.size())
        return;
      verdicts[i] = decide_finite(classes[i].rep, opts);
    }
  };
  std::size_t workers = std::min(worker_count(opts), classes.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t)
      pool.emplace_back(work);
    for (auto& t : pool)
      t.join();
  }

  for (std::size_t i = 0; i < classes.size(); ++i) {
    ClassEntry e;
    e.n = classes[i].n;
    e.canonical_key = classes[i].key;
    e.representative_text = classes[i].rep.to_text();
    e.labeled_count = classes[i].labeled_count;
    e.verdict = verdicts[i];
    report.entries.push_back(std::move(e));
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const ClassEntry& a, const ClassEntry& b) {
              if (a.n != b.n)
                return a.n < b.n;
              return a.canonical_key < b.canonical_key;
            });

  if (opts.labeled) {
    // Expand to one entry per labeled digraph, re-using the class verdicts.
    std::vector<ClassEntry> expanded;
    std::map<std::string, const ClassEntry*> by_key;
    for (const ClassEntry& e : report.entries)
      by_key[e.canonical_key] = &e;
    for (std::size_t n = 1; n <= max_vertices; ++n)
      for (const Digraph& g :
           enumerate_digraphs(n, false, opts.max_vertices_cap)) {
        const ClassEntry* cls = by_key[g.canonical_form()];
        ClassEntry e = *cls;
        e.representative_text = g.to_text();
        e.labeled_count = 1;
        expanded.push_back(std::move(e));
      }
    report.entries = std::move(expanded);
  }
  return report;
}

nlohmann::json ClassificationReport::to_json() const {
  nlohmann::json j;
  j["max_vertices"] = max_vertices;
  j["labeled_mode"] = labeled_mode;
  j["caps"]["max_rules"] = caps.max_rules;
  j["caps"]["max_lhs_len"] = caps.max_lhs_len;
  j["caps"]["max_pairs"] = caps.max_pairs;

  nlohmann::json jentries = nlohmann::json::array();
  std::uint64_t finite = 0, infinite = 0, undecided = 0;
  nlohmann::json undecided_keys = nlohmann::json::array();
  std::map<std::size_t, std::uint64_t> per_n;
  for (const ClassEntry& e : entries) {
    nlohmann::json je;
    je["n"] = e.n;
    je["canonical_key"] = e.canonical_key;
    je["representative"] = e.representative_text;
    je["labeled_count"] = e.labeled_count;
    je["verdict"] = e.verdict.to_json();
    jentries.push_back(je);
    switch (e.verdict.kind) {
      case VerdictKind::Finite: ++finite; break;
      case VerdictKind::Infinite: ++infinite; break;
      default:
        ++undecided;
        undecided_keys.push_back(e.canonical_key);
        break;
    }
    ++per_n[e.n];
  }
  j["classes"] = jentries;
  j["summary"]["total"] = entries.size();
  j["summary"]["finite"] = finite;
  j["summary"]["infinite"] = infinite;
  j["summary"]["undecided"] = undecided;
  j["summary"]["undecided_keys"] = undecided_keys;
  nlohmann::json per;
  for (auto [n, count] : per_n)
    per[std::to_string(n)] = count;
  j["summary"]["per_vertex_count"] = per;
  return j;
}

std::string ClassificationReport::summary_text() const {
  std::uint64_t finite = 0, infinite = 0, undecided = 0;
  std::string undecided_list;
  for (const ClassEntry& e : entries) {
    switch (e.verdict.kind) {
      case VerdictKind::Finite: ++finite; break;
      case VerdictKind::Infinite: ++infinite; break;
      default:
        ++undecided;
        undecided_list += "  UNDECIDED: n=" + std::to_string(e.n) + " key " +
                          e.canonical_key + "\n";
        break;
    }
  }
  std::string out = (labeled_mode ? std::string("labeled digraphs: ")
                                  : std::string("isomorphism classes: ")) +
                    std::to_string(entries.size()) + "\n";
  out += "finite: " + std::to_string(finite) +
         ", infinite: " + std::to_string(infinite) +
         ", undecided: " + std::to_string(undecided) + "\n";
  out += undecided_list;
  return out;
}

}  // namespace hk
