// Command-line front end: structural analysis, finiteness decisions, Cayley
// table export, power profiles, infinitude witnesses and the exhaustive
// small-digraph classification.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hk/affine.hpp"
#include "hk/automaton.hpp"
#include "hk/classify.hpp"
#include "hk/kdecomp.hpp"
#include "hk/monoid.hpp"
#include "hk/presentation.hpp"
#include "hk/rewrite.hpp"
#include "json.hpp"

namespace {

constexpr int kExitFinite = 0;
constexpr int kExitError = 1;
constexpr int kExitInfinite = 10;
constexpr int kExitUndecided = 20;

struct CommonOpts {
  std::string format = "text";
  std::string out_path;
  hk::ClassifyOptions classify;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--caps-rules", o.classify.caps.max_rules,
                  "completion cap: maximum active rules");
  cmd->add_option("--caps-lhs-len", o.classify.caps.max_lhs_len,
                  "completion cap: maximum lhs length");
  cmd->add_option("--caps-pairs", o.classify.caps.max_pairs,
                  "completion cap: maximum critical pairs examined");
  cmd->add_option("--power-cap", o.classify.power_cap,
                  "maximum exponent examined by power profiles");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", o.out_path, "write output to this file");
}

void emit(const CommonOpts& o, const std::string& payload) {
  if (o.out_path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n')
      std::cout << '\n';
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f)
    throw std::runtime_error("cannot open output file: " + o.out_path);
  f << payload;
}

hk::Digraph load_digraph(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw std::runtime_error("cannot open digraph file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return hk::Digraph::parse(ss.str());
}

int exit_code_for(hk::VerdictKind k) {
  switch (k) {
    case hk::VerdictKind::Finite: return kExitFinite;
    case hk::VerdictKind::Infinite: return kExitInfinite;
    default: return kExitUndecided;
  }
}

int cmd_analyze(const std::string& file, const CommonOpts& o) {
  hk::Digraph q = load_digraph(file);
  auto nc = hk::necessary_conditions(q);
  auto comps = q.coxeter_components();
  auto order = q.component_order();

  auto comp_label = [&](const hk::CoxeterComponent& c) {
    std::string s = "{";
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
      s += (i ? "," : "") + q.label(c.vertices[i]);
    return s + "}";
  };

  if (o.format == "json") {
    nlohmann::json j;
    j["vertices"] = q.labels();
    j["acyclic"] = nc.acyclic;
    if (nc.cycle) {
      nlohmann::json cyc = nlohmann::json::array();
      for (hk::VertexId v : *nc.cycle)
        cyc.push_back(q.label(v));
      j["cycle"] = cyc;
    }
    nlohmann::json jc = nlohmann::json::array();
    for (std::size_t i = 0; i < comps.size(); ++i) {
      nlohmann::json c;
      nlohmann::json verts = nlohmann::json::array();
      for (hk::VertexId v : comps[i].vertices)
        verts.push_back(q.label(v));
      c["vertices"] = verts;
      c["dynkin_type"] = nc.component_types[i].str();
      jc.push_back(c);
    }
    j["coxeter_components"] = jc;
    j["all_components_dynkin"] = nc.all_dynkin;
    nlohmann::json src = nlohmann::json::array(), snk = nlohmann::json::array();
    for (hk::VertexId v : q.sources())
      src.push_back(q.label(v));
    for (hk::VertexId v : q.sinks())
      snk.push_back(q.label(v));
    j["sources"] = src;
    j["sinks"] = snk;
    if (order.ok) {
      nlohmann::json jo = nlohmann::json::array();
      for (const auto& c : order.descending)
        jo.push_back(comp_label(c));
      j["component_order_descending"] = jo;
    }
    emit(o, j.dump(2));
    return 0;
  }

  std::string out;
  out += "vertices: " + std::to_string(q.size()) + "\n";
  out += nc.acyclic ? "acyclic: yes\n" : "acyclic: no\n";
  if (nc.cycle) {
    out += "cycle found:";
    for (hk::VertexId v : *nc.cycle)
      out += " " + q.label(v);
    out += "\n";
  }
  out += "coxeter components:";
  for (std::size_t i = 0; i < comps.size(); ++i)
    out += " " + comp_label(comps[i]) + ":" + nc.component_types[i].str();
  out += "\n";
  out += "all components Dynkin: ";
  out += nc.all_dynkin ? "yes\n" : "no\n";
  out += "sources:";
  for (hk::VertexId v : q.sources())
    out += " " + q.label(v);
  out += "\nsinks:";
  for (hk::VertexId v : q.sinks())
    out += " " + q.label(v);
  out += "\n";
  if (order.ok) {
    out += "component order:";
    for (std::size_t i = 0; i < order.descending.size(); ++i)
      out += (i ? " > " : " ") + comp_label(order.descending[i]);
    out += "\n";
  } else if (!comps.empty()) {
    out += "component order: none (cyclic component relation)\n";
  }
  emit(o, out);
  return 0;
}

int cmd_decide(const std::string& file, const CommonOpts& o) {
  hk::Digraph q = load_digraph(file);
  hk::Verdict v = hk::decide_finite(q, o.classify);
  if (o.format == "json")
    emit(o, v.to_json().dump(2));
  else
    emit(o, v.str() + "\n");
  return exit_code_for(v.kind);
}

int cmd_enumerate(const std::string& file, const CommonOpts& o) {
  hk::Digraph q = load_digraph(file);
  auto [rs, rep] = hk::knuth_bendix(hk::build_presentation(q),
                                    o.classify.caps);
  if (!rep.converged) {
    std::cerr << "enumerate: completion did not converge within caps\n";
    return kExitUndecided;
  }
  auto count = hk::NormalFormAutomaton::build(rs).count_language();
  if (std::holds_alternative<hk::NormalFormAutomaton::Infinite>(count)) {
    std::cerr << "enumerate: monoid is infinite\n";
    return kExitInfinite;
  }
  auto table = hk::MonoidTable::enumerate_elements(rs);
  emit(o, o.format == "json" ? table.to_json(q.labels())
                             : table.to_csv(q.labels()));
  return kExitFinite;
}

int cmd_power(const std::string& file, const std::string& word,
              const CommonOpts& o) {
  hk::Digraph q = load_digraph(file);
  auto [rs, rep] = hk::knuth_bendix(hk::build_presentation(q),
                                    o.classify.caps);
  hk::Word x = hk::parse_word(word, q.labels());
  hk::PowerProfile p = hk::power_profile(rs, x, o.classify.power_cap);
  if (o.format == "json") {
    nlohmann::json j;
    j["word"] = word;
    j["system_converged"] = rep.converged;
    j["finite"] = p.finite;
    if (p.finite) {
      j["index"] = p.index;
      j["period"] = p.period;
    } else {
      j["distinct_up_to"] = p.cap;
    }
    emit(o, j.dump(2));
  } else {
    emit(o, p.str(q.labels()) + "\n");
  }
  return 0;
}

int cmd_witness(std::size_t n, std::size_t power_k, const CommonOpts& o) {
  emit(o, hk::cycle_witness_certificate(n, power_k));
  return 0;
}

int cmd_decompose_k(const std::string& word, const CommonOpts& o) {
  hk::KDecomposer dec(o.classify.caps);
  hk::Word w = hk::parse_word(word, dec.digraph().labels());
  hk::KDecomposition d = dec.decompose(w);
  const auto& labels = dec.digraph().labels();
  if (o.format == "json") {
    nlohmann::json j;
    j["input"] = word;
    j["prefix"] = hk::word_to_string(d.prefix, labels);
    j["pattern"] = hk::word_to_string(d.pattern, labels);
    j["exponent"] = d.exponent;
    j["suffix"] = hk::word_to_string(d.suffix, labels);
    j["bounds_ok"] = d.bounds_ok;
    j["verified"] = d.verified;
    j["note"] = d.note;
    emit(o, j.dump(2));
  } else {
    emit(o, d.str(labels) + (d.verified ? " [verified]" : " [UNVERIFIED]") +
                "\n");
  }
  return d.verified && d.bounds_ok ? 0 : 1;
}

int cmd_classify(std::size_t max_vertices, const CommonOpts& o) {
  hk::ClassificationReport report = hk::classify_all(max_vertices, o.classify);
  if (o.format == "json")
    emit(o, report.to_json().dump(2));
  else
    emit(o, report.summary_text());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finiteness analysis of digraph monoids"};
  app.require_subcommand(1);
  CommonOpts o;

  std::string file, word;
  std::size_t cycle_n = 3, max_vertices = 3, power_k = 50;

  auto* analyze = app.add_subcommand("analyze", "structural report");
  analyze->add_option("file", file)->required();
  add_common(analyze, o);

  auto* decide = app.add_subcommand("decide", "finiteness verdict");
  decide->add_option("file", file)->required();
  add_common(decide, o);

  auto* enumerate = app.add_subcommand("enumerate", "Cayley table export");
  enumerate->add_option("file", file)->required();
  add_common(enumerate, o);

  auto* power = app.add_subcommand("power", "power profile of a word");
  power->add_option("file", file)->required();
  power->add_option("word", word)->required();
  add_common(power, o);

  auto* witness =
      app.add_subcommand("witness", "oriented-cycle infinitude certificate");
  witness->add_option("--cycle", cycle_n, "cycle length")->required();
  witness->add_option("--powers", power_k, "powers checked for distinctness");
  add_common(witness, o);

  auto* decomp = app.add_subcommand("decompose-k",
                                    "central-power decomposition over K");
  decomp->add_option("word", word)->required();
  add_common(decomp, o);

  auto* classify =
      app.add_subcommand("classify", "classify all small digraphs");
  classify->add_option("--max-vertices", max_vertices)->required();
  classify->add_flag("--labeled", o.classify.labeled,
                     "report every labeled digraph (no isomorphism grouping)");
  add_common(classify, o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed())
      return cmd_analyze(file, o);
    if (decide->parsed())
      return cmd_decide(file, o);
    if (enumerate->parsed())
      return cmd_enumerate(file, o);
    if (power->parsed())
      return cmd_power(file, word, o);
    if (witness->parsed())
      return cmd_witness(cycle_n, power_k, o);
    if (decomp->parsed())
      return cmd_decompose_k(word, o);
    if (classify->parsed())
      return cmd_classify(max_vertices, o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
