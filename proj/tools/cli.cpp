#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "strdiag/error.hpp"
#include "strdiag/io.hpp"
#include "strdiag/nbtheory.hpp"
#include "strdiag/prove.hpp"
#include "strdiag/random.hpp"
#include "strdiag/readback.hpp"

namespace strdiag::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kSeedVar = "DIAGRAM_REWRITER_SEED";

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

Theory load_theory(const std::string& path) { return parse_theory(read_file(path)); }

InterfacedGraph load_graph(const std::string& path) {
  return graph_from_json(read_file(path));
}

// A term given inline or as the name of a file holding one.
Term term_arg(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return parse_term(read_file(arg));
  return parse_term(arg);
}

Mode mode_arg(const std::string& text, Mode fallback) {
  if (text.empty()) return fallback;
  if (text == "smc") return Mode::Smc;
  if (text == "frobenius") return Mode::Frobenius;
  throw CLI::ValidationError("--mode", "expected smc or frobenius, got '" + text + "'");
}

std::vector<DpoRule> rules_for(Theory theory, Mode mode, const std::string& only) {
  theory.mode = mode;
  if (!only.empty()) {
    const RuleDecl* r = theory.find_rule(only);
    if (r == nullptr) {
      throw Error(Errc::RuleInvalid, "no rule named '" + only + "'");
    }
    RuleDecl keep = *r;
    theory.rules = {keep};
  }
  return compile_rules(theory);
}

bool is_nb(const Signature& sig) {
  const Signature nb = nb_signature();
  if (sig.generators().size() != nb.generators().size()) return false;
  for (const auto& g : nb.generators()) {
    const Generator* h = sig.find(g.name);
    if (h == nullptr || h->arity != g.arity || h->coarity != g.coarity) return false;
  }
  return true;
}

std::string edge_list(const std::vector<EdgeId>& ids) {
  std::string s = "[";
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(ids[k]);
  }
  return s + "]";
}

struct Args {
  std::string theory;
  std::string term;
  std::string graph;
  std::string graph2;
  std::string rule;
  std::string mode;
  std::string traceOut;
  std::string t1;
  std::string t2;
  bool frobenius = false;
  bool convex = false;
  bool all = false;
  std::size_t fuel = 0;
  std::size_t maxStates = 200000;
  std::uint64_t seed = 0;
  std::size_t edges = 4;
};

int cmd_check(const Args& a, std::ostream& out) {
  Theory th = load_theory(a.theory);
  compile_rules(th);
  out << "ok: theory " << (th.name.empty() ? "(unnamed)" : th.name) << ", "
      << th.signature.generators().size() << " generators, " << th.rules.size()
      << " rules, mode " << mode_name(th.mode) << "\n";
  return kOk;
}

int cmd_interp(const Args& a, std::ostream& out) {
  Theory th = load_theory(a.theory);
  Term t = term_arg(a.term);
  typecheck(t, th.signature, th.mode);
  out << graph_to_json(canonicalize(interpret(t, th.signature)));
  return kOk;
}

int cmd_readback(const Args& a, std::ostream& out, std::ostream& err) {
  Theory th = load_theory(a.theory);
  InterfacedGraph g = load_graph(a.graph);
  g.graph.validate(th.signature);
  if (a.frobenius) {
    out << to_string(readback_frobenius(g)) << "\n";
    return kOk;
  }
  if (!is_mda(g)) {
    err << "not monogamous acyclic; no plain term denotes this graph\n";
    return kNegative;
  }
  out << to_string(readback_mda(g)) << "\n";
  return kOk;
}

int cmd_match(const Args& a, std::ostream& out) {
  Theory th = load_theory(a.theory);
  if (th.find_rule(a.rule) == nullptr) {
    throw Error(Errc::RuleInvalid, "no rule named '" + a.rule + "'");
  }
  DpoRule rule = rules_for(th, th.mode, a.rule).front();
  InterfacedGraph g = load_graph(a.graph);
  g.graph.validate(th.signature);
  auto ms = find_matchings(rule, g, a.convex);
  out << ms.size() << (a.convex ? " convex" : "") << " matches\n";
  for (std::size_t k = 0; k < ms.size(); ++k) {
    out << "match " << k << ": edges=" << edge_list(ms[k].edgeMap)
        << " nodes=" << edge_list(ms[k].nodeMap)
        << " convex=" << (is_convex(g.graph, image_of(ms[k])) ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_rewrite(const Args& a, std::ostream& out, std::ostream& err) {
  Theory th = load_theory(a.theory);
  const Mode mode = mode_arg(a.mode, th.mode);
  auto rules = rules_for(th, mode, a.rule);
  InterfacedGraph g = load_graph(a.graph);
  g.graph.validate(th.signature);
  if (!a.all) {
    RewriteOptions opt;
    opt.mode = mode;
    auto rec = rewrite_once(g, rules, opt);
    if (!rec) {
      err << "no step applies\n";
      return kNegative;
    }
    err << trace_line(0, *rec) << "\n";
    out << graph_to_json(rec->after);
    return kOk;
  }
  auto steps = all_steps(g, rules, mode);
  auto outcomes = distinct_outcomes(steps);
  ordered_json doc;
  doc["steps"] = ordered_json::array();
  for (const auto& s : steps) {
    std::size_t idx = 0;
    while (!iso_cospan(outcomes[idx], s.after)) ++idx;
    doc["steps"].push_back({{"rule", s.ruleName},
                            {"match", s.matching.edgeMap},
                            {"nodes", s.matching.nodeMap},
                            {"outcome", idx}});
  }
  doc["outcomes"] = ordered_json::array();
  for (const auto& o : outcomes) doc["outcomes"].push_back(ordered_json::parse(graph_to_json(o)));
  out << doc.dump(2) << "\n";
  err << outcomes.size() << " outcomes from " << steps.size() << " steps\n";
  return kOk;
}

int cmd_normalize(const Args& a, std::ostream& out, std::ostream& err) {
  Theory th = load_theory(a.theory);
  const Mode mode = mode_arg(a.mode, th.mode);
  auto rules = rules_for(th, mode, "");
  InterfacedGraph g = load_graph(a.graph);
  g.graph.validate(th.signature);
  RewriteOptions opt;
  opt.mode = mode;
  if (mode == Mode::Smc && is_nb(th.signature)) opt.measure = metric;
  NormalizeResult res = normalize(g, rules, a.fuel, opt);
  for (std::size_t k = 0; k < res.trace.size(); ++k) {
    err << trace_line(k, res.trace[k]) << "\n";
  }
  if (!a.traceOut.empty()) write_file(a.traceOut, trace_to_json(res.trace));
  out << graph_to_json(res.result);
  if (res.status == NormalizeStatus::FuelExhausted) {
    err << "fuel exhausted after " << res.trace.size() << " steps\n";
    return kInconclusive;
  }
  err << "normal form after " << res.trace.size() << " steps\n";
  return kOk;
}

int cmd_metric(const Args& a, std::ostream& out) {
  InterfacedGraph g = load_graph(a.graph);
  g.graph.validate(nb_signature());
  out << to_string(metric(g)) << "\n";
  return kOk;
}

int cmd_prove(const Args& a, std::ostream& out, std::ostream& err) {
  Theory th = load_theory(a.theory);
  ProveOptions opt;
  opt.fuel = a.fuel;
  opt.maxStates = a.maxStates;
  auto trace = prove_equal(term_arg(a.t1), term_arg(a.t2), th, opt);
  if (!trace) {
    err << "inconclusive within fuel " << a.fuel << "\n";
    return kInconclusive;
  }
  for (std::size_t k = 0; k < trace->size(); ++k) {
    out << "step " << k << ": rule=" << (*trace)[k].ruleName << "\n";
  }
  out << "proved in " << trace->size() << " steps\n";
  return kOk;
}

int cmd_iso(const Args& a, std::ostream& out) {
  const bool same = iso_cospan(load_graph(a.graph), load_graph(a.graph2));
  out << (same ? "isomorphic" : "not isomorphic") << "\n";
  return same ? kOk : kNegative;
}

int cmd_dot(const Args& a, std::ostream& out) {
  out << graph_to_dot(load_graph(a.graph));
  return kOk;
}

int cmd_gen_random(Args a, std::ostream& out) {
  if (const char* env = std::getenv(kSeedVar)) {
    try {
      std::size_t used = 0;
      a.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError(kSeedVar, "not a natural number: '" + std::string(env) + "'");
    }
  }
  Theory th = load_theory(a.theory);
  if (th.signature.empty() && a.edges > 0) {
    throw Error(Errc::UnknownGenerator, "the theory declares no generators");
  }
  Rng rng(a.seed);
  out << graph_to_json(canonicalize(random_mda(rng, th.signature, a.edges)));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"String diagram rewriting with interfaced hypergraphs", "strdiag"};
  app.require_subcommand(1);
  Args a;

  auto* check = app.add_subcommand("check", "Parse and typecheck a theory");
  check->add_option("theory", a.theory)->required();

  auto* interp = app.add_subcommand("interp", "Interpret a term as a graph (JSON)");
  interp->add_option("theory", a.theory)->required();
  interp->add_option("term", a.term, "term text or a file holding one")->required();

  auto* readback = app.add_subcommand("readback", "Read a graph back as a term");
  readback->add_option("theory", a.theory)->required();
  readback->add_option("graph", a.graph)->required();
  readback->add_flag("--frobenius", a.frobenius, "allow Frobenius structure");

  auto* match = app.add_subcommand("match", "List matches of a rule");
  match->add_option("theory", a.theory)->required();
  match->add_option("rule", a.rule)->required();
  match->add_option("graph", a.graph)->required();
  match->add_flag("--convex", a.convex, "convex matches only");

  auto* rewrite = app.add_subcommand("rewrite", "One rewrite step");
  rewrite->add_option("theory", a.theory)->required();
  rewrite->add_option("graph", a.graph)->required();
  rewrite->add_option("--rule", a.rule, "use only this rule");
  rewrite->add_option("--mode", a.mode, "smc or frobenius (default: the theory's)");
  rewrite->add_flag("--all", a.all, "every match and complement, grouped up to iso");

  auto* normalize_cmd = app.add_subcommand("normalize", "Rewrite to normal form");
  normalize_cmd->add_option("theory", a.theory)->required();
  normalize_cmd->add_option("graph", a.graph)->required();
  normalize_cmd->add_option("--fuel", a.fuel, "maximum number of steps")->default_val(1000);
  normalize_cmd->add_option("--trace", a.traceOut, "write a JSON trace to this file");
  normalize_cmd->add_option("--mode", a.mode, "smc or frobenius (default: the theory's)");

  auto* metric_cmd = app.add_subcommand("metric", "Termination metric of a bimonoid diagram");
  metric_cmd->add_option("graph", a.graph)->required();

  auto* prove = app.add_subcommand("prove", "Search for an equational proof");
  prove->add_option("theory", a.theory)->required();
  prove->add_option("t1", a.t1)->required();
  prove->add_option("t2", a.t2)->required();
  prove->add_option("--fuel", a.fuel, "longest derivation considered")->default_val(10);
  prove->add_option("--max-states", a.maxStates, "give up after visiting this many graphs");

  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two graphs");
  iso->add_option("g1", a.graph)->required();
  iso->add_option("g2", a.graph2)->required();

  auto* dot = app.add_subcommand("dot", "Graphviz export");
  dot->add_option("graph", a.graph)->required();

  auto* gen = app.add_subcommand("gen-random", "Random monogamous acyclic diagram");
  gen->add_option("theory", a.theory)->required();
  gen->add_option("--seed", a.seed, "overridden by " + std::string(kSeedVar));
  gen->add_option("--edges", a.edges, "number of generator occurrences");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (check->parsed()) return cmd_check(a, out);
    if (interp->parsed()) return cmd_interp(a, out);
    if (readback->parsed()) return cmd_readback(a, out, err);
    if (match->parsed()) return cmd_match(a, out);
    if (rewrite->parsed()) return cmd_rewrite(a, out, err);
    if (normalize_cmd->parsed()) return cmd_normalize(a, out, err);
    if (metric_cmd->parsed()) return cmd_metric(a, out);
    if (prove->parsed()) return cmd_prove(a, out, err);
    if (iso->parsed()) return cmd_iso(a, out);
    if (dot->parsed()) return cmd_dot(a, out);
    if (gen->parsed()) return cmd_gen_random(a, out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const Error& e) {
    err << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace strdiag::cli
