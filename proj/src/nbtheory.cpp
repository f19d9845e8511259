#include "strdiag/nbtheory.hpp"

#include <algorithm>
#include <set>

#include "strdiag/error.hpp"

namespace strdiag {

namespace {

const char* const kMu = "mu";
const char* const kEta = "eta";
const char* const kNu = "nu";
const char* const kEps = "eps";

// Edges in an order where every predecessor comes first. links[e] lists
// (predecessor, node) pairs: one per distinct node shared target -> source.
struct EdgeDag {
  std::vector<EdgeId> order;
  std::vector<std::vector<EdgeId>> links;
};

EdgeDag edge_dag(const Hypergraph& g) {
  const std::size_t m = g.edges.size();
  std::vector<std::set<EdgeId>> producers(g.nodeCount);
  for (EdgeId e = 0; e < m; ++e) {
    for (NodeId v : g.edges[e].targets) producers[v].insert(e);
  }
  EdgeDag dag;
  dag.links.resize(m);
  std::vector<std::set<EdgeId>> succ(m);
  for (EdgeId e = 0; e < m; ++e) {
    const std::set<NodeId> src(g.edges[e].sources.begin(), g.edges[e].sources.end());
    for (NodeId v : src) {
      for (EdgeId p : producers[v]) {
        dag.links[e].push_back(p);
        succ[p].insert(e);
      }
    }
  }
  std::vector<std::size_t> indeg(m, 0);
  for (EdgeId e = 0; e < m; ++e) {
    for (EdgeId f : succ[e]) ++indeg[f];
  }
  std::vector<EdgeId> ready;
  for (EdgeId e = 0; e < m; ++e) {
    if (indeg[e] == 0) ready.push_back(e);
  }
  while (!ready.empty()) {
    EdgeId e = ready.back();
    ready.pop_back();
    dag.order.push_back(e);
    for (EdgeId f : succ[e]) {
      if (--indeg[f] == 0) ready.push_back(f);
    }
  }
  if (dag.order.size() != m) throw Error(Errc::Cyclic, "graph has a directed cycle");
  return dag;
}

std::size_t distinct_hits(const std::vector<NodeId>& nodes, const std::vector<bool>& mark) {
  std::set<NodeId> seen;
  for (NodeId v : nodes) {
    if (mark[v]) seen.insert(v);
  }
  return seen.size();
}

std::size_t tree_size(const Hypergraph& g, NodeId root, const std::string& label,
                      bool upward) {
  // upward: follow producers through sources (mu-trees);
  // otherwise follow consumers through targets (nu-trees)
  std::set<EdgeId> tree;
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    NodeId x = stack.back();
    stack.pop_back();
    for (EdgeId e = 0; e < g.edges.size(); ++e) {
      const auto& edge = g.edges[e];
      if (edge.label != label) continue;
      const auto& touch = upward ? edge.targets : edge.sources;
      if (std::find(touch.begin(), touch.end(), x) == touch.end()) continue;
      if (!tree.insert(e).second) continue;
      const auto& next = upward ? edge.sources : edge.targets;
      stack.insert(stack.end(), next.begin(), next.end());
      break;  // at most one producer / consumer under monogamy
    }
  }
  return tree.size();
}

}  // namespace

Signature nb_signature() {
  return Signature({{kMu, 2, 1}, {kEta, 0, 1}, {kNu, 1, 2}, {kEps, 1, 0}});
}

std::string nb_theory_text() {
  return "theory NB\n"
         "mode smc\n"
         "gen mu : 2 -> 1\n"
         "gen eta : 0 -> 1\n"
         "gen nu : 1 -> 2\n"
         "gen eps : 1 -> 0\n"
         "rule BA1 : (mu * id 1) ; mu => (id 1 * mu) ; mu\n"
         "rule BA2 : nu ; (nu * id 1) => nu ; (id 1 * nu)\n"
         "rule BA3 : (eta * id 1) ; mu => id 1\n"
         "rule BA4 : nu ; (eps * id 1) => id 1\n"
         "rule BA5 : (id 1 * eta) ; mu => id 1\n"
         "rule BA6 : nu ; (id 1 * eps) => id 1\n"
         "rule BA7 : eta ; nu => eta * eta\n"
         "rule BA8 : mu ; eps => eps * eps\n"
         "rule BA9 : mu ; nu => (nu * nu) ; (id 1 * sym 1 1 * id 1) ; (mu * mu)\n"
         "rule BA10 : eta ; eps => id 0\n";
}

Theory nb_theory() { return parse_theory(nb_theory_text()); }

std::vector<DpoRule> nb_system() { return compile_rules(nb_theory()); }

std::uint64_t count_u_paths(const InterfacedGraph& c) {
  const Hypergraph& g = c.graph;
  const EdgeDag dag = edge_dag(g);
  std::vector<bool> isIn(g.nodeCount, false), isOut(g.nodeCount, false);
  for (NodeId v : c.inputs) isIn[v] = true;
  for (NodeId v : c.outputs) isOut[v] = true;
  std::vector<std::uint64_t> reach(g.edges.size(), 0);
  std::uint64_t total = 0;
  for (NodeId v = 0; v < g.nodeCount; ++v) {
    if (isIn[v] && isOut[v]) ++total;
  }
  for (EdgeId e : dag.order) {
    const auto& edge = g.edges[e];
    std::uint64_t r = distinct_hits(edge.sources, isIn) + (edge.label == kEta ? 1 : 0);
    for (EdgeId p : dag.links[e]) r += reach[p];
    reach[e] = r;
    total += r * (distinct_hits(edge.targets, isOut) + (edge.label == kEps ? 1 : 0));
  }
  return total;
}

std::uint64_t count_m_paths(const Hypergraph& g) {
  const EdgeDag dag = edge_dag(g);
  std::vector<std::uint64_t> reach(g.edges.size(), 0);
  std::uint64_t total = 0;
  for (EdgeId e : dag.order) {
    std::uint64_t r = g.edges[e].label == kMu ? 1 : 0;
    for (EdgeId p : dag.links[e]) r += reach[p];
    reach[e] = r;
    if (g.edges[e].label == kNu) total += r;
  }
  return total;
}

std::size_t l_weight(const Hypergraph& g, EdgeId h) {
  const auto& edge = g.edges.at(h);
  if (edge.label == kMu && !edge.sources.empty()) {
    return tree_size(g, edge.sources[0], kMu, true);
  }
  if (edge.label == kNu && !edge.targets.empty()) {
    return tree_size(g, edge.targets[0], kNu, false);
  }
  return 0;
}

std::size_t l_weight_sum(const Hypergraph& g) {
  std::size_t sum = 0;
  for (EdgeId e = 0; e < g.edges.size(); ++e) sum += l_weight(g, e);
  return sum;
}

NbMetric metric(const InterfacedGraph& c) {
  if (!is_mda(c)) throw Error(Errc::NotMda, "metric needs a monogamous acyclic graph");
  NbMetric m;
  m.uPaths = count_u_paths(c);
  m.mPaths = count_m_paths(c.graph);
  for (const auto& e : c.graph.edges) {
    if (e.label == kMu) ++m.muCount;
    if (e.label == kNu) ++m.nuCount;
  }
  m.lWeightSum = l_weight_sum(c.graph);
  return m;
}

TraceReport check_trace_decreasing(const std::vector<RewriteStepRecord>& trace) {
  TraceReport report;
  report.steps = trace.size();
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const auto& rec = trace[k];
    NbMetric before = rec.metricBefore ? *rec.metricBefore : metric(rec.before);
    NbMetric after = rec.metricAfter ? *rec.metricAfter : metric(rec.after);
    if (!less_than(after, before)) {
      report.ok = false;
      report.firstViolation = k;
      report.detail = "step " + std::to_string(k + 1) + " (" + rec.ruleName + "): " +
                      to_string(before) + " -> " + to_string(after);
      return report;
    }
  }
  return report;
}

bool satisfies_rule_claim(const std::string& rule, const NbMetric& b,
                          const NbMetric& a) {
  if (rule == "BA1" || rule == "BA2") {
    return a.uPaths == b.uPaths && a.mPaths == b.mPaths && a.muCount == b.muCount &&
           a.nuCount == b.nuCount && a.lWeightSum < b.lWeightSum;
  }
  if (rule == "BA3" || rule == "BA4" || rule == "BA5" || rule == "BA6" ||
      rule == "BA10") {
    return a.uPaths < b.uPaths;
  }
  if (rule == "BA7") {
    return a.uPaths == b.uPaths && a.mPaths == b.mPaths && a.muCount == b.muCount &&
           a.nuCount < b.nuCount;
  }
  if (rule == "BA8") {
    return a.uPaths == b.uPaths && a.mPaths == b.mPaths && a.muCount < b.muCount;
  }
  if (rule == "BA9") return a.uPaths == b.uPaths && a.mPaths < b.mPaths;
  return false;
}

}  // namespace strdiag
