#include "strdiag/cospan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "strdiag/error.hpp"

namespace strdiag {

void InterfacedGraph::validate() const {
  graph.validate();
  for (const auto* list : {&inputs, &outputs}) {
    for (NodeId v : *list) {
      if (v >= graph.nodeCount) {
        throw Error(Errc::InvalidGraph, "interface node " + std::to_string(v) +
                                            " out of range");
      }
    }
  }
}

InterfacedGraph compose(const InterfacedGraph& a, const InterfacedGraph& b) {
  if (a.outputs.size() != b.inputs.size()) {
    throw Error(Errc::InterfaceMismatch,
                "cannot compose " + std::to_string(a.dom()) + "->" +
                    std::to_string(a.cod()) + " with " +
                    std::to_string(b.dom()) + "->" + std::to_string(b.cod()));
  }
  PushoutResult po = pushout(a.outputs, a.graph, b.inputs, b.graph);
  InterfacedGraph out;
  out.graph = std::move(po.graph);
  for (NodeId v : a.inputs) out.inputs.push_back(po.fromB.nodeMap[v]);
  for (NodeId v : b.outputs) out.outputs.push_back(po.fromC.nodeMap[v]);
  return canonicalize(out);
}

InterfacedGraph tensor(const InterfacedGraph& a, const InterfacedGraph& b) {
  InterfacedGraph out;
  out.graph = disjoint_union(a.graph, b.graph);
  const std::size_t shift = a.graph.nodeCount;
  out.inputs = a.inputs;
  out.outputs = a.outputs;
  for (NodeId v : b.inputs) out.inputs.push_back(v + shift);
  for (NodeId v : b.outputs) out.outputs.push_back(v + shift);
  return out;
}

InterfacedGraph identity(std::size_t n) {
  InterfacedGraph c;
  c.graph.nodeCount = n;
  for (NodeId v = 0; v < n; ++v) {
    c.inputs.push_back(v);
    c.outputs.push_back(v);
  }
  return c;
}

InterfacedGraph symmetry(std::size_t n, std::size_t m) {
  InterfacedGraph c;
  c.graph.nodeCount = n + m;
  for (NodeId v = 0; v < n + m; ++v) c.inputs.push_back(v);
  for (NodeId v = 0; v < m; ++v) c.outputs.push_back(n + v);
  for (NodeId v = 0; v < n; ++v) c.outputs.push_back(v);
  return c;
}

InterfacedGraph frob_gen(FrobGen which) {
  switch (which) {
    case FrobGen::Mul: return function_cospan(1, {0, 0}, {0});
    case FrobGen::Unit: return function_cospan(1, {}, {0});
    case FrobGen::Comul: return function_cospan(1, {0}, {0, 0});
    case FrobGen::Counit: return function_cospan(1, {0}, {});
  }
  throw Error(Errc::InvalidGraph, "unknown Frobenius generator");
}

InterfacedGraph function_cospan(std::size_t nodes, std::vector<NodeId> inputs,
                                std::vector<NodeId> outputs) {
  InterfacedGraph c;
  c.graph.nodeCount = nodes;
  c.inputs = std::move(inputs);
  c.outputs = std::move(outputs);
  c.validate();
  return c;
}

bool is_monogamous(const InterfacedGraph& c) {
  c.validate();
  const std::size_t n = c.graph.nodeCount;
  std::vector<int> isInput(n, 0);
  std::vector<int> isOutput(n, 0);
  for (NodeId v : c.inputs) {
    if (isInput[v]++) return false;
  }
  for (NodeId v : c.outputs) {
    if (isOutput[v]++) return false;
  }
  std::vector<std::size_t> in(n, 0);
  std::vector<std::size_t> out(n, 0);
  for (const auto& e : c.graph.edges) {
    for (NodeId v : e.targets) ++in[v];
    for (NodeId v : e.sources) ++out[v];
  }
  for (NodeId v = 0; v < n; ++v) {
    if (in[v] != (isInput[v] ? 0u : 1u)) return false;
    if (out[v] != (isOutput[v] ? 0u : 1u)) return false;
  }
  return true;
}

bool is_mda(const InterfacedGraph& c) {
  return is_monogamous(c) && is_acyclic(c.graph);
}

bool iso_cospan(const InterfacedGraph& a, const InterfacedGraph& b) {
  if (a.dom() != b.dom() || a.cod() != b.cod()) return false;
  std::vector<NodeId> pa = a.inputs;
  pa.insert(pa.end(), a.outputs.begin(), a.outputs.end());
  std::vector<NodeId> pb = b.inputs;
  pb.insert(pb.end(), b.outputs.begin(), b.outputs.end());
  return isomorphic_pinned(a.graph, b.graph, pa, pb).has_value();
}

// ---------------------------------------------------------------------------
// Canonical renumbering

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Incidence {
  int side;  // 0: node is a target (producer side), 1: node is a source
  std::size_t pos;
  EdgeId edge;
  auto key() const { return std::tie(side, pos, edge); }
};

class Numbering {
 public:
  Numbering(const Hypergraph& g,
            const std::vector<std::vector<Incidence>>& incidences)
      : g_(g), inc_(incidences), node_(g.nodeCount, kNone),
        edge_(g.edges.size(), kNone) {}

  void seedNode(NodeId v) {
    visitNode(v);
    drain();
  }

  void seedEdge(EdgeId e) {
    visitEdge(e);
    drain();
  }

  bool hasNode(NodeId v) const { return node_[v] != kNone; }
  bool hasEdge(EdgeId e) const { return edge_[e] != kNone; }
  const std::vector<std::size_t>& nodes() const { return node_; }
  const std::vector<std::size_t>& edges() const { return edge_; }
  const std::vector<EdgeId>& edgeOrder() const { return edgeOrder_; }
  std::size_t nextNode() const { return nextNode_; }
  void assignNode(NodeId v) {
    if (node_[v] == kNone) node_[v] = nextNode_++;
  }

 private:
  void visitNode(NodeId v) {
    if (node_[v] != kNone) return;
    node_[v] = nextNode_++;
    queue_.push_back({true, v});
  }

  void visitEdge(EdgeId e) {
    if (edge_[e] != kNone) return;
    edge_[e] = edgeOrder_.size();
    edgeOrder_.push_back(e);
    queue_.push_back({false, e});
  }

  void drain() {
    while (!queue_.empty()) {
      auto [isNode, id] = queue_.front();
      queue_.pop_front();
      if (isNode) {
        for (const Incidence& inc : inc_[id]) visitEdge(inc.edge);
      } else {
        for (NodeId v : g_.edges[id].sources) visitNode(v);
        for (NodeId v : g_.edges[id].targets) visitNode(v);
      }
    }
  }

  const Hypergraph& g_;
  const std::vector<std::vector<Incidence>>& inc_;
  std::vector<std::size_t> node_;
  std::vector<std::size_t> edge_;
  std::vector<EdgeId> edgeOrder_;
  std::size_t nextNode_ = 0;
  std::deque<std::pair<bool, std::size_t>> queue_;
};

std::string encode_from(const Hypergraph& g,
                        const std::vector<std::vector<Incidence>>& inc,
                        EdgeId root) {
  Numbering num(g, inc);
  num.seedEdge(root);
  std::ostringstream os;
  for (EdgeId e : num.edgeOrder()) {
    const auto& edge = g.edges[e];
    os << edge.label << '(';
    for (NodeId v : edge.sources) os << num.nodes()[v] << ',';
    os << '|';
    for (NodeId v : edge.targets) os << num.nodes()[v] << ',';
    os << ')';
  }
  return os.str();
}

}  // namespace

InterfacedGraph canonicalize(const InterfacedGraph& c) {
  c.validate();
  const Hypergraph& g = c.graph;
  std::vector<std::vector<Incidence>> inc(g.nodeCount);
  for (EdgeId e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    for (std::size_t p = 0; p < edge.targets.size(); ++p) {
      inc[edge.targets[p]].push_back({0, p, e});
    }
    for (std::size_t p = 0; p < edge.sources.size(); ++p) {
      inc[edge.sources[p]].push_back({1, p, e});
    }
  }
  for (auto& list : inc) {
    std::sort(list.begin(), list.end(),
              [](const Incidence& x, const Incidence& y) {
                return x.key() < y.key();
              });
  }

  Numbering num(g, inc);
  for (NodeId v : c.inputs) num.seedNode(v);
  for (NodeId v : c.outputs) num.seedNode(v);

  // Closed components: each gets its lexicographically least encoding over
  // all choices of root edge; components are then laid out in encoding order.
  std::vector<bool> done(g.edges.size(), false);
  for (EdgeId e = 0; e < g.edges.size(); ++e) done[e] = num.hasEdge(e);
  std::vector<std::pair<std::string, EdgeId>> components;
  for (EdgeId e = 0; e < g.edges.size(); ++e) {
    if (done[e]) continue;
    Numbering probe(g, inc);
    probe.seedEdge(e);
    std::vector<EdgeId> members = probe.edgeOrder();
    std::string best;
    EdgeId bestRoot = e;
    bool first = true;
    for (EdgeId r : members) {
      done[r] = true;
      std::string code = encode_from(g, inc, r);
      if (first || code < best) {
        best = std::move(code);
        bestRoot = r;
        first = false;
      }
    }
    components.emplace_back(std::move(best), bestRoot);
  }
  std::stable_sort(components.begin(), components.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [code, root] : components) num.seedEdge(root);
  for (NodeId v = 0; v < g.nodeCount; ++v) num.assignNode(v);

  InterfacedGraph out;
  out.graph.nodeCount = g.nodeCount;
  out.graph.edges.resize(g.edges.size());
  for (EdgeId e = 0; e < g.edges.size(); ++e) {
    Hyperedge ne{g.edges[e].label, {}, {}};
    for (NodeId v : g.edges[e].sources) ne.sources.push_back(num.nodes()[v]);
    for (NodeId v : g.edges[e].targets) ne.targets.push_back(num.nodes()[v]);
    out.graph.edges[num.edges()[e]] = std::move(ne);
  }
  for (NodeId v : c.inputs) out.inputs.push_back(num.nodes()[v]);
  for (NodeId v : c.outputs) out.outputs.push_back(num.nodes()[v]);
  return out;
}

std::string canonical_key(const InterfacedGraph& c) {
  InterfacedGraph k = canonicalize(c);
  std::ostringstream os;
  os << k.graph.nodeCount << '[';
  for (NodeId v : k.inputs) os << v << ',';
  os << "][";
  for (NodeId v : k.outputs) os << v << ',';
  os << ']';
  for (const auto& e : k.graph.edges) {
    os << e.label << '(';
    for (NodeId v : e.sources) os << v << ',';
    os << '|';
    for (NodeId v : e.targets) os << v << ',';
    os << ')';
  }
  return os.str();
}

}  // namespace strdiag
