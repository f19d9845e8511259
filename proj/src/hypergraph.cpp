#include "strdiag/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "strdiag/error.hpp"

namespace strdiag {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidGraph: return "invalid graph";
    case Errc::UnsupportedPushout: return "unsupported pushout";
    case Errc::InterfaceMismatch: return "interface mismatch";
    case Errc::UnknownGenerator: return "unknown generator";
    case Errc::TypeMismatch: return "type mismatch";
    case Errc::FrobeniusInSmcMode: return "frobenius constructor in smc mode";
    case Errc::NotMda: return "not monogamous directed acyclic";
    case Errc::NotConvex: return "not convex";
    case Errc::RuleInvalid: return "invalid rule";
    case Errc::NoComplement: return "no complement";
    case Errc::NonMonogamousComplement: return "non-monogamous complement";
    case Errc::Cyclic: return "cyclic graph";
    case Errc::Parse: return "parse error";
  }
  return "unknown";
}

Signature::Signature(std::vector<Generator> generators) {
  for (auto& g : generators) add(std::move(g));
}

void Signature::add(Generator generator) {
  if (find(generator.name) != nullptr) {
    throw Error(Errc::InvalidGraph,
                "duplicate generator '" + generator.name + "'");
  }
  generators_.push_back(std::move(generator));
}

const Generator* Signature::find(std::string_view name) const {
  for (const auto& g : generators_) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

EdgeId Hypergraph::add_edge(Hyperedge edge) {
  edges.push_back(std::move(edge));
  return edges.size() - 1;
}

void Hypergraph::validate() const {
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (const auto* list : {&edges[e].sources, &edges[e].targets}) {
      for (NodeId v : *list) {
        if (v >= nodeCount) {
          throw Error(Errc::InvalidGraph, "edge " + std::to_string(e) +
                                              " references node " +
                                              std::to_string(v));
        }
      }
    }
  }
}

void Hypergraph::validate(const Signature& signature) const {
  validate();
  for (const auto& edge : edges) {
    const Generator* g = signature.find(edge.label);
    if (g == nullptr) {
      throw Error(Errc::UnknownGenerator, "unknown label '" + edge.label + "'");
    }
    if (g->arity != edge.sources.size() || g->coarity != edge.targets.size()) {
      throw Error(Errc::InvalidGraph,
                  "edge labelled '" + edge.label + "' has wrong arity");
    }
  }
}

bool Homomorphism::is_mono() const {
  std::set<NodeId> nodes(nodeMap.begin(), nodeMap.end());
  std::set<EdgeId> es(edgeMap.begin(), edgeMap.end());
  return nodes.size() == nodeMap.size() && es.size() == edgeMap.size();
}

Degree degrees(const Hypergraph& graph, NodeId node) {
  if (node >= graph.nodeCount) {
    throw Error(Errc::InvalidGraph, "node " + std::to_string(node) +
                                        " out of range");
  }
  Degree d;
  for (const auto& edge : graph.edges) {
    d.indegree += std::count(edge.targets.begin(), edge.targets.end(), node);
    d.outdegree += std::count(edge.sources.begin(), edge.sources.end(), node);
  }
  return d;
}

bool is_homomorphism(const Hypergraph& from, const Hypergraph& to,
                     const Homomorphism& hom) {
  if (hom.nodeMap.size() != from.nodeCount ||
      hom.edgeMap.size() != from.edges.size()) {
    return false;
  }
  for (NodeId v : hom.nodeMap) {
    if (v >= to.nodeCount) return false;
  }
  for (std::size_t e = 0; e < from.edges.size(); ++e) {
    if (hom.edgeMap[e] >= to.edges.size()) return false;
    const Hyperedge& src = from.edges[e];
    const Hyperedge& dst = to.edges[hom.edgeMap[e]];
    if (src.label != dst.label || src.sources.size() != dst.sources.size() ||
        src.targets.size() != dst.targets.size()) {
      return false;
    }
    for (std::size_t p = 0; p < src.sources.size(); ++p) {
      if (hom.nodeMap[src.sources[p]] != dst.sources[p]) return false;
    }
    for (std::size_t p = 0; p < src.targets.size(); ++p) {
      if (hom.nodeMap[src.targets[p]] != dst.targets[p]) return false;
    }
  }
  return true;
}

std::vector<bool> forward_reachable_edges(const Hypergraph& graph,
                                          const std::vector<bool>& start) {
  std::vector<bool> nodeSeen(start);
  nodeSeen.resize(graph.nodeCount, false);
  std::vector<bool> edgeSeen(graph.edges.size(), false);
  // node -> edges having it as a source
  std::vector<std::vector<EdgeId>> consumers(graph.nodeCount);
  for (EdgeId e = 0; e < graph.edges.size(); ++e) {
    for (NodeId v : graph.edges[e].sources) consumers[v].push_back(e);
  }
  std::vector<NodeId> stack;
  for (NodeId v = 0; v < graph.nodeCount; ++v) {
    if (nodeSeen[v]) stack.push_back(v);
  }
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (EdgeId e : consumers[v]) {
      if (edgeSeen[e]) continue;
      edgeSeen[e] = true;
      for (NodeId w : graph.edges[e].targets) {
        if (!nodeSeen[w]) {
          nodeSeen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return edgeSeen;
}

std::vector<bool> backward_reachable_edges(const Hypergraph& graph,
                                           const std::vector<bool>& goal) {
  std::vector<bool> nodeSeen(goal);
  nodeSeen.resize(graph.nodeCount, false);
  std::vector<bool> edgeSeen(graph.edges.size(), false);
  std::vector<std::vector<EdgeId>> producers(graph.nodeCount);
  for (EdgeId e = 0; e < graph.edges.size(); ++e) {
    for (NodeId v : graph.edges[e].targets) producers[v].push_back(e);
  }
  std::vector<NodeId> stack;
  for (NodeId v = 0; v < graph.nodeCount; ++v) {
    if (nodeSeen[v]) stack.push_back(v);
  }
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (EdgeId e : producers[v]) {
      if (edgeSeen[e]) continue;
      edgeSeen[e] = true;
      for (NodeId w : graph.edges[e].sources) {
        if (!nodeSeen[w]) {
          nodeSeen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return edgeSeen;
}

namespace {

std::vector<bool> node_mask(const Hypergraph& graph,
                            std::span<const NodeId> nodes) {
  std::vector<bool> mask(graph.nodeCount, false);
  for (NodeId v : nodes) {
    if (v >= graph.nodeCount) {
      throw Error(Errc::InvalidGraph,
                  "node " + std::to_string(v) + " out of range");
    }
    mask[v] = true;
  }
  return mask;
}

}  // namespace

bool has_path(const Hypergraph& graph, std::span<const NodeId> from,
              std::span<const NodeId> to) {
  auto reached = forward_reachable_edges(graph, node_mask(graph, from));
  auto goal = node_mask(graph, to);
  for (EdgeId e = 0; e < graph.edges.size(); ++e) {
    if (!reached[e]) continue;
    for (NodeId w : graph.edges[e].targets) {
      if (goal[w]) return true;
    }
  }
  return false;
}

bool is_acyclic(const Hypergraph& graph) {
  // A node-to-node cycle is exactly a cycle in the successor relation on
  // edges (a self-loop when one edge has the node as source and target).
  const std::size_t n = graph.edges.size();
  std::vector<std::vector<EdgeId>> consumers(graph.nodeCount);
  for (EdgeId e = 0; e < n; ++e) {
    for (NodeId v : graph.edges[e].sources) consumers[v].push_back(e);
  }
  std::vector<std::vector<EdgeId>> succ(n);
  std::vector<std::size_t> indeg(n, 0);
  for (EdgeId e = 0; e < n; ++e) {
    std::set<EdgeId> next;
    for (NodeId v : graph.edges[e].targets) {
      next.insert(consumers[v].begin(), consumers[v].end());
    }
    for (EdgeId f : next) {
      succ[e].push_back(f);
      ++indeg[f];
    }
  }
  std::vector<EdgeId> ready;
  for (EdgeId e = 0; e < n; ++e) {
    if (indeg[e] == 0) ready.push_back(e);
  }
  std::size_t done = 0;
  while (!ready.empty()) {
    EdgeId e = ready.back();
    ready.pop_back();
    ++done;
    for (EdgeId f : succ[e]) {
      if (--indeg[f] == 0) ready.push_back(f);
    }
  }
  return done == n;
}

void validate_selection(const Hypergraph& graph,
                        const SubgraphSelection& selection) {
  for (NodeId v : selection.nodes) {
    if (v >= graph.nodeCount) {
      throw Error(Errc::InvalidGraph, "selected node out of range");
    }
  }
  for (EdgeId e : selection.edges) {
    if (e >= graph.edges.size()) {
      throw Error(Errc::InvalidGraph, "selected edge out of range");
    }
    for (const auto* list : {&graph.edges[e].sources, &graph.edges[e].targets}) {
      for (NodeId v : *list) {
        if (!selection.nodes.contains(v)) {
          throw Error(Errc::InvalidGraph,
                      "selection is not closed under edge endpoints");
        }
      }
    }
  }
}

SubgraphSelection selection_of(const Hypergraph& graph,
                               const std::set<EdgeId>& edges,
                               const std::set<NodeId>& extraNodes) {
  SubgraphSelection s;
  s.edges = edges;
  s.nodes = extraNodes;
  for (EdgeId e : edges) {
    const auto& edge = graph.edges.at(e);
    s.nodes.insert(edge.sources.begin(), edge.sources.end());
    s.nodes.insert(edge.targets.begin(), edge.targets.end());
  }
  return s;
}

SubgraphSelection image_of(const Homomorphism& hom) {
  SubgraphSelection s;
  s.nodes.insert(hom.nodeMap.begin(), hom.nodeMap.end());
  s.edges.insert(hom.edgeMap.begin(), hom.edgeMap.end());
  return s;
}

bool is_convex(const Hypergraph& graph, const SubgraphSelection& selection) {
  validate_selection(graph, selection);
  std::vector<bool> mask(graph.nodeCount, false);
  for (NodeId v : selection.nodes) mask[v] = true;
  auto forward = forward_reachable_edges(graph, mask);
  auto backward = backward_reachable_edges(graph, mask);
  for (EdgeId e = 0; e < graph.edges.size(); ++e) {
    if (forward[e] && backward[e] && !selection.edges.contains(e)) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Homomorphism enumeration

namespace {

constexpr NodeId kUnset = static_cast<NodeId>(-1);

class HomSearch {
 public:
  HomSearch(const Hypergraph& pattern, const Hypergraph& host, bool mono)
      : pattern_(pattern), host_(host), mono_(mono) {
    edgeOrder_.resize(pattern.edges.size());
    std::iota(edgeOrder_.begin(), edgeOrder_.end(), 0);
    std::stable_sort(edgeOrder_.begin(), edgeOrder_.end(),
                     [&](EdgeId a, EdgeId b) {
                       return pattern.edges[a].label < pattern.edges[b].label;
                     });
    std::vector<bool> touched(pattern.nodeCount, false);
    for (const auto& e : pattern.edges) {
      for (NodeId v : e.sources) touched[v] = true;
      for (NodeId v : e.targets) touched[v] = true;
    }
    for (NodeId v = 0; v < pattern.nodeCount; ++v) {
      if (!touched[v]) isolated_.push_back(v);
    }
    nodeMap_.assign(pattern.nodeCount, kUnset);
    edgeMap_.assign(pattern.edges.size(), kUnset);
    hostNodeUsed_.assign(host.nodeCount, 0);
    hostEdgeUsed_.assign(host.edges.size(), false);
  }

  std::vector<Homomorphism> run() {
    searchEdge(0);
    return std::move(out_);
  }

 private:
  bool bindNode(NodeId p, NodeId h, std::vector<NodeId>& bound) {
    if (nodeMap_[p] != kUnset) return nodeMap_[p] == h;
    if (mono_ && hostNodeUsed_[h] > 0) return false;
    nodeMap_[p] = h;
    ++hostNodeUsed_[h];
    bound.push_back(p);
    return true;
  }

  void unbind(const std::vector<NodeId>& bound) {
    for (NodeId p : bound) {
      --hostNodeUsed_[nodeMap_[p]];
      nodeMap_[p] = kUnset;
    }
  }

  void searchEdge(std::size_t k) {
    if (k == edgeOrder_.size()) {
      searchIsolated(0);
      return;
    }
    const EdgeId pe = edgeOrder_[k];
    const Hyperedge& pedge = pattern_.edges[pe];
    for (EdgeId he = 0; he < host_.edges.size(); ++he) {
      if (mono_ && hostEdgeUsed_[he]) continue;
      const Hyperedge& hedge = host_.edges[he];
      if (hedge.label != pedge.label ||
          hedge.sources.size() != pedge.sources.size() ||
          hedge.targets.size() != pedge.targets.size()) {
        continue;
      }
      std::vector<NodeId> bound;
      bool ok = true;
      for (std::size_t p = 0; ok && p < pedge.sources.size(); ++p) {
        ok = bindNode(pedge.sources[p], hedge.sources[p], bound);
      }
      for (std::size_t p = 0; ok && p < pedge.targets.size(); ++p) {
        ok = bindNode(pedge.targets[p], hedge.targets[p], bound);
      }
      if (ok) {
        edgeMap_[pe] = he;
        hostEdgeUsed_[he] = true;
        searchEdge(k + 1);
        hostEdgeUsed_[he] = false;
        edgeMap_[pe] = kUnset;
      }
      unbind(bound);
    }
  }

  void searchIsolated(std::size_t k) {
    if (k == isolated_.size()) {
      out_.push_back(Homomorphism{nodeMap_, edgeMap_});
      return;
    }
    const NodeId p = isolated_[k];
    for (NodeId h = 0; h < host_.nodeCount; ++h) {
      std::vector<NodeId> bound;
      if (bindNode(p, h, bound)) searchIsolated(k + 1);
      unbind(bound);
    }
  }

  const Hypergraph& pattern_;
  const Hypergraph& host_;
  bool mono_;
  std::vector<EdgeId> edgeOrder_;
  std::vector<NodeId> isolated_;
  std::vector<NodeId> nodeMap_;
  std::vector<EdgeId> edgeMap_;
  std::vector<std::size_t> hostNodeUsed_;
  std::vector<bool> hostEdgeUsed_;
  std::vector<Homomorphism> out_;
};

}  // namespace

std::vector<Homomorphism> enumerate_homomorphisms(const Hypergraph& pattern,
                                                  const Hypergraph& host,
                                                  bool monoOnly) {
  pattern.validate();
  host.validate();
  return HomSearch(pattern, host, monoOnly).run();
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

// (label, side, position) incidences of a node, sorted; equal profiles are
// necessary for two nodes to correspond under an isomorphism.
using Profile = std::vector<std::tuple<std::string, int, std::size_t>>;

std::vector<Profile> node_profiles(const Hypergraph& g) {
  std::vector<Profile> prof(g.nodeCount);
  for (const auto& e : g.edges) {
    for (std::size_t p = 0; p < e.sources.size(); ++p) {
      prof[e.sources[p]].emplace_back(e.label, 0, p);
    }
    for (std::size_t p = 0; p < e.targets.size(); ++p) {
      prof[e.targets[p]].emplace_back(e.label, 1, p);
    }
  }
  for (auto& p : prof) std::sort(p.begin(), p.end());
  return prof;
}

class IsoSearch {
 public:
  IsoSearch(const Hypergraph& a, const Hypergraph& b)
      : a_(a), b_(b), profA_(node_profiles(a)), profB_(node_profiles(b)) {
    fwd_.assign(a.nodeCount, kUnset);
    bwd_.assign(b.nodeCount, kUnset);
    edgeMap_.assign(a.edges.size(), kUnset);
    edgeUsed_.assign(b.edges.size(), false);
  }

  bool pin(NodeId x, NodeId y) {
    if (x >= a_.nodeCount || y >= b_.nodeCount) return false;
    if (fwd_[x] != kUnset || bwd_[y] != kUnset) {
      return fwd_[x] == y && bwd_[y] == x;
    }
    if (profA_[x] != profB_[y]) return false;
    fwd_[x] = y;
    bwd_[y] = x;
    return true;
  }

  std::optional<Homomorphism> run() {
    orderEdges();
    if (!searchEdge(0)) return std::nullopt;
    // Remaining unmapped nodes are isolated: pair them up in id order.
    std::vector<NodeId> freeA;
    std::vector<NodeId> freeB;
    for (NodeId x = 0; x < a_.nodeCount; ++x) {
      if (fwd_[x] == kUnset) freeA.push_back(x);
    }
    for (NodeId y = 0; y < b_.nodeCount; ++y) {
      if (bwd_[y] == kUnset) freeB.push_back(y);
    }
    if (freeA.size() != freeB.size()) return std::nullopt;
    for (std::size_t k = 0; k < freeA.size(); ++k) {
      if (!profA_[freeA[k]].empty() || !profB_[freeB[k]].empty()) {
        return std::nullopt;
      }
      fwd_[freeA[k]] = freeB[k];
    }
    return Homomorphism{fwd_, edgeMap_};
  }

 private:
  // Greedy order: prefer edges with most endpoints already constrained.
  void orderEdges() {
    std::vector<bool> known(a_.nodeCount, false);
    for (NodeId x = 0; x < a_.nodeCount; ++x) known[x] = fwd_[x] != kUnset;
    std::vector<bool> placed(a_.edges.size(), false);
    for (std::size_t round = 0; round < a_.edges.size(); ++round) {
      std::size_t best = kUnset;
      std::size_t bestScore = 0;
      for (EdgeId e = 0; e < a_.edges.size(); ++e) {
        if (placed[e]) continue;
        std::size_t score = 1;
        for (NodeId v : a_.edges[e].sources) score += known[v] ? 1 : 0;
        for (NodeId v : a_.edges[e].targets) score += known[v] ? 1 : 0;
        if (best == kUnset || score > bestScore) {
          best = e;
          bestScore = score;
        }
      }
      placed[best] = true;
      order_.push_back(best);
      for (NodeId v : a_.edges[best].sources) known[v] = true;
      for (NodeId v : a_.edges[best].targets) known[v] = true;
    }
  }

  bool bind(NodeId x, NodeId y, std::vector<NodeId>& bound) {
    if (fwd_[x] != kUnset) return fwd_[x] == y;
    if (bwd_[y] != kUnset) return false;
    if (profA_[x] != profB_[y]) return false;
    fwd_[x] = y;
    bwd_[y] = x;
    bound.push_back(x);
    return true;
  }

  void unbind(const std::vector<NodeId>& bound) {
    for (NodeId x : bound) {
      bwd_[fwd_[x]] = kUnset;
      fwd_[x] = kUnset;
    }
  }

  bool searchEdge(std::size_t k) {
    if (k == order_.size()) return true;
    const EdgeId ae = order_[k];
    const Hyperedge& ea = a_.edges[ae];
    for (EdgeId be = 0; be < b_.edges.size(); ++be) {
      if (edgeUsed_[be]) continue;
      const Hyperedge& eb = b_.edges[be];
      if (eb.label != ea.label || eb.sources.size() != ea.sources.size() ||
          eb.targets.size() != ea.targets.size()) {
        continue;
      }
      std::vector<NodeId> bound;
      bool ok = true;
      for (std::size_t p = 0; ok && p < ea.sources.size(); ++p) {
        ok = bind(ea.sources[p], eb.sources[p], bound);
      }
      for (std::size_t p = 0; ok && p < ea.targets.size(); ++p) {
        ok = bind(ea.targets[p], eb.targets[p], bound);
      }
      if (ok) {
        edgeUsed_[be] = true;
        edgeMap_[ae] = be;
        if (searchEdge(k + 1)) return true;
        edgeMap_[ae] = kUnset;
        edgeUsed_[be] = false;
      }
      unbind(bound);
    }
    return false;
  }

  const Hypergraph& a_;
  const Hypergraph& b_;
  std::vector<Profile> profA_;
  std::vector<Profile> profB_;
  std::vector<NodeId> fwd_;
  std::vector<NodeId> bwd_;
  std::vector<EdgeId> edgeMap_;
  std::vector<bool> edgeUsed_;
  std::vector<EdgeId> order_;
};

bool same_shape(const Hypergraph& a, const Hypergraph& b) {
  if (a.nodeCount != b.nodeCount || a.edges.size() != b.edges.size()) {
    return false;
  }
  std::multiset<std::string> la;
  std::multiset<std::string> lb;
  for (const auto& e : a.edges) la.insert(e.label);
  for (const auto& e : b.edges) lb.insert(e.label);
  return la == lb;
}

}  // namespace

std::optional<Homomorphism> isomorphic(const Hypergraph& a,
                                       const Hypergraph& b) {
  return isomorphic_pinned(a, b, {}, {});
}

std::optional<Homomorphism> isomorphic_pinned(
    const Hypergraph& a, const Hypergraph& b, std::span<const NodeId> pinnedA,
    std::span<const NodeId> pinnedB) {
  if (pinnedA.size() != pinnedB.size() || !same_shape(a, b)) {
    return std::nullopt;
  }
  IsoSearch search(a, b);
  for (std::size_t k = 0; k < pinnedA.size(); ++k) {
    if (!search.pin(pinnedA[k], pinnedB[k])) return std::nullopt;
  }
  return search.run();
}

// ---------------------------------------------------------------------------
// Pushouts

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

PushoutResult pushout(std::span<const NodeId> legB, const Hypergraph& b,
                      std::span<const NodeId> legC, const Hypergraph& c) {
  if (legB.size() != legC.size()) {
    throw Error(Errc::InterfaceMismatch, "pushout legs differ in length");
  }
  const std::size_t nb = b.nodeCount;
  UnionFind uf(nb + c.nodeCount);
  for (std::size_t k = 0; k < legB.size(); ++k) {
    if (legB[k] >= nb || legC[k] >= c.nodeCount) {
      throw Error(Errc::InvalidGraph, "pushout leg out of range");
    }
    uf.unite(legB[k], nb + legC[k]);
  }
  std::vector<NodeId> classId(nb + c.nodeCount, kUnset);
  std::vector<NodeId> rootId(nb + c.nodeCount, kUnset);
  PushoutResult out;
  for (std::size_t x = 0; x < nb + c.nodeCount; ++x) {
    std::size_t r = uf.find(x);
    if (rootId[r] == kUnset) rootId[r] = out.graph.nodeCount++;
    classId[x] = rootId[r];
  }
  out.fromB.nodeMap.assign(classId.begin(), classId.begin() + nb);
  out.fromC.nodeMap.assign(classId.begin() + nb, classId.end());
  auto copyEdges = [&](const Hypergraph& g, const std::vector<NodeId>& map,
                       Homomorphism& inj) {
    for (const auto& e : g.edges) {
      Hyperedge ne{e.label, {}, {}};
      for (NodeId v : e.sources) ne.sources.push_back(map[v]);
      for (NodeId v : e.targets) ne.targets.push_back(map[v]);
      inj.edgeMap.push_back(out.graph.add_edge(std::move(ne)));
    }
  };
  copyEdges(b, out.fromB.nodeMap, out.fromB);
  copyEdges(c, out.fromC.nodeMap, out.fromC);
  return out;
}

PushoutResult pushout(const Hypergraph& apex, const Homomorphism& legB,
                      const Hypergraph& b, const Homomorphism& legC,
                      const Hypergraph& c) {
  if (!apex.edges.empty()) {
    throw Error(Errc::UnsupportedPushout,
                "pushouts are only supported over discrete apexes");
  }
  if (legB.nodeMap.size() != apex.nodeCount ||
      legC.nodeMap.size() != apex.nodeCount) {
    throw Error(Errc::InvalidGraph, "pushout leg does not match apex");
  }
  return pushout(legB.nodeMap, b, legC.nodeMap, c);
}

Hypergraph discrete(std::size_t n) {
  Hypergraph g;
  g.nodeCount = n;
  return g;
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
  return pushout(std::span<const NodeId>{}, a, std::span<const NodeId>{}, b)
      .graph;
}

}  // namespace strdiag
