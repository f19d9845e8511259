#pragma once

// Sigma-typed directed hypergraphs: nodes are dense ids 0..nodeCount-1,
// hyperedges carry a generator label plus ordered source and target lists.
// All cross-graph relations (matchings, injections, isomorphisms) are explicit
// Homomorphism values; two graphs are "the same" only up to isomorphism.

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace strdiag {

using NodeId = std::size_t;
using EdgeId = std::size_t;

struct Generator {
  std::string name;
  std::size_t arity = 0;
  std::size_t coarity = 0;

  bool operator==(const Generator&) const = default;
};

/// An ordered list of generators with pairwise distinct names.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Generator> generators);

  /// Throws Errc::InvalidGraph on a duplicate name.
  void add(Generator generator);

  const Generator* find(std::string_view name) const;
  const std::vector<Generator>& generators() const { return generators_; }
  bool empty() const { return generators_.empty(); }

  bool operator==(const Signature&) const = default;

 private:
  std::vector<Generator> generators_;
};

struct Hyperedge {
  std::string label;
  std::vector<NodeId> sources;
  std::vector<NodeId> targets;

  bool operator==(const Hyperedge&) const = default;
};

struct Hypergraph {
  std::size_t nodeCount = 0;
  std::vector<Hyperedge> edges;

  NodeId add_node() { return nodeCount++; }
  EdgeId add_edge(Hyperedge edge);

  std::size_t edge_count() const { return edges.size(); }

  /// Every endpoint < nodeCount. Throws Errc::InvalidGraph.
  void validate() const;
  /// Additionally checks labels and arities against the signature.
  void validate(const Signature& signature) const;

  bool operator==(const Hypergraph&) const = default;
};

/// nodeMap[v] / edgeMap[e] give the image of node v / edge e.
struct Homomorphism {
  std::vector<NodeId> nodeMap;
  std::vector<EdgeId> edgeMap;

  bool is_mono() const;
  bool operator==(const Homomorphism&) const = default;
};

/// A sub-hypergraph given by node and edge ids of an ambient graph.
struct SubgraphSelection {
  std::set<NodeId> nodes;
  std::set<EdgeId> edges;

  bool operator==(const SubgraphSelection&) const = default;
};

struct Degree {
  std::size_t indegree = 0;
  std::size_t outdegree = 0;

  bool operator==(const Degree&) const = default;
};

Degree degrees(const Hypergraph& graph, NodeId node);

/// Checks structure preservation of `hom` from `from` into `to`.
bool is_homomorphism(const Hypergraph& from, const Hypergraph& to,
                     const Homomorphism& hom);

/// True iff a non-empty directed path of hyperedges starts at a node of
/// `from` and terminates at a node of `to`.
bool has_path(const Hypergraph& graph, std::span<const NodeId> from,
              std::span<const NodeId> to);

bool is_acyclic(const Hypergraph& graph);

/// Selection must be closed (all endpoints of selected edges selected).
void validate_selection(const Hypergraph& graph,
                        const SubgraphSelection& selection);

/// The closed sub-hypergraph made of `edges` and all their endpoints, plus
/// `extraNodes`.
SubgraphSelection selection_of(const Hypergraph& graph,
                               const std::set<EdgeId>& edges,
                               const std::set<NodeId>& extraNodes = {});

/// Image of a homomorphism as a selection of its codomain.
SubgraphSelection image_of(const Homomorphism& hom);

/// Edges reachable by a directed path starting at some node of `start`.
std::vector<bool> forward_reachable_edges(const Hypergraph& graph,
                                          const std::vector<bool>& start);
/// Edges from which some node of `goal` is reachable.
std::vector<bool> backward_reachable_edges(const Hypergraph& graph,
                                           const std::vector<bool>& goal);

/// No edge outside the selection lies on a path between two selected nodes.
bool is_convex(const Hypergraph& graph, const SubgraphSelection& selection);

/// All homomorphisms pattern -> host. Pattern edges are processed sorted by
/// (label, index) with host candidates ascending; isolated pattern nodes
/// last, ascending. The result is duplicate-free and deterministic.
std::vector<Homomorphism> enumerate_homomorphisms(const Hypergraph& pattern,
                                                  const Hypergraph& host,
                                                  bool monoOnly);

/// Some isomorphism a -> b, or nullopt.
std::optional<Homomorphism> isomorphic(const Hypergraph& a,
                                       const Hypergraph& b);

/// Isomorphism a -> b sending pinnedA[k] to pinnedB[k] for every k.
std::optional<Homomorphism> isomorphic_pinned(
    const Hypergraph& a, const Hypergraph& b,
    std::span<const NodeId> pinnedA, std::span<const NodeId> pinnedB);

struct PushoutResult {
  Hypergraph graph;
  Homomorphism fromB;  // injection B -> P
  Homomorphism fromC;  // injection C -> P
};

/// Pushout of B <- A -> C for a discrete apex A with |legB| = |legC| nodes.
/// Nodes of P are the classes of nodes(B)+nodes(C) under legB(a) ~ legC(a),
/// numbered by first occurrence (B first); edges are edges(B) then edges(C).
PushoutResult pushout(std::span<const NodeId> legB, const Hypergraph& b,
                      std::span<const NodeId> legC, const Hypergraph& c);

/// Same, with the apex given explicitly. Throws Errc::UnsupportedPushout if
/// the apex has edges.
PushoutResult pushout(const Hypergraph& apex, const Homomorphism& legB,
                      const Hypergraph& b, const Homomorphism& legC,
                      const Hypergraph& c);

/// Discrete graph with n nodes.
Hypergraph discrete(std::size_t n);

/// Disjoint union; nodes and edges of `b` shifted after those of `a`.
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

}  // namespace strdiag
