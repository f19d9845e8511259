#pragma once

// Convex factorization of MDA cospans and readback from graphs to terms.

#include <optional>
#include <vector>

#include "strdiag/cospan.hpp"
#include "strdiag/hypergraph.hpp"
#include "strdiag/term.hpp"

namespace strdiag {

/// host ≅ c1 ; (id_k ⊕ l) ; c2 with c1: n -> k+i, l: i -> j, c2: k+j -> m.
struct ConvexFactorization {
  InterfacedGraph c1;
  InterfacedGraph l;
  InterfacedGraph c2;
  // Host node ids of the three boundaries, in interface order.
  std::vector<NodeId> iNodes;
  std::vector<NodeId> jNodes;
  std::vector<NodeId> kNodes;
};

/// C1 is the smallest subgraph holding the host inputs and every edge outside
/// L with a path into L; C2 holds the rest plus the outputs. Boundaries are
/// ordered by ascending host id unless `iOrder` / `jOrder` give an explicit
/// order (which must list exactly the same nodes).
/// Throws Errc::NotMda, Errc::NotConvex, Errc::InvalidGraph.
ConvexFactorization convex_factorize(
    const InterfacedGraph& host, const SubgraphSelection& selection,
    const std::optional<std::vector<NodeId>>& iOrder = std::nullopt,
    const std::optional<std::vector<NodeId>>& jOrder = std::nullopt);

/// c1 ; (id_k ⊕ middle) ; c2 for a middle of type i -> j.
InterfacedGraph recompose(const ConvexFactorization& f,
                          const InterfacedGraph& middle);

/// A Σ-term whose interpretation is iso to c. The graph is canonicalized
/// first, then edges are emitted one at a time: the lowest-index edge whose
/// sources are all available is brought to the front by a permutation.
/// Iso inputs give identical terms. Throws Errc::NotMda.
Term readback_mda(const InterfacedGraph& c);

/// Term over Σ + Frobenius for an arbitrary interfaced graph:
/// enc(n -> N <- N+ñ) ; (id_N ⊕ edges) ; enc(N+m̃ -> N <- m).
Term readback_frobenius(const InterfacedGraph& c);

/// Frobenius term for the discrete cospan p -> N <- q given by two
/// functions into N.
Term function_cospan_term(std::size_t nodes, const std::vector<NodeId>& left,
                          const std::vector<NodeId>& right);

}  // namespace strdiag
