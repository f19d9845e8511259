#pragma once

// Interfaced hypergraphs n -> G <- m with discrete feet (Frobenius termgraphs)
// and their PROP structure.

#include <string>
#include <vector>

#include "strdiag/hypergraph.hpp"

namespace strdiag {

struct InterfacedGraph {
  Hypergraph graph;
  std::vector<NodeId> inputs;   // position k -> node; any function
  std::vector<NodeId> outputs;

  std::size_t dom() const { return inputs.size(); }
  std::size_t cod() const { return outputs.size(); }

  void validate() const;

  bool operator==(const InterfacedGraph&) const = default;
};

enum class FrobGen { Mul, Unit, Comul, Counit };

/// Sequential composition by pushout along a.outputs / b.inputs; the result
/// is canonicalized. Throws Errc::InterfaceMismatch.
InterfacedGraph compose(const InterfacedGraph& a, const InterfacedGraph& b);

/// Disjoint union with a's interfaces first.
InterfacedGraph tensor(const InterfacedGraph& a, const InterfacedGraph& b);

InterfacedGraph identity(std::size_t n);

/// n+m nodes; inputs 0..n+m-1, outputs the n-block and m-block swapped.
InterfacedGraph symmetry(std::size_t n, std::size_t m);

/// Single-node cospans: fmul 2->1, funit 0->1, fcomul 1->2, fcounit 1->0.
InterfacedGraph frob_gen(FrobGen which);

/// The cospan of functions n -> N <- m as a discrete interfaced graph.
InterfacedGraph function_cospan(std::size_t nodes,
                                std::vector<NodeId> inputs,
                                std::vector<NodeId> outputs);

bool is_monogamous(const InterfacedGraph& c);
bool is_mda(const InterfacedGraph& c);

/// Isomorphism of graphs commuting with both interfaces positionally.
bool iso_cospan(const InterfacedGraph& a, const InterfacedGraph& b);

/// Deterministic renumbering of nodes and edges. Traversal starts at the
/// inputs, then outputs; components not connected to the interface follow,
/// ordered by a root-minimal encoding. On MDA cospans isomorphic arguments
/// give identical results. Idempotent.
InterfacedGraph canonicalize(const InterfacedGraph& c);

/// Stable textual key of a canonical form (used for visited sets).
std::string canonical_key(const InterfacedGraph& c);

}  // namespace strdiag
