#pragma once

// Seeded random instances for property suites and `gen-random`.

#include <cstdint>
#include <random>

#include "strdiag/cospan.hpp"
#include "strdiag/hypergraph.hpp"
#include "strdiag/term.hpp"

namespace strdiag {

using Rng = std::mt19937_64;

/// Generators g0, g1, ... with arities and coarities in [0, maxArity].
Signature random_signature(Rng& rng, std::size_t count, std::size_t maxArity = 3);

/// A well-typed Σ-term with exactly `generators` generator occurrences;
/// composites are padded with identities so that every Seq typechecks.
Term random_term(Rng& rng, const Signature& sig, std::size_t generators);

/// interpret(random_term(...)): always MDA.
InterfacedGraph random_mda(Rng& rng, const Signature& sig, std::size_t edges);

/// Acyclic graph: every edge has sources strictly below its targets in a
/// hidden node order. Not necessarily monogamous.
Hypergraph random_dag(Rng& rng, const Signature& sig, std::size_t nodes,
                      std::size_t edges);

/// Random interfaced graph with arbitrary (possibly repeating) legs.
InterfacedGraph random_cospan(Rng& rng, const Signature& sig,
                              std::size_t nodes, std::size_t edges,
                              std::size_t inputs, std::size_t outputs);

}  // namespace strdiag
