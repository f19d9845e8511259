#pragma once

// Bounded equational proof search: two terms are equal in the theory iff
// their interpretations are joined by steps of the symmetrized rule set.

#include <optional>
#include <string>
#include <vector>

#include "strdiag/cospan.hpp"
#include "strdiag/dpo.hpp"
#include "strdiag/syntax.hpp"
#include "strdiag/term.hpp"

namespace strdiag {

struct ProofStep {
  /// Rule name, suffixed with "^-1" when used right to left.
  std::string ruleName;
  InterfacedGraph before;
  InterfacedGraph after;
};

struct ProveOptions {
  /// Longest derivation considered.
  std::size_t fuel = 10;
  /// Give up (inconclusive) once this many graphs have been visited.
  std::size_t maxStates = 200000;
};

/// Each rule together with its reverse.
std::vector<DpoRule> symmetrize(const std::vector<DpoRule>& rules);

/// Bidirectional breadth-first search. nullopt means inconclusive, never
/// "not equal". An empty trace means the two graphs are already iso.
std::optional<std::vector<ProofStep>> prove_equal(
    const InterfacedGraph& a, const InterfacedGraph& b,
    const std::vector<DpoRule>& rules, Mode mode,
    const ProveOptions& options = {});

/// Typechecks both terms in the theory's mode; throws Errc::TypeMismatch
/// when their types differ.
std::optional<std::vector<ProofStep>> prove_equal(
    const Term& t1, const Term& t2, const Theory& theory,
    const ProveOptions& options = {});

}  // namespace strdiag
