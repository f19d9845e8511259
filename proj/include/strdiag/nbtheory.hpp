#pragma once

// The non-commutative bimonoid system BA1-BA10 and its termination metric.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strdiag/cospan.hpp"
#include "strdiag/dpo.hpp"
#include "strdiag/metric.hpp"
#include "strdiag/syntax.hpp"

namespace strdiag {

/// mu: 2 -> 1, eta: 0 -> 1, nu: 1 -> 2, eps: 1 -> 0.
Signature nb_signature();

/// The ten equations oriented left to right, as a theory file.
std::string nb_theory_text();
Theory nb_theory();

/// Interface sizes 4,4,2,2,2,2,2,2,4,0.
std::vector<DpoRule> nb_system();

/// Paths from an input node or an eta edge to an output node or an eps
/// edge. A path is an edge sequence together with the node it crosses
/// between consecutive edges, plus its start and end node; a node that is
/// both an input and an output is a path of length zero.
/// Throws Errc::Cyclic.
std::uint64_t count_u_paths(const InterfacedGraph& c);

/// Paths (counted as above) starting at a mu edge and ending at a nu edge.
/// Throws Errc::Cyclic.
std::uint64_t count_m_paths(const Hypergraph& g);

/// Size of the mu-tree at the first source of a mu edge, of the nu-tree at
/// the first target of a nu edge, 0 otherwise.
std::size_t l_weight(const Hypergraph& g, EdgeId h);
std::size_t l_weight_sum(const Hypergraph& g);

/// Throws Errc::NotMda.
NbMetric metric(const InterfacedGraph& c);

struct TraceReport {
  bool ok = true;
  std::size_t steps = 0;
  std::optional<std::size_t> firstViolation;
  std::string detail;
};

/// metric(after) < metric(before) at every step.
TraceReport check_trace_decreasing(const std::vector<RewriteStepRecord>& trace);

/// The component-wise claim made for each rule:
/// BA1/BA2 fix U, M, #mu, #nu and lower L; BA3-BA6, BA10 lower U;
/// BA7 (BA8) fixes U, M and lowers #nu (#mu); BA9 fixes U and lowers M.
bool satisfies_rule_claim(const std::string& rule, const NbMetric& before,
                          const NbMetric& after);

}  // namespace strdiag
