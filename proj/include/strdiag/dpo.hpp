#pragma once

// DPO rules with discrete interface, matching, pushout complements, boundary
// complements, single steps and normalization.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "strdiag/cospan.hpp"
#include "strdiag/hypergraph.hpp"
#include "strdiag/metric.hpp"
#include "strdiag/syntax.hpp"
#include "strdiag/term.hpp"

namespace strdiag {

/// A span L <- i+j -> R, stored bent: the interfaces are flat lists of
/// length i+j whose first i entries are the un-bent inputs.
struct DpoRule {
  std::string name;
  Hypergraph lhsGraph;
  std::vector<NodeId> lhsInterface;
  Hypergraph rhsGraph;
  std::vector<NodeId> rhsInterface;
  std::size_t i = 0;
  std::size_t j = 0;
  /// i -> L <- j and i -> R <- j are both MDA.
  bool convexValid = false;
  std::optional<Term> lhsTerm;
  std::optional<Term> rhsTerm;

  InterfacedGraph lhs_cospan() const;
  InterfacedGraph rhs_cospan() const;
};

/// Interprets the bent sides. The interface is reordered so that it reads
/// [inputs of l] ++ [outputs of l]. In smc mode the rule must be convex
/// valid. Throws type errors, Errc::RuleInvalid.
DpoRule rule_from_terms(const std::string& name, const Term& lhs,
                        const Term& rhs, const Signature& sig, Mode mode);

/// Rule from two interfaced graphs of the same type i -> j.
DpoRule rule_from_cospans(const std::string& name, const InterfacedGraph& lhs,
                          const InterfacedGraph& rhs);

std::vector<DpoRule> compile_rules(const Theory& theory);

/// Mono homomorphisms L -> host in deterministic order; `convexOnly` also
/// requires a convex image. With monoOnly = false every homomorphism is
/// returned (convexOnly is then ignored).
std::vector<Homomorphism> find_matchings(const DpoRule& rule,
                                         const InterfacedGraph& host,
                                         bool convexOnly, bool monoOnly = true);

/// A pushout complement. context.inputs is the leg i+j -> C and
/// context.outputs the host interface n+m -> C.
struct Complement {
  InterfacedGraph context;
  std::vector<NodeId> nodeToHost;
  std::vector<EdgeId> edgeToHost;
};

/// Every pushout complement up to iso (commuting with both legs), brute
/// force. Empty when the dangling condition fails.
std::vector<Complement> pushout_complements(const DpoRule& rule,
                                            const InterfacedGraph& host,
                                            const Homomorphism& match);

/// The constructive boundary complement for a mono match. Convexity is the
/// caller's business (a non-convex match may still have one).
/// Throws Errc::NoComplement, Errc::NonMonogamousComplement, Errc::RuleInvalid,
/// and Errc::NotConvex for a match that is not mono.
Complement boundary_complement(const DpoRule& rule, const InterfacedGraph& host,
                               const Homomorphism& match);

/// j+n -> C <- m+i, the un-bent reading of a complement.
InterfacedGraph unbent_context(const DpoRule& rule, const InterfacedGraph& host,
                               const Complement& complement);

/// True iff the left square with this complement is a pushout reproducing
/// host (commuting with the interface).
bool reproduces_host(const DpoRule& rule, const InterfacedGraph& host,
                     const Homomorphism& match, const Complement& complement);

/// Right pushout of R <- i+j -> C; result canonicalized.
InterfacedGraph dpo_step(const InterfacedGraph& host, const DpoRule& rule,
                         const Complement& complement);

struct RewriteStepRecord {
  std::string ruleName;
  std::size_t ruleIndex = 0;
  Homomorphism matching;
  Complement complement;
  InterfacedGraph before;
  InterfacedGraph after;
  std::optional<NbMetric> metricBefore;
  std::optional<NbMetric> metricAfter;
};

enum class Strategy { Deterministic, Random };

struct RewriteOptions {
  Mode mode = Mode::Smc;
  Strategy strategy = Strategy::Deterministic;
  std::uint64_t seed = 0;
  /// When set, every record carries metricBefore/After.
  std::function<NbMetric(const InterfacedGraph&)> measure;
};

/// One step with the first applicable (rule, match, complement), or nullopt
/// at a normal form. smc mode: convex matches and boundary complements only;
/// throws Errc::NotMda for a non-MDA host and Errc::RuleInvalid for rules
/// that are not convex valid.
std::optional<RewriteStepRecord> rewrite_once(const InterfacedGraph& host,
                                              const std::vector<DpoRule>& rules,
                                              const RewriteOptions& options);

/// Every (rule, match, complement) step from host.
std::vector<RewriteStepRecord> all_steps(const InterfacedGraph& host,
                                         const std::vector<DpoRule>& rules,
                                         Mode mode);

/// Results of all_steps deduplicated up to iso_cospan, first occurrence kept.
std::vector<InterfacedGraph> distinct_outcomes(
    const std::vector<RewriteStepRecord>& steps);

enum class NormalizeStatus { NormalForm, FuelExhausted };

struct NormalizeResult {
  InterfacedGraph result;
  std::vector<RewriteStepRecord> trace;
  NormalizeStatus status = NormalizeStatus::NormalForm;
};

NormalizeResult normalize(const InterfacedGraph& host,
                          const std::vector<DpoRule>& rules, std::size_t fuel,
                          const RewriteOptions& options);

/// `step <k>: rule=<name> match=<edge indices> metric=<tuple>`
std::string trace_line(std::size_t k, const RewriteStepRecord& record);

}  // namespace strdiag
