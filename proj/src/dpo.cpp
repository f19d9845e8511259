#include "strdiag/dpo.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "strdiag/error.hpp"
#include "strdiag/random.hpp"

namespace strdiag {

namespace {

constexpr NodeId kUnset = static_cast<NodeId>(-1);

std::vector<NodeId> host_leg(const InterfacedGraph& host) {
  std::vector<NodeId> leg = host.inputs;
  leg.insert(leg.end(), host.outputs.begin(), host.outputs.end());
  return leg;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

InterfacedGraph DpoRule::lhs_cospan() const {
  InterfacedGraph c;
  c.graph = lhsGraph;
  c.inputs.assign(lhsInterface.begin(), lhsInterface.begin() + i);
  c.outputs.assign(lhsInterface.begin() + i, lhsInterface.end());
  return c;
}

InterfacedGraph DpoRule::rhs_cospan() const {
  InterfacedGraph c;
  c.graph = rhsGraph;
  c.inputs.assign(rhsInterface.begin(), rhsInterface.begin() + i);
  c.outputs.assign(rhsInterface.begin() + i, rhsInterface.end());
  return c;
}

DpoRule rule_from_cospans(const std::string& name, const InterfacedGraph& lhs,
                          const InterfacedGraph& rhs) {
  if (lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod()) {
    throw Error(Errc::TypeMismatch, "rule '" + name + "' has sides of different types");
  }
  DpoRule r;
  r.name = name;
  r.i = lhs.dom();
  r.j = lhs.cod();
  r.lhsGraph = lhs.graph;
  r.rhsGraph = rhs.graph;
  r.lhsInterface = host_leg(lhs);
  r.rhsInterface = host_leg(rhs);
  r.convexValid = is_mda(lhs) && is_mda(rhs);
  return r;
}

DpoRule rule_from_terms(const std::string& name, const Term& lhs,
                        const Term& rhs, const Signature& sig, Mode mode) {
  const TermType lt = typecheck(lhs, sig, mode);
  const TermType rt = typecheck(rhs, sig, mode);
  if (lt != rt) {
    throw Error(Errc::TypeMismatch, "rule '" + name + "' has sides of different types");
  }
  // cap(i) pairs its output k with output 2i-1-k, so the first i legs of the
  // bent graph meet the inputs of l in reverse order.
  auto unfold = [&](const InterfacedGraph& bent) {
    std::vector<NodeId> leg(bent.outputs.size());
    for (std::size_t k = 0; k < leg.size(); ++k) {
      leg[k] = k < lt.dom ? bent.outputs[lt.dom - 1 - k] : bent.outputs[k];
    }
    return leg;
  };
  const InterfacedGraph bl = interpret(bend(lhs, sig), sig);
  const InterfacedGraph br = interpret(bend(rhs, sig), sig);
  DpoRule r;
  r.name = name;
  r.i = lt.dom;
  r.j = lt.cod;
  r.lhsGraph = bl.graph;
  r.rhsGraph = br.graph;
  r.lhsInterface = unfold(bl);
  r.rhsInterface = unfold(br);
  r.convexValid = is_mda(r.lhs_cospan()) && is_mda(r.rhs_cospan());
  r.lhsTerm = lhs;
  r.rhsTerm = rhs;
  if (mode == Mode::Smc && !r.convexValid) {
    throw Error(Errc::RuleInvalid,
                "rule '" + name + "' is not monogamous acyclic on both sides");
  }
  return r;
}

std::vector<DpoRule> compile_rules(const Theory& theory) {
  std::vector<DpoRule> out;
  for (const auto& r : theory.rules) {
    out.push_back(rule_from_terms(r.name, r.lhs, r.rhs, theory.signature, theory.mode));
  }
  return out;
}

std::vector<Homomorphism> find_matchings(const DpoRule& rule,
                                         const InterfacedGraph& host,
                                         bool convexOnly, bool monoOnly) {
  std::vector<Homomorphism> all =
      enumerate_homomorphisms(rule.lhsGraph, host.graph, monoOnly);
  if (!monoOnly || !convexOnly) return all;
  std::vector<Homomorphism> out;
  for (auto& h : all) {
    if (is_convex(host.graph, image_of(h))) out.push_back(std::move(h));
  }
  return out;
}

bool reproduces_host(const DpoRule& rule, const InterfacedGraph& host,
                     const Homomorphism& match, const Complement& complement) {
  const Hypergraph& g = host.graph;
  const InterfacedGraph& ctx = complement.context;
  if (ctx.inputs.size() != rule.lhsInterface.size()) return false;
  if (complement.nodeToHost.size() != ctx.graph.nodeCount ||
      complement.edgeToHost.size() != ctx.graph.edges.size()) {
    return false;
  }
  const std::vector<NodeId> leg = host_leg(host);
  if (ctx.outputs.size() != leg.size()) return false;
  for (std::size_t k = 0; k < leg.size(); ++k) {
    if (complement.nodeToHost[ctx.outputs[k]] != leg[k]) return false;
  }
  for (std::size_t x = 0; x < ctx.inputs.size(); ++x) {
    if (complement.nodeToHost[ctx.inputs[x]] != match.nodeMap[rule.lhsInterface[x]]) {
      return false;
    }
  }
  PushoutResult po = pushout(rule.lhsInterface, rule.lhsGraph, ctx.inputs, ctx.graph);
  Homomorphism toHost;
  toHost.nodeMap.assign(po.graph.nodeCount, kUnset);
  auto put = [&](NodeId p, NodeId target) {
    if (toHost.nodeMap[p] != kUnset && toHost.nodeMap[p] != target) return false;
    toHost.nodeMap[p] = target;
    return true;
  };
  for (NodeId v = 0; v < rule.lhsGraph.nodeCount; ++v) {
    if (!put(po.fromB.nodeMap[v], match.nodeMap[v])) return false;
  }
  for (NodeId v = 0; v < ctx.graph.nodeCount; ++v) {
    if (!put(po.fromC.nodeMap[v], complement.nodeToHost[v])) return false;
  }
  toHost.edgeMap.assign(po.graph.edges.size(), kUnset);
  for (EdgeId e = 0; e < rule.lhsGraph.edges.size(); ++e) {
    toHost.edgeMap[po.fromB.edgeMap[e]] = match.edgeMap[e];
  }
  for (EdgeId e = 0; e < ctx.graph.edges.size(); ++e) {
    toHost.edgeMap[po.fromC.edgeMap[e]] = complement.edgeToHost[e];
  }
  if (po.graph.nodeCount != g.nodeCount || po.graph.edges.size() != g.edges.size()) {
    return false;
  }
  return toHost.is_mono() && is_homomorphism(po.graph, g, toHost);
}

std::vector<Complement> pushout_complements(const DpoRule& rule,
                                            const InterfacedGraph& host,
                                            const Homomorphism& match) {
  const Hypergraph& L = rule.lhsGraph;
  const Hypergraph& g = host.graph;
  const auto& a = rule.lhsInterface;
  const std::size_t width = a.size();
  std::vector<Complement> out;

  std::vector<bool> matchedEdge(g.edges.size(), false);
  for (EdgeId e : match.edgeMap) {
    if (matchedEdge[e]) return out;  // two L edges on one host edge
    matchedEdge[e] = true;
  }
  std::vector<bool> inImage(g.nodeCount, false);
  for (NodeId v : match.nodeMap) inImage[v] = true;
  std::vector<NodeId> rest;  // host nodes outside the image, ascending
  std::vector<NodeId> restIndex(g.nodeCount, kUnset);
  for (NodeId w = 0; w < g.nodeCount; ++w) {
    if (!inImage[w]) {
      restIndex[w] = rest.size();
      rest.push_back(w);
    }
  }
  std::vector<EdgeId> keptEdges;
  for (EdgeId e = 0; e < g.edges.size(); ++e) {
    if (!matchedEdge[e]) keptEdges.push_back(e);
  }
  const std::vector<NodeId> leg = host_leg(host);

  std::vector<NodeId> fiber(width);
  for (std::size_t x = 0; x < width; ++x) fiber[x] = match.nodeMap[a[x]];

  std::vector<std::size_t> block(width);
  std::vector<NodeId> blockFiber;

  auto emit = [&]() {
    const std::size_t blocks = blockFiber.size();
    // every host node in the image must come from one glued class
    DisjointSets ds(L.nodeCount + blocks);
    for (std::size_t x = 0; x < width; ++x) ds.unite(a[x], L.nodeCount + block[x]);
    std::map<NodeId, std::size_t> classOf;
    for (NodeId v = 0; v < L.nodeCount; ++v) {
      auto [it, fresh] = classOf.emplace(match.nodeMap[v], ds.find(v));
      if (!fresh && it->second != ds.find(v)) return;
    }
    std::vector<std::vector<std::size_t>> blocksOver(g.nodeCount);
    for (std::size_t b = 0; b < blocks; ++b) blocksOver[blockFiber[b]].push_back(b);

    // choice points: endpoints of kept edges, then the host interface
    std::vector<NodeId> points;
    for (EdgeId e : keptEdges) {
      for (NodeId w : g.edges[e].sources) points.push_back(w);
      for (NodeId w : g.edges[e].targets) points.push_back(w);
    }
    points.insert(points.end(), leg.begin(), leg.end());
    for (NodeId w : points) {
      if (inImage[w] && blocksOver[w].empty()) return;  // dangling
    }

    Complement base;
    base.context.graph.nodeCount = blocks + rest.size();
    base.nodeToHost = blockFiber;
    base.nodeToHost.insert(base.nodeToHost.end(), rest.begin(), rest.end());
    for (std::size_t x = 0; x < width; ++x) base.context.inputs.push_back(block[x]);
    base.edgeToHost = keptEdges;

    std::vector<std::size_t> pick(points.size(), 0);
    while (true) {
      Complement c = base;
      std::size_t p = 0;
      auto node = [&](NodeId w) -> NodeId {
        const std::size_t k = p++;
        return inImage[w] ? blocksOver[w][pick[k]] : blocks + restIndex[w];
      };
      for (EdgeId e : keptEdges) {
        Hyperedge ne{g.edges[e].label, {}, {}};
        for (NodeId w : g.edges[e].sources) ne.sources.push_back(node(w));
        for (NodeId w : g.edges[e].targets) ne.targets.push_back(node(w));
        c.context.graph.add_edge(std::move(ne));
      }
      for (NodeId w : leg) c.context.outputs.push_back(node(w));
      if (reproduces_host(rule, host, match, c)) {
        bool seen = false;
        for (const auto& prev : out) {
          if (iso_cospan(prev.context, c.context)) {
            seen = true;
            break;
          }
        }
        if (!seen) out.push_back(std::move(c));
      }
      // next combination, last point varying fastest
      std::size_t k = points.size();
      while (k > 0) {
        --k;
        const std::size_t limit = inImage[points[k]] ? blocksOver[points[k]].size() : 1;
        if (++pick[k] < limit) break;
        pick[k] = 0;
        if (k == 0) return;
      }
      if (points.empty()) return;
    }
  };

  // set partitions of the interface refining the fibres of match∘a
  std::function<void(std::size_t)> partition = [&](std::size_t x) {
    if (x == width) {
      emit();
      return;
    }
    for (std::size_t b = 0; b < blockFiber.size(); ++b) {
      if (blockFiber[b] != fiber[x]) continue;
      block[x] = b;
      partition(x + 1);
    }
    block[x] = blockFiber.size();
    blockFiber.push_back(fiber[x]);
    partition(x + 1);
    blockFiber.pop_back();
  };
  partition(0);
  return out;
}

InterfacedGraph unbent_context(const DpoRule& rule, const InterfacedGraph& host,
                               const Complement& complement) {
  const InterfacedGraph& ctx = complement.context;
  const std::size_t n = host.dom();
  InterfacedGraph u;
  u.graph = ctx.graph;
  for (std::size_t y = 0; y < rule.j; ++y) u.inputs.push_back(ctx.inputs[rule.i + y]);
  u.inputs.insert(u.inputs.end(), ctx.outputs.begin(), ctx.outputs.begin() + n);
  u.outputs.assign(ctx.outputs.begin() + n, ctx.outputs.end());
  for (std::size_t x = 0; x < rule.i; ++x) u.outputs.push_back(ctx.inputs[x]);
  return u;
}

Complement boundary_complement(const DpoRule& rule, const InterfacedGraph& host,
                               const Homomorphism& match) {
  if (!rule.convexValid) {
    throw Error(Errc::RuleInvalid, "rule '" + rule.name + "' is not convex valid");
  }
  if (!match.is_mono()) {
    throw Error(Errc::NotConvex, "matching is not mono");
  }
  const Hypergraph& g = host.graph;
  const auto& a = rule.lhsInterface;
  const std::size_t width = a.size();

  std::vector<NodeId> preimage(g.nodeCount, kUnset);
  for (NodeId v = 0; v < match.nodeMap.size(); ++v) preimage[match.nodeMap[v]] = v;
  std::vector<std::size_t> iPos(rule.lhsGraph.nodeCount, kUnset);
  std::vector<std::size_t> jPos(rule.lhsGraph.nodeCount, kUnset);
  for (std::size_t x = 0; x < width; ++x) {
    auto& slot = x < rule.i ? iPos[a[x]] : jPos[a[x]];
    if (slot == kUnset) slot = x;
  }
  std::vector<NodeId> restIndex(g.nodeCount, kUnset);
  Complement c;
  c.context.graph.nodeCount = width;
  for (std::size_t x = 0; x < width; ++x) {
    c.context.inputs.push_back(x);
    c.nodeToHost.push_back(match.nodeMap[a[x]]);
  }
  for (NodeId w = 0; w < g.nodeCount; ++w) {
    if (preimage[w] == kUnset) {
      restIndex[w] = c.context.graph.add_node();
      c.nodeToHost.push_back(w);
    }
  }
  // glued nodes: first choice, then fallback
  auto resolve = [&](NodeId w, bool preferJ) -> NodeId {
    if (preimage[w] == kUnset) return restIndex[w];
    const NodeId v = preimage[w];
    const std::size_t first = preferJ ? jPos[v] : iPos[v];
    const std::size_t second = preferJ ? iPos[v] : jPos[v];
    if (first != kUnset) return first;
    if (second != kUnset) return second;
    throw Error(Errc::NoComplement,
                "host node " + std::to_string(w) +
                    " is an interior node of the match but is used by the context");
  };
  std::vector<bool> matched(g.edges.size(), false);
  for (EdgeId e : match.edgeMap) matched[e] = true;
  for (EdgeId e = 0; e < g.edges.size(); ++e) {
    if (matched[e]) continue;
    Hyperedge ne{g.edges[e].label, {}, {}};
    for (NodeId w : g.edges[e].sources) ne.sources.push_back(resolve(w, true));
    for (NodeId w : g.edges[e].targets) ne.targets.push_back(resolve(w, false));
    c.context.graph.add_edge(std::move(ne));
    c.edgeToHost.push_back(e);
  }
  for (NodeId w : host.inputs) c.context.outputs.push_back(resolve(w, false));
  for (NodeId w : host.outputs) c.context.outputs.push_back(resolve(w, true));

  if (!reproduces_host(rule, host, match, c)) {
    throw Error(Errc::NoComplement, "no pushout complement for this matching");
  }
  if (!is_monogamous(unbent_context(rule, host, c))) {
    throw Error(Errc::NonMonogamousComplement,
                "the complement is not monogamous; the matching cannot be rewritten");
  }
  return c;
}

InterfacedGraph dpo_step(const InterfacedGraph& host, const DpoRule& rule,
                         const Complement& complement) {
  const InterfacedGraph& ctx = complement.context;
  PushoutResult po =
      pushout(rule.rhsInterface, rule.rhsGraph, ctx.inputs, ctx.graph);
  InterfacedGraph out;
  out.graph = std::move(po.graph);
  const std::size_t n = host.dom();
  for (std::size_t k = 0; k < ctx.outputs.size(); ++k) {
    NodeId v = po.fromC.nodeMap[ctx.outputs[k]];
    (k < n ? out.inputs : out.outputs).push_back(v);
  }
  return canonicalize(out);
}

namespace {

void check_preconditions(const InterfacedGraph& host,
                         const std::vector<DpoRule>& rules, Mode mode) {
  if (mode != Mode::Smc) return;
  if (!is_mda(host)) {
    throw Error(Errc::NotMda, "smc mode needs a monogamous acyclic host");
  }
  for (const auto& r : rules) {
    if (!r.convexValid) {
      throw Error(Errc::RuleInvalid,
                  "rule '" + r.name + "' is not monogamous acyclic on both sides");
    }
  }
}

std::vector<Complement> complements_for(const DpoRule& rule,
                                        const InterfacedGraph& host,
                                        const Homomorphism& match, Mode mode,
                                        bool all) {
  if (mode == Mode::Frobenius) {
    std::vector<Complement> cs = pushout_complements(rule, host, match);
    if (!all && cs.size() > 1) cs.resize(1);
    return cs;
  }
  try {
    return {boundary_complement(rule, host, match)};
  } catch (const Error& e) {
    if (e.code() == Errc::NoComplement || e.code() == Errc::NonMonogamousComplement) {
      return {};
    }
    throw;
  }
}

RewriteStepRecord make_record(const InterfacedGraph& host,
                              const std::vector<DpoRule>& rules, std::size_t r,
                              Homomorphism match, Complement complement) {
  RewriteStepRecord rec;
  rec.ruleName = rules[r].name;
  rec.ruleIndex = r;
  rec.after = dpo_step(host, rules[r], complement);
  rec.matching = std::move(match);
  rec.complement = std::move(complement);
  rec.before = host;
  return rec;
}

std::optional<RewriteStepRecord> step_with(const InterfacedGraph& host,
                                           const std::vector<DpoRule>& rules,
                                           const RewriteOptions& options,
                                           Rng* rng) {
  const bool smc = options.mode == Mode::Smc;
  std::vector<std::pair<std::size_t, Homomorphism>> candidates;
  for (std::size_t r = 0; r < rules.size(); ++r) {
    for (auto& m : find_matchings(rules[r], host, smc)) {
      candidates.emplace_back(r, std::move(m));
    }
  }
  if (options.strategy == Strategy::Random && rng != nullptr) {
    std::shuffle(candidates.begin(), candidates.end(), *rng);
  }
  for (auto& [r, m] : candidates) {
    std::vector<Complement> cs = complements_for(rules[r], host, m, options.mode, false);
    if (cs.empty()) continue;
    RewriteStepRecord rec = make_record(host, rules, r, std::move(m), std::move(cs[0]));
    if (options.measure) {
      rec.metricBefore = options.measure(rec.before);
      rec.metricAfter = options.measure(rec.after);
    }
    return rec;
  }
  return std::nullopt;
}

}  // namespace

std::optional<RewriteStepRecord> rewrite_once(const InterfacedGraph& host,
                                              const std::vector<DpoRule>& rules,
                                              const RewriteOptions& options) {
  check_preconditions(host, rules, options.mode);
  Rng rng(options.seed);
  return step_with(host, rules, options, &rng);
}

std::vector<RewriteStepRecord> all_steps(const InterfacedGraph& host,
                                         const std::vector<DpoRule>& rules,
                                         Mode mode) {
  check_preconditions(host, rules, mode);
  std::vector<RewriteStepRecord> out;
  for (std::size_t r = 0; r < rules.size(); ++r) {
    for (auto& m : find_matchings(rules[r], host, mode == Mode::Smc)) {
      for (auto& c : complements_for(rules[r], host, m, mode, true)) {
        out.push_back(make_record(host, rules, r, m, std::move(c)));
      }
    }
  }
  return out;
}

std::vector<InterfacedGraph> distinct_outcomes(
    const std::vector<RewriteStepRecord>& steps) {
  std::vector<InterfacedGraph> out;
  for (const auto& s : steps) {
    bool seen = false;
    for (const auto& o : out) {
      if (iso_cospan(o, s.after)) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(s.after);
  }
  return out;
}

NormalizeResult normalize(const InterfacedGraph& host,
                          const std::vector<DpoRule>& rules, std::size_t fuel,
                          const RewriteOptions& options) {
  check_preconditions(host, rules, options.mode);
  Rng rng(options.seed);
  NormalizeResult res;
  res.result = canonicalize(host);
  for (std::size_t step = 0;; ++step) {
    auto rec = step_with(res.result, rules, options, &rng);
    if (!rec) {
      res.status = NormalizeStatus::NormalForm;
      return res;
    }
    if (step == fuel) {
      res.status = NormalizeStatus::FuelExhausted;
      return res;
    }
    res.result = rec->after;
    res.trace.push_back(std::move(*rec));
  }
}

std::string trace_line(std::size_t k, const RewriteStepRecord& record) {
  std::string line = "step " + std::to_string(k) + ": rule=" + record.ruleName + " match=[";
  for (std::size_t e = 0; e < record.matching.edgeMap.size(); ++e) {
    if (e) line += ',';
    line += std::to_string(record.matching.edgeMap[e]);
  }
  line += "] metric=";
  line += record.metricAfter ? to_string(*record.metricAfter) : "-";
  return line;
}

}  // namespace strdiag
