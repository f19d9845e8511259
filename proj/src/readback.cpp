#include "strdiag/readback.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "strdiag/error.hpp"

namespace strdiag {

namespace {

// The subgraph on `nodes` and `edges` of g with interfaces translated.
InterfacedGraph extract(const Hypergraph& g, const std::vector<NodeId>& nodes,
                        const std::vector<EdgeId>& edges,
                        const std::vector<NodeId>& inputs,
                        const std::vector<NodeId>& outputs) {
  std::map<NodeId, NodeId> local;
  for (NodeId v : nodes) local.emplace(v, local.size());
  InterfacedGraph out;
  out.graph.nodeCount = local.size();
  for (EdgeId e : edges) {
    Hyperedge ne{g.edges[e].label, {}, {}};
    for (NodeId v : g.edges[e].sources) ne.sources.push_back(local.at(v));
    for (NodeId v : g.edges[e].targets) ne.targets.push_back(local.at(v));
    out.graph.add_edge(std::move(ne));
  }
  for (NodeId v : inputs) out.inputs.push_back(local.at(v));
  for (NodeId v : outputs) out.outputs.push_back(local.at(v));
  return out;
}

std::vector<NodeId> ordered(const std::set<NodeId>& set,
                            const std::optional<std::vector<NodeId>>& order,
                            const char* what) {
  if (!order) return {set.begin(), set.end()};
  std::set<NodeId> given(order->begin(), order->end());
  if (given != set || given.size() != order->size()) {
    throw Error(Errc::InvalidGraph,
                std::string("explicit ") + what + " order does not match the boundary");
  }
  return *order;
}

std::vector<NodeId> concat(std::vector<NodeId> a, const std::vector<NodeId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

ConvexFactorization convex_factorize(
    const InterfacedGraph& host, const SubgraphSelection& selection,
    const std::optional<std::vector<NodeId>>& iOrder,
    const std::optional<std::vector<NodeId>>& jOrder) {
  if (!is_mda(host)) throw Error(Errc::NotMda, "host is not monogamous acyclic");
  if (!is_convex(host.graph, selection)) {
    throw Error(Errc::NotConvex, "selected subgraph is not convex");
  }
  const Hypergraph& g = host.graph;
  std::vector<bool> inL(g.nodeCount, false);
  for (NodeId v : selection.nodes) inL[v] = true;
  const std::vector<bool> reachesL = backward_reachable_edges(g, inL);

  std::set<EdgeId> e1, e2;
  std::set<NodeId> n1(host.inputs.begin(), host.inputs.end());
  std::set<NodeId> n2(host.outputs.begin(), host.outputs.end());
  for (EdgeId e = 0; e < g.edges.size(); ++e) {
    if (selection.edges.count(e)) continue;
    if (reachesL[e]) {
      e1.insert(e);
      n1.insert(g.edges[e].sources.begin(), g.edges[e].sources.end());
      n1.insert(g.edges[e].targets.begin(), g.edges[e].targets.end());
    } else {
      e2.insert(e);
    }
  }
  for (EdgeId e : e2) {
    n2.insert(g.edges[e].sources.begin(), g.edges[e].sources.end());
    n2.insert(g.edges[e].targets.begin(), g.edges[e].targets.end());
  }
  for (NodeId v = 0; v < g.nodeCount; ++v) {
    if (!n1.count(v) && !inL[v]) n2.insert(v);
  }

  std::set<NodeId> iSet, jSet, kSet;
  for (NodeId v : selection.nodes) {
    if (n1.count(v)) iSet.insert(v);
    if (n2.count(v)) jSet.insert(v);
  }
  for (NodeId v : n1) {
    if (n2.count(v) && !inL[v]) kSet.insert(v);
  }

  ConvexFactorization f;
  f.iNodes = ordered(iSet, iOrder, "i");
  f.jNodes = ordered(jSet, jOrder, "j");
  f.kNodes.assign(kSet.begin(), kSet.end());

  f.c1 = extract(g, {n1.begin(), n1.end()}, {e1.begin(), e1.end()}, host.inputs,
                 concat(f.kNodes, f.iNodes));
  f.l = extract(g, {selection.nodes.begin(), selection.nodes.end()},
                {selection.edges.begin(), selection.edges.end()}, f.iNodes,
                f.jNodes);
  f.c2 = extract(g, {n2.begin(), n2.end()}, {e2.begin(), e2.end()},
                 concat(f.kNodes, f.jNodes), host.outputs);
  return f;
}

InterfacedGraph recompose(const ConvexFactorization& f,
                          const InterfacedGraph& middle) {
  return compose(compose(f.c1, tensor(identity(f.kNodes.size()), middle)), f.c2);
}

Term readback_mda(const InterfacedGraph& c) {
  if (!is_mda(c)) {
    throw Error(Errc::NotMda, "graph is not monogamous acyclic");
  }
  const InterfacedGraph k = canonicalize(c);
  const Hypergraph& g = k.graph;
  std::vector<NodeId> frontier = k.inputs;
  std::vector<bool> done(g.edges.size(), false);
  Term result = Term::id(frontier.size());
  for (std::size_t step = 0; step < g.edges.size(); ++step) {
    EdgeId pick = g.edges.size();
    std::vector<std::size_t> at;
    for (EdgeId e = 0; e < g.edges.size() && pick == g.edges.size(); ++e) {
      if (done[e]) continue;
      at.clear();
      for (NodeId v : g.edges[e].sources) {
        auto it = std::find(frontier.begin(), frontier.end(), v);
        if (it == frontier.end()) break;
        at.push_back(static_cast<std::size_t>(it - frontier.begin()));
      }
      if (at.size() == g.edges[e].sources.size()) pick = e;
    }
    // acyclicity guarantees some edge is ready
    if (pick == g.edges.size()) throw Error(Errc::NotMda, "no edge ready");
    done[pick] = true;

    const std::size_t w = frontier.size();
    std::vector<bool> front(w, false);
    for (std::size_t p : at) front[p] = true;
    std::vector<std::size_t> target(w);
    std::vector<NodeId> rest;
    for (std::size_t r = 0; r < at.size(); ++r) target[at[r]] = r;
    for (std::size_t p = 0; p < w; ++p) {
      if (front[p]) continue;
      target[p] = at.size() + rest.size();
      rest.push_back(frontier[p]);
    }
    const Generator gen{g.edges[pick].label, at.size(), g.edges[pick].targets.size()};
    result = seq_smart(result, permutation_term(target));
    result = seq_smart(result, par_smart(Term::gen(gen.name), Term::id(rest.size())));
    frontier = g.edges[pick].targets;
    frontier.insert(frontier.end(), rest.begin(), rest.end());
  }
  std::vector<std::size_t> target(frontier.size());
  for (std::size_t p = 0; p < frontier.size(); ++p) {
    auto it = std::find(k.outputs.begin(), k.outputs.end(), frontier[p]);
    target[p] = static_cast<std::size_t>(it - k.outputs.begin());
  }
  return seq_smart(result, permutation_term(target));
}

namespace {

Term mul_tree(std::size_t k) {
  if (k == 0) return Term::funit();
  Term t = Term::id(1);
  for (std::size_t s = 2; s <= k; ++s) {
    t = seq_smart(par_smart(t, Term::id(1)), Term::fmul());
  }
  return t;
}

Term comul_tree(std::size_t k) {
  if (k == 0) return Term::fcounit();
  Term t = Term::id(1);
  for (std::size_t s = 2; s <= k; ++s) {
    t = seq_smart(Term::fcomul(), par_smart(t, Term::id(1)));
  }
  return t;
}

// Positions of f sorted by (fiber, position).
std::vector<std::size_t> fiber_order(const std::vector<NodeId>& f) {
  std::vector<std::size_t> pos(f.size());
  std::iota(pos.begin(), pos.end(), 0);
  std::stable_sort(pos.begin(), pos.end(),
                   [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
  return pos;
}

}  // namespace

Term function_cospan_term(std::size_t nodes, const std::vector<NodeId>& left,
                          const std::vector<NodeId>& right) {
  std::vector<std::size_t> leftFiber(nodes, 0), rightFiber(nodes, 0);
  for (NodeId v : left) ++leftFiber.at(v);
  for (NodeId v : right) ++rightFiber.at(v);

  const std::vector<std::size_t> sortedLeft = fiber_order(left);
  std::vector<std::size_t> toSorted(left.size());
  for (std::size_t r = 0; r < sortedLeft.size(); ++r) toSorted[sortedLeft[r]] = r;
  Term t = permutation_term(toSorted);

  Term merge = Term::id(0);
  Term split = Term::id(0);
  for (NodeId v = 0; v < nodes; ++v) {
    merge = par_smart(merge, mul_tree(leftFiber[v]));
    split = par_smart(split, comul_tree(rightFiber[v]));
  }
  t = seq_smart(seq_smart(t, merge), split);

  const std::vector<std::size_t> sortedRight = fiber_order(right);
  return seq_smart(t, permutation_term(sortedRight));
}

Term readback_frobenius(const InterfacedGraph& c) {
  c.validate();
  const Hypergraph& g = c.graph;
  const std::size_t N = g.nodeCount;
  std::vector<NodeId> leftOut(N), rightIn(N);
  std::iota(leftOut.begin(), leftOut.end(), 0);
  std::iota(rightIn.begin(), rightIn.end(), 0);
  Term middle = Term::id(N);
  for (const auto& e : g.edges) {
    leftOut.insert(leftOut.end(), e.sources.begin(), e.sources.end());
    rightIn.insert(rightIn.end(), e.targets.begin(), e.targets.end());
    middle = par_smart(middle, Term::gen(e.label));
  }
  Term left = function_cospan_term(N, c.inputs, leftOut);
  Term right = function_cospan_term(N, rightIn, c.outputs);
  return seq_smart(seq_smart(left, middle), right);
}

}  // namespace strdiag
