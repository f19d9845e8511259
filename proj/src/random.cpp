#include "strdiag/random.hpp"

#include <algorithm>
#include <numeric>

namespace strdiag {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

struct Typed {
  Term term;
  TermType type;
};

Typed pad(Rng& rng, Typed t, std::size_t extraIn) {
  if (extraIn == 0) return t;
  // Identity on the side, occasionally routed through a symmetry.
  Term side = Term::id(extraIn);
  Term body = coin(rng) ? Term::par(t.term, side) : Term::par(side, t.term);
  if (uniform(rng, 0, 3) == 0) {
    const std::size_t w = t.type.cod + extraIn;
    const std::size_t a = uniform(rng, 0, w);
    body = Term::seq(body, Term::sym(a, w - a));
  }
  return {body, {t.type.dom + extraIn, t.type.cod + extraIn}};
}

Typed build(Rng& rng, const Signature& sig, std::size_t gens) {
  const auto& all = sig.generators();
  if (gens == 0) {
    if (coin(rng)) {
      std::size_t n = uniform(rng, 0, 2);
      return {Term::id(n), {n, n}};
    }
    std::size_t a = uniform(rng, 0, 2);
    std::size_t b = uniform(rng, 0, 2);
    return {Term::sym(a, b), {a + b, a + b}};
  }
  if (gens == 1) {
    const Generator& g = all[uniform(rng, 0, all.size() - 1)];
    Typed t{Term::gen(g.name), {g.arity, g.coarity}};
    if (uniform(rng, 0, 3) == 0) t = pad(rng, std::move(t), uniform(rng, 1, 2));
    return t;
  }
  const std::size_t left = uniform(rng, 1, gens - 1);
  Typed a = build(rng, sig, left);
  Typed b = build(rng, sig, gens - left);
  if (uniform(rng, 0, 2) == 0) {
    return {Term::par(a.term, b.term),
            {a.type.dom + b.type.dom, a.type.cod + b.type.cod}};
  }
  if (a.type.cod < b.type.dom) {
    a = pad(rng, std::move(a), b.type.dom - a.type.cod);
  } else if (a.type.cod > b.type.dom) {
    b = pad(rng, std::move(b), a.type.cod - b.type.dom);
  }
  return {Term::seq(a.term, b.term), {a.type.dom, b.type.cod}};
}

}  // namespace

Signature random_signature(Rng& rng, std::size_t count, std::size_t maxArity) {
  Signature sig;
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t a = uniform(rng, 0, maxArity);
    std::size_t c = uniform(rng, 0, maxArity);
    // keep at least one generator that can sit in the middle of a chain
    if (k == 0) {
      a = std::max<std::size_t>(a, 1);
      c = std::max<std::size_t>(c, 1);
    }
    sig.add({"g" + std::to_string(k), a, c});
  }
  return sig;
}

Term random_term(Rng& rng, const Signature& sig, std::size_t generators) {
  if (sig.empty() && generators > 0) generators = 0;
  return build(rng, sig, generators).term;
}

InterfacedGraph random_mda(Rng& rng, const Signature& sig, std::size_t edges) {
  return interpret(random_term(rng, sig, edges), sig);
}

Hypergraph random_dag(Rng& rng, const Signature& sig, std::size_t nodes,
                      std::size_t edges) {
  Hypergraph g;
  g.nodeCount = std::max<std::size_t>(nodes, 2);
  const auto& all = sig.generators();
  for (std::size_t k = 0; k < edges && !all.empty(); ++k) {
    const Generator& gen = all[uniform(rng, 0, all.size() - 1)];
    const std::size_t pivot = uniform(rng, 0, g.nodeCount - 2);
    Hyperedge e{gen.name, {}, {}};
    for (std::size_t p = 0; p < gen.arity; ++p) {
      e.sources.push_back(uniform(rng, 0, pivot));
    }
    for (std::size_t p = 0; p < gen.coarity; ++p) {
      e.targets.push_back(uniform(rng, pivot + 1, g.nodeCount - 1));
    }
    g.add_edge(std::move(e));
  }
  return g;
}

InterfacedGraph random_cospan(Rng& rng, const Signature& sig,
                              std::size_t nodes, std::size_t edges,
                              std::size_t inputs, std::size_t outputs) {
  InterfacedGraph c;
  c.graph.nodeCount = std::max<std::size_t>(nodes, 1);
  const auto& all = sig.generators();
  const std::size_t top = c.graph.nodeCount - 1;
  for (std::size_t k = 0; k < edges && !all.empty(); ++k) {
    const Generator& gen = all[uniform(rng, 0, all.size() - 1)];
    Hyperedge e{gen.name, {}, {}};
    for (std::size_t p = 0; p < gen.arity; ++p) e.sources.push_back(uniform(rng, 0, top));
    for (std::size_t p = 0; p < gen.coarity; ++p) e.targets.push_back(uniform(rng, 0, top));
    c.graph.add_edge(std::move(e));
  }
  for (std::size_t k = 0; k < inputs; ++k) c.inputs.push_back(uniform(rng, 0, top));
  for (std::size_t k = 0; k < outputs; ++k) c.outputs.push_back(uniform(rng, 0, top));
  return c;
}

}  // namespace strdiag
