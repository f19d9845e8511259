#include <doctest.h>

#include "strdiag/error.hpp"
#include "strdiag/random.hpp"
#include "strdiag/readback.hpp"
#include "strdiag/syntax.hpp"

using namespace strdiag;

namespace {

const Signature& sig() {
  static const Signature s({{"e1", 0, 1}, {"e2", 1, 0}, {"e3", 1, 1},
                            {"mu", 2, 1}, {"o", 2, 1}});
  return s;
}

InterfacedGraph I(const std::string& t) { return interpret(parse_term(t), sig()); }

bool only_wiring(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Id:
    case Term::Kind::Sym: return true;
    case Term::Kind::Seq:
    case Term::Kind::Par: return only_wiring(t.left()) && only_wiring(t.right());
    default: return false;
  }
}

SubgraphSelection edge_with(const InterfacedGraph& c, EdgeId e) {
  return selection_of(c.graph, {e});
}

}  // namespace

TEST_CASE("convex_factorize") {
  InterfacedGraph chain = I("e3 ; e3");
  // the edge consuming the output of the other
  EdgeId second = chain.graph.edges[0].targets[0] == chain.outputs[0] ? 0 : 1;
  ConvexFactorization f = convex_factorize(chain, edge_with(chain, second));
  CHECK(f.kNodes.empty());
  CHECK(iso_cospan(f.c1, I("e3")));
  CHECK(iso_cospan(f.c2, identity(1)));
  CHECK(iso_cospan(recompose(f, f.l), chain));

  SubgraphSelection all = selection_of(chain.graph, {0, 1});
  ConvexFactorization whole = convex_factorize(chain, all);
  CHECK(whole.c1.graph.edges.empty());
  CHECK(whole.c2.graph.edges.empty());

  InterfacedGraph assoc = I("(mu * id 1) ; mu");
  EdgeId first = 0;
  for (EdgeId e = 0; e < 2; ++e) {
    if (assoc.graph.edges[e].targets[0] != assoc.outputs[0]) first = e;
  }
  ConvexFactorization a = convex_factorize(assoc, edge_with(assoc, first));
  CHECK(a.kNodes.size() == 1);
  CHECK(iso_cospan(recompose(a, a.l), assoc));

  InterfacedGraph three = I("e3 ; e3 ; e3");
  std::set<EdgeId> outer;
  for (EdgeId e = 0; e < 3; ++e) {
    const auto& edge = three.graph.edges[e];
    if (edge.sources[0] == three.inputs[0] || edge.targets[0] == three.outputs[0]) {
      outer.insert(e);
    }
  }
  CHECK_THROWS_AS(convex_factorize(three, selection_of(three.graph, outer)), Error);
  CHECK_THROWS_AS(convex_factorize(frob_gen(FrobGen::Mul), {}), Error);
}

TEST_CASE("convex_factorize on random convex selections") {
  Rng rng(31);
  Signature s = random_signature(rng, 4);
  int tried = 0;
  for (int round = 0; round < 400; ++round) {
    InterfacedGraph host = random_mda(rng, s, 1 + round % 8);
    std::set<EdgeId> pick;
    for (EdgeId e = 0; e < host.graph.edges.size(); ++e) {
      if (rng() % 3 == 0) pick.insert(e);
    }
    SubgraphSelection sel = selection_of(host.graph, pick);
    if (!is_convex(host.graph, sel)) continue;
    ++tried;
    ConvexFactorization f = convex_factorize(host, sel);
    CHECK(is_mda(f.c1));
    CHECK(is_mda(f.l));
    CHECK(is_mda(f.c2));
    CHECK(iso_cospan(recompose(f, f.l), host));
  }
  CHECK(tried > 100);
}

TEST_CASE("readback_mda") {
  Term perm = readback_mda(symmetry(2, 1));
  CHECK(only_wiring(perm));
  CHECK(iso_cospan(interpret(perm, sig()), symmetry(2, 1)));
  CHECK(readback_mda(I("o")) == Term::gen("o"));
  CHECK_THROWS_AS(readback_mda(frob_gen(FrobGen::Mul)), Error);

  Rng rng(41);
  Signature s = random_signature(rng, 5);
  for (int round = 0; round < 300; ++round) {
    Term t = random_term(rng, s, round % 13);
    InterfacedGraph c = interpret(t, s);
    Term back = readback_mda(c);
    CHECK(iso_cospan(interpret(back, s), c));
    CHECK(typecheck(back, s, Mode::Smc) == typecheck(t, s, Mode::Smc));
  }
}

TEST_CASE("readback_frobenius") {
  CHECK(iso_cospan(interpret(readback_frobenius(function_cospan(1, {0, 0}, {0})), sig()),
                   frob_gen(FrobGen::Mul)));
  CHECK(readback_frobenius(InterfacedGraph{}) == Term::id(0));
  Rng rng(51);
  Signature s = random_signature(rng, 4);
  for (int round = 0; round < 200; ++round) {
    InterfacedGraph c = round % 2 ? random_mda(rng, s, round % 7)
                                  : random_cospan(rng, s, 1 + round % 4, round % 4,
                                                  round % 3, (round / 3) % 3);
    CHECK(iso_cospan(interpret(readback_frobenius(c), s), c));
  }
}
