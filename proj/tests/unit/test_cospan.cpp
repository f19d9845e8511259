#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "strdiag/cospan.hpp"
#include "strdiag/error.hpp"
#include "strdiag/random.hpp"
#include "strdiag/syntax.hpp"

using namespace strdiag;

namespace {

const Signature& sig() {
  static const Signature s({{"e1", 0, 1}, {"e2", 1, 0}, {"e3", 1, 1},
                            {"mu", 2, 1}, {"eta", 0, 1}, {"nu", 1, 2},
                            {"eps", 1, 0}});
  return s;
}

InterfacedGraph I(const std::string& t) { return interpret(parse_term(t), sig()); }

InterfacedGraph shuffled(const InterfacedGraph& c, Rng& rng) {
  std::vector<NodeId> pn(c.graph.nodeCount);
  std::iota(pn.begin(), pn.end(), 0);
  std::shuffle(pn.begin(), pn.end(), rng);
  std::vector<EdgeId> pe(c.graph.edges.size());
  std::iota(pe.begin(), pe.end(), 0);
  std::shuffle(pe.begin(), pe.end(), rng);
  InterfacedGraph out;
  out.graph.nodeCount = c.graph.nodeCount;
  out.graph.edges.resize(pe.size());
  for (EdgeId e = 0; e < pe.size(); ++e) {
    Hyperedge ne{c.graph.edges[e].label, {}, {}};
    for (NodeId v : c.graph.edges[e].sources) ne.sources.push_back(pn[v]);
    for (NodeId v : c.graph.edges[e].targets) ne.targets.push_back(pn[v]);
    out.graph.edges[pe[e]] = ne;
  }
  for (NodeId v : c.inputs) out.inputs.push_back(pn[v]);
  for (NodeId v : c.outputs) out.outputs.push_back(pn[v]);
  return out;
}

// Monogamy via the bijection characterisation: interior nodes are in
// bijection with edge target slots / source slots once interfaces are added.
bool monogamous_by_counting(const InterfacedGraph& c) {
  std::vector<std::size_t> in(c.graph.nodeCount, 0), out(c.graph.nodeCount, 0);
  for (NodeId v : c.inputs) ++in[v];
  for (NodeId v : c.outputs) ++out[v];
  for (const auto& e : c.graph.edges) {
    for (NodeId v : e.targets) ++in[v];
    for (NodeId v : e.sources) ++out[v];
  }
  for (NodeId v = 0; v < c.graph.nodeCount; ++v) {
    if (in[v] != 1 || out[v] != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("compose") {
  InterfacedGraph c = I("e3");
  CHECK(iso_cospan(compose(identity(1), c), c));
  CHECK(iso_cospan(compose(frob_gen(FrobGen::Comul), frob_gen(FrobGen::Mul)),
                   function_cospan(1, {0}, {0})));
  InterfacedGraph cc = compose(c, c);
  CHECK(cc.graph.nodeCount == 3);
  CHECK(cc.graph.edges.size() == 2);
  CHECK_THROWS_AS(compose(identity(1), identity(2)), Error);
}

TEST_CASE("tensor") {
  CHECK(iso_cospan(tensor(identity(1), identity(1)), identity(2)));
  InterfacedGraph c = I("mu");
  CHECK(iso_cospan(tensor(identity(0), c), c));
  CHECK(iso_cospan(tensor(c, identity(0)), c));
  InterfacedGraph t = tensor(c, I("e3 ; e3"));
  CHECK(t.graph.nodeCount == 3 + 3);
  CHECK(t.graph.edges.size() == 3);
}

TEST_CASE("identity and symmetry") {
  CHECK(iso_cospan(compose(symmetry(1, 1), symmetry(1, 1)), identity(2)));
  CHECK(iso_cospan(symmetry(0, 3), identity(3)));
  InterfacedGraph s = symmetry(2, 1);
  CHECK(s.inputs == std::vector<NodeId>{0, 1, 2});
  CHECK(s.outputs == std::vector<NodeId>{2, 0, 1});
  CHECK_FALSE(iso_cospan(identity(2), symmetry(1, 1)));
}

TEST_CASE("frob_gen") {
  InterfacedGraph m = frob_gen(FrobGen::Mul);
  CHECK(m.graph.nodeCount == 1);
  CHECK(m.graph.edges.empty());
  CHECK(m.inputs == std::vector<NodeId>{0, 0});
  CHECK(m.outputs == std::vector<NodeId>{0});
  InterfacedGraph u = frob_gen(FrobGen::Unit);
  CHECK(u.inputs.empty());
  CHECK(u.outputs == std::vector<NodeId>{0});
  CHECK(iso_cospan(compose(frob_gen(FrobGen::Unit), frob_gen(FrobGen::Counit)),
                   function_cospan(1, {}, {})));
}

TEST_CASE("monogamy and mda") {
  // the three non-monogamous shapes: shared input, node with two producers,
  // node with no consumer that is not an output
  InterfacedGraph twoIn = function_cospan(1, {0, 0}, {0});
  InterfacedGraph twoProducers;
  twoProducers.graph.nodeCount = 1;
  twoProducers.graph.add_edge({"e1", {}, {0}});
  twoProducers.graph.add_edge({"e1", {}, {0}});
  twoProducers.outputs = {0};
  InterfacedGraph dangling;
  dangling.graph.nodeCount = 1;
  dangling.graph.add_edge({"e1", {}, {0}});
  CHECK_FALSE(is_monogamous(twoIn));
  CHECK_FALSE(is_monogamous(twoProducers));
  CHECK_FALSE(is_monogamous(dangling));
  CHECK_FALSE(is_monogamous(frob_gen(FrobGen::Mul)));
  CHECK(is_mda(identity(3)));

  InterfacedGraph bent = interpret(bend(parse_term("e3"), sig()), sig());
  CHECK(bent.dom() == 0);
  CHECK(bent.cod() == 2);
  CHECK_FALSE(is_monogamous(bent));

  InterfacedGraph loop;
  loop.graph.nodeCount = 1;
  loop.graph.add_edge({"e3", {0}, {0}});
  CHECK(is_monogamous(loop));
  CHECK_FALSE(is_mda(loop));

  Rng rng(21);
  Signature s = random_signature(rng, 4);
  for (int round = 0; round < 300; ++round) {
    InterfacedGraph c = round % 2 ? random_mda(rng, s, round % 8)
                                  : random_cospan(rng, s, 1 + round % 4,
                                                  round % 4, round % 3,
                                                  (round / 2) % 3);
    CHECK(is_monogamous(c) == monogamous_by_counting(c));
    if (round % 2) CHECK(is_mda(c));
  }
}

TEST_CASE("iso_cospan and canonicalize") {
  InterfacedGraph a = compose(tensor(I("mu"), identity(1)), I("mu"));
  InterfacedGraph b = I("(mu * id 1) ; mu");
  CHECK(iso_cospan(a, b));
  CHECK(canonicalize(identity(1)) == identity(1));

  Rng rng(4);
  Signature s = random_signature(rng, 4);
  for (int round = 0; round < 300; ++round) {
    InterfacedGraph c = random_mda(rng, s, round % 10);
    InterfacedGraph d = shuffled(c, rng);
    CHECK(iso_cospan(c, d));
    CHECK(canonicalize(c) == canonicalize(d));
    CHECK(canonical_key(c) == canonical_key(d));
    CHECK(canonicalize(canonicalize(d)) == canonicalize(d));
  }
  for (int round = 0; round < 300; ++round) {
    InterfacedGraph c = random_cospan(rng, s, 1 + round % 5, round % 5,
                                      round % 3, round % 2);
    InterfacedGraph k = canonicalize(c);
    CHECK(iso_cospan(c, k));
    CHECK(canonicalize(k) == k);
  }
}

TEST_CASE("monoidal laws on random cospans") {
  Rng rng(8);
  Signature s = random_signature(rng, 4);
  for (int round = 0; round < 100; ++round) {
    InterfacedGraph a = random_mda(rng, s, round % 4);
    InterfacedGraph c = random_mda(rng, s, round % 3);
    InterfacedGraph b = random_cospan(rng, s, 3, round % 3, a.cod(), 2);
    InterfacedGraph d = random_cospan(rng, s, 2, round % 2, c.cod(), 1);
    InterfacedGraph e = random_cospan(rng, s, 2, 1, 2, 1);
    CHECK(iso_cospan(compose(compose(a, b), e), compose(a, compose(b, e))));
    CHECK(iso_cospan(compose(tensor(a, c), tensor(b, d)),
                     tensor(compose(a, b), compose(c, d))));
    CHECK(iso_cospan(compose(identity(a.dom()), a), a));
    CHECK(iso_cospan(compose(a, identity(a.cod())), a));
  }
}
