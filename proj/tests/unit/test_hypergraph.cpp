#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "strdiag/error.hpp"
#include "strdiag/random.hpp"
#include "strdiag/syntax.hpp"

using namespace strdiag;

namespace {

Signature example_sig() {
  return Signature({{"e1", 0, 1}, {"e2", 1, 0}, {"e3", 1, 1},
                    {"mu", 2, 1}, {"o", 2, 1}});
}

Hypergraph graph_of(const std::string& term) {
  return interpret(parse_term(term), example_sig()).graph;
}

Hypergraph permuted(const Hypergraph& g, Rng& rng) {
  std::vector<NodeId> pn(g.nodeCount);
  std::iota(pn.begin(), pn.end(), 0);
  std::shuffle(pn.begin(), pn.end(), rng);
  std::vector<EdgeId> pe(g.edges.size());
  std::iota(pe.begin(), pe.end(), 0);
  std::shuffle(pe.begin(), pe.end(), rng);
  Hypergraph h;
  h.nodeCount = g.nodeCount;
  h.edges.resize(g.edges.size());
  for (EdgeId e = 0; e < g.edges.size(); ++e) {
    Hyperedge ne{g.edges[e].label, {}, {}};
    for (NodeId v : g.edges[e].sources) ne.sources.push_back(pn[v]);
    for (NodeId v : g.edges[e].targets) ne.targets.push_back(pn[v]);
    h.edges[pe[e]] = ne;
  }
  return h;
}

}  // namespace

TEST_CASE("degrees") {
  Hypergraph g = graph_of("o");
  CHECK(degrees(g, 2) == Degree{1, 0});
  Hypergraph iso;
  iso.add_node();
  CHECK(degrees(iso, 0) == Degree{0, 0});
  // node 1 is the target of e3 and the second source of o
  Hypergraph h;
  h.nodeCount = 4;
  h.add_edge({"e3", {0}, {1}});
  h.add_edge({"o", {2, 1}, {3}});
  CHECK(degrees(h, 1) == Degree{1, 1});
  CHECK_THROWS_AS(degrees(h, 9), Error);
}

TEST_CASE("has_path") {
  InterfacedGraph c = interpret(parse_term("e3 ; e3"), example_sig());
  CHECK(has_path(c.graph, c.inputs, c.outputs));
  CHECK_FALSE(has_path(discrete(2), std::vector<NodeId>{0}, std::vector<NodeId>{1}));
  CHECK_FALSE(has_path(c.graph, std::vector<NodeId>{}, c.outputs));

  Rng rng(7);
  Signature sig = random_signature(rng, 4);
  for (int round = 0; round < 150; ++round) {
    Hypergraph g = random_dag(rng, sig, 2 + round % 6, round % 7);
    std::vector<NodeId> from{static_cast<NodeId>(round % g.nodeCount)};
    std::vector<NodeId> to{static_cast<NodeId>((round * 7 + 3) % g.nodeCount)};
    CHECK(has_path(g, from, to) == oracle::has_path(g, from, to));
  }
}

TEST_CASE("is_acyclic") {
  CHECK(is_acyclic(discrete(3)));
  Hypergraph loop;
  loop.nodeCount = 1;
  loop.add_edge({"e3", {0}, {0}});
  CHECK_FALSE(is_acyclic(loop));
  Rng rng(11);
  Signature sig = random_signature(rng, 4);
  for (int round = 0; round < 100; ++round) {
    CHECK(is_acyclic(random_mda(rng, sig, round % 9).graph));
  }
  for (int round = 0; round < 100; ++round) {
    InterfacedGraph c = random_cospan(rng, sig, 1 + round % 4, round % 5, 0, 0);
    bool cyclic = false;
    for (NodeId v = 0; v < c.graph.nodeCount; ++v) {
      if (oracle::has_path(c.graph, {v}, {v})) cyclic = true;
    }
    CHECK(is_acyclic(c.graph) == !cyclic);
  }
}

TEST_CASE("is_convex") {
  InterfacedGraph c = interpret(parse_term("e3 ; e3 ; e3"), example_sig());
  SubgraphSelection all;
  for (NodeId v = 0; v < c.graph.nodeCount; ++v) all.nodes.insert(v);
  for (EdgeId e = 0; e < c.graph.edges.size(); ++e) all.edges.insert(e);
  CHECK(is_convex(c.graph, all));
  for (EdgeId e = 0; e < 3; ++e) {
    CHECK(is_convex(c.graph, selection_of(c.graph, {e})));
  }
  // outer two edges without the middle one
  std::set<EdgeId> outer;
  for (EdgeId e = 0; e < 3; ++e) {
    const auto& edge = c.graph.edges[e];
    bool first = edge.sources[0] == c.inputs[0];
    bool last = edge.targets[0] == c.outputs[0];
    if (first || last) outer.insert(e);
  }
  CHECK_FALSE(is_convex(c.graph, selection_of(c.graph, outer)));

  SubgraphSelection bad{{0}, {0}};
  CHECK_THROWS_AS(is_convex(c.graph, bad), Error);

  Rng rng(3);
  Signature sig = random_signature(rng, 4);
  for (int round = 0; round < 200; ++round) {
    Hypergraph g = random_dag(rng, sig, 3 + round % 5, 1 + round % 6);
    std::set<EdgeId> pick;
    for (EdgeId e = 0; e < g.edges.size(); ++e) {
      if (rng() % 2) pick.insert(e);
    }
    std::set<NodeId> extra;
    if (rng() % 2) extra.insert(rng() % g.nodeCount);
    SubgraphSelection sel = selection_of(g, pick, extra);
    CHECK(is_convex(g, sel) == oracle::is_convex(g, sel));
  }
}

TEST_CASE("enumerate_homomorphisms") {
  Signature sig = example_sig();
  Hypergraph mu = interpret(parse_term("mu"), sig).graph;
  Hypergraph assoc = interpret(parse_term("(mu * id 1) ; mu"), sig).graph;
  CHECK(enumerate_homomorphisms(mu, assoc, true).size() == 2);
  CHECK(enumerate_homomorphisms(Hypergraph{}, assoc, true).size() == 1);
  CHECK(enumerate_homomorphisms(graph_of("e3"), assoc, false).empty());

  Rng rng(5);
  Signature small({{"a", 1, 1}, {"b", 2, 1}});
  for (int round = 0; round < 120; ++round) {
    Hypergraph pattern = random_cospan(rng, small, 1 + round % 3, round % 3, 0, 0).graph;
    Hypergraph host = random_cospan(rng, small, 1 + round % 4, round % 4, 0, 0).graph;
    for (bool mono : {false, true}) {
      auto got = enumerate_homomorphisms(pattern, host, mono);
      auto want = oracle::homomorphisms(pattern, host, mono);
      for (const auto& h : got) CHECK(is_homomorphism(pattern, host, h));
      std::sort(got.begin(), got.end(), [](const auto& x, const auto& y) {
        return std::tie(x.nodeMap, x.edgeMap) < std::tie(y.nodeMap, y.edgeMap);
      });
      std::sort(want.begin(), want.end(), [](const auto& x, const auto& y) {
        return std::tie(x.nodeMap, x.edgeMap) < std::tie(y.nodeMap, y.edgeMap);
      });
      CHECK(got == want);
    }
  }
}

TEST_CASE("isomorphic") {
  Signature nb({{"mu", 2, 1}, {"nu", 1, 2}});
  Hypergraph rhs = interpret(
      parse_term("(nu * nu) ; (id 1 * sym 1 1 * id 1) ; (mu * mu)"), nb).graph;
  auto self = isomorphic(rhs, rhs);
  REQUIRE(self);
  CHECK(is_homomorphism(rhs, rhs, *self));
  CHECK_FALSE(isomorphic(graph_of("e3"), graph_of("e3 ; e3")));
  CHECK_FALSE(isomorphic(graph_of("e1 * e2"), graph_of("e1 ; e2")));

  Rng rng(13);
  Signature sig = random_signature(rng, 3);
  for (int round = 0; round < 100; ++round) {
    Hypergraph a = random_mda(rng, sig, round % 8).graph;
    Hypergraph b = permuted(a, rng);
    Hypergraph c = permuted(b, rng);
    auto ab = isomorphic(a, b);
    REQUIRE(ab);
    CHECK(is_homomorphism(a, b, *ab));
    CHECK(ab->is_mono());
    CHECK(isomorphic(b, a));
    CHECK(isomorphic(a, c));
  }
  Rng rng2(2);
  for (int round = 0; round < 100; ++round) {
    Hypergraph a = random_cospan(rng2, sig, 3, 3, 0, 0).graph;
    Hypergraph b = random_cospan(rng2, sig, 3, 3, 0, 0).graph;
    bool brute = false;
    for (const auto& h : oracle::homomorphisms(a, b, true)) {
      (void)h;
      brute = true;
    }
    CHECK(isomorphic(a, b).has_value() == brute);
  }
}

TEST_CASE("pushout") {
  Hypergraph b = graph_of("e3");
  Hypergraph c = graph_of("e3");
  PushoutResult none = pushout(std::vector<NodeId>{}, b, std::vector<NodeId>{}, c);
  CHECK(none.graph.nodeCount == 4);
  CHECK(none.graph.edges.size() == 2);

  PushoutResult glued = pushout(std::vector<NodeId>{1}, b, std::vector<NodeId>{0}, c);
  CHECK(glued.graph.nodeCount == 3);
  CHECK(glued.graph.edges.size() == 2);
  CHECK(is_homomorphism(b, glued.graph, glued.fromB));
  CHECK(is_homomorphism(c, glued.graph, glued.fromC));
  CHECK(glued.fromB.nodeMap[1] == glued.fromC.nodeMap[0]);

  Hypergraph apexWithEdge = graph_of("e3");
  Homomorphism idHom{{0, 1}, {0}};
  CHECK_THROWS_AS(pushout(apexWithEdge, idHom, b, idHom, c), Error);

  Rng rng(17);
  Signature sig = random_signature(rng, 3);
  for (int round = 0; round < 200; ++round) {
    Hypergraph x = random_cospan(rng, sig, 1 + round % 5, round % 4, 0, 0).graph;
    Hypergraph y = random_cospan(rng, sig, 1 + round % 3, round % 3, 0, 0).graph;
    std::size_t k = round % 4;
    std::vector<NodeId> lx, ly;
    for (std::size_t a = 0; a < k; ++a) {
      lx.push_back(rng() % x.nodeCount);
      ly.push_back(rng() % y.nodeCount);
    }
    PushoutResult po = pushout(lx, x, ly, y);
    CHECK(po.graph.nodeCount ==
          oracle::pushout_node_count(lx, x.nodeCount, ly, y.nodeCount));
    CHECK(po.graph.edges.size() == x.edges.size() + y.edges.size());
    CHECK(is_homomorphism(x, po.graph, po.fromB));
    CHECK(is_homomorphism(y, po.graph, po.fromC));
    for (std::size_t a = 0; a < k; ++a) {
      CHECK(po.fromB.nodeMap[lx[a]] == po.fromC.nodeMap[ly[a]]);
    }
  }
}
