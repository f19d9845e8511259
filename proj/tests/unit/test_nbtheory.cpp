#include <doctest.h>

#include "path_oracle.hpp"
#include "strdiag/error.hpp"
#include "strdiag/nbtheory.hpp"
#include "strdiag/random.hpp"

using namespace strdiag;

namespace {

InterfacedGraph nb(const std::string& t) { return interpret(parse_term(t), nb_signature()); }

const DpoRule& rule_named(const std::vector<DpoRule>& rules, const std::string& name) {
  for (const auto& r : rules) {
    if (r.name == name) return r;
  }
  throw std::runtime_error("no rule " + name);
}

}  // namespace

TEST_CASE("nb system") {
  auto rules = nb_system();
  REQUIRE(rules.size() == 10);
  const std::size_t sizes[] = {4, 4, 2, 2, 2, 2, 2, 2, 4, 0};
  for (std::size_t k = 0; k < 10; ++k) {
    CHECK(rules[k].name == "BA" + std::to_string(k + 1));
    CHECK(rules[k].lhsInterface.size() == sizes[k]);
    CHECK(rules[k].rhsInterface.size() == sizes[k]);
    CHECK(rules[k].convexValid);
  }
  CHECK(rules[9].rhsGraph.nodeCount == 0);
  CHECK(rules[9].rhsGraph.edges.empty());
  Theory th = nb_theory();
  CHECK(th.signature.generators().size() == 4);
}

TEST_CASE("path counts") {
  CHECK(count_u_paths(nb("eta ; eps")) == 1);
  CHECK(count_u_paths(nb("id 1")) == 1);
  CHECK(count_u_paths(nb("(eta * id 1) ; mu")) == 2);
  CHECK(count_m_paths(nb("mu ; nu").graph) == 1);
  CHECK(count_m_paths(nb("(nu * nu) ; (id 1 * sym 1 1 * id 1) ; (mu * mu)").graph) == 0);
  CHECK(count_m_paths(discrete(3)) == 0);
  Hypergraph loop;
  loop.nodeCount = 1;
  loop.add_edge({"mu", {0, 0}, {0}});
  CHECK_THROWS_AS(count_m_paths(loop), Error);

  Rng rng(12);
  Signature s = nb_signature();
  for (int round = 0; round < 200; ++round) {
    InterfacedGraph c = random_mda(rng, s, round % 11);
    CHECK(count_u_paths(c) == oracle::u_paths(c));
    CHECK(count_m_paths(c.graph) == oracle::m_paths(c.graph));
  }
}

TEST_CASE("l-weights") {
  InterfacedGraph lone = nb("mu");
  CHECK(l_weight(lone.graph, 0) == 0);
  InterfacedGraph assoc = nb("(mu * id 1) ; mu");
  CHECK(l_weight_sum(assoc.graph) == 1);
  // mu-trees of sizes a=2, b=1, c=0 on the three inputs of BA1's left side
  InterfacedGraph lhs = nb("(((mu * id 1) ; mu) * mu * id 1) ; (mu * id 1) ; mu");
  InterfacedGraph rhs = nb("(((mu * id 1) ; mu) * mu * id 1) ; (id 1 * mu) ; mu");
  // tree-internal weights: a-tree contributes 1, b-tree 0
  CHECK(l_weight_sum(lhs.graph) == 1 + 0 + 2 + (2 + 1 + 1));
  CHECK(l_weight_sum(rhs.graph) == 1 + 0 + 1 + 2);
}

TEST_CASE("metric") {
  CHECK(metric(nb("eta ; eps")) == NbMetric{1, 0, 0, 0, 0});
  CHECK(metric(identity(0)) == NbMetric{0, 0, 0, 0, 0});
  CHECK(metric(nb("mu ; nu")) == NbMetric{4, 1, 1, 1, 0});
  CHECK(less_than({0, 9, 9, 9, 9}, {1, 0, 0, 0, 0}));
  CHECK_FALSE(less_than({1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}));
  CHECK(to_string(NbMetric{4, 1, 1, 1, 0}) == "(4, 1, 1, 1, 0)");
  CHECK_THROWS_AS(metric(frob_gen(FrobGen::Mul)), Error);
}

TEST_CASE("nb normalization examples") {
  auto rules = nb_system();
  RewriteOptions o;
  o.measure = metric;
  NormalizeResult unit = normalize(nb("(eta * id 1) ; mu"), rules, 100, o);
  CHECK(unit.trace.size() == 1);
  CHECK(iso_cospan(unit.result, identity(1)));

  NormalizeResult bone = normalize(nb("eta ; eps"), rules, 100, o);
  REQUIRE(bone.trace.size() == 1);
  CHECK(bone.trace[0].ruleName == "BA10");
  CHECK(bone.result.graph.nodeCount == 0);
  CHECK(*bone.trace[0].metricBefore == NbMetric{1, 0, 0, 0, 0});
  CHECK(*bone.trace[0].metricAfter == NbMetric{0, 0, 0, 0, 0});

  auto bi = rewrite_once(nb("mu ; nu"), rules, o);
  REQUIRE(bi);
  CHECK(bi->ruleName == "BA9");
  CHECK(iso_cospan(bi->after, nb("(nu * nu) ; (id 1 * sym 1 1 * id 1) ; (mu * mu)")));
  CHECK(bi->metricBefore->mPaths == 1);
  CHECK(bi->metricAfter->mPaths == 0);
  CHECK(bi->metricAfter->uPaths == bi->metricBefore->uPaths);

  auto ba7 = rewrite_once(nb("eta ; nu"), {rule_named(rules, "BA7")}, o);
  REQUIRE(ba7);
  CHECK(satisfies_rule_claim("BA7", *ba7->metricBefore, *ba7->metricAfter));

  NormalizeResult nf = normalize(unit.result, rules, 100, o);
  CHECK(nf.trace.empty());
}

TEST_CASE("random nb steps decrease the metric") {
  auto rules = nb_system();
  Rng rng(99);
  Signature s = nb_signature();
  RewriteOptions o;
  o.measure = metric;
  o.strategy = Strategy::Random;
  std::size_t steps = 0;
  for (int round = 0; round < 40; ++round) {
    o.seed = round;
    NormalizeResult res = normalize(random_mda(rng, s, 3 + round % 8), rules, 10000, o);
    CHECK(res.status == NormalizeStatus::NormalForm);
    TraceReport rep = check_trace_decreasing(res.trace);
    CHECK_MESSAGE(rep.ok, rep.detail);
    for (const auto& rec : res.trace) {
      CHECK_MESSAGE(satisfies_rule_claim(rec.ruleName, *rec.metricBefore, *rec.metricAfter),
                    rec.ruleName << " " << to_string(*rec.metricBefore) << " -> "
                                 << to_string(*rec.metricAfter));
    }
    steps += res.trace.size();
  }
  CHECK(steps > 40);
}
