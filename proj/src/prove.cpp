#include "strdiag/prove.hpp"

#include <map>
#include <set>
#include <tuple>

#include "strdiag/error.hpp"

namespace strdiag {

namespace {

const std::string kInverse = "^-1";

std::string invert_name(const std::string& name) {
  if (name.size() > kInverse.size() &&
      name.compare(name.size() - kInverse.size(), kInverse.size(), kInverse) == 0) {
    return name.substr(0, name.size() - kInverse.size());
  }
  return name + kInverse;
}

struct State {
  InterfacedGraph graph;
  std::size_t parent;  // index into the same side, self for a root
  std::string rule;    // rule taking parent to this state
  std::size_t depth;
};

// One direction of the search. Graphs are bucketed by canonical key; on
// graphs that are not MDA the key is not an iso invariant, so those are
// also compared with iso_cospan inside a coarser bucket.
class Side {
 public:
  Side(const InterfacedGraph& root, bool exact) : exact_(exact) {
    add(canonicalize(root), 0, "", 0);
  }

  std::optional<std::size_t> find(const InterfacedGraph& g) const {
    auto it = byKey_.find(canonical_key(g));
    if (it != byKey_.end()) return it->second;
    if (exact_) return std::nullopt;
    auto jt = byShape_.find(shape(g));
    if (jt == byShape_.end()) return std::nullopt;
    for (std::size_t s : jt->second) {
      if (iso_cospan(states_[s].graph, g)) return s;
    }
    return std::nullopt;
  }

  std::size_t add(InterfacedGraph g, std::size_t parent, std::string rule,
                  std::size_t depth) {
    const std::size_t id = states_.size();
    byKey_.emplace(canonical_key(g), id);
    if (!exact_) byShape_[shape(g)].push_back(id);
    states_.push_back({std::move(g), parent, std::move(rule), depth});
    return id;
  }

  const State& at(std::size_t s) const { return states_[s]; }
  std::size_t size() const { return states_.size(); }

 private:
  static std::string shape(const InterfacedGraph& g) {
    std::multiset<std::string> labels;
    for (const auto& e : g.graph.edges) labels.insert(e.label);
    std::string out = std::to_string(g.graph.nodeCount) + ":" +
                      std::to_string(g.dom()) + ":" + std::to_string(g.cod());
    for (const auto& l : labels) out += "," + l;
    return out;
  }

  bool exact_;
  std::vector<State> states_;
  std::map<std::string, std::size_t> byKey_;
  std::map<std::string, std::vector<std::size_t>> byShape_;
};

// Steps root -> s along parent links.
std::vector<ProofStep> path_to(const Side& side, std::size_t s) {
  std::vector<ProofStep> rev;
  while (s != 0) {
    const State& st = side.at(s);
    rev.push_back({st.rule, side.at(st.parent).graph, st.graph});
    s = st.parent;
  }
  return {rev.rbegin(), rev.rend()};
}

}  // namespace

std::vector<DpoRule> symmetrize(const std::vector<DpoRule>& rules) {
  std::vector<DpoRule> out;
  for (const auto& r : rules) {
    out.push_back(r);
    DpoRule inv = r;
    inv.name = invert_name(r.name);
    std::swap(inv.lhsGraph, inv.rhsGraph);
    std::swap(inv.lhsInterface, inv.rhsInterface);
    std::swap(inv.lhsTerm, inv.rhsTerm);
    out.push_back(std::move(inv));
  }
  return out;
}

std::optional<std::vector<ProofStep>> prove_equal(
    const InterfacedGraph& a, const InterfacedGraph& b,
    const std::vector<DpoRule>& rules, Mode mode, const ProveOptions& options) {
  if (a.dom() != b.dom() || a.cod() != b.cod()) {
    throw Error(Errc::TypeMismatch, "the two sides have different types");
  }
  if (iso_cospan(a, b)) return std::vector<ProofStep>{};
  const std::vector<DpoRule> sym = symmetrize(rules);
  const bool exact = mode == Mode::Smc;
  Side sides[2] = {Side(a, exact), Side(b, exact)};
  std::vector<std::size_t> frontier[2] = {{0}, {0}};
  std::size_t depth[2] = {0, 0};

  while (depth[0] + depth[1] < options.fuel) {
    // grow the cheaper side
    const int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    if (frontier[s].empty()) return std::nullopt;
    Side& here = sides[s];
    Side& there = sides[1 - s];
    std::vector<std::size_t> next;
    for (std::size_t id : frontier[s]) {
      const InterfacedGraph g = here.at(id).graph;
      for (auto& step : all_steps(g, sym, mode)) {
        if (here.find(step.after)) continue;
        const std::size_t nid =
            here.add(step.after, id, step.ruleName, depth[s] + 1);
        if (auto meet = there.find(step.after)) {
          std::vector<ProofStep> fwd = path_to(sides[0], s == 0 ? nid : *meet);
          std::vector<ProofStep> bwd = path_to(sides[1], s == 0 ? *meet : nid);
          for (auto it = bwd.rbegin(); it != bwd.rend(); ++it) {
            fwd.push_back({invert_name(it->ruleName), it->after, it->before});
          }
          return fwd;
        }
        next.push_back(nid);
        if (sides[0].size() + sides[1].size() >= options.maxStates) {
          return std::nullopt;
        }
      }
    }
    frontier[s] = std::move(next);
    ++depth[s];
  }
  return std::nullopt;
}

std::optional<std::vector<ProofStep>> prove_equal(const Term& t1, const Term& t2,
                                                  const Theory& theory,
                                                  const ProveOptions& options) {
  TermType x = typecheck(t1, theory.signature, theory.mode);
  TermType y = typecheck(t2, theory.signature, theory.mode);
  if (x != y) {
    throw Error(Errc::TypeMismatch, "the two terms have different types");
  }
  return prove_equal(interpret(t1, theory.signature),
                     interpret(t2, theory.signature), compile_rules(theory),
                     theory.mode, options);
}

}  // namespace strdiag
