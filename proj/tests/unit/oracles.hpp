#pragma once

// Slow reference implementations used to cross-check the engine.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "strdiag/hypergraph.hpp"

namespace oracle {

using namespace strdiag;

// Every node map and edge map, checked pointwise.
inline std::vector<Homomorphism> homomorphisms(const Hypergraph& pattern,
                                               const Hypergraph& host,
                                               bool monoOnly) {
  std::vector<Homomorphism> out;
  Homomorphism h;
  h.nodeMap.assign(pattern.nodeCount, 0);
  h.edgeMap.assign(pattern.edges.size(), 0);
  std::function<void(std::size_t)> edges = [&](std::size_t k) {
    if (k == pattern.edges.size()) {
      if (is_homomorphism(pattern, host, h) && (!monoOnly || h.is_mono())) {
        out.push_back(h);
      }
      return;
    }
    for (EdgeId e = 0; e < host.edges.size(); ++e) {
      h.edgeMap[k] = e;
      edges(k + 1);
    }
  };
  std::function<void(std::size_t)> nodes = [&](std::size_t k) {
    if (k == pattern.nodeCount) {
      edges(0);
      return;
    }
    for (NodeId v = 0; v < host.nodeCount; ++v) {
      h.nodeMap[k] = v;
      nodes(k + 1);
    }
  };
  if (pattern.nodeCount > 0 && host.nodeCount == 0) return out;
  nodes(0);
  return out;
}

// Depth-first search over simple edge sequences.
inline void for_each_simple_path(
    const Hypergraph& g, NodeId start,
    const std::function<void(const std::vector<EdgeId>&)>& visit) {
  std::vector<EdgeId> path;
  std::vector<bool> used(g.edges.size(), false);
  std::function<void(NodeId)> go = [&](NodeId v) {
    for (EdgeId e = 0; e < g.edges.size(); ++e) {
      if (used[e]) continue;
      const auto& src = g.edges[e].sources;
      if (std::find(src.begin(), src.end(), v) == src.end()) continue;
      used[e] = true;
      path.push_back(e);
      visit(path);
      std::set<NodeId> next(g.edges[e].targets.begin(), g.edges[e].targets.end());
      for (NodeId w : next) go(w);
      path.pop_back();
      used[e] = false;
    }
  };
  go(start);
}

inline bool has_path(const Hypergraph& g, const std::vector<NodeId>& from,
                     const std::vector<NodeId>& to) {
  std::set<NodeId> goal(to.begin(), to.end());
  bool found = false;
  for (NodeId s : std::set<NodeId>(from.begin(), from.end())) {
    for_each_simple_path(g, s, [&](const std::vector<EdgeId>& p) {
      for (NodeId t : g.edges[p.back()].targets) {
        if (goal.count(t)) found = true;
      }
    });
  }
  return found;
}

inline bool is_convex(const Hypergraph& g, const SubgraphSelection& sel) {
  bool ok = true;
  for (NodeId s : sel.nodes) {
    for_each_simple_path(g, s, [&](const std::vector<EdgeId>& p) {
      bool ends = false;
      for (NodeId t : g.edges[p.back()].targets) {
        if (sel.nodes.count(t)) ends = true;
      }
      if (!ends) return;
      for (EdgeId e : p) {
        if (!sel.edges.count(e)) ok = false;
      }
    });
  }
  return ok;
}

// Quotient by repeated relabelling to the minimum of each glued pair.
inline std::size_t pushout_node_count(const std::vector<NodeId>& legB,
                                      std::size_t nb,
                                      const std::vector<NodeId>& legC,
                                      std::size_t nc) {
  std::vector<std::size_t> cls(nb + nc);
  for (std::size_t k = 0; k < cls.size(); ++k) cls[k] = k;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < legB.size(); ++a) {
      std::size_t x = cls[legB[a]];
      std::size_t y = cls[nb + legC[a]];
      if (x == y) continue;
      std::size_t lo = std::min(x, y);
      std::size_t hi = std::max(x, y);
      for (auto& c : cls) {
        if (c == hi) c = lo;
      }
      changed = true;
    }
  }
  return std::set<std::size_t>(cls.begin(), cls.end()).size();
}

}  // namespace oracle
