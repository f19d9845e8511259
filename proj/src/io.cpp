#include "strdiag/io.hpp"

#include <json.hpp>

#include "strdiag/error.hpp"

namespace strdiag {

using nlohmann::ordered_json;

namespace {

ordered_json graph_value(const InterfacedGraph& c) {
  ordered_json j;
  j["nodes"] = c.graph.nodeCount;
  j["inputs"] = c.inputs;
  j["outputs"] = c.outputs;
  ordered_json edges = ordered_json::array();
  for (const auto& e : c.graph.edges) {
    ordered_json x;
    x["label"] = e.label;
    x["sources"] = e.sources;
    x["targets"] = e.targets;
    edges.push_back(std::move(x));
  }
  j["edges"] = std::move(edges);
  return j;
}

ordered_json metric_value(const NbMetric& m) {
  return ordered_json::array(
      {m.uPaths, m.mPaths, m.muCount, m.nuCount, m.lWeightSum});
}

std::vector<NodeId> id_list(const ordered_json& j, const char* what) {
  if (!j.is_array()) {
    throw Error(Errc::Parse, std::string("'") + what + "' must be an array");
  }
  std::vector<NodeId> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) {
      throw Error(Errc::Parse,
                  std::string("'") + what + "' must hold natural numbers");
    }
    out.push_back(v.get<NodeId>());
  }
  return out;
}

}  // namespace

std::string graph_to_json(const InterfacedGraph& c) {
  return graph_value(c).dump(2) + "\n";
}

InterfacedGraph graph_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text.begin(), text.end());
  } catch (const ordered_json::parse_error& e) {
    throw Error(Errc::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(Errc::Parse, "graph must be a JSON object");
  if (!j.contains("nodes") || !j["nodes"].is_number_unsigned()) {
    throw Error(Errc::Parse, "'nodes' must be a natural number");
  }
  InterfacedGraph c;
  c.graph.nodeCount = j["nodes"].get<std::size_t>();
  if (j.contains("inputs")) c.inputs = id_list(j["inputs"], "inputs");
  if (j.contains("outputs")) c.outputs = id_list(j["outputs"], "outputs");
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw Error(Errc::Parse, "'edges' must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_object() || !e.contains("label") || !e["label"].is_string()) {
        throw Error(Errc::Parse, "every edge needs a string 'label'");
      }
      Hyperedge h{e["label"].get<std::string>(), {}, {}};
      if (e.contains("sources")) h.sources = id_list(e["sources"], "sources");
      if (e.contains("targets")) h.targets = id_list(e["targets"], "targets");
      c.graph.edges.push_back(std::move(h));
    }
  }
  c.validate();
  return c;
}

std::string graph_to_dot(const InterfacedGraph& c, const std::string& name) {
  std::string out = "digraph " + name + " {\n  rankdir=LR;\n";
  for (NodeId v = 0; v < c.graph.nodeCount; ++v) {
    out += "  n" + std::to_string(v) + " [shape=point];\n";
  }
  for (EdgeId e = 0; e < c.graph.edges.size(); ++e) {
    const auto& h = c.graph.edges[e];
    const std::string box = "e" + std::to_string(e);
    out += "  " + box + " [shape=box, label=" + ordered_json(h.label).dump() + "];\n";
    for (std::size_t p = 0; p < h.sources.size(); ++p) {
      out += "  n" + std::to_string(h.sources[p]) + " -> " + box +
             " [headlabel=\"" + std::to_string(p) + "\"];\n";
    }
    for (std::size_t p = 0; p < h.targets.size(); ++p) {
      out += "  " + box + " -> n" + std::to_string(h.targets[p]) +
             " [taillabel=\"" + std::to_string(p) + "\"];\n";
    }
  }
  for (std::size_t k = 0; k < c.inputs.size(); ++k) {
    const std::string in = "in" + std::to_string(k);
    out += "  " + in + " [shape=plaintext, label=\"" + std::to_string(k) + "\"];\n";
    out += "  " + in + " -> n" + std::to_string(c.inputs[k]) + " [style=dashed];\n";
  }
  for (std::size_t k = 0; k < c.outputs.size(); ++k) {
    const std::string o = "out" + std::to_string(k);
    out += "  " + o + " [shape=plaintext, label=\"" + std::to_string(k) + "\"];\n";
    out += "  n" + std::to_string(c.outputs[k]) + " -> " + o + " [style=dashed];\n";
  }
  out += "}\n";
  return out;
}

std::string trace_to_json(const std::vector<RewriteStepRecord>& trace) {
  ordered_json steps = ordered_json::array();
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const auto& r = trace[k];
    ordered_json s;
    s["step"] = k;
    s["rule"] = r.ruleName;
    s["match"] = {{"nodes", r.matching.nodeMap}, {"edges", r.matching.edgeMap}};
    s["metricBefore"] = r.metricBefore ? metric_value(*r.metricBefore) : ordered_json();
    s["metricAfter"] = r.metricAfter ? metric_value(*r.metricAfter) : ordered_json();
    s["result"] = graph_value(r.after);
    steps.push_back(std::move(s));
  }
  return steps.dump(2) + "\n";
}

}  // namespace strdiag
