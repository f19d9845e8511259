#pragma once

// Graph exchange: JSON documents, DOT export, JSON rewrite traces.
//
// {"nodes": N, "inputs": [..], "outputs": [..],
//  "edges": [{"label": "g", "sources": [..], "targets": [..]}, ..]}
// "inputs" and "outputs" may be omitted (empty interface).

#include <string>
#include <string_view>
#include <vector>

#include "strdiag/cospan.hpp"
#include "strdiag/dpo.hpp"

namespace strdiag {

/// Pretty-printed, keys in fixed order, trailing newline.
std::string graph_to_json(const InterfacedGraph& c);

/// Throws Errc::Parse for malformed JSON or missing fields and
/// Errc::InvalidGraph for out-of-range ids.
InterfacedGraph graph_from_json(std::string_view text);

/// Nodes are points, edges are labelled boxes; tentacles are numbered by
/// position. Interface positions appear as small plaintext nodes.
std::string graph_to_dot(const InterfacedGraph& c, const std::string& name = "G");

/// Steps with rule, matching, metrics and resulting graph.
std::string trace_to_json(const std::vector<RewriteStepRecord>& trace);

}  // namespace strdiag
