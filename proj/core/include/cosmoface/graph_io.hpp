#pragma once

#include <iosfwd>
#include <string>

#include "cosmoface/multigraph.hpp"

namespace cosmoface {

/// Parses either supported graph format, sniffing JSON by a leading '{'.
///
/// Text format: UTF-8 lines; '#' starts a comment; an optional header line
/// "nodes: a b c" declares (possibly isolated) nodes; every other nonempty
/// line "u w [edge-id]" declares one edge, repeated pairs giving parallel
/// edges. JSON format: {"nodes": [...], "edges": [["u","w"] or
/// ["u","w","id"], ...]}. Nodes referenced only by edges are declared in
/// first-use order; missing edge ids become "e1", "e2", ...
Multigraph parse_graph(const std::string& text);
Multigraph parse_graph_stream(std::istream& in);
Multigraph load_graph_file(const std::string& path);

}  // namespace cosmoface
