#include "cosmoface/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "cosmoface/errors.hpp"
#include "json.hpp"

namespace cosmoface {

namespace {

Multigraph parse_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON graph: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("JSON graph must be an object");
  Multigraph g;
  if (doc.contains("nodes")) {
    if (!doc["nodes"].is_array()) throw InputError("\"nodes\" must be an array of strings");
    for (const auto& n : doc["nodes"]) {
      if (!n.is_string()) throw InputError("\"nodes\" must be an array of strings");
      g.add_node(n.get<std::string>());
    }
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InputError("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3)
        throw InputError("each edge must be a 2- or 3-element array");
      for (const auto& part : e)
        if (!part.is_string()) throw InputError("edge entries must be strings");
      g.add_edge(e[0].get<std::string>(), e[1].get<std::string>(),
                 e.size() == 3 ? e[2].get<std::string>() : "");
    }
  }
  return g;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Multigraph parse_graph_text(const std::string& text) {
  Multigraph g;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "nodes:") {
      for (size_t i = 1; i < tokens.size(); ++i) g.add_node(tokens[i]);
      continue;
    }
    if (tokens.size() < 2 || tokens.size() > 3)
      throw InputError("line " + std::to_string(line_no) +
                       ": expected 'u w [edge-id]', got '" + line + "'");
    try {
      g.add_edge(tokens[0], tokens[1], tokens.size() == 3 ? tokens[2] : "");
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return g;
}

}  // namespace

Multigraph parse_graph(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_graph_json(text) : parse_graph_text(text);
  }
  return Multigraph{};  // nothing but whitespace: the empty graph
}

Multigraph parse_graph_stream(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

Multigraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  return parse_graph_stream(in);
}

}  // namespace cosmoface
