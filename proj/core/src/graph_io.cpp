#include "ccomb/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ccomb/errors.hpp"

namespace ccomb {

namespace {

using nlohmann::json;

std::size_t index_field(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

Color color_field(const json& j) {
  if (!j.is_number_integer()) throw ParseError("edge color must be 1 or 2");
  const auto c = j.get<long long>();
  if (c == 1) return Color::one;
  if (c == 2) return Color::two;
  throw ParseError("edge color must be 1 or 2, got " + std::to_string(c));
}

std::string label_string(const Label& l) {
  std::string s = "(";
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
  return s + ")";
}

}  // namespace

GraphFile parse_graph(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph file must be a JSON object");
  for (const char* key : {"vertices", "edges", "root"})
    if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");

  const std::size_t n = index_field(doc["vertices"], "vertices");
  const std::size_t root = index_field(doc["root"], "root");
  std::optional<Vertex> second;
  if (doc.contains("second_root") && !doc["second_root"].is_null())
    second = index_field(doc["second_root"], "second_root");

  if (!doc["edges"].is_array()) throw ParseError("edges must be an array");
  bool colored = doc.value("colored", false);
  for (const auto& e : doc["edges"])
    if (e.is_array() && e.size() == 3) colored = true;

  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3) throw ParseError("each edge must be [i, j] or [i, j, color]");
    Edge edge{index_field(e[0], "edge endpoint"), index_field(e[1], "edge endpoint"), Color::none};
    if (colored) {
      if (e.size() != 3) throw ParseError("colored graph has an edge without a color");
      edge.color = color_field(e[2]);
    }
    edges.push_back(edge);
  }

  GraphFile out{[&] {
    try {
      return Graph(n, std::move(edges), root, second, colored);
    } catch (const GraphError& err) {
      throw ParseError(err.what());
    }
  }(), std::nullopt};

  if (doc.contains("vertex_labels")) {
    const auto& labels = doc["vertex_labels"];
    if (!labels.is_array() || labels.size() != n) throw ParseError("vertex_labels must list one label per vertex");
    std::vector<Label> parsed;
    for (const auto& l : labels) {
      if (!l.is_array()) throw ParseError("each vertex label must be an array of indices");
      Label label;
      for (const auto& x : l) label.push_back(index_field(x, "label coordinate"));
      parsed.push_back(std::move(label));
    }
    out.vertex_labels = std::move(parsed);
  }
  return out;
}

GraphFile read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string format_graph(const Graph& g, const std::vector<Label>* labels) {
  // Hand-rolled so that edges stay one per line.
  std::ostringstream os;
  os << "{\n  \"vertices\": " << g.vertex_count() << ",\n  \"edges\": [";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    os << (i ? ",\n    " : "\n    ") << '[' << e.u << ", " << e.v;
    if (g.is_colored()) os << ", " << static_cast<int>(e.color);
    os << ']';
  }
  os << (g.edges().empty() ? "],\n" : "\n  ],\n");
  os << "  \"root\": " << g.root();
  if (g.second_root()) os << ",\n  \"second_root\": " << *g.second_root();
  os << ",\n  \"colored\": " << (g.is_colored() ? "true" : "false");
  if (labels) {
    os << ",\n  \"vertex_labels\": [";
    for (std::size_t v = 0; v < labels->size(); ++v) {
      os << (v ? ", " : "") << '[';
      for (std::size_t k = 0; k < (*labels)[v].size(); ++k) os << (k ? ", " : "") << (*labels)[v][k];
      os << ']';
    }
    os << ']';
  }
  os << "\n}\n";
  return os.str();
}

void write_graph_file(const std::filesystem::path& path, const Graph& g, const std::vector<Label>* labels) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write graph file " + path.string());
  out << format_graph(g, labels);
}

std::string to_dot(const Graph& g, const std::vector<Label>* labels, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const bool is_e = v == g.root();
    const bool is_f = g.second_root() && v == *g.second_root();
    os << "  " << v << " [label=\"" << v;
    if (labels && v < labels->size()) os << ' ' << label_string((*labels)[v]);
    os << '"';
    if (is_e && is_f) {
      os << ", shape=doubleoctagon";
    } else if (is_e) {
      os << ", shape=doublecircle";
    } else if (is_f) {
      os << ", shape=square";
    }
    os << "];\n";
  }
  for (const auto& e : g.edges()) {
    os << "  " << e.u << " -- " << e.v;
    if (e.color == Color::two) {
      os << " [style=dashed, label=\"2\"]";
    } else if (e.color == Color::one) {
      os << " [style=solid, label=\"1\"]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ccomb
