#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lowdiam/graph.hpp"

namespace lowdiam {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw GraphError("line " + std::to_string(line_no) + ": " + what);
}

long long parse_integer(const std::string& token, std::size_t line_no, const char* field) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    fail(line_no, std::string("malformed ") + field + " '" + token + "'");
  }
  if (used != token.size()) fail(line_no, std::string("malformed ") + field + " '" + token + "'");
  return value;
}

double parse_weight(const std::string& token, std::size_t line_no) {
  std::size_t used = 0;
  double w = 0.0;
  try {
    w = std::stod(token, &used);
  } catch (const std::exception&) {
    fail(line_no, "malformed weight '" + token + "'");
  }
  if (used != token.size()) fail(line_no, "malformed weight '" + token + "'");
  if (!(w > 0.0)) fail(line_no, "non-positive weight '" + token + "'");
  if (!std::isfinite(w) || std::floor(w) != w) fail(line_no, "non-integer weight '" + token + "'");
  return w;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    std::vector<std::string> fields;
    for (std::string f; ls >> f;) fields.push_back(f);

    if (tag == "p") {
      if (n >= 0) fail(line_no, "duplicate header");
      if (fields.size() != 2) fail(line_no, "header must be 'p <n> <m>'");
      n = parse_integer(fields[0], line_no, "vertex count");
      m = parse_integer(fields[1], line_no, "edge count");
      if (n < 0 || m < 0) fail(line_no, "negative count in header");
    } else if (tag == "e") {
      if (fields.size() != 3) fail(line_no, "edge must be 'e <u> <v> <w>'");
      const long long u = parse_integer(fields[0], line_no, "endpoint");
      const long long v = parse_integer(fields[1], line_no, "endpoint");
      const double w = parse_weight(fields[2], line_no);
      if (u == v) fail(line_no, "self-loop at vertex " + std::to_string(u));
      if (n < 0) fail(line_no, "edge before header");
      if (u < 0 || v < 0 || u >= n || v >= n) fail(line_no, "endpoint out of range");
      edges.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v), w});
    } else {
      fail(line_no, "unknown line tag '" + tag + "'");
    }
  }
  if (n < 0) throw GraphError("missing 'p <n> <m>' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw GraphError("header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<Vertex>(n), std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string write_graph(const Graph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  std::ostringstream out;
  out << "p " << g.universe() << ' ' << edges.size() << '\n';
  for (const auto& e : edges) {
    out << "e " << e.u << ' ' << e.v << ' ' << static_cast<long long>(e.length) << '\n';
  }
  return out.str();
}

}  // namespace lowdiam
