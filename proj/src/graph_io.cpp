#include "avgpart/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "avgpart/error.hpp"

namespace avgpart {

namespace {

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

// Parses exactly `count` non-negative integers from a line.
std::vector<long long> read_fields(const std::string& line, std::size_t count, std::size_t line_no) {
  std::istringstream in(line);
  std::vector<long long> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, at_line(line_no) + "not an integer: '" + token + "'");
    }
    if (used != token.size() || value < 0)
      throw Error(ErrorKind::ParseError, at_line(line_no) + "not a non-negative integer: '" + token + "'");
    out.push_back(value);
  }
  if (out.size() != count)
    throw Error(ErrorKind::ParseError,
                at_line(line_no) + "expected " + std::to_string(count) + " fields, got " + std::to_string(out.size()));
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::size_t> edge_lines;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
    if (!have_header) {
      const auto fields = read_fields(line, 2, line_no);
      n = fields[0];
      m = fields[1];
      if (n > 100'000'000) throw Error(ErrorKind::ParseError, at_line(line_no) + "vertex count too large");
      have_header = true;
      continue;
    }
    const auto fields = read_fields(line, 2, line_no);
    const long long u = fields[0];
    const long long v = fields[1];
    if (u >= n || v >= n)
      throw Error(ErrorKind::VertexOutOfRange, at_line(line_no) + "edge (" + std::to_string(u) + "," +
                                                   std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) throw Error(ErrorKind::SelfLoop, at_line(line_no) + "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    edge_lines.push_back(line_no);
  }
  if (!have_header) throw Error(ErrorKind::ParseError, "missing header line \"n m\"");
  if (static_cast<long long>(edges.size()) != m)
    throw Error(ErrorKind::ParseError, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  try {
    return Graph::build(static_cast<std::size_t>(n), edges);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DuplicateEdge) throw;
    // Point at the second occurrence.
    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto [lo, hi] = std::minmax(edges[i].first, edges[i].second);
      if (!seen.emplace(lo, hi).second)
        throw Error(ErrorKind::DuplicateEdge, at_line(edge_lines[i]) + "edge (" + std::to_string(lo) + "," +
                                                  std::to_string(hi) + ") repeated");
    }
    throw;
  }
}

std::string format_graph(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  out << text;
}

Graph read_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

}  // namespace avgpart
