#include "colnum/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace colnum {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (line.tokens.empty()) continue;
    if (line.tokens[0] == "c") continue;  // DIMACS comment
    lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const std::string& tok, const Line& line) {
  int value = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError("expected integer, got '" + tok + "'", line.number);
  return value;
}

Graph parse_dimacs(const std::vector<Line>& lines) {
  const Line& head = lines.front();
  if (head.tokens.size() != 4 || head.tokens[1] != "edge")
    throw ParseError("malformed problem line, expected 'p edge n m'", head.number);
  int n = parse_int(head.tokens[2], head);
  int m = parse_int(head.tokens[3], head);
  if (n < 0 || m < 0) throw ParseError("negative size in problem line", head.number);

  std::vector<Edge> edges;
  for (size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "e" || line.tokens.size() != 3)
      throw ParseError("expected edge line 'e u v'", line.number);
    int u = parse_int(line.tokens[1], line);
    int v = parse_int(line.tokens[2], line);
    if (u < 1 || v < 1 || u > n || v > n)
      throw ParseError("edge endpoint out of range 1.." + std::to_string(n), line.number);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line.number);
    edges.emplace_back(u - 1, v - 1);
  }
  std::vector<std::string> labels(n);
  for (int v = 0; v < n; ++v) labels[v] = std::to_string(v + 1);
  return Graph::from_edges(n, std::move(edges), std::move(labels));
}

bool is_int(const std::string& tok) {
  int value = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  return ec == std::errc() && p == tok.data() + tok.size();
}

Graph parse_edge_list(const std::vector<Line>& lines) {
  if (lines.empty()) return Graph();

  // The first line is a header "n m" when both tokens are non-negative
  // integers and exactly m edge lines follow.
  size_t first_edge = 0;
  int declared_n = -1;
  const Line& head = lines.front();
  if (head.tokens.size() == 2 && is_int(head.tokens[0]) && is_int(head.tokens[1])) {
    int n = parse_int(head.tokens[0], head);
    int m = parse_int(head.tokens[1], head);
    if (n >= 0 && m >= 0 && lines.size() - 1 == static_cast<size_t>(m)) {
      declared_n = n;
      first_edge = 1;
    }
  }

  std::vector<Edge> edges;
  if (declared_n >= 0) {
    for (size_t i = first_edge; i < lines.size(); ++i) {
      const Line& line = lines[i];
      if (line.tokens.size() != 2)
        throw ParseError("expected edge line 'u v'", line.number);
      int u = parse_int(line.tokens[0], line);
      int v = parse_int(line.tokens[1], line);
      if (u < 0 || v < 0 || u >= declared_n || v >= declared_n)
        throw ParseError("edge endpoint out of range 0.." + std::to_string(declared_n - 1),
                         line.number);
      if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line.number);
      edges.emplace_back(u, v);
    }
    return Graph::from_edges(declared_n, std::move(edges));
  }

  // Headerless: tokens are labels, ids assigned by first appearance.
  std::map<std::string, int> id;
  std::vector<std::string> labels;
  auto intern = [&](const std::string& tok) {
    auto [it, fresh] = id.emplace(tok, static_cast<int>(labels.size()));
    if (fresh) labels.push_back(tok);
    return it->second;
  };
  for (const Line& line : lines) {
    if (line.tokens.size() != 2)
      throw ParseError("expected edge line 'u v'", line.number);
    int u = intern(line.tokens[0]);
    int v = intern(line.tokens[1]);
    if (u == v) throw ParseError("self-loop at vertex '" + line.tokens[0] + "'", line.number);
    edges.emplace_back(u, v);
  }
  int n = static_cast<int>(labels.size());
  return Graph::from_edges(n, std::move(edges), std::move(labels));
}

}  // namespace

Graph parse_graph(const std::string& text) {
  auto lines = tokenize(text);
  if (!lines.empty() && lines.front().tokens[0] == "p") return parse_dimacs(lines);
  return parse_edge_list(lines);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str());
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::string serialize_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

}  // namespace colnum
