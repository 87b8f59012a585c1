#include "sscs/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace sscs {

Graph Graph::from_edge_list(std::size_t n, bool directed, std::span<const Edge> pairs) {
  if (n == 0) throw StructuralError("graph must have at least one node");
  Graph g;
  g.directed_ = directed;
  g.edges_.reserve(directed ? pairs.size() : 2 * pairs.size());
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n) {
      throw StructuralError("edge (" + std::to_string(i) + "," + std::to_string(j) +
                            ") has endpoint outside [0," + std::to_string(n) + ")");
    }
    if (i == j) throw StructuralError("self-loop at node " + std::to_string(i));
    g.edges_.emplace_back(i, j);
    if (!directed) g.edges_.emplace_back(j, i);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.out_.assign(n, {});
  g.in_.assign(n, {});
  for (auto [i, j] : g.edges_) {
    g.out_[i].push_back(j);
    g.in_[j].push_back(i);
  }
  // out_ is sorted by construction; in_ is filled in order of i, so also sorted.
  return g;
}

void Graph::check(NodeId v) const {
  if (!valid(v)) throw StructuralError("invalid node id " + std::to_string(v));
}

std::span<const NodeId> Graph::in_neighbors(NodeId v) const {
  check(v);
  return in_[v];
}

std::span<const NodeId> Graph::out_neighbors(NodeId v) const {
  check(v);
  return out_[v];
}

bool Graph::has_edge(NodeId i, NodeId j) const {
  if (!valid(i) || !valid(j)) return false;
  return std::binary_search(out_[i].begin(), out_[i].end(), j);
}

std::size_t Graph::edge_index(NodeId i, NodeId j) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{i, j});
  if (it == edges_.end() || *it != Edge{i, j}) return edges_.size();
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph Graph::reverse() const {
  if (!directed_) return *this;
  std::vector<Edge> flipped;
  flipped.reserve(edges_.size());
  for (auto [i, j] : edges_) flipped.emplace_back(j, i);
  return from_edge_list(node_count(), true, flipped);
}

LeaderSet::LeaderSet(const Graph& g, std::vector<NodeId> leaders) : leaders_(std::move(leaders)) {
  if (leaders_.empty()) throw StructuralError("leader set must not be empty");
  std::vector<bool> seen(g.node_count(), false);
  for (NodeId v : leaders_) {
    if (!g.valid(v)) throw StructuralError("invalid leader id " + std::to_string(v));
    if (seen[v]) throw StructuralError("repeated leader id " + std::to_string(v));
    seen[v] = true;
  }
}

bool LeaderSet::contains(NodeId v) const {
  return std::find(leaders_.begin(), leaders_.end(), v) != leaders_.end();
}

namespace {

NodeId parse_id(std::string_view token) {
  NodeId value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw StructuralError("not a node id: '" + std::string(token) + "'");
  }
  return value;
}

Graph parse_json_graph(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(std::string("bad graph JSON: ") + e.what());
  }
  try {
    auto n = doc.at("n").get<std::int64_t>();
    if (n < 1) throw StructuralError("graph must have at least one node");
    bool directed = doc.at("directed").get<bool>();
    std::vector<Edge> pairs;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw StructuralError("edge must be a pair [i, j]");
      auto i = e[0].get<std::int64_t>();
      auto j = e[1].get<std::int64_t>();
      if (i < 0 || j < 0) throw StructuralError("negative node id in edge");
      pairs.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
    }
    return Graph::from_edge_list(static_cast<std::size_t>(n), directed, pairs);
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(std::string("bad graph JSON: ") + e.what());
  }
}

}  // namespace

std::vector<NodeId> parse_leader_list(const std::string& text) {
  std::vector<NodeId> ids;
  std::string token;
  std::istringstream ss(text);
  while (std::getline(ss, token, ',')) {
    auto first = token.find_first_not_of(" \t\r\n");
    auto last = token.find_last_not_of(" \t\r\n");
    if (first == std::string::npos) throw StructuralError("empty entry in leader list");
    ids.push_back(parse_id(std::string_view(token).substr(first, last - first + 1)));
  }
  if (ids.empty()) throw StructuralError("leader list is empty");
  return ids;
}

Graph parse_graph_text(const std::string& text) {
  auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') return parse_json_graph(text);

  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  bool directed = false;
  std::vector<Edge> pairs;
  auto fail = [&](const std::string& why) {
    throw StructuralError("line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string kind;
    if (!(fields >> kind)) continue;
    if (kind == "graph") {
      if (have_header) fail("duplicate graph header");
      std::string count, orientation;
      if (!(fields >> count >> orientation)) fail("expected 'graph <n> <directed|undirected>'");
      n = parse_id(count);
      if (orientation == "directed") {
        directed = true;
      } else if (orientation == "undirected") {
        directed = false;
      } else {
        fail("orientation must be 'directed' or 'undirected'");
      }
      have_header = true;
    } else if (kind == "edge") {
      if (!have_header) fail("edge before graph header");
      std::string a, b;
      if (!(fields >> a >> b)) fail("expected 'edge <i> <j>'");
      NodeId i = parse_id(a), j = parse_id(b);
      if (i >= n || j >= n) fail("edge (" + a + "," + b + ") has endpoint outside [0," + std::to_string(n) + ")");
      if (i == j) fail("self-loop at node " + a);
      pairs.emplace_back(i, j);
    } else {
      fail("unknown record '" + kind + "'");
    }
    std::string extra;
    if (fields >> extra) fail("trailing token '" + extra + "'");
  }
  if (!have_header) throw StructuralError("missing graph header");
  return Graph::from_edge_list(n, directed, pairs);
}

Graph read_graph(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str());
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open graph file '" + path + "'");
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.node_count() << ' ' << (g.directed() ? "directed" : "undirected") << '\n';
  for (auto [i, j] : g.edges()) {
    if (!g.directed() && i > j) continue;
    out << "edge " << i << ' ' << j << '\n';
  }
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [i, j] : g.edges()) {
    if (!g.directed() && i > j) continue;
    edges.push_back({i, j});
  }
  nlohmann::json doc = {{"n", g.node_count()}, {"directed", g.directed()}, {"edges", edges}};
  return doc.dump();
}

}  // namespace sscs
