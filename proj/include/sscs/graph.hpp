#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sscs {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Raised for malformed structure: self-loops, out-of-range endpoints,
/// invalid or repeated leader ids.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple directed graph on nodes 0..n-1. Undirected graphs are stored as
/// symmetric digraphs so every algorithm runs on one directed code path.
/// Immutable after construction.
class Graph {
 public:
  /// Builds a validated graph. Undirected pairs are symmetrized and
  /// duplicates collapsed. Throws StructuralError on self-loops or
  /// endpoints outside [0, n).
  static Graph from_edge_list(std::size_t n, bool directed, std::span<const Edge> pairs);

  std::size_t node_count() const { return out_.size(); }
  bool directed() const { return directed_; }

  /// All stored (ordered) edges, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Sorted in/out neighbourhoods. Throws StructuralError on a bad id.
  std::span<const NodeId> in_neighbors(NodeId v) const;
  std::span<const NodeId> out_neighbors(NodeId v) const;

  bool has_edge(NodeId i, NodeId j) const;
  bool valid(NodeId v) const { return v < node_count(); }

  /// Every edge (i, j) becomes (j, i). Undirected graphs are fixed points.
  Graph reverse() const;

  /// Position of edge (i, j) in edges(), or edge_count() when absent.
  std::size_t edge_index(NodeId i, NodeId j) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.directed_ == b.directed_ && a.node_count() == b.node_count() && a.edges_ == b.edges_;
  }

 private:
  Graph() = default;
  void check(NodeId v) const;

  bool directed_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
};

/// Ordered list of distinct leader ids. Position k is DL coordinate k.
class LeaderSet {
 public:
  /// Throws StructuralError when empty, repeated, or out of range for g.
  LeaderSet(const Graph& g, std::vector<NodeId> leaders);

  std::size_t size() const { return leaders_.size(); }
  NodeId operator[](std::size_t k) const { return leaders_[k]; }
  const std::vector<NodeId>& ids() const { return leaders_; }
  bool contains(NodeId v) const;

  auto begin() const { return leaders_.begin(); }
  auto end() const { return leaders_.end(); }

 private:
  std::vector<NodeId> leaders_;
};

/// Parses leaders given as "0,3,5". Order is preserved.
std::vector<NodeId> parse_leader_list(const std::string& text);

// Graph file I/O. Text form:
//   graph <n> <directed|undirected>
//   edge <i> <j>
// with '#' starting a comment. JSON form: {"n", "directed", "edges": [[i,j],...]}.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
Graph parse_graph_text(const std::string& text);
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_json(const Graph& g);

}  // namespace sscs
