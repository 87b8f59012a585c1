#include "sscs/dl_distance.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sscs {

std::vector<Distance> distances_to_leader(const Graph& g, NodeId leader) {
  if (!g.valid(leader)) throw StructuralError("invalid leader id " + std::to_string(leader));
  const std::size_t n = g.node_count();
  std::vector<Distance> dist(n, kInfinity);
  std::vector<NodeId> frontier{leader};
  frontier.reserve(n);
  dist[leader] = 0;
  // Walking in-neighbours from the leader is BFS on the reversed graph.
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    NodeId u = frontier[head];
    for (NodeId w : g.in_neighbors(u)) {
      if (dist[w] == kInfinity) {
        dist[w] = dist[u] + 1;
        frontier.push_back(w);
      }
    }
  }
  return dist;
}

DLMatrix::DLMatrix(std::size_t rows, std::size_t cols, std::vector<NodeId> leaders)
    : rows_(rows), cols_(cols), data_(rows * cols, kInfinity), leaders_(std::move(leaders)) {}

DLMatrix DLMatrix::from_rows(const std::vector<std::vector<Distance>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  DLMatrix dl(rows.size(), cols);
  for (std::size_t v = 0; v < rows.size(); ++v) {
    if (rows[v].size() != cols) throw std::invalid_argument("DL rows have unequal length");
    std::copy(rows[v].begin(), rows[v].end(), dl.data_.begin() + static_cast<std::ptrdiff_t>(v * cols));
  }
  return dl;
}

bool DLMatrix::reachable(std::size_t v) const {
  auto r = row(v);
  return std::any_of(r.begin(), r.end(), is_finite);
}

DLMatrix dl_matrix(const Graph& g, const LeaderSet& leaders, Exec exec) {
  const std::size_t n = g.node_count();
  const std::size_t m = leaders.size();
  DLMatrix dl(n, m, leaders.ids());

  auto fill_column = [&](std::size_t k) {
    auto column = distances_to_leader(g, leaders[k]);
    for (std::size_t v = 0; v < n; ++v) dl.at(v, k) = column[v];
  };

  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(m); ++k) {
      fill_column(static_cast<std::size_t>(k));
    }
  } else {
    for (std::size_t k = 0; k < m; ++k) fill_column(k);
  }
  return dl;
}

std::string dl_matrix_csv(const DLMatrix& dl) {
  std::ostringstream out;
  out << "node";
  for (std::size_t k = 0; k < dl.cols(); ++k) {
    out << ',';
    if (k < dl.leaders().size()) {
      out << "leader_" << dl.leaders()[k];
    } else {
      out << "coord_" << k;
    }
  }
  out << '\n';
  for (std::size_t v = 0; v < dl.rows(); ++v) {
    out << v;
    for (std::size_t k = 0; k < dl.cols(); ++k) {
      out << ',';
      if (is_finite(dl.at(v, k))) {
        out << dl.at(v, k);
      } else {
        out << "inf";
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace sscs
