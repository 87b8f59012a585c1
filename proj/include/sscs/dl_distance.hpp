#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "sscs/graph.hpp"
#include "sscs/parallel.hpp"

namespace sscs {

/// Hop distance. kInfinity orders above every finite value, and
/// kInfinity < kInfinity is false, so strict PMI comparisons never hold
/// between two unreachable entries.
using Distance = std::uint32_t;
inline constexpr Distance kInfinity = std::numeric_limits<Distance>::max();

inline bool is_finite(Distance d) { return d != kInfinity; }

/// Fewest edges on a directed path from each node to `leader` (BFS from the
/// leader along reversed edges). Throws StructuralError on a bad id.
std::vector<Distance> distances_to_leader(const Graph& g, NodeId leader);

/// n x m matrix of distances to leaders; row v is the DL vector of node v.
class DLMatrix {
 public:
  DLMatrix() = default;
  DLMatrix(std::size_t rows, std::size_t cols, std::vector<NodeId> leaders = {});

  /// Matrix built directly from DL vectors (no owning graph). All rows
  /// must have the same length.
  static DLMatrix from_rows(const std::vector<std::vector<Distance>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Distance at(std::size_t v, std::size_t k) const { return data_[v * cols_ + k]; }
  Distance& at(std::size_t v, std::size_t k) { return data_[v * cols_ + k]; }
  std::span<const Distance> row(std::size_t v) const {
    return {data_.data() + v * cols_, cols_};
  }

  /// Leader ids in coordinate order; empty for matrices built from rows.
  const std::vector<NodeId>& leaders() const { return leaders_; }

  /// True if row v has at least one finite entry.
  bool reachable(std::size_t v) const;

  friend bool operator==(const DLMatrix&, const DLMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Distance> data_;
  std::vector<NodeId> leaders_;
};

/// Column k is distances_to_leader(g, leaders[k]). The parallel path
/// computes columns concurrently and writes each into its own slot.
DLMatrix dl_matrix(const Graph& g, const LeaderSet& leaders, Exec exec = Exec::serial);

/// Row per node, column per leader, "inf" for unreachable.
std::string dl_matrix_csv(const DLMatrix& dl);

}  // namespace sscs
