#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "sscs/dl_distance.hpp"
#include "sscs/graph.hpp"

namespace sscs {

/// One entry of a PMI sequence: the node whose DL vector is placed, and the
/// coordinate at which it is strictly below every later vector.
struct PmiPick {
  NodeId node = 0;
  std::size_t coord = 0;
  friend bool operator==(const PmiPick&, const PmiPick&) = default;
};

struct PmiSequence {
  std::vector<PmiPick> picks;
  std::size_t length() const { return picks.size(); }
  friend bool operator==(const PmiSequence&, const PmiSequence&) = default;
};

enum class PmiMode { exact, greedy, automatic };

inline constexpr std::size_t kDefaultExactCap = 4;

/// Raised when the exact search is asked for more coordinates than allowed.
class ExactCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// True iff picks are distinct nodes with at least one finite DL entry and
/// each pick is strictly below every later pick at its coordinate. Throws
/// std::out_of_range for a node or coordinate outside the matrix.
bool is_valid_pmi(const DLMatrix& dl, const PmiSequence& seq);

/// Longest PMI sequence over the rows of dl (all-infinite rows excluded).
///
/// Memoised search over threshold states: c_j is the value of the most
/// recent pick at coordinate j, and a row is still placeable iff it exceeds
/// every set threshold. From any state the only transition worth taking on
/// coordinate j picks a placeable row attaining the minimum at j; ties give
/// the same successor state. Skipped when the greedy sequence already uses
/// every reachable row. Throws ExactCapExceeded when cols() > cap.
PmiSequence longest_pmi_exact(const DLMatrix& dl, std::size_t cap = kDefaultExactCap);

/// Deterministic greedy underestimate. Each step picks the coordinate whose
/// minimum-value pick leaves the most placeable rows (ties: smallest
/// coordinate, then smallest node id). When dl carries leader ids,
/// "smallest coordinate" means the coordinate of the smallest leader id, which
/// makes the result independent of leader order. Always returns a valid
/// sequence.
PmiSequence longest_pmi_greedy(const DLMatrix& dl);

struct DeltaResult {
  std::size_t length = 0;
  PmiSequence sequence;
  bool exact = false;
};

/// auto mode runs the exact search when the number of coordinates is at
/// most `cap` and falls back to greedy otherwise.
DeltaResult delta_from_dl(const DLMatrix& dl, PmiMode mode, std::size_t cap = kDefaultExactCap);
DeltaResult delta(const Graph& g, const LeaderSet& leaders, PmiMode mode,
                  std::size_t cap = kDefaultExactCap);

/// [{"node": i, "coord": k, "value": d}, ...]; value is null for infinity.
std::string pmi_sequence_json(const DLMatrix& dl, const PmiSequence& seq);

PmiMode parse_pmi_mode(const std::string& text);
const char* to_string(PmiMode mode);

}  // namespace sscs
