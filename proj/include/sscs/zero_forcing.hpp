#pragma once

#include <string>
#include <vector>

#include "sscs/graph.hpp"

namespace sscs {

/// One application of the colouring rule: `forcer` is black and `forced`
/// was its only white in-neighbour.
struct ForceEvent {
  NodeId forcer = 0;
  NodeId forced = 0;
  friend bool operator==(const ForceEvent&, const ForceEvent&) = default;
};

struct DerivedSet {
  std::vector<NodeId> members;  // ascending
  std::vector<NodeId> input;    // the leader set, in its original order
  std::vector<ForceEvent> trace;

  std::size_t size() const { return members.size(); }
  bool contains(NodeId v) const;
};

/// Fixpoint of zero forcing from black = leaders. A black node with exactly
/// one white in-neighbour u turns u black. Uses a worklist over black nodes
/// with a cached count of white in-neighbours, so no node is rescanned.
DerivedSet derived_set(const Graph& g, const LeaderSet& leaders);

/// |derived_set(g, leaders)|.
std::size_t zeta(const Graph& g, const LeaderSet& leaders);

bool is_zfs(const Graph& g, const LeaderSet& leaders);

/// [{"forcer": u, "forced": v}, ...]
std::string force_trace_json(const DerivedSet& dset);

}  // namespace sscs
