#include "sscs/zero_forcing.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace sscs {

bool DerivedSet::contains(NodeId v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

DerivedSet derived_set(const Graph& g, const LeaderSet& leaders) {
  const std::size_t n = g.node_count();
  std::vector<bool> black(n, false);
  std::vector<std::size_t> white_in(n);
  for (std::size_t v = 0; v < n; ++v) white_in[v] = g.in_neighbors(static_cast<NodeId>(v)).size();

  DerivedSet result;
  result.input = leaders.ids();
  std::vector<NodeId> worklist;

  auto blacken = [&](NodeId u) {
    black[u] = true;
    // u is an in-neighbour of each of its out-neighbours.
    for (NodeId x : g.out_neighbors(u)) {
      --white_in[x];
      if (black[x] && white_in[x] == 1) worklist.push_back(x);
    }
    if (white_in[u] == 1) worklist.push_back(u);
  };

  for (NodeId v : leaders) blacken(v);

  while (!worklist.empty()) {
    NodeId v = worklist.back();
    worklist.pop_back();
    if (white_in[v] != 1) continue;
    for (NodeId u : g.in_neighbors(v)) {
      if (!black[u]) {
        result.trace.push_back({v, u});
        blacken(u);
        break;
      }
    }
  }

  for (std::size_t v = 0; v < n; ++v) {
    if (black[v]) result.members.push_back(static_cast<NodeId>(v));
  }
  return result;
}

std::size_t zeta(const Graph& g, const LeaderSet& leaders) { return derived_set(g, leaders).size(); }

bool is_zfs(const Graph& g, const LeaderSet& leaders) {
  return derived_set(g, leaders).size() == g.node_count();
}

std::string force_trace_json(const DerivedSet& dset) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : dset.trace) out.push_back({{"forcer", e.forcer}, {"forced", e.forced}});
  return out.dump();
}

}  // namespace sscs
