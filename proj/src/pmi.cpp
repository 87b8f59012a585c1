#include "sscs/pmi.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace sscs {

bool is_valid_pmi(const DLMatrix& dl, const PmiSequence& seq) {
  const auto& picks = seq.picks;
  std::vector<bool> used(dl.rows(), false);
  for (const auto& p : picks) {
    if (p.node >= dl.rows()) throw std::out_of_range("PMI pick references node " + std::to_string(p.node));
    if (p.coord >= dl.cols()) throw std::out_of_range("PMI pick references coordinate " + std::to_string(p.coord));
  }
  for (std::size_t i = 0; i < picks.size(); ++i) {
    if (used[picks[i].node]) return false;
    used[picks[i].node] = true;
    if (!dl.reachable(picks[i].node)) return false;
    Distance mine = dl.at(picks[i].node, picks[i].coord);
    for (std::size_t k = i + 1; k < picks.size(); ++k) {
      if (!(mine < dl.at(picks[k].node, picks[i].coord))) return false;
    }
  }
  return true;
}

namespace {

// Threshold value; -1 means the coordinate has no pick yet.
using Threshold = std::int64_t;
constexpr Threshold kUnset = -1;

struct StateHash {
  std::size_t operator()(const std::vector<Threshold>& key) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Threshold t : key) {
      h ^= static_cast<std::uint64_t>(t) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

class ExactSearch {
 public:
  explicit ExactSearch(const DLMatrix& dl) : dl_(dl) {
    for (std::size_t v = 0; v < dl.rows(); ++v) {
      if (dl.reachable(v)) candidates_.push_back(static_cast<NodeId>(v));
    }
  }

  PmiSequence run() {
    std::vector<Threshold> state(dl_.cols(), kUnset);
    value(state);
    PmiSequence seq;
    while (true) {
      const Entry& e = memo_.at(state);
      if (e.length == 0) break;
      auto mins = minima(state);
      seq.picks.push_back({mins[e.coord].node, e.coord});
      state[e.coord] = mins[e.coord].value;
    }
    return seq;
  }

 private:
  struct Entry {
    std::size_t length = 0;
    std::size_t coord = 0;
  };
  struct Minimum {
    Threshold value = kUnset;  // kUnset when no placeable row
    NodeId node = 0;
  };

  bool placeable(NodeId v, const std::vector<Threshold>& state) const {
    for (std::size_t j = 0; j < state.size(); ++j) {
      if (static_cast<Threshold>(dl_.at(v, j)) <= state[j]) return false;
    }
    return true;
  }

  // Per coordinate, the smallest value among placeable rows and the lowest
  // node id attaining it.
  std::vector<Minimum> minima(const std::vector<Threshold>& state) const {
    std::vector<Minimum> mins(dl_.cols());
    for (NodeId v : candidates_) {
      if (!placeable(v, state)) continue;
      for (std::size_t j = 0; j < dl_.cols(); ++j) {
        auto d = static_cast<Threshold>(dl_.at(v, j));
        if (mins[j].value == kUnset || d < mins[j].value) mins[j] = {d, v};
      }
    }
    return mins;
  }

  std::size_t value(std::vector<Threshold>& state) {
    if (auto it = memo_.find(state); it != memo_.end()) return it->second.length;
    auto mins = minima(state);
    Entry best;
    for (std::size_t j = 0; j < mins.size(); ++j) {
      if (mins[j].value == kUnset) continue;
      Threshold saved = state[j];
      state[j] = mins[j].value;
      std::size_t len = 1 + value(state);
      state[j] = saved;
      if (len > best.length) best = {len, j};
    }
    memo_.emplace(state, best);
    return best.length;
  }

  const DLMatrix& dl_;
  std::vector<NodeId> candidates_;
  std::unordered_map<std::vector<Threshold>, Entry, StateHash> memo_;
};

}  // namespace

PmiSequence longest_pmi_exact(const DLMatrix& dl, std::size_t cap) {
  if (dl.cols() > cap) {
    throw ExactCapExceeded("exact PMI search limited to " + std::to_string(cap) + " coordinates, got " +
                           std::to_string(dl.cols()) + "; use greedy mode");
  }
  // No sequence is longer than the number of reachable rows; when greedy
  // already places all of them the search is unnecessary. Common for the
  // combined bound, where the derived set can be the whole graph.
  std::size_t reachable = 0;
  for (std::size_t v = 0; v < dl.rows(); ++v) reachable += dl.reachable(v) ? 1 : 0;
  PmiSequence greedy = longest_pmi_greedy(dl);
  if (greedy.length() == reachable) return greedy;
  return ExactSearch(dl).run();
}

PmiSequence longest_pmi_greedy(const DLMatrix& dl) {
  const std::size_t n = dl.rows();
  const std::size_t m = dl.cols();
  std::vector<bool> alive(n, false);
  std::size_t alive_count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (dl.reachable(v)) {
      alive[v] = true;
      ++alive_count;
    }
  }

  // Coordinates are compared by leader id when known, so the result does
  // not depend on the order the leaders were listed in.
  auto coord_rank = [&](std::size_t j) -> std::size_t {
    return dl.leaders().size() == m ? static_cast<std::size_t>(dl.leaders()[j]) : j;
  };

  PmiSequence seq;
  std::vector<Distance> mu(m);
  std::vector<std::size_t> ties(m);
  std::vector<NodeId> first(m);
  while (alive_count > 0) {
    std::fill(mu.begin(), mu.end(), kInfinity);
    std::fill(ties.begin(), ties.end(), 0);
    std::fill(first.begin(), first.end(), static_cast<NodeId>(n));
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      for (std::size_t j = 0; j < m; ++j) {
        Distance d = dl.at(v, j);
        if (first[j] == n || d < mu[j]) {
          mu[j] = d;
          ties[j] = 1;
          first[j] = static_cast<NodeId>(v);
        } else if (d == mu[j]) {
          ++ties[j];
        }
      }
    }
    std::size_t best = 0;
    for (std::size_t j = 1; j < m; ++j) {
      if (ties[j] < ties[best] || (ties[j] == ties[best] && coord_rank(j) < coord_rank(best))) best = j;
    }
    seq.picks.push_back({first[best], best});
    for (std::size_t v = 0; v < n; ++v) {
      if (alive[v] && dl.at(v, best) == mu[best]) {
        alive[v] = false;
        --alive_count;
      }
    }
  }
  return seq;
}

DeltaResult delta_from_dl(const DLMatrix& dl, PmiMode mode, std::size_t cap) {
  DeltaResult result;
  bool use_exact = mode == PmiMode::exact || (mode == PmiMode::automatic && dl.cols() <= cap);
  if (use_exact) {
    result.sequence = longest_pmi_exact(dl, cap);
    result.exact = true;
  } else {
    result.sequence = longest_pmi_greedy(dl);
  }
  result.length = result.sequence.length();
  return result;
}

DeltaResult delta(const Graph& g, const LeaderSet& leaders, PmiMode mode, std::size_t cap) {
  return delta_from_dl(dl_matrix(g, leaders), mode, cap);
}

std::string pmi_sequence_json(const DLMatrix& dl, const PmiSequence& seq) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : seq.picks) {
    nlohmann::json item = {{"node", p.node}, {"coord", p.coord}};
    Distance d = dl.at(p.node, p.coord);
    item["value"] = is_finite(d) ? nlohmann::json(d) : nlohmann::json(nullptr);
    out.push_back(std::move(item));
  }
  return out.dump();
}

PmiMode parse_pmi_mode(const std::string& text) {
  if (text == "exact") return PmiMode::exact;
  if (text == "greedy") return PmiMode::greedy;
  if (text == "auto") return PmiMode::automatic;
  throw std::invalid_argument("mode must be exact, greedy or auto (got '" + text + "')");
}

const char* to_string(PmiMode mode) {
  switch (mode) {
    case PmiMode::exact: return "exact";
    case PmiMode::greedy: return "greedy";
    case PmiMode::automatic: return "auto";
  }
  return "?";
}

}  // namespace sscs
