#pragma once

// Brute force over every ordering of rows and every coordinate
// assignment, pruned only by the PMI condition itself.

#include <algorithm>
#include <random>
#include <vector>

#include "sscs/dl_distance.hpp"

namespace sscs::test {

namespace detail {

inline void extend(const DLMatrix& dl, std::vector<bool>& used, std::vector<std::pair<std::size_t, Distance>>& picks,
                   std::size_t& best) {
  best = std::max(best, picks.size());
  for (std::size_t v = 0; v < dl.rows(); ++v) {
    if (used[v] || !dl.reachable(v)) continue;
    bool fits = true;
    for (auto [k, value] : picks) {
      // earlier pick must be strictly below this row at its coordinate
      if (!(value < dl.at(v, k))) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;
    used[v] = true;
    for (std::size_t k = 0; k < dl.cols(); ++k) {
      picks.emplace_back(k, dl.at(v, k));
      extend(dl, used, picks, best);
      picks.pop_back();
    }
    used[v] = false;
  }
}

}  // namespace detail

inline std::size_t brute_force_pmi(const DLMatrix& dl) {
  std::vector<bool> used(dl.rows(), false);
  std::vector<std::pair<std::size_t, Distance>> picks;
  std::size_t best = 0;
  detail::extend(dl, used, picks, best);
  return best;
}

template <typename Rng>
DLMatrix random_dl(Rng& rng, std::size_t rows, std::size_t cols, Distance max_value, double inf_rate) {
  std::vector<std::vector<Distance>> data(rows, std::vector<Distance>(cols));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<Distance> value(0, max_value);
  for (auto& r : data)
    for (auto& x : r) x = unit(rng) < inf_rate ? kInfinity : value(rng);
  return DLMatrix::from_rows(data);
}

}  // namespace sscs::test
