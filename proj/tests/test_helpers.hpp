#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "rankcorr/rankdata.hpp"
#include "rankcorr/relations.hpp"

namespace rankcorr::testing {

/// The worked-example scaling: 12 positions, symmetric weights that
/// emphasize the top and bottom ranks, with weights 0.4, 0.2, 0.2 between
/// positions 4 and 7.
inline ScalingFunction figure_scaling() {
  return make_scaling({1.0, 0.8, 0.6, 0.4, 0.2, 0.2, 0.2, 0.4, 0.6, 0.8, 1.0});
}

inline ScalingFunction random_scaling(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::VectorXd w(n - 1);
  for (Eigen::Index i = 0; i < w.size(); ++i) w[i] = unit(rng);
  return ScalingFunction(w);
}

inline Ranking random_permutation(int n, std::mt19937_64& rng) {
  std::vector<double> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1.0);
  std::shuffle(values.begin(), values.end(), rng);
  return make_ranking(Eigen::Map<const Eigen::VectorXd>(values.data(), n));
}

/// Uniform positions in 1..n before canonicalization, so ties are common.
inline Ranking random_bucket_order(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pos(1, n);
  Eigen::VectorXd values(n);
  for (Eigen::Index i = 0; i < values.size(); ++i) values[i] = pos(rng);
  return make_ranking(values);
}

/// All permutations of n items, each as a canonical Ranking.
inline std::vector<Ranking> all_permutations(int n) {
  std::vector<double> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1.0);
  std::vector<Ranking> result;
  do {
    result.push_back(make_ranking(Eigen::Map<const Eigen::VectorXd>(values.data(), n)));
  } while (std::next_permutation(values.begin(), values.end()));
  return result;
}

}  // namespace rankcorr::testing
