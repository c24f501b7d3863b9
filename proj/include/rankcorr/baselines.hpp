#pragma once

#include <Eigen/Dense>
#include <optional>

#include "rankcorr/rankdata.hpp"

namespace rankcorr {

/// Per-rank weights for Shieh's weighted tau. Pair weights factor as
/// v(rank of i) * v(rank of j), indexed by the ranks of the reference
/// ranking. All weights must be non-negative with at least one positive.
class RankWeights {
 public:
  template <typename Derived>
  explicit RankWeights(const Eigen::DenseBase<Derived>& v)
      : v_(v.derived().template cast<double>().reshaped()) {
    validate();
  }

  explicit RankWeights(std::initializer_list<double> v)
      : v_(Eigen::Map<const Eigen::VectorXd>(v.begin(), static_cast<Eigen::Index>(v.size()))) {
    validate();
  }

  int size() const { return static_cast<int>(v_.size()); }

  /// Weight of rank r, 1-based.
  double at(int r) const;

  const Eigen::VectorXd& values() const { return v_; }

 private:
  void validate() const;

  Eigen::VectorXd v_;
};

/// Costs for swapping elements on adjacent positions i and i+1; N-1 entries,
/// all non-negative.
class AdjacentSwapCosts {
 public:
  template <typename Derived>
  explicit AdjacentSwapCosts(const Eigen::DenseBase<Derived>& delta)
      : delta_(delta.derived().template cast<double>().reshaped()) {
    validate();
  }

  explicit AdjacentSwapCosts(std::initializer_list<double> delta)
      : delta_(Eigen::Map<const Eigen::VectorXd>(delta.begin(),
                                                 static_cast<Eigen::Index>(delta.size()))) {
    validate();
  }

  int size() const { return static_cast<int>(delta_.size()); }

  const Eigen::VectorXd& values() const { return delta_; }

 private:
  void validate() const;

  Eigen::VectorXd delta_;
};

/// Weighted pair masses behind shieh_tau_w.
struct ShiehStats {
  double weighted_concordant = 0.0;
  double weighted_discordant = 0.0;
  double weight_total = 0.0;
};

/// Accumulates pair weights v(rank i) * v(rank j) over concordant and
/// discordant pairs, ranks taken from the first (reference) ranking.
/// Permutations only.
ShiehStats shieh_stats(const Ranking& x, const Ranking& y, const RankWeights& w);

/// Shieh's weighted tau. The first ranking plays the role of the reference
/// ranking whose ranks index the weights. Only defined on permutations:
/// rankings with ties raise UnsupportedInputError. Empty when the total
/// pair weight is zero.
std::optional<double> shieh_tau_w(const Ranking& x, const Ranking& y, const RankWeights& w);

/// Accumulated costs of moving from position 1 to each position: entry i
/// (0-based i+1) is the sum of the first i swap costs, starting at 0.
Eigen::VectorXd kv_position_costs(const AdjacentSwapCosts& delta);

/// Average per-step cost of moving item i from its position in pi1 to its
/// position in pi2, given accumulated position costs p (one per position).
/// Equals 1 when the item does not move.
double kv_average_cost(const Eigen::VectorXd& p, const Ranking& pi1, const Ranking& pi2, int i);

/// Weighted pair masses behind kv_weighted_kendall and kv_gamma: over
/// concordant (discordant) pairs, the product of the two items' average
/// movement costs.
struct KvStats {
  double weighted_concordant = 0.0;
  double weighted_discordant = 0.0;
};

KvStats kv_stats(const AdjacentSwapCosts& delta, const Ranking& pi1, const Ranking& pi2);

/// Weighted Kendall distance: the accumulated discordant mass of kv_stats.
/// Permutations only.
double kv_weighted_kendall(const AdjacentSwapCosts& delta, const Ranking& pi1,
                           const Ranking& pi2);

/// Gamma-style normalization of the weighted Kendall distance: weighted
/// concordance minus discordance over their sum. Permutations only; empty
/// when the denominator is zero.
std::optional<double> kv_gamma(const AdjacentSwapCosts& delta, const Ranking& pi1,
                               const Ranking& pi2);

}  // namespace rankcorr
