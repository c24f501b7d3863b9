#pragma once

#include <optional>

#include "rankcorr/rankdata.hpp"
#include "rankcorr/relations.hpp"

namespace rankcorr {

/// Fuzzy classification degrees of one item pair. The three degrees sum to
/// 1, at most one of concordance and discordance is positive, and all lie
/// in [0,1].
struct FuzzyPairScores {
  double concordance = 0.0;
  double discordance = 0.0;
  double tie = 0.0;
};

/// Accumulated fuzzy pair degrees over all item pairs i < j. The three
/// components sum to N(N-1)/2.
struct FuzzyStats {
  double concordant = 0.0;
  double discordant = 0.0;
  double tied = 0.0;

  double total() const { return concordant + discordant + tied; }
};

/// Configuration of the scaled gamma measure: one scaling function per
/// ranking domain, the t-norm used as conjunction, and the weight
/// aggregation variant. Both scalings must cover as many positions as the
/// rankings have items.
struct ScaledGammaConfig {
  ScalingFunction scaling_x;
  ScalingFunction scaling_y;
  TNorm tnorm = TNorm::Lukasiewicz;
  DistanceAggregator aggregator = DistanceAggregator::SumCapped;

  /// Same scaling on both domains.
  explicit ScaledGammaConfig(ScalingFunction shared, TNorm t = TNorm::Lukasiewicz,
                             DistanceAggregator agg = DistanceAggregator::SumCapped)
      : scaling_x(shared), scaling_y(std::move(shared)), tnorm(t), aggregator(agg) {}

  ScaledGammaConfig(ScalingFunction sx, ScalingFunction sy, TNorm t = TNorm::Lukasiewicz,
                    DistanceAggregator agg = DistanceAggregator::SumCapped)
      : scaling_x(std::move(sx)), scaling_y(std::move(sy)), tnorm(t), aggregator(agg) {
    if (scaling_x.positions() != scaling_y.positions()) {
      throw ValidationError("scaled gamma: the two scaling functions cover different "
                            "position counts");
    }
  }
};

/// Fuzzy concordance, discordance and tie degrees of the pair (i, j),
/// 1 <= i < j <= N.
///
/// Concordance conjoins the strict-order degrees of the pair in the same
/// direction on both domains (both orientations, summed); discordance
/// conjoins opposite directions; the tie degree disjoins the two
/// equivalence degrees with the dual t-conorm.
FuzzyPairScores fuzzy_pair_scores(const ScaledGammaConfig& cfg, const Ranking& x,
                                  const Ranking& y, int i, int j);

/// Sums fuzzy_pair_scores over all pairs i < j, in row-major pair order.
FuzzyStats fuzzy_stats(const ScaledGammaConfig& cfg, const Ranking& x, const Ranking& y);

/// The scaled gamma coefficient: the fuzzy analogue of Goodman-Kruskal
/// gamma, (C - D) / (C + D) over accumulated fuzzy degrees. Empty when the
/// accumulated concordance and discordance are both zero.
std::optional<double> scaled_gamma(const ScaledGammaConfig& cfg, const Ranking& x,
                                   const Ranking& y);

}  // namespace rankcorr
