#include "rankcorr/scaled_gamma.hpp"

#include <string>

namespace rankcorr {

namespace {

void check_config(const ScaledGammaConfig& cfg, const Ranking& x, const Ranking& y,
                  const char* who) {
  detail::check_same_length(x, y, who);
  if (cfg.scaling_x.positions() != x.size()) {
    throw ValidationError(std::string(who) + ": scaling covers " +
                          std::to_string(cfg.scaling_x.positions()) +
                          " positions but rankings have " + std::to_string(x.size()) + " items");
  }
}

}  // namespace

FuzzyPairScores fuzzy_pair_scores(const ScaledGammaConfig& cfg, const Ranking& x,
                                  const Ranking& y, int i, int j) {
  check_config(cfg, x, y, "fuzzy_pair_scores");
  detail::check_pair_indices(x, i, j, "fuzzy_pair_scores");

  const int xi = x.rank_of(i), xj = x.rank_of(j);
  const int yi = y.rank_of(i), yj = y.rank_of(j);

  const auto rx = [&](int a, int b) { return order_strict(cfg.scaling_x, a, b, cfg.aggregator); };
  const auto ry = [&](int a, int b) { return order_strict(cfg.scaling_y, a, b, cfg.aggregator); };

  FuzzyPairScores scores;
  scores.concordance = tnorm_apply(cfg.tnorm, rx(xi, xj), ry(yi, yj)) +
                       tnorm_apply(cfg.tnorm, rx(xj, xi), ry(yj, yi));
  scores.discordance = tnorm_apply(cfg.tnorm, rx(xi, xj), ry(yj, yi)) +
                       tnorm_apply(cfg.tnorm, rx(xj, xi), ry(yi, yj));
  scores.tie = tconorm_apply(cfg.tnorm, equivalence(cfg.scaling_x, xi, xj, cfg.aggregator),
                             equivalence(cfg.scaling_y, yi, yj, cfg.aggregator));
  return scores;
}

FuzzyStats fuzzy_stats(const ScaledGammaConfig& cfg, const Ranking& x, const Ranking& y) {
  check_config(cfg, x, y, "fuzzy_stats");
  FuzzyStats stats;
  // Fixed accumulation order keeps the sums bit-reproducible.
  for (int i = 1; i <= x.size(); ++i) {
    for (int j = i + 1; j <= x.size(); ++j) {
      const FuzzyPairScores scores = fuzzy_pair_scores(cfg, x, y, i, j);
      stats.concordant += scores.concordance;
      stats.discordant += scores.discordance;
      stats.tied += scores.tie;
    }
  }
  return stats;
}

std::optional<double> scaled_gamma(const ScaledGammaConfig& cfg, const Ranking& x,
                                   const Ranking& y) {
  const FuzzyStats stats = fuzzy_stats(cfg, x, y);
  const double comparable = stats.concordant + stats.discordant;
  if (comparable == 0.0) return std::nullopt;
  return (stats.concordant - stats.discordant) / comparable;
}

}  // namespace rankcorr
