#include "rankcorr/baselines.hpp"

#include <string>

namespace rankcorr {

void RankWeights::validate() const {
  if (v_.size() == 0) {
    throw ValidationError("rank weights: weight sequence must be non-empty");
  }
  for (Eigen::Index i = 0; i < v_.size(); ++i) {
    if (!(v_[i] >= 0.0)) {
      throw ValidationError("rank weights: entry at index " + std::to_string(i + 1) + " is " +
                            std::to_string(v_[i]) + ", must be non-negative");
    }
  }
  if ((v_.array() > 0.0).count() == 0) {
    throw ValidationError("rank weights: at least one weight must be positive");
  }
}

double RankWeights::at(int r) const {
  if (r < 1 || r > size()) {
    throw ValidationError("rank weights: rank " + std::to_string(r) + " out of range [1," +
                          std::to_string(size()) + "]");
  }
  return v_[r - 1];
}

void AdjacentSwapCosts::validate() const {
  if (delta_.size() == 0) {
    throw ValidationError("swap costs: cost sequence must be non-empty");
  }
  for (Eigen::Index i = 0; i < delta_.size(); ++i) {
    if (!(delta_[i] >= 0.0)) {
      throw ValidationError("swap costs: entry at index " + std::to_string(i + 1) + " is " +
                            std::to_string(delta_[i]) + ", must be non-negative");
    }
  }
}

namespace {

void reject_ties(const Ranking& r, const char* who) {
  if (r.has_ties()) {
    throw UnsupportedInputError(std::string(who) +
                                ": rankings with ties are not supported by this measure");
  }
}

int sign(int v) { return (v > 0) - (v < 0); }

}  // namespace

ShiehStats shieh_stats(const Ranking& x, const Ranking& y, const RankWeights& w) {
  detail::check_same_length(x, y, "shieh_tau_w");
  reject_ties(x, "shieh_tau_w");
  reject_ties(y, "shieh_tau_w");
  if (w.size() != x.size()) {
    throw ValidationError("shieh_tau_w: " + std::to_string(w.size()) + " rank weights for " +
                          std::to_string(x.size()) + " items");
  }

  ShiehStats stats;
  for (int i = 1; i <= x.size(); ++i) {
    for (int j = i + 1; j <= x.size(); ++j) {
      const double wij = w.at(x.rank_of(i)) * w.at(x.rank_of(j));
      const int s = sign(x.rank_of(i) - x.rank_of(j)) * sign(y.rank_of(i) - y.rank_of(j));
      if (s > 0) stats.weighted_concordant += wij;
      if (s < 0) stats.weighted_discordant += wij;
      stats.weight_total += wij;
    }
  }
  return stats;
}

std::optional<double> shieh_tau_w(const Ranking& x, const Ranking& y, const RankWeights& w) {
  const ShiehStats stats = shieh_stats(x, y, w);
  if (stats.weight_total == 0.0) return std::nullopt;
  return (stats.weighted_concordant - stats.weighted_discordant) / stats.weight_total;
}

Eigen::VectorXd kv_position_costs(const AdjacentSwapCosts& delta) {
  Eigen::VectorXd p(delta.size() + 1);
  p[0] = 0.0;
  for (Eigen::Index i = 0; i < delta.values().size(); ++i) {
    p[i + 1] = p[i] + delta.values()[i];
  }
  return p;
}

double kv_average_cost(const Eigen::VectorXd& p, const Ranking& pi1, const Ranking& pi2,
                       int i) {
  detail::check_same_length(pi1, pi2, "kv_average_cost");
  if (p.size() != pi1.size()) {
    throw ValidationError("kv_average_cost: " + std::to_string(p.size()) +
                          " position costs for " + std::to_string(pi1.size()) + " items");
  }
  const int from = pi1.rank_of(i);
  const int to = pi2.rank_of(i);
  if (from == to) return 1.0;
  return (p[from - 1] - p[to - 1]) / static_cast<double>(from - to);
}

KvStats kv_stats(const AdjacentSwapCosts& delta, const Ranking& pi1, const Ranking& pi2) {
  detail::check_same_length(pi1, pi2, "kv_stats");
  reject_ties(pi1, "kv_stats");
  reject_ties(pi2, "kv_stats");
  if (delta.size() != pi1.size() - 1) {
    throw ValidationError("kv_stats: " + std::to_string(delta.size()) + " swap costs for " +
                          std::to_string(pi1.size()) + " items");
  }

  const Eigen::VectorXd p = kv_position_costs(delta);
  Eigen::VectorXd avg(pi1.size());
  for (int i = 1; i <= pi1.size(); ++i) {
    avg[i - 1] = kv_average_cost(p, pi1, pi2, i);
  }

  KvStats stats;
  for (int i = 1; i <= pi1.size(); ++i) {
    for (int j = i + 1; j <= pi1.size(); ++j) {
      const int s =
          sign(pi1.rank_of(i) - pi1.rank_of(j)) * sign(pi2.rank_of(i) - pi2.rank_of(j));
      if (s > 0) {
        stats.weighted_concordant += avg[i - 1] * avg[j - 1];
      } else if (s < 0) {
        stats.weighted_discordant += avg[i - 1] * avg[j - 1];
      }
    }
  }
  return stats;
}

double kv_weighted_kendall(const AdjacentSwapCosts& delta, const Ranking& pi1,
                           const Ranking& pi2) {
  return kv_stats(delta, pi1, pi2).weighted_discordant;
}

std::optional<double> kv_gamma(const AdjacentSwapCosts& delta, const Ranking& pi1,
                               const Ranking& pi2) {
  const KvStats stats = kv_stats(delta, pi1, pi2);
  const double comparable = stats.weighted_concordant + stats.weighted_discordant;
  if (comparable == 0.0) return std::nullopt;
  return (stats.weighted_concordant - stats.weighted_discordant) / comparable;
}

}  // namespace rankcorr
