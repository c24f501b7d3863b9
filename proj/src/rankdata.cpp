#include "rankcorr/rankdata.hpp"

#include <string>

namespace rankcorr {

Eigen::VectorXi Ranking::canonicalize(const Eigen::VectorXd& values) {
  const Eigen::Index n = values.size();
  if (n < 2) {
    throw ValidationError("ranking: need at least 2 items, got " + std::to_string(n));
  }
  if (!values.allFinite()) {
    throw ValidationError("ranking: positions must be finite numbers");
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index a, Eigen::Index b) { return values[a] < values[b]; });

  Eigen::VectorXi ranks(n);
  int rank = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || values[order[k]] != values[order[k - 1]]) ++rank;
    ranks[order[k]] = rank;
  }
  return ranks;
}

int Ranking::rank_of(int item) const {
  if (item < 1 || item > size()) {
    throw ValidationError("ranking: item index " + std::to_string(item) + " out of range [1," +
                          std::to_string(size()) + "]");
  }
  return ranks_[item - 1];
}

Ranking identity_ranking(int n) {
  return make_ranking(Eigen::VectorXd::LinSpaced(n, 1.0, static_cast<double>(n)));
}

Ranking reversed(const Ranking& r) {
  return make_ranking(-r.ranks().cast<double>());
}

namespace detail {

void check_same_length(const Ranking& x, const Ranking& y, const char* who) {
  if (x.size() != y.size()) {
    throw ValidationError(std::string(who) + ": rankings have different lengths (" +
                          std::to_string(x.size()) + " vs " + std::to_string(y.size()) + ")");
  }
}

void check_pair_indices(const Ranking& x, int i, int j, const char* who) {
  if (i < 1 || j < 1 || i > x.size() || j > x.size()) {
    throw ValidationError(std::string(who) + ": item index out of range [1," +
                          std::to_string(x.size()) + "]");
  }
  if (i >= j) {
    throw ValidationError(std::string(who) + ": pair indices must satisfy i < j, got (" +
                          std::to_string(i) + "," + std::to_string(j) + ")");
  }
}

}  // namespace detail

namespace {

int sign(int v) { return (v > 0) - (v < 0); }

}  // namespace

PairClass classify_pair(const Ranking& x, const Ranking& y, int i, int j) {
  detail::check_same_length(x, y, "classify_pair");
  detail::check_pair_indices(x, i, j, "classify_pair");
  const int sx = sign(x.rank_of(i) - x.rank_of(j));
  const int sy = sign(y.rank_of(i) - y.rank_of(j));
  if (sx == 0 && sy == 0) return PairClass::TiedBoth;
  if (sx == 0) return PairClass::TiedX;
  if (sy == 0) return PairClass::TiedY;
  return sx == sy ? PairClass::Concordant : PairClass::Discordant;
}

PairStats pair_stats(const Ranking& x, const Ranking& y) {
  detail::check_same_length(x, y, "pair_stats");
  PairStats stats;
  stats.n = x.size();
  for (int i = 1; i <= x.size(); ++i) {
    for (int j = i + 1; j <= x.size(); ++j) {
      switch (classify_pair(x, y, i, j)) {
        case PairClass::Concordant:
          ++stats.concordant;
          break;
        case PairClass::Discordant:
          ++stats.discordant;
          break;
        case PairClass::TiedX:
          ++stats.tied_x;
          break;
        case PairClass::TiedY:
          ++stats.tied_y;
          break;
        case PairClass::TiedBoth:
          ++stats.tied_both;
          break;
      }
    }
  }
  return stats;
}

double kendall_tau(const Ranking& x, const Ranking& y) {
  const PairStats stats = pair_stats(x, y);
  return static_cast<double>(stats.concordant - stats.discordant) /
         static_cast<double>(stats.total_pairs());
}

std::optional<double> gamma(const Ranking& x, const Ranking& y) {
  const PairStats stats = pair_stats(x, y);
  const long long comparable = stats.concordant + stats.discordant;
  if (comparable == 0) return std::nullopt;
  return static_cast<double>(stats.concordant - stats.discordant) /
         static_cast<double>(comparable);
}

double corr_to_distance(double corr, double max_distance) {
  if (!(max_distance > 0.0)) {
    throw ValidationError("corr_to_distance: maximal distance must be positive, got " +
                          std::to_string(max_distance));
  }
  if (!(corr >= -1.0 && corr <= 1.0)) {
    throw ValidationError("corr_to_distance: correlation " + std::to_string(corr) +
                          " outside [-1,1]");
  }
  return max_distance * (1.0 - corr) / 2.0;
}

double distance_to_corr(double dist, double max_distance) {
  if (!(max_distance > 0.0)) {
    throw ValidationError("distance_to_corr: maximal distance must be positive, got " +
                          std::to_string(max_distance));
  }
  return 1.0 - 2.0 * dist / max_distance;
}

double kendall_distance(const Ranking& x, const Ranking& y) {
  detail::check_same_length(x, y, "kendall_distance");
  const double max_distance = static_cast<double>(x.size()) * (x.size() - 1) / 2.0;
  return corr_to_distance(kendall_tau(x, y), max_distance);
}

}  // namespace rankcorr
