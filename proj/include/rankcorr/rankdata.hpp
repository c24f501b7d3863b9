#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "rankcorr/errors.hpp"

namespace rankcorr {

/// A ranking of N items, stored as dense ranks: positions(i) is the rank of
/// item i+1, the distinct rank values are exactly {1, ..., m} for some
/// m <= N, and equal ranks mean tied items (a bucket order).
///
/// Construction canonicalizes arbitrary orderable values to dense ranks, so
/// raw scores are accepted and only their relative order is retained.
class Ranking {
 public:
  /// Canonicalizes a dense vector expression of orderable values.
  /// Throws ValidationError for fewer than 2 items.
  template <typename Derived>
  static Ranking from_values(const Eigen::DenseBase<Derived>& values) {
    const Eigen::VectorXd v = values.derived().template cast<double>().reshaped();
    return Ranking(canonicalize(v));
  }

  static Ranking from_values(std::initializer_list<double> values) {
    return from_values(Eigen::Map<const Eigen::VectorXd>(
        values.begin(), static_cast<Eigen::Index>(values.size())));
  }

  /// Number of items N.
  int size() const { return static_cast<int>(ranks_.size()); }

  /// Rank of item i, 1 <= i <= N. Ranks are 1-based.
  int rank_of(int item) const;

  /// Number of distinct rank values m (the number of buckets).
  int bucket_count() const { return ranks_.size() == 0 ? 0 : ranks_.maxCoeff(); }

  bool has_ties() const { return bucket_count() < size(); }

  /// The dense rank vector; entry i holds the rank of item i+1.
  const Eigen::VectorXi& ranks() const { return ranks_; }

  bool operator==(const Ranking& other) const { return ranks_ == other.ranks_; }

 private:
  explicit Ranking(Eigen::VectorXi ranks) : ranks_(std::move(ranks)) {}

  static Eigen::VectorXi canonicalize(const Eigen::VectorXd& values);

  Eigen::VectorXi ranks_;
};

/// Factory matching Ranking::from_values.
template <typename Derived>
Ranking make_ranking(const Eigen::DenseBase<Derived>& values) {
  return Ranking::from_values(values);
}

inline Ranking make_ranking(std::initializer_list<double> values) {
  return Ranking::from_values(values);
}

/// The ranking 1, 2, ..., n.
Ranking identity_ranking(int n);

/// The ranking with all bucket positions mirrored: rank r becomes m+1-r.
Ranking reversed(const Ranking& r);

/// Crisp classification of an item pair across two rankings.
enum class PairClass {
  Concordant,  ///< ordered the same way in both rankings
  Discordant,  ///< ordered opposite ways
  TiedX,       ///< tied in x only
  TiedY,       ///< tied in y only
  TiedBoth,    ///< tied in both
};

/// Counts of pair classes over all item pairs i < j. concordant +
/// discordant + tied() equals n(n-1)/2.
struct PairStats {
  long long concordant = 0;
  long long discordant = 0;
  long long tied_x = 0;
  long long tied_y = 0;
  long long tied_both = 0;
  int n = 0;

  long long tied() const { return tied_x + tied_y + tied_both; }
  long long total_pairs() const { return static_cast<long long>(n) * (n - 1) / 2; }
};

/// Classifies the pair (i, j), 1 <= i < j <= N, by the sign product of its
/// rank differences in x and y.
PairClass classify_pair(const Ranking& x, const Ranking& y, int i, int j);

/// Tallies classify_pair over all pairs i < j.
PairStats pair_stats(const Ranking& x, const Ranking& y);

/// Kendall's tau: (C - D) / (N(N-1)/2). Always defined, in [-1, 1].
double kendall_tau(const Ranking& x, const Ranking& y);

/// Goodman-Kruskal gamma: (C - D) / (C + D). Empty when C + D = 0, i.e.
/// when no pair is comparable in both rankings.
std::optional<double> gamma(const Ranking& x, const Ranking& y);

/// Converts a correlation value in [-1,1] to a distance in [0, m]:
/// d = m (1 - corr) / 2, where m is the maximal distance.
double corr_to_distance(double corr, double max_distance);

/// Inverse of corr_to_distance: corr = 1 - 2 d / m.
double distance_to_corr(double dist, double max_distance);

/// Kendall distance: corr_to_distance(kendall_tau(x,y), N(N-1)/2). On
/// permutations this is the inversion count.
double kendall_distance(const Ranking& x, const Ranking& y);

namespace detail {
void check_same_length(const Ranking& x, const Ranking& y, const char* who);
void check_pair_indices(const Ranking& x, int i, int j, const char* who);
}  // namespace detail

}  // namespace rankcorr
