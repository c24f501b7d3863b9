#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "rankcorr/rankdata.hpp"

namespace rankcorr {

/// 3x3 score table for item-pair comparisons under the indifference reading
/// of ties. Rows index the outcome of comparing the pair's ranks in the
/// first ranking (less / equal / greater), columns the outcome in the
/// second.
///
/// Validation enforces: all entries in [-1,1]; the concordance rewards
/// match across orientations (less/less equals greater/greater, and
/// likewise for the two full-discordance corners); each row's diagonal
/// entry dominates the row; and the full-discordance corners are minimal.
class ScoringMatrix {
 public:
  explicit ScoringMatrix(const Eigen::Matrix3d& scores);

  /// Diagonal 1, full-discordance corners -1, half-tied cells 0. Reduces
  /// scoring_correlation to Kendall's tau on tie-free inputs.
  static ScoringMatrix defaults();

  /// Score for comparison outcomes cx, cy in {-1, 0, +1} (sign of the rank
  /// difference in each ranking).
  double at(int cx, int cy) const { return scores_(cx + 1, cy + 1); }

  const Eigen::Matrix3d& values() const { return scores_; }

 private:
  Eigen::Matrix3d scores_;
};

/// Average pair score under a scoring matrix, normalized by N(N-1)/2.
/// With the default matrix this equals Kendall's tau on tie-free inputs.
double scoring_correlation(const Ranking& x, const Ranking& y,
                           const ScoringMatrix& scores = ScoringMatrix::defaults());

/// All linear extensions of a bucket order: every tie-free ranking that
/// preserves all strict preferences. The count is the product of the
/// factorials of the bucket sizes; when it would exceed cap, a
/// ResourceLimitError naming the count is raised instead.
std::vector<Ranking> enumerate_extensions(const Ranking& x, std::int64_t cap = 10000);

/// Exact number of linear extensions of x, as a double so that counts past
/// the integer range still compare against caps.
double count_extensions(const Ranking& x);

/// A correlation measure over tie-free rankings; an empty result means the
/// measure is undefined on that pair.
using RankMeasure = std::function<std::optional<double>(const Ranking&, const Ranking&)>;

/// Spread of a base measure over all pairs of linear extensions.
struct ExtensionSummary {
  double minimum = 0.0;
  double maximum = 0.0;
  double mean = 0.0;
  std::int64_t count = 0;  ///< number of extension pairs evaluated
};

/// Evaluates the base measure on every pair of linear extensions of x and
/// y (incomparability reading of ties: the ground truth is some unknown
/// total order). The cap bounds the number of extension pairs. Raises
/// ValidationError if the base measure is undefined on some pair.
ExtensionSummary extension_correlation(const Ranking& x, const Ranking& y,
                                       const RankMeasure& base, std::int64_t cap = 10000);

/// Same with Kendall's tau as the base measure.
ExtensionSummary extension_correlation(const Ranking& x, const Ranking& y,
                                       std::int64_t cap = 10000);

}  // namespace rankcorr
