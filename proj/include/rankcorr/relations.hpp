#pragma once

#include <Eigen/Dense>

#include "rankcorr/errors.hpp"

namespace rankcorr {

/// How local distinguishability weights are accumulated into a distance
/// between two rank positions.
enum class DistanceAggregator {
  SumCapped,  ///< sum of the weights between the positions, capped at 1
  Maximum,    ///< largest single weight between the positions
};

/// Triangular norm: a generalized conjunction on [0,1].
enum class TNorm {
  Minimum,
  Product,
  Lukasiewicz,
};

/// Per-position distinguishability weights on the rank domain {1, ..., n}.
///
/// A scaling function over n positions holds n-1 weights, each in [0,1].
/// weight(i) is the degree to which positions i and i+1 are told apart;
/// 1-weight(i) is the degree to which they are considered equal. All fuzzy
/// relations on positions (distance, equivalence, weak and strict order)
/// are derived from these weights.
class ScalingFunction {
 public:
  /// Builds a scaling function from a dense vector expression of weights.
  /// Throws ValidationError if the sequence is empty or any entry lies
  /// outside [0,1]; the message names the offending (1-based) index.
  template <typename Derived>
  explicit ScalingFunction(const Eigen::DenseBase<Derived>& weights)
      : weights_(weights.derived().template cast<double>().reshaped()) {
    validate();
  }

  explicit ScalingFunction(std::initializer_list<double> weights)
      : weights_(Eigen::Map<const Eigen::VectorXd>(weights.begin(),
                                                   static_cast<Eigen::Index>(weights.size()))) {
    validate();
  }

  /// Number of rank positions n (one more than the number of weights).
  int positions() const { return static_cast<int>(weights_.size()) + 1; }

  /// Weight between positions i and i+1, 1 <= i <= n-1.
  double weight(int i) const;

  const Eigen::VectorXd& weights() const { return weights_; }

  bool operator==(const ScalingFunction& other) const { return weights_ == other.weights_; }

 private:
  void validate() const;

  Eigen::VectorXd weights_;
};

/// Factory matching the ScalingFunction constructor; n = weights.size() + 1.
template <typename Derived>
ScalingFunction make_scaling(const Eigen::DenseBase<Derived>& weights) {
  return ScalingFunction(weights);
}

inline ScalingFunction make_scaling(std::initializer_list<double> weights) {
  return ScalingFunction(weights);
}

/// Scaling that fully distinguishes the first k positions and merges the
/// rest into one equivalence class: weight(i) = 1 for i < k, 0 otherwise.
ScalingFunction top_k_scaling(int n, int k);

/// Scaling with all n-1 weights equal to w (default: the crisp case w = 1).
ScalingFunction uniform_scaling(int n, double w = 1.0);

/// Distance between rank positions x and y in [1, n]. Zero on the diagonal,
/// symmetric, and bounded by 1.
double distance(const ScalingFunction& s, int x, int y,
                DistanceAggregator agg = DistanceAggregator::SumCapped);

/// Degree to which positions x and y are considered equal: 1 - distance.
double equivalence(const ScalingFunction& s, int x, int y,
                   DistanceAggregator agg = DistanceAggregator::SumCapped);

/// Weak order degree ("x <= y"): 1 when x <= y, the equivalence degree
/// otherwise. Strongly complete: max(order_leq(x,y), order_leq(y,x)) = 1.
double order_leq(const ScalingFunction& s, int x, int y,
                 DistanceAggregator agg = DistanceAggregator::SumCapped);

/// Strict order degree ("x < y"): the distance when x < y, 0 otherwise.
/// Complements the equivalence: for every pair,
/// order_strict(x,y) + equivalence(x,y) + order_strict(y,x) = 1.
double order_strict(const ScalingFunction& s, int x, int y,
                    DistanceAggregator agg = DistanceAggregator::SumCapped);

/// Full n-by-n tables of the relations above; entry (i,j) is the value at
/// positions (i+1, j+1).
Eigen::MatrixXd distance_table(const ScalingFunction& s,
                               DistanceAggregator agg = DistanceAggregator::SumCapped);
Eigen::MatrixXd equivalence_table(const ScalingFunction& s,
                                  DistanceAggregator agg = DistanceAggregator::SumCapped);
Eigen::MatrixXd strict_order_table(const ScalingFunction& s,
                                   DistanceAggregator agg = DistanceAggregator::SumCapped);

/// Applies the t-norm to a, b in [0,1].
double tnorm_apply(TNorm t, double a, double b);

/// Applies the De Morgan dual t-conorm: 1 - tnorm(1-a, 1-b).
double tconorm_apply(TNorm t, double a, double b);

}  // namespace rankcorr
