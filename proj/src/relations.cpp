#include "rankcorr/relations.hpp"

#include <algorithm>
#include <string>

namespace rankcorr {

void ScalingFunction::validate() const {
  if (weights_.size() == 0) {
    throw ValidationError("scaling function: weight sequence must be non-empty");
  }
  for (Eigen::Index i = 0; i < weights_.size(); ++i) {
    const double w = weights_[i];
    if (!(w >= 0.0 && w <= 1.0)) {
      throw ValidationError("scaling function: weight at index " + std::to_string(i + 1) +
                            " is " + std::to_string(w) + ", outside [0,1]");
    }
  }
}

double ScalingFunction::weight(int i) const {
  if (i < 1 || i > static_cast<int>(weights_.size())) {
    throw ValidationError("scaling function: weight index " + std::to_string(i) +
                          " out of range [1," + std::to_string(weights_.size()) + "]");
  }
  return weights_[i - 1];
}

ScalingFunction top_k_scaling(int n, int k) {
  if (n < 2) {
    throw ValidationError("top_k_scaling: need at least 2 positions, got " + std::to_string(n));
  }
  if (k < 1 || k > n) {
    throw ValidationError("top_k_scaling: k = " + std::to_string(k) + " out of range [1," +
                          std::to_string(n) + "]");
  }
  Eigen::VectorXd w(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    w[i - 1] = i < k ? 1.0 : 0.0;
  }
  return ScalingFunction(w);
}

ScalingFunction uniform_scaling(int n, double w) {
  if (n < 2) {
    throw ValidationError("uniform_scaling: need at least 2 positions, got " + std::to_string(n));
  }
  return ScalingFunction(Eigen::VectorXd::Constant(n - 1, w));
}

namespace {

void check_position(const ScalingFunction& s, int pos) {
  if (pos < 1 || pos > s.positions()) {
    throw ValidationError("position " + std::to_string(pos) + " out of range [1," +
                          std::to_string(s.positions()) + "]");
  }
}

}  // namespace

double distance(const ScalingFunction& s, int x, int y, DistanceAggregator agg) {
  check_position(s, x);
  check_position(s, y);
  const int lo = std::min(x, y);
  const int hi = std::max(x, y);
  switch (agg) {
    case DistanceAggregator::SumCapped: {
      double sum = 0.0;
      for (int i = lo; i < hi; ++i) sum += s.weight(i);
      return std::min(1.0, sum);
    }
    case DistanceAggregator::Maximum: {
      double best = 0.0;
      for (int i = lo; i < hi; ++i) best = std::max(best, s.weight(i));
      return best;
    }
  }
  throw ValidationError("distance: unknown aggregator");
}

double equivalence(const ScalingFunction& s, int x, int y, DistanceAggregator agg) {
  return 1.0 - distance(s, x, y, agg);
}

double order_leq(const ScalingFunction& s, int x, int y, DistanceAggregator agg) {
  check_position(s, x);
  check_position(s, y);
  return x <= y ? 1.0 : equivalence(s, x, y, agg);
}

double order_strict(const ScalingFunction& s, int x, int y, DistanceAggregator agg) {
  check_position(s, x);
  check_position(s, y);
  return x < y ? distance(s, x, y, agg) : 0.0;
}

namespace {

template <typename Fn>
Eigen::MatrixXd build_table(const ScalingFunction& s, Fn&& entry) {
  const int n = s.positions();
  Eigen::MatrixXd table(n, n);
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      table(x - 1, y - 1) = entry(x, y);
    }
  }
  return table;
}

}  // namespace

Eigen::MatrixXd distance_table(const ScalingFunction& s, DistanceAggregator agg) {
  return build_table(s, [&](int x, int y) { return distance(s, x, y, agg); });
}

Eigen::MatrixXd equivalence_table(const ScalingFunction& s, DistanceAggregator agg) {
  return build_table(s, [&](int x, int y) { return equivalence(s, x, y, agg); });
}

Eigen::MatrixXd strict_order_table(const ScalingFunction& s, DistanceAggregator agg) {
  return build_table(s, [&](int x, int y) { return order_strict(s, x, y, agg); });
}

namespace {

void check_degree(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw ValidationError(std::string(name) + ": argument " + std::to_string(v) +
                          " outside [0,1]");
  }
}

}  // namespace

double tnorm_apply(TNorm t, double a, double b) {
  check_degree(a, "tnorm_apply");
  check_degree(b, "tnorm_apply");
  switch (t) {
    case TNorm::Minimum:
      return std::min(a, b);
    case TNorm::Product:
      return a * b;
    case TNorm::Lukasiewicz:
      return std::max(0.0, a + b - 1.0);
  }
  throw ValidationError("tnorm_apply: unknown t-norm");
}

double tconorm_apply(TNorm t, double a, double b) {
  check_degree(a, "tconorm_apply");
  check_degree(b, "tconorm_apply");
  return 1.0 - tnorm_apply(t, 1.0 - a, 1.0 - b);
}

}  // namespace rankcorr
