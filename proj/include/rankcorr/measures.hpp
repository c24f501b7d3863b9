#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rankcorr/baselines.hpp"
#include "rankcorr/dataset.hpp"
#include "rankcorr/scaled_gamma.hpp"
#include "rankcorr/ties.hpp"

namespace rankcorr {

enum class MeasureKind {
  Tau,
  Gamma,
  ScaledGamma,
  Shieh,
  KvKendall,
  KvGamma,
  Scoring,
  Extension,
};

/// Aggregation attitude for extension-set correlation.
enum class Attitude {
  Pessimistic,  ///< minimum over extension pairs
  Mean,
  Optimistic,  ///< maximum over extension pairs
};

/// A measure selection plus its parameters. Parameters that the selected
/// kind does not use are ignored; parameters it needs but that are left
/// empty fall back to documented defaults (uniform scaling, unit rank
/// weights, unit swap costs, the default scoring matrix, tau as extension
/// base).
struct MeasureSpec {
  MeasureKind kind = MeasureKind::Tau;

  // scaled-gamma
  std::optional<Eigen::VectorXd> scaling_weights;  ///< explicit n-1 weights
  std::optional<int> top_k;                        ///< or a top-k scaling
  TNorm tnorm = TNorm::Lukasiewicz;
  DistanceAggregator aggregator = DistanceAggregator::SumCapped;

  // shieh
  std::optional<Eigen::VectorXd> rank_weights;

  // kv-kendall / kv-gamma
  std::optional<Eigen::VectorXd> swap_costs;

  // scoring
  std::optional<ScoringMatrix> scores;

  // extension
  MeasureKind extension_base = MeasureKind::Tau;  ///< tau, gamma or scoring
  Attitude attitude = Attitude::Mean;
  std::int64_t extension_cap = 10000;
};

std::string measure_name(MeasureKind kind);
MeasureKind measure_from_name(const std::string& name);
std::string attitude_name(Attitude attitude);
Attitude attitude_from_name(const std::string& name);
std::string tnorm_name(TNorm t);
TNorm tnorm_from_name(const std::string& name);
std::string aggregator_name(DistanceAggregator agg);
DistanceAggregator aggregator_from_name(const std::string& name);

/// The scaling a spec implies for rankings of n items: explicit weights
/// (validated against n), a top-k scaling, or the crisp all-ones default.
ScalingFunction resolve_scaling(const MeasureSpec& spec, int n);

/// Evaluates the selected measure on one ranking pair; empty = undefined.
std::optional<double> evaluate_measure(const MeasureSpec& spec, const Ranking& x,
                                       const Ranking& y);

/// One measure evaluation with its per-measure breakdown (concordance /
/// discordance / tie masses, extension spread, ...), in a fixed key order.
struct ComputeResult {
  std::string measure;
  std::string a;
  std::string b;
  std::optional<double> value;
  std::vector<std::pair<std::string, double>> details;
};

ComputeResult compute(const Dataset& dataset, const std::string& a, const std::string& b,
                      const MeasureSpec& spec);

/// All-pairs measure table. Undefined entries are NaN. symmetric is false
/// for measures whose value depends on the argument order (Shieh's tau,
/// asymmetric scoring matrices); their full table is still produced.
struct MatrixResult {
  std::string measure;
  std::vector<std::string> labels;
  Eigen::MatrixXd values;
  bool symmetric = true;
};

MatrixResult matrix(const Dataset& dataset, const MeasureSpec& spec);

/// Measure value between the identity ranking of n items and the identity
/// with positions p and p+1 swapped, for each p in 1..n-1.
struct SensitivityPoint {
  int position = 0;
  std::optional<double> value;
};

std::vector<SensitivityPoint> sensitivity(int n, const MeasureSpec& spec);

}  // namespace rankcorr
