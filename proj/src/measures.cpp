#include "rankcorr/measures.hpp"

#include <cmath>
#include <limits>

namespace rankcorr {

std::string measure_name(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::Tau: return "tau";
    case MeasureKind::Gamma: return "gamma";
    case MeasureKind::ScaledGamma: return "scaled-gamma";
    case MeasureKind::Shieh: return "shieh";
    case MeasureKind::KvKendall: return "kv-kendall";
    case MeasureKind::KvGamma: return "kv-gamma";
    case MeasureKind::Scoring: return "scoring";
    case MeasureKind::Extension: return "extension";
  }
  throw ValidationError("unknown measure kind");
}

MeasureKind measure_from_name(const std::string& name) {
  if (name == "tau") return MeasureKind::Tau;
  if (name == "gamma") return MeasureKind::Gamma;
  if (name == "scaled-gamma") return MeasureKind::ScaledGamma;
  if (name == "shieh") return MeasureKind::Shieh;
  if (name == "kv-kendall") return MeasureKind::KvKendall;
  if (name == "kv-gamma") return MeasureKind::KvGamma;
  if (name == "scoring") return MeasureKind::Scoring;
  if (name == "extension") return MeasureKind::Extension;
  throw ValidationError("unknown measure '" + name +
                        "'; expected tau, gamma, scaled-gamma, shieh, kv-kendall, kv-gamma, "
                        "scoring or extension");
}

std::string attitude_name(Attitude attitude) {
  switch (attitude) {
    case Attitude::Pessimistic: return "min";
    case Attitude::Mean: return "mean";
    case Attitude::Optimistic: return "max";
  }
  throw ValidationError("unknown attitude");
}

Attitude attitude_from_name(const std::string& name) {
  if (name == "min") return Attitude::Pessimistic;
  if (name == "mean") return Attitude::Mean;
  if (name == "max") return Attitude::Optimistic;
  throw ValidationError("unknown attitude '" + name + "'; expected min, mean or max");
}

std::string tnorm_name(TNorm t) {
  switch (t) {
    case TNorm::Minimum: return "min";
    case TNorm::Product: return "prod";
    case TNorm::Lukasiewicz: return "luk";
  }
  throw ValidationError("unknown t-norm");
}

TNorm tnorm_from_name(const std::string& name) {
  if (name == "min") return TNorm::Minimum;
  if (name == "prod") return TNorm::Product;
  if (name == "luk") return TNorm::Lukasiewicz;
  throw ValidationError("unknown t-norm '" + name + "'; expected min, prod or luk");
}

std::string aggregator_name(DistanceAggregator agg) {
  return agg == DistanceAggregator::SumCapped ? "sum" : "max";
}

DistanceAggregator aggregator_from_name(const std::string& name) {
  if (name == "sum") return DistanceAggregator::SumCapped;
  if (name == "max") return DistanceAggregator::Maximum;
  throw ValidationError("unknown aggregator '" + name + "'; expected sum or max");
}

ScalingFunction resolve_scaling(const MeasureSpec& spec, int n) {
  if (spec.scaling_weights && spec.top_k) {
    throw ValidationError("give either scaling weights or a top-k cutoff, not both");
  }
  if (spec.scaling_weights) {
    if (spec.scaling_weights->size() != n - 1) {
      throw ValidationError("scaling has " + std::to_string(spec.scaling_weights->size()) +
                            " weights, rankings of " + std::to_string(n) + " items need " +
                            std::to_string(n - 1));
    }
    return ScalingFunction(*spec.scaling_weights);
  }
  if (spec.top_k) {
    return top_k_scaling(n, *spec.top_k);
  }
  return uniform_scaling(n, 1.0);
}

namespace {

RankMeasure extension_base_measure(const MeasureSpec& spec) {
  switch (spec.extension_base) {
    case MeasureKind::Tau:
      return [](const Ranking& a, const Ranking& b) {
        return std::optional(kendall_tau(a, b));
      };
    case MeasureKind::Gamma:
      return [](const Ranking& a, const Ranking& b) { return gamma(a, b); };
    case MeasureKind::Scoring: {
      const ScoringMatrix scores = spec.scores ? *spec.scores : ScoringMatrix::defaults();
      return [scores](const Ranking& a, const Ranking& b) {
        return std::optional(scoring_correlation(a, b, scores));
      };
    }
    default:
      throw ValidationError("extension base must be tau, gamma or scoring, got " +
                            measure_name(spec.extension_base));
  }
}

double pick_attitude(const ExtensionSummary& summary, Attitude attitude) {
  switch (attitude) {
    case Attitude::Pessimistic: return summary.minimum;
    case Attitude::Mean: return summary.mean;
    case Attitude::Optimistic: return summary.maximum;
  }
  throw ValidationError("unknown attitude");
}

ExtensionSummary extension_summary(const MeasureSpec& spec, const Ranking& x,
                                   const Ranking& y) {
  return extension_correlation(x, y, extension_base_measure(spec), spec.extension_cap);
}

}  // namespace

std::optional<double> evaluate_measure(const MeasureSpec& spec, const Ranking& x,
                                       const Ranking& y) {
  switch (spec.kind) {
    case MeasureKind::Tau:
      return kendall_tau(x, y);
    case MeasureKind::Gamma:
      return gamma(x, y);
    case MeasureKind::ScaledGamma: {
      const ScaledGammaConfig cfg(resolve_scaling(spec, x.size()), spec.tnorm, spec.aggregator);
      return scaled_gamma(cfg, x, y);
    }
    case MeasureKind::Shieh: {
      const RankWeights w(spec.rank_weights ? *spec.rank_weights
                                            : Eigen::VectorXd::Ones(x.size()));
      return shieh_tau_w(x, y, w);
    }
    case MeasureKind::KvKendall: {
      const AdjacentSwapCosts delta(spec.swap_costs ? *spec.swap_costs
                                                    : Eigen::VectorXd::Ones(x.size() - 1));
      return kv_weighted_kendall(delta, x, y);
    }
    case MeasureKind::KvGamma: {
      const AdjacentSwapCosts delta(spec.swap_costs ? *spec.swap_costs
                                                    : Eigen::VectorXd::Ones(x.size() - 1));
      return kv_gamma(delta, x, y);
    }
    case MeasureKind::Scoring:
      return scoring_correlation(x, y, spec.scores ? *spec.scores : ScoringMatrix::defaults());
    case MeasureKind::Extension:
      return pick_attitude(extension_summary(spec, x, y), spec.attitude);
  }
  throw ValidationError("unknown measure kind");
}

namespace {

std::vector<std::pair<std::string, double>> measure_details(const MeasureSpec& spec,
                                                            const Ranking& x,
                                                            const Ranking& y) {
  switch (spec.kind) {
    case MeasureKind::Tau:
    case MeasureKind::Gamma: {
      const PairStats stats = pair_stats(x, y);
      return {{"concordant", static_cast<double>(stats.concordant)},
              {"discordant", static_cast<double>(stats.discordant)},
              {"tied", static_cast<double>(stats.tied())}};
    }
    case MeasureKind::ScaledGamma: {
      const ScaledGammaConfig cfg(resolve_scaling(spec, x.size()), spec.tnorm, spec.aggregator);
      const FuzzyStats stats = fuzzy_stats(cfg, x, y);
      return {{"concordant", stats.concordant},
              {"discordant", stats.discordant},
              {"tied", stats.tied}};
    }
    case MeasureKind::Shieh: {
      const RankWeights w(spec.rank_weights ? *spec.rank_weights
                                            : Eigen::VectorXd::Ones(x.size()));
      const ShiehStats stats = shieh_stats(x, y, w);
      return {{"weighted_concordant", stats.weighted_concordant},
              {"weighted_discordant", stats.weighted_discordant},
              {"weight_total", stats.weight_total}};
    }
    case MeasureKind::KvKendall:
    case MeasureKind::KvGamma: {
      const AdjacentSwapCosts delta(spec.swap_costs ? *spec.swap_costs
                                                    : Eigen::VectorXd::Ones(x.size() - 1));
      const KvStats stats = kv_stats(delta, x, y);
      return {{"weighted_concordant", stats.weighted_concordant},
              {"weighted_discordant", stats.weighted_discordant}};
    }
    case MeasureKind::Scoring:
      return {};
    case MeasureKind::Extension: {
      const ExtensionSummary summary = extension_summary(spec, x, y);
      return {{"min", summary.minimum},
              {"max", summary.maximum},
              {"mean", summary.mean},
              {"count", static_cast<double>(summary.count)}};
    }
  }
  return {};
}

/// Rethrows a measure-module error with the measure name attached.
template <typename Fn>
auto with_measure_context(const MeasureSpec& spec, Fn&& fn) {
  const std::string prefix = "measure '" + measure_name(spec.kind) + "': ";
  try {
    return fn();
  } catch (const ResourceLimitError& e) {
    throw ResourceLimitError(prefix + e.what(), e.count(), e.cap());
  } catch (const UnsupportedInputError& e) {
    throw UnsupportedInputError(prefix + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(prefix + e.what());
  }
}

}  // namespace

ComputeResult compute(const Dataset& dataset, const std::string& a, const std::string& b,
                      const MeasureSpec& spec) {
  const Ranking& x = dataset.at(a);
  const Ranking& y = dataset.at(b);
  ComputeResult result;
  result.measure = measure_name(spec.kind);
  result.a = a;
  result.b = b;
  with_measure_context(spec, [&] {
    result.value = evaluate_measure(spec, x, y);
    result.details = measure_details(spec, x, y);
    return 0;
  });
  return result;
}

MatrixResult matrix(const Dataset& dataset, const MeasureSpec& spec) {
  MatrixResult result;
  result.measure = measure_name(spec.kind);
  result.labels = dataset.names;
  const int k = static_cast<int>(dataset.rankings.size());
  result.values.resize(k, k);
  with_measure_context(spec, [&] {
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        const std::optional<double> value =
            evaluate_measure(spec, dataset.rankings[i], dataset.rankings[j]);
        result.values(i, j) = value ? *value : std::numeric_limits<double>::quiet_NaN();
      }
    }
    return 0;
  });
  switch (spec.kind) {
    case MeasureKind::Shieh:
      result.symmetric = false;
      break;
    case MeasureKind::Scoring: {
      const ScoringMatrix scores = spec.scores ? *spec.scores : ScoringMatrix::defaults();
      result.symmetric = scores.values() == scores.values().transpose().eval();
      break;
    }
    default:
      result.symmetric = true;
  }
  return result;
}

std::vector<SensitivityPoint> sensitivity(int n, const MeasureSpec& spec) {
  if (n < 3) {
    throw ValidationError("sensitivity: need at least 3 items, got " + std::to_string(n));
  }
  const Ranking base = identity_ranking(n);
  std::vector<SensitivityPoint> series;
  series.reserve(static_cast<std::size_t>(n - 1));
  with_measure_context(spec, [&] {
    for (int p = 1; p <= n - 1; ++p) {
      Eigen::VectorXd values = Eigen::VectorXd::LinSpaced(n, 1.0, static_cast<double>(n));
      std::swap(values[p - 1], values[p]);
      series.push_back({p, evaluate_measure(spec, base, make_ranking(values))});
    }
    return 0;
  });
  return series;
}

}  // namespace rankcorr
