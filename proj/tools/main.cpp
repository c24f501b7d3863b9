#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "rankcorr/format.hpp"
#include "rankcorr/measures.hpp"

namespace {

using namespace rankcorr;

Eigen::VectorXd parse_number_list(const std::string& text, const std::string& what) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    try {
      std::size_t consumed = 0;
      const double v = std::stod(field, &consumed);
      if (consumed != field.size()) throw std::invalid_argument(field);
      values.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError(what + ": '" + field + "' is not a number");
    }
  }
  if (values.empty()) {
    throw ValidationError(what + ": empty list");
  }
  return Eigen::Map<const Eigen::VectorXd>(values.data(),
                                           static_cast<Eigen::Index>(values.size()));
}

Eigen::VectorXd read_weights_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open scaling file '" + path + "'");
  }
  std::vector<double> values;
  std::string token;
  while (in >> token) {
    // allow comma-separated tokens too
    std::stringstream ss(token);
    std::string field;
    while (std::getline(ss, field, ',')) {
      if (field.empty()) continue;
      try {
        std::size_t consumed = 0;
        const double v = std::stod(field, &consumed);
        if (consumed != field.size()) throw std::invalid_argument(field);
        values.push_back(v);
      } catch (const std::exception&) {
        throw ValidationError("scaling file '" + path + "': '" + field + "' is not a number");
      }
    }
  }
  if (values.empty()) {
    throw ValidationError("scaling file '" + path + "' holds no weights");
  }
  return Eigen::Map<const Eigen::VectorXd>(values.data(),
                                           static_cast<Eigen::Index>(values.size()));
}

struct MeasureOptions {
  std::string measure = "tau";
  std::string scaling;
  std::string scaling_file;
  int top_k = 0;
  std::string tnorm = "luk";
  std::string agg = "sum";
  std::string rank_weights;
  std::string swap_costs;
  std::string scores;
  std::string base = "tau";
  std::string attitude = "mean";
  std::int64_t cap = 10000;
};

void add_measure_options(CLI::App* cmd, MeasureOptions& opts) {
  cmd->add_option("--measure", opts.measure,
                  "measure: tau|gamma|scaled-gamma|shieh|kv-kendall|kv-gamma|scoring|extension");
  cmd->add_option("--scaling", opts.scaling, "scaling weights w1,w2,... (scaled-gamma)");
  cmd->add_option("--scaling-file", opts.scaling_file, "file of scaling weights");
  cmd->add_option("--top-k", opts.top_k, "top-k scaling cutoff (scaled-gamma)");
  cmd->add_option("--tnorm", opts.tnorm, "t-norm: min|prod|luk (default luk)");
  cmd->add_option("--agg", opts.agg, "weight aggregation: sum|max (default sum)");
  cmd->add_option("--rank-weights", opts.rank_weights, "per-rank weights v1,v2,... (shieh)");
  cmd->add_option("--swap-costs", opts.swap_costs,
                  "adjacent swap costs d1,d2,... (kv-kendall, kv-gamma)");
  cmd->add_option("--scores", opts.scores,
                  "scoring matrix, 9 row-major values s11,s12,...,s33 (scoring)");
  cmd->add_option("--base", opts.base, "extension base measure: tau|gamma|scoring");
  cmd->add_option("--attitude", opts.attitude, "extension aggregation: min|mean|max");
  cmd->add_option("--cap", opts.cap, "extension pair cap (default 10000)");
}

MeasureSpec to_spec(const MeasureOptions& opts) {
  MeasureSpec spec;
  spec.kind = measure_from_name(opts.measure);
  if (!opts.scaling.empty() && !opts.scaling_file.empty()) {
    throw ValidationError("give either --scaling or --scaling-file, not both");
  }
  if (!opts.scaling.empty()) {
    spec.scaling_weights = parse_number_list(opts.scaling, "--scaling");
  } else if (!opts.scaling_file.empty()) {
    spec.scaling_weights = read_weights_file(opts.scaling_file);
  }
  if (opts.top_k > 0) spec.top_k = opts.top_k;
  spec.tnorm = tnorm_from_name(opts.tnorm);
  spec.aggregator = aggregator_from_name(opts.agg);
  if (!opts.rank_weights.empty()) {
    spec.rank_weights = parse_number_list(opts.rank_weights, "--rank-weights");
  }
  if (!opts.swap_costs.empty()) {
    spec.swap_costs = parse_number_list(opts.swap_costs, "--swap-costs");
  }
  if (!opts.scores.empty()) {
    const Eigen::VectorXd values = parse_number_list(opts.scores, "--scores");
    if (values.size() != 9) {
      throw ValidationError("--scores needs exactly 9 values, got " +
                            std::to_string(values.size()));
    }
    Eigen::Matrix3d m;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) m(r, c) = values[3 * r + c];
    }
    spec.scores = ScoringMatrix(m);
  }
  spec.extension_base = measure_from_name(opts.base);
  spec.attitude = attitude_from_name(opts.attitude);
  spec.extension_cap = opts.cap;
  return spec;
}

Dataset load(const std::string& path, const std::string& format) {
  DatasetFormat f;
  if (format.empty()) {
    f = format_from_extension(path);
  } else if (format == "csv") {
    f = DatasetFormat::Csv;
  } else if (format == "json") {
    f = DatasetFormat::Json;
  } else {
    throw ValidationError("unknown input format '" + format + "'; expected csv or json");
  }
  return load_dataset(std::filesystem::path(path), f);
}

bool has_undefined(const ComputeResult& result) { return !result.value.has_value(); }

bool has_undefined(const MatrixResult& result) { return result.values.hasNaN(); }

bool has_undefined(const std::vector<SensitivityPoint>& series) {
  for (const SensitivityPoint& point : series) {
    if (!point.value) return true;
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rankcorr: weighted rank correlation measures for bucket orders"};
  app.require_subcommand(1);

  std::string format_name = "table";
  bool strict = false;
  app.add_option("--format", format_name, "output format: table|csv|json")
      ->capture_default_str();
  app.add_flag("--strict", strict, "exit nonzero when a result is undefined");

  // compute
  auto* compute_cmd = app.add_subcommand("compute", "measure one ranking pair");
  std::string compute_path, compute_a, compute_b, compute_informat;
  MeasureOptions compute_opts;
  compute_cmd->add_option("dataset", compute_path, "dataset file (.csv or .json)")->required();
  compute_cmd->add_option("a", compute_a, "label of the first ranking")->required();
  compute_cmd->add_option("b", compute_b, "label of the second ranking")->required();
  compute_cmd->add_option("--input-format", compute_informat, "dataset format: csv|json");
  add_measure_options(compute_cmd, compute_opts);

  // matrix
  auto* matrix_cmd = app.add_subcommand("matrix", "all-pairs measure table");
  std::string matrix_path, matrix_informat;
  MeasureOptions matrix_opts;
  matrix_cmd->add_option("dataset", matrix_path, "dataset file (.csv or .json)")->required();
  matrix_cmd->add_option("--input-format", matrix_informat, "dataset format: csv|json");
  add_measure_options(matrix_cmd, matrix_opts);

  // sensitivity
  auto* sens_cmd = app.add_subcommand(
      "sensitivity", "measure value per adjacent-swap position against the identity");
  int sens_n = 0;
  MeasureOptions sens_opts;
  sens_cmd->add_option("n", sens_n, "item count")->required();
  add_measure_options(sens_cmd, sens_opts);

  // inspect
  auto* inspect_cmd =
      app.add_subcommand("inspect", "distance / equivalence / strict order tables of a scaling");
  std::string inspect_scaling, inspect_scaling_file, inspect_agg = "sum";
  int inspect_topk = 0, inspect_n = 0;
  inspect_cmd->add_option("--scaling", inspect_scaling, "scaling weights w1,w2,...");
  inspect_cmd->add_option("--scaling-file", inspect_scaling_file, "file of scaling weights");
  inspect_cmd->add_option("--top-k", inspect_topk, "top-k scaling cutoff (needs --n)");
  inspect_cmd->add_option("--n", inspect_n, "position count for --top-k");
  inspect_cmd->add_option("--agg", inspect_agg, "weight aggregation: sum|max");

  // extensions
  auto* ext_cmd = app.add_subcommand("extensions", "linear extensions of a bucket order");
  std::string ext_path, ext_label, ext_informat, ext_ranking;
  std::int64_t ext_cap = 10000;
  ext_cmd->add_option("dataset", ext_path, "dataset file (.csv or .json)");
  ext_cmd->add_option("label", ext_label, "ranking label");
  ext_cmd->add_option("--input-format", ext_informat, "dataset format: csv|json");
  ext_cmd->add_option("--ranking", ext_ranking, "inline ranking positions p1,p2,...");
  ext_cmd->add_option("--cap", ext_cap, "extension cap (default 10000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto fail = [](const std::exception& e, int code) {
    std::cerr << "error: " << e.what() << "\n";
    return code;
  };

  try {
    const OutputFormat format = output_format_from_name(format_name);

    if (app.got_subcommand(compute_cmd)) {
      const Dataset dataset = load(compute_path, compute_informat);
      const ComputeResult result = compute(dataset, compute_a, compute_b, to_spec(compute_opts));
      std::cout << render_compute(result, format);
      return strict && has_undefined(result) ? 1 : 0;
    }
    if (app.got_subcommand(matrix_cmd)) {
      const Dataset dataset = load(matrix_path, matrix_informat);
      const MatrixResult result = matrix(dataset, to_spec(matrix_opts));
      std::cout << render_matrix(result, format);
      return strict && has_undefined(result) ? 1 : 0;
    }
    if (app.got_subcommand(sens_cmd)) {
      const std::vector<SensitivityPoint> series = sensitivity(sens_n, to_spec(sens_opts));
      std::cout << render_sensitivity(series, format);
      return strict && has_undefined(series) ? 1 : 0;
    }
    if (app.got_subcommand(inspect_cmd)) {
      std::optional<ScalingFunction> scaling;
      if (!inspect_scaling.empty()) {
        scaling = ScalingFunction(parse_number_list(inspect_scaling, "--scaling"));
      } else if (!inspect_scaling_file.empty()) {
        scaling = ScalingFunction(read_weights_file(inspect_scaling_file));
      } else if (inspect_topk > 0) {
        if (inspect_n < 2) {
          throw ValidationError("--top-k needs --n to give the position count");
        }
        scaling = top_k_scaling(inspect_n, inspect_topk);
      } else {
        throw ValidationError("inspect needs --scaling, --scaling-file or --top-k with --n");
      }
      std::cout << render_inspect(*scaling, aggregator_from_name(inspect_agg), format);
      return 0;
    }
    if (app.got_subcommand(ext_cmd)) {
      std::optional<Ranking> ranking;
      if (!ext_ranking.empty()) {
        if (!ext_path.empty()) {
          throw ValidationError("give either a dataset and label or --ranking, not both");
        }
        ranking = make_ranking(parse_number_list(ext_ranking, "--ranking"));
      } else {
        if (ext_path.empty() || ext_label.empty()) {
          throw ValidationError("extensions needs a dataset and label, or --ranking");
        }
        ranking = load(ext_path, ext_informat).at(ext_label);
      }
      std::cout << render_extensions(enumerate_extensions(*ranking, ext_cap), format);
      return 0;
    }
  } catch (const ResourceLimitError& e) {
    return fail(e, 4);
  } catch (const UnsupportedInputError& e) {
    return fail(e, 3);
  } catch (const ValidationError& e) {
    return fail(e, 2);
  } catch (const std::exception& e) {
    return fail(e, 1);
  }
  return 0;
}
