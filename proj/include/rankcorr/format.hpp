#pragma once

#include <string>
#include <vector>

#include "rankcorr/measures.hpp"

namespace rankcorr {

enum class OutputFormat { Table, Csv, Json };

OutputFormat output_format_from_name(const std::string& name);

/// Formats a value with 12 significant digits ("%.12g"); NaN prints as the
/// literal token "undef".
std::string format_number(double value);

std::string render_compute(const ComputeResult& result, OutputFormat format);
std::string render_matrix(const MatrixResult& result, OutputFormat format);
std::string render_sensitivity(const std::vector<SensitivityPoint>& series,
                               OutputFormat format);
std::string render_extensions(const std::vector<Ranking>& extensions, OutputFormat format);
std::string render_inspect(const ScalingFunction& scaling, DistanceAggregator agg,
                           OutputFormat format);

}  // namespace rankcorr
