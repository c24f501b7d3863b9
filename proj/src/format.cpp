#include "rankcorr/format.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace rankcorr {

OutputFormat output_format_from_name(const std::string& name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ValidationError("unknown output format '" + name + "'; expected table, csv or json");
}

std::string format_number(double value) {
  if (std::isnan(value)) return "undef";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

namespace {

using nlohmann::ordered_json;

std::string format_value(const std::optional<double>& value) {
  return value ? format_number(*value) : "undef";
}

ordered_json json_value(const std::optional<double>& value) {
  if (!value || std::isnan(*value)) return nullptr;
  return *value;
}

/// Left-aligned columns separated by two spaces.
std::string render_aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (row.size() > widths.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) {
        line.append(widths[c] - row[c].size() + 2, ' ');
      }
    }
    out += line;
    out += '\n';
  }
  return out;
}

std::string weights_csv(const Eigen::VectorXd& weights) {
  std::string out;
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    if (i > 0) out += ",";
    out += format_number(weights[i]);
  }
  return out;
}

}  // namespace

std::string render_compute(const ComputeResult& result, OutputFormat format) {
  switch (format) {
    case OutputFormat::Table: {
      std::string out;
      out += "measure: " + result.measure + "\n";
      out += "pair: " + result.a + " vs " + result.b + "\n";
      out += "value: " + format_value(result.value) + "\n";
      for (const auto& [key, value] : result.details) {
        out += key + ": " + format_number(value) + "\n";
      }
      return out;
    }
    case OutputFormat::Csv: {
      std::string header = "measure,a,b,value";
      std::string row = result.measure + "," + result.a + "," + result.b + "," +
                        format_value(result.value);
      for (const auto& [key, value] : result.details) {
        header += "," + key;
        row += "," + format_number(value);
      }
      return header + "\n" + row + "\n";
    }
    case OutputFormat::Json: {
      ordered_json doc;
      doc["measure"] = result.measure;
      doc["a"] = result.a;
      doc["b"] = result.b;
      doc["value"] = json_value(result.value);
      ordered_json details = ordered_json::object();
      for (const auto& [key, value] : result.details) details[key] = value;
      doc["details"] = std::move(details);
      return doc.dump(2) + "\n";
    }
  }
  throw ValidationError("unknown output format");
}

std::string render_matrix(const MatrixResult& result, OutputFormat format) {
  const int k = static_cast<int>(result.labels.size());
  switch (format) {
    case OutputFormat::Table: {
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string> header{""};
      header.insert(header.end(), result.labels.begin(), result.labels.end());
      rows.push_back(std::move(header));
      for (int i = 0; i < k; ++i) {
        std::vector<std::string> row{result.labels[i]};
        for (int j = 0; j < k; ++j) {
          row.push_back(format_number(result.values(i, j)));
        }
        rows.push_back(std::move(row));
      }
      std::string out = "measure: " + result.measure + "\n";
      if (!result.symmetric) {
        out += "note: measure is not symmetric; the row ranking is the first argument\n";
      }
      return out + render_aligned(rows);
    }
    case OutputFormat::Csv: {
      std::string out = "label";
      for (const std::string& label : result.labels) out += "," + label;
      out += "\n";
      for (int i = 0; i < k; ++i) {
        out += result.labels[i];
        for (int j = 0; j < k; ++j) {
          out += "," + format_number(result.values(i, j));
        }
        out += "\n";
      }
      return out;
    }
    case OutputFormat::Json: {
      ordered_json doc;
      doc["measure"] = result.measure;
      doc["labels"] = result.labels;
      doc["symmetric"] = result.symmetric;
      ordered_json values = ordered_json::array();
      for (int i = 0; i < k; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < k; ++j) {
          row.push_back(json_value(result.values(i, j)));
        }
        values.push_back(std::move(row));
      }
      doc["values"] = std::move(values);
      return doc.dump(2) + "\n";
    }
  }
  throw ValidationError("unknown output format");
}

std::string render_sensitivity(const std::vector<SensitivityPoint>& series,
                               OutputFormat format) {
  switch (format) {
    case OutputFormat::Table:
    case OutputFormat::Csv: {
      std::string out = "position,value\n";
      for (const SensitivityPoint& point : series) {
        out += std::to_string(point.position) + "," + format_value(point.value) + "\n";
      }
      return out;
    }
    case OutputFormat::Json: {
      ordered_json doc = ordered_json::array();
      for (const SensitivityPoint& point : series) {
        ordered_json entry;
        entry["position"] = point.position;
        entry["value"] = json_value(point.value);
        doc.push_back(std::move(entry));
      }
      return doc.dump(2) + "\n";
    }
  }
  throw ValidationError("unknown output format");
}

std::string render_extensions(const std::vector<Ranking>& extensions, OutputFormat format) {
  switch (format) {
    case OutputFormat::Table: {
      std::string out = "count: " + std::to_string(extensions.size()) + "\n";
      for (const Ranking& extension : extensions) {
        for (int item = 1; item <= extension.size(); ++item) {
          if (item > 1) out += " ";
          out += std::to_string(extension.rank_of(item));
        }
        out += "\n";
      }
      return out;
    }
    case OutputFormat::Csv: {
      std::string out;
      for (const Ranking& extension : extensions) {
        for (int item = 1; item <= extension.size(); ++item) {
          if (item > 1) out += ",";
          out += std::to_string(extension.rank_of(item));
        }
        out += "\n";
      }
      return out;
    }
    case OutputFormat::Json: {
      ordered_json doc;
      doc["count"] = extensions.size();
      ordered_json list = ordered_json::array();
      for (const Ranking& extension : extensions) {
        ordered_json ranks = ordered_json::array();
        for (int item = 1; item <= extension.size(); ++item) {
          ranks.push_back(extension.rank_of(item));
        }
        list.push_back(std::move(ranks));
      }
      doc["extensions"] = std::move(list);
      return doc.dump(2) + "\n";
    }
  }
  throw ValidationError("unknown output format");
}

std::string render_inspect(const ScalingFunction& scaling, DistanceAggregator agg,
                           OutputFormat format) {
  const Eigen::MatrixXd d = distance_table(scaling, agg);
  const Eigen::MatrixXd e = equivalence_table(scaling, agg);
  const Eigen::MatrixXd r = strict_order_table(scaling, agg);
  const int n = scaling.positions();

  switch (format) {
    case OutputFormat::Table: {
      const auto matrix_rows = [&](const Eigen::MatrixXd& m) {
        std::vector<std::vector<std::string>> rows;
        for (int i = 0; i < n; ++i) {
          std::vector<std::string> row;
          for (int j = 0; j < n; ++j) row.push_back(format_number(m(i, j)));
          rows.push_back(std::move(row));
        }
        return render_aligned(rows);
      };
      std::string out;
      out += "positions: " + std::to_string(n) + "\n";
      out += "weights: " + weights_csv(scaling.weights()) + "\n";
      out += "aggregator: " + aggregator_name(agg) + "\n";
      out += "\ndistance d(x,y):\n" + matrix_rows(d);
      out += "\nequivalence E(x,y):\n" + matrix_rows(e);
      out += "\nstrict order R(x,y):\n" + matrix_rows(r);
      return out;
    }
    case OutputFormat::Csv: {
      std::string out = "table,x,y,value\n";
      const auto append = [&](const char* name, const Eigen::MatrixXd& m) {
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            out += std::string(name) + "," + std::to_string(i + 1) + "," +
                   std::to_string(j + 1) + "," + format_number(m(i, j)) + "\n";
          }
        }
      };
      append("distance", d);
      append("equivalence", e);
      append("strict_order", r);
      return out;
    }
    case OutputFormat::Json: {
      ordered_json doc;
      doc["positions"] = n;
      ordered_json weights = ordered_json::array();
      for (Eigen::Index i = 0; i < scaling.weights().size(); ++i) {
        weights.push_back(scaling.weights()[i]);
      }
      doc["weights"] = std::move(weights);
      doc["aggregator"] = aggregator_name(agg);
      const auto to_json = [&](const Eigen::MatrixXd& m) {
        ordered_json table = ordered_json::array();
        for (int i = 0; i < n; ++i) {
          ordered_json row = ordered_json::array();
          for (int j = 0; j < n; ++j) row.push_back(m(i, j));
          table.push_back(std::move(row));
        }
        return table;
      };
      doc["distance"] = to_json(d);
      doc["equivalence"] = to_json(e);
      doc["strict_order"] = to_json(r);
      return doc.dump(2) + "\n";
    }
  }
  throw ValidationError("unknown output format");
}

}  // namespace rankcorr
