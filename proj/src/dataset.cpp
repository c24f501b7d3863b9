#include "rankcorr/dataset.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace rankcorr {

const Ranking& Dataset::at(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return rankings[i];
  }
  throw ValidationError("dataset: no ranking labeled '" + name + "'");
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // trim surrounding whitespace
    const auto begin = field.find_first_not_of(" \t\r");
    const auto end = field.find_last_not_of(" \t\r");
    fields.push_back(begin == std::string::npos ? "" : field.substr(begin, end - begin + 1));
  }
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

double parse_position(const std::string& field, int line_no, int field_no) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(field, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  if (consumed != field.size() || field.empty()) {
    throw ValidationError("csv: line " + std::to_string(line_no) + ", field " +
                          std::to_string(field_no) + ": '" + field + "' is not a number");
  }
  return value;
}

void validate_dataset(const Dataset& dataset) {
  if (dataset.rankings.empty()) {
    throw ValidationError("dataset: no rankings");
  }
  std::set<std::string> seen;
  for (const std::string& name : dataset.names) {
    if (!seen.insert(name).second) {
      throw ValidationError("dataset: duplicate ranking label '" + name + "'");
    }
  }
  const int n = dataset.rankings.front().size();
  if (static_cast<int>(dataset.items.size()) != n) {
    throw ValidationError("dataset: " + std::to_string(dataset.items.size()) +
                          " item names for rankings of length " + std::to_string(n));
  }
  for (std::size_t i = 0; i < dataset.rankings.size(); ++i) {
    if (dataset.rankings[i].size() != n) {
      throw ValidationError("dataset: ranking '" + dataset.names[i] + "' has length " +
                            std::to_string(dataset.rankings[i].size()) + ", expected " +
                            std::to_string(n));
    }
  }
}

Dataset load_csv(std::istream& in) {
  Dataset dataset;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (dataset.items.empty()) {
      dataset.items = fields;
      if (dataset.items.size() < 2) {
        throw ValidationError("csv: line " + std::to_string(line_no) +
                              ": header must name at least 2 items");
      }
      continue;
    }
    if (fields.size() != dataset.items.size()) {
      throw ValidationError("csv: line " + std::to_string(line_no) + ": has " +
                            std::to_string(fields.size()) + " fields, header has " +
                            std::to_string(dataset.items.size()));
    }
    Eigen::VectorXd positions(fields.size());
    for (std::size_t f = 0; f < fields.size(); ++f) {
      positions[static_cast<Eigen::Index>(f)] =
          parse_position(fields[f], line_no, static_cast<int>(f) + 1);
    }
    dataset.names.push_back("r" + std::to_string(dataset.rankings.size() + 1));
    dataset.rankings.push_back(make_ranking(positions));
  }
  if (dataset.items.empty()) {
    throw ValidationError("csv: file is empty");
  }
  validate_dataset(dataset);
  return dataset;
}

Dataset load_json(std::istream& in) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("items") || !doc.contains("rankings")) {
    throw ValidationError("json: expected an object with 'items' and 'rankings'");
  }

  Dataset dataset;
  for (const auto& item : doc.at("items")) {
    if (!item.is_string()) throw ValidationError("json: item names must be strings");
    dataset.items.push_back(item.get<std::string>());
  }
  const auto& rankings = doc.at("rankings");
  if (!rankings.is_object()) {
    throw ValidationError("json: 'rankings' must map labels to position arrays");
  }
  for (const auto& [name, positions] : rankings.items()) {
    if (!positions.is_array()) {
      throw ValidationError("json: ranking '" + name + "' must be an array of positions");
    }
    Eigen::VectorXd values(positions.size());
    Eigen::Index k = 0;
    for (const auto& p : positions) {
      if (!p.is_number()) {
        throw ValidationError("json: ranking '" + name + "' has a non-numeric position");
      }
      values[k++] = p.get<double>();
    }
    if (values.size() < 2) {
      throw ValidationError("json: ranking '" + name + "' has fewer than 2 positions");
    }
    dataset.names.push_back(name);
    dataset.rankings.push_back(make_ranking(values));
  }
  validate_dataset(dataset);
  return dataset;
}

}  // namespace

Dataset load_dataset(std::istream& in, DatasetFormat format) {
  return format == DatasetFormat::Csv ? load_csv(in) : load_json(in);
}

Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open '" + path.string() + "'");
  }
  return load_dataset(in, format);
}

std::string dataset_to_json(const Dataset& dataset) {
  nlohmann::ordered_json doc;
  doc["items"] = dataset.items;
  nlohmann::ordered_json rankings = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < dataset.names.size(); ++i) {
    std::vector<int> positions(static_cast<std::size_t>(dataset.rankings[i].size()));
    for (int item = 1; item <= dataset.rankings[i].size(); ++item) {
      positions[static_cast<std::size_t>(item - 1)] = dataset.rankings[i].rank_of(item);
    }
    rankings[dataset.names[i]] = positions;
  }
  doc["rankings"] = std::move(rankings);
  return doc.dump(2) + "\n";
}

void save_dataset_json(const Dataset& dataset, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw ValidationError("cannot open '" + path.string() + "' for writing");
  }
  out << dataset_to_json(dataset);
}

DatasetFormat format_from_extension(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".csv") return DatasetFormat::Csv;
  if (ext == ".json") return DatasetFormat::Json;
  throw ValidationError("cannot infer dataset format from '" + path.string() +
                        "'; use .csv or .json or pass the format explicitly");
}

}  // namespace rankcorr
