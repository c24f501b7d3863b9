#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rankcorr/rankdata.hpp"

namespace rankcorr {

enum class DatasetFormat { Csv, Json };

/// A named collection of rankings over the same items. Names are unique and
/// every ranking has the same length (one position per item).
struct Dataset {
  std::vector<std::string> items;    ///< item names, one per column
  std::vector<std::string> names;    ///< ranking labels
  std::vector<Ranking> rankings;     ///< canonicalized, parallel to names

  /// Ranking with the given label; throws ValidationError when absent.
  const Ranking& at(const std::string& name) const;

  bool operator==(const Dataset& other) const = default;
};

/// Parses a dataset.
///
/// CSV: first row is a header of item names; every following row is one
/// ranking given as numeric positions (raw scores work too, only relative
/// order is kept). Rows are labeled r1, r2, ... in file order.
///
/// JSON: {"items": ["A", ...], "rankings": {"label": [positions...], ...}}.
Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format);
Dataset load_dataset(std::istream& in, DatasetFormat format);

/// Writes the JSON form; load_dataset(save_dataset_json(...)) round-trips.
void save_dataset_json(const Dataset& dataset, const std::filesystem::path& path);
std::string dataset_to_json(const Dataset& dataset);

/// Infers the format from the file extension (.csv / .json); anything else
/// is a ValidationError.
DatasetFormat format_from_extension(const std::filesystem::path& path);

}  // namespace rankcorr
