#include "rankcorr/ties.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <string>

namespace rankcorr {

ScoringMatrix::ScoringMatrix(const Eigen::Matrix3d& scores) : scores_(scores) {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (!(scores_(r, c) >= -1.0 && scores_(r, c) <= 1.0)) {
        throw ValidationError("scoring matrix: entry (" + std::to_string(r + 1) + "," +
                              std::to_string(c + 1) + ") outside [-1,1]");
      }
    }
  }
  if (scores_(0, 0) != scores_(2, 2) || scores_(0, 2) != scores_(2, 0)) {
    throw ValidationError("scoring matrix: concordance and discordance rewards must not "
                          "depend on orientation");
  }
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (scores_(r, r) < scores_(r, c)) {
        throw ValidationError("scoring matrix: diagonal entry in row " + std::to_string(r + 1) +
                              " must dominate the row");
      }
      if (scores_(0, 2) > scores_(r, c)) {
        throw ValidationError("scoring matrix: the full-discordance corners must be minimal");
      }
    }
  }
}

ScoringMatrix ScoringMatrix::defaults() {
  Eigen::Matrix3d s;
  s << 1.0, 0.0, -1.0,  //
      0.0, 1.0, 0.0,    //
      -1.0, 0.0, 1.0;
  return ScoringMatrix(s);
}

namespace {

int sign(int v) { return (v > 0) - (v < 0); }

}  // namespace

double scoring_correlation(const Ranking& x, const Ranking& y, const ScoringMatrix& scores) {
  detail::check_same_length(x, y, "scoring_correlation");
  double sum = 0.0;
  for (int i = 1; i <= x.size(); ++i) {
    for (int j = i + 1; j <= x.size(); ++j) {
      sum += scores.at(sign(x.rank_of(i) - x.rank_of(j)), sign(y.rank_of(i) - y.rank_of(j)));
    }
  }
  return sum / (static_cast<double>(x.size()) * (x.size() - 1) / 2.0);
}

namespace {

std::string format_count(double count) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.0f", count);
  return buf;
}

/// Items of each bucket in ascending item order; bucket r at index r-1.
std::vector<std::vector<int>> bucket_items(const Ranking& x) {
  std::vector<std::vector<int>> buckets(static_cast<std::size_t>(x.bucket_count()));
  for (int item = 1; item <= x.size(); ++item) {
    buckets[static_cast<std::size_t>(x.rank_of(item) - 1)].push_back(item);
  }
  return buckets;
}

}  // namespace

double count_extensions(const Ranking& x) {
  double count = 1.0;
  for (const auto& bucket : bucket_items(x)) {
    for (std::size_t k = 2; k <= bucket.size(); ++k) {
      count *= static_cast<double>(k);
    }
  }
  return count;
}

std::vector<Ranking> enumerate_extensions(const Ranking& x, std::int64_t cap) {
  if (cap < 1) {
    throw ValidationError("enumerate_extensions: cap must be positive");
  }
  const double count = count_extensions(x);
  if (count > static_cast<double>(cap)) {
    throw ResourceLimitError("enumerate_extensions: bucket order has " + format_count(count) +
                                 " linear extensions, over the cap of " + std::to_string(cap),
                             count, cap);
  }

  std::vector<std::vector<int>> buckets = bucket_items(x);
  std::vector<int> offsets(buckets.size());
  int offset = 0;
  for (std::size_t b = 0; b < buckets.size(); ++b) {
    offsets[b] = offset;
    offset += static_cast<int>(buckets[b].size());
  }

  std::vector<Ranking> extensions;
  extensions.reserve(static_cast<std::size_t>(count));
  Eigen::VectorXd positions(x.size());
  while (true) {
    for (std::size_t b = 0; b < buckets.size(); ++b) {
      for (std::size_t k = 0; k < buckets[b].size(); ++k) {
        positions[buckets[b][k] - 1] = static_cast<double>(offsets[b] + static_cast<int>(k) + 1);
      }
    }
    extensions.push_back(make_ranking(positions));

    // Advance the right-most bucket that still has permutations left.
    std::size_t b = buckets.size();
    while (b > 0 && !std::next_permutation(buckets[b - 1].begin(), buckets[b - 1].end())) {
      --b;  // wrapped around to sorted order, carry into the previous bucket
    }
    if (b == 0) break;
  }
  return extensions;
}

ExtensionSummary extension_correlation(const Ranking& x, const Ranking& y,
                                       const RankMeasure& base, std::int64_t cap) {
  detail::check_same_length(x, y, "extension_correlation");
  const double pair_count = count_extensions(x) * count_extensions(y);
  if (pair_count > static_cast<double>(cap)) {
    throw ResourceLimitError("extension_correlation: " + format_count(pair_count) +
                                 " extension pairs, over the cap of " + std::to_string(cap),
                             pair_count, cap);
  }

  const std::vector<Ranking> ex = enumerate_extensions(x, cap);
  const std::vector<Ranking> ey = enumerate_extensions(y, cap);

  ExtensionSummary summary;
  summary.minimum = std::numeric_limits<double>::infinity();
  summary.maximum = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (const Ranking& tx : ex) {
    for (const Ranking& ty : ey) {
      const std::optional<double> value = base(tx, ty);
      if (!value) {
        throw ValidationError("extension_correlation: base measure undefined on an "
                              "extension pair");
      }
      summary.minimum = std::min(summary.minimum, *value);
      summary.maximum = std::max(summary.maximum, *value);
      sum += *value;
      ++summary.count;
    }
  }
  summary.mean = std::clamp(sum / static_cast<double>(summary.count), summary.minimum,
                            summary.maximum);
  return summary;
}

ExtensionSummary extension_correlation(const Ranking& x, const Ranking& y, std::int64_t cap) {
  return extension_correlation(
      x, y, [](const Ranking& a, const Ranking& b) { return std::optional(kendall_tau(a, b)); },
      cap);
}

}  // namespace rankcorr
