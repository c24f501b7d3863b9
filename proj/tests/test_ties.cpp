#include <doctest.h>

#include <random>
#include <set>

#include "approx.hpp"
#include "oracles.hpp"
#include "rankcorr/ties.hpp"
#include "test_helpers.hpp"

using namespace rankcorr;
using rankcorr::testing::all_permutations;
using rankcorr::testing::approx;
using rankcorr::testing::brute_force_extensions;
using rankcorr::testing::random_bucket_order;
using rankcorr::testing::random_permutation;

TEST_CASE("scoring matrix validation") {
  CHECK_NOTHROW(ScoringMatrix::defaults());

  Eigen::Matrix3d bad = ScoringMatrix::defaults().values();
  bad(0, 0) = 1.5;
  CHECK_THROWS_AS(ScoringMatrix{bad}, ValidationError);

  bad = ScoringMatrix::defaults().values();
  bad(0, 0) = 0.5;  // breaks the orientation symmetry with (2,2)
  CHECK_THROWS_AS(ScoringMatrix{bad}, ValidationError);

  bad = ScoringMatrix::defaults().values();
  bad(0, 1) = -1.0;
  bad(1, 0) = -1.0;  // half-tied cells may sit at the corner level
  CHECK_NOTHROW(ScoringMatrix{bad});

  bad = ScoringMatrix::defaults().values();
  bad(0, 2) = 0.5;
  bad(2, 0) = 0.5;  // corners no longer minimal
  CHECK_THROWS_AS(ScoringMatrix{bad}, ValidationError);
}

TEST_CASE("scoring_correlation equals tau on tie-free input with the default matrix") {
  std::mt19937_64 rng(4401);
  for (int round = 0; round < 100; ++round) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Ranking x = random_permutation(n, rng);
    const Ranking y = random_permutation(n, rng);
    CHECK(scoring_correlation(x, y) == approx(kendall_tau(x, y)));
  }
}

TEST_CASE("scoring_correlation worked examples with ties") {
  const Ranking xx = make_ranking({1, 1, 2});
  CHECK(scoring_correlation(xx, xx) == approx(1.0));  // agreeing tie scores s22 = 1
  CHECK(scoring_correlation(xx, make_ranking({1, 2, 2})) == approx(1.0 / 3.0));
  CHECK_THROWS_AS(scoring_correlation(xx, make_ranking({1, 2})), ValidationError);
}

TEST_CASE("scoring_correlation is symmetric and bounded with the default matrix") {
  std::mt19937_64 rng(4402);
  for (int round = 0; round < 100; ++round) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Ranking x = random_bucket_order(n, rng);
    const Ranking y = random_bucket_order(n, rng);
    const double xy = scoring_correlation(x, y);
    CHECK(xy == approx(scoring_correlation(y, x)));
    CHECK(xy >= -1.0 - 1e-12);
    CHECK(xy <= 1.0 + 1e-12);
  }
}

namespace {

std::set<std::vector<int>> rank_set(const std::vector<Ranking>& rankings) {
  std::set<std::vector<int>> result;
  for (const Ranking& r : rankings) {
    result.insert(std::vector<int>(r.ranks().begin(), r.ranks().end()));
  }
  return result;
}

}  // namespace

TEST_CASE("enumerate_extensions worked examples") {
  CHECK(rank_set(enumerate_extensions(make_ranking({1, 2, 3}))) ==
        rank_set({make_ranking({1, 2, 3})}));
  CHECK(rank_set(enumerate_extensions(make_ranking({1, 1, 2}))) ==
        rank_set({make_ranking({1, 2, 3}), make_ranking({2, 1, 3})}));
  CHECK(enumerate_extensions(make_ranking({1, 1, 1})).size() == 6);
}

TEST_CASE("enumerate_extensions matches the brute force on random bucket orders") {
  std::mt19937_64 rng(4403);
  for (int round = 0; round < 40; ++round) {
    const int n = 2 + static_cast<int>(rng() % 5);  // up to 6
    const Ranking x = random_bucket_order(n, rng);
    const std::vector<Ranking> fast = enumerate_extensions(x);
    const std::vector<Ranking> slow = brute_force_extensions(x);
    CHECK(fast.size() == slow.size());
    CHECK(rank_set(fast) == rank_set(slow));
    CHECK(static_cast<double>(fast.size()) == approx(count_extensions(x)));
    for (const Ranking& extension : fast) {
      CHECK_FALSE(extension.has_ties());
    }
  }
}

TEST_CASE("enumerate_extensions enforces the cap naming the count") {
  const Ranking all_tied = make_ranking(Eigen::VectorXd::Ones(8));
  try {
    enumerate_extensions(all_tied);  // 8! = 40320 > 10000
    FAIL("expected ResourceLimitError");
  } catch (const ResourceLimitError& e) {
    CHECK(e.count() == approx(40320.0));
    CHECK(e.cap() == 10000);
    CHECK(std::string(e.what()).find("40320") != std::string::npos);
  }
  CHECK(enumerate_extensions(all_tied, 50000).size() == 40320);
}

TEST_CASE("extension_correlation worked examples") {
  const ExtensionSummary s1 = extension_correlation(make_ranking({1, 1, 2}),
                                                    make_ranking({1, 2, 3}));
  CHECK(s1.minimum == approx(1.0 / 3.0));
  CHECK(s1.maximum == approx(1.0));
  CHECK(s1.mean == approx(2.0 / 3.0));
  CHECK(s1.count == 2);

  const ExtensionSummary s2 = extension_correlation(identity_ranking(4), identity_ranking(4));
  CHECK(s2.minimum == approx(1.0));
  CHECK(s2.maximum == approx(1.0));
  CHECK(s2.mean == approx(1.0));
  CHECK(s2.count == 1);

  const ExtensionSummary s3 = extension_correlation(make_ranking({1, 1}), make_ranking({1, 2}));
  CHECK(s3.minimum == approx(-1.0));
  CHECK(s3.maximum == approx(1.0));
  CHECK(s3.mean == approx(0.0));
  CHECK(s3.count == 2);
}

TEST_CASE("extension_correlation degenerates to the base measure on tie-free input") {
  std::mt19937_64 rng(4404);
  for (int round = 0; round < 50; ++round) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Ranking x = random_permutation(n, rng);
    const Ranking y = random_permutation(n, rng);
    const ExtensionSummary s = extension_correlation(x, y);
    CHECK(s.count == 1);
    CHECK(s.minimum == approx(kendall_tau(x, y)));
    CHECK(s.maximum == approx(kendall_tau(x, y)));
    CHECK(s.mean == approx(kendall_tau(x, y)));
  }
}

TEST_CASE("extension_correlation summary invariants on random bucket orders") {
  std::mt19937_64 rng(4405);
  for (int round = 0; round < 50; ++round) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Ranking x = random_bucket_order(n, rng);
    const Ranking y = random_bucket_order(n, rng);
    const ExtensionSummary s = extension_correlation(x, y);
    CHECK(s.minimum <= s.mean + 1e-12);
    CHECK(s.mean <= s.maximum + 1e-12);
    CHECK(static_cast<double>(s.count) == approx(count_extensions(x) * count_extensions(y)));
  }
}

TEST_CASE("mean extension tau of a single tie group against itself") {
  // One tie group of size g among n = g + 2 items: every pair outside the
  // group stays concordant, the within-group signs average out to zero, so
  // the mean over extension pairs is (P - W) / P.
  for (int g = 2; g <= 5; ++g) {
    const int n = g + 2;
    Eigen::VectorXd values(n);
    for (int i = 0; i < g; ++i) values[i] = 1.0;
    values[g] = 2.0;
    values[g + 1] = 3.0;
    const Ranking x = make_ranking(values);

    const double pairs = static_cast<double>(n) * (n - 1) / 2.0;
    const double within = static_cast<double>(g) * (g - 1) / 2.0;
    const ExtensionSummary s = extension_correlation(x, x, 20000);
    CHECK(s.mean == approx((pairs - within) / pairs));

    // direct enumeration over orderings of the group
    const std::vector<Ranking> extensions = brute_force_extensions(x);
    double sum = 0.0;
    for (const Ranking& a : extensions) {
      for (const Ranking& b : extensions) {
        sum += kendall_tau(a, b);
      }
    }
    CHECK(s.mean == approx(sum / (static_cast<double>(extensions.size()) *
                                  static_cast<double>(extensions.size()))));
  }
}

TEST_CASE("extension_correlation respects the pair cap and surfaces undefined bases") {
  const Ranking big = make_ranking(Eigen::VectorXd::Ones(5));  // 120 extensions
  try {
    extension_correlation(big, big);  // 14400 pairs > 10000
    FAIL("expected ResourceLimitError");
  } catch (const ResourceLimitError& e) {
    CHECK(e.count() == approx(14400.0));
  }
  CHECK(extension_correlation(big, big, 14400).count == 14400);

  const RankMeasure undefined_measure = [](const Ranking&, const Ranking&) {
    return std::optional<double>();
  };
  CHECK_THROWS_AS(
      extension_correlation(make_ranking({1, 2}), make_ranking({1, 2}), undefined_measure),
      ValidationError);
}
