#include <doctest.h>

#include <random>

#include "approx.hpp"
#include "rankcorr/baselines.hpp"
#include "rankcorr/scaled_gamma.hpp"
#include "test_helpers.hpp"

using namespace rankcorr;
using rankcorr::testing::all_permutations;
using rankcorr::testing::approx;
using rankcorr::testing::random_permutation;

TEST_CASE("rank weights and swap costs validate their entries") {
  CHECK_THROWS_AS(RankWeights({1.0, -0.5}), ValidationError);
  CHECK_THROWS_AS(RankWeights({0.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(RankWeights(Eigen::VectorXd()), ValidationError);
  CHECK_THROWS_AS(AdjacentSwapCosts({1.0, -2.0}), ValidationError);
  CHECK(AdjacentSwapCosts({0.0, 0.0}).size() == 2);  // all-zero costs are allowed
}

TEST_CASE("shieh_tau_w worked example") {
  const Ranking x = make_ranking({1, 2, 3});
  const Ranking y = make_ranking({2, 1, 3});
  CHECK(*shieh_tau_w(x, y, RankWeights({2, 1, 1})) == approx(0.2));
}

TEST_CASE("shieh_tau_w with unit weights is Kendall's tau") {
  std::mt19937_64 rng(3301);
  for (int round = 0; round < 100; ++round) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const Ranking x = random_permutation(n, rng);
    const Ranking y = random_permutation(n, rng);
    CHECK(*shieh_tau_w(x, y, RankWeights(Eigen::VectorXd::Ones(n))) ==
          approx(kendall_tau(x, y)));
  }
}

TEST_CASE("shieh_tau_w endpoints and range") {
  std::mt19937_64 rng(3302);
  std::uniform_real_distribution<double> weight(0.1, 3.0);
  for (int round = 0; round < 100; ++round) {
    const int n = 2 + static_cast<int>(rng() % 9);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = weight(rng);
    const RankWeights w(v);
    const Ranking x = random_permutation(n, rng);
    const Ranking y = random_permutation(n, rng);
    CHECK(*shieh_tau_w(x, x, w) == approx(1.0));
    CHECK(*shieh_tau_w(x, reversed(x), w) == approx(-1.0));
    const double value = *shieh_tau_w(x, y, w);
    CHECK(value >= -1.0 - 1e-12);
    CHECK(value <= 1.0 + 1e-12);
  }
}

TEST_CASE("shieh_tau_w is not symmetric") {
  // Hand-evaluated: with x the identity and v = (3,2,1), the weight mass
  // sits on different pair classes depending on which ranking is the
  // reference.
  const Ranking x = make_ranking({1, 2, 3});
  const Ranking y = make_ranking({2, 3, 1});
  const RankWeights v({3, 2, 1});
  CHECK(*shieh_tau_w(x, y, v) == approx(1.0 / 11.0));
  CHECK(*shieh_tau_w(y, x, v) == approx(-7.0 / 11.0));
}

TEST_CASE("shieh_tau_w rejects ties and mismatched weights, may be undefined") {
  const Ranking tied = make_ranking({1, 1, 2});
  const Ranking perm = make_ranking({1, 2, 3});
  const RankWeights w({1, 1, 1});
  CHECK_THROWS_AS(shieh_tau_w(tied, perm, w), UnsupportedInputError);
  CHECK_THROWS_AS(shieh_tau_w(perm, tied, w), UnsupportedInputError);
  CHECK_THROWS_AS(shieh_tau_w(perm, perm, RankWeights({1, 1})), ValidationError);
  // all pair weights vanish: v_i v_j = 0 for every pair
  CHECK_FALSE(shieh_tau_w(perm, perm, RankWeights({1, 0, 0})).has_value());
}

TEST_CASE("kv_position_costs are prefix sums") {
  CHECK(kv_position_costs(AdjacentSwapCosts(Eigen::VectorXd::Ones(4))) ==
        (Eigen::VectorXd(5) << 0, 1, 2, 3, 4).finished());
  CHECK(kv_position_costs(AdjacentSwapCosts({0.5, 2.0})) ==
        (Eigen::VectorXd(3) << 0, 0.5, 2.5).finished());
  CHECK(kv_position_costs(AdjacentSwapCosts({0.0, 0.0})).isZero());
}

TEST_CASE("kv_average_cost point values") {
  const Ranking pi1 = make_ranking({1, 2, 3});
  const Ranking pi2 = make_ranking({3, 1, 2});  // item 1 moves from position 1 to 3
  const Eigen::VectorXd p_unit = kv_position_costs(AdjacentSwapCosts({1.0, 1.0}));
  for (int i = 1; i <= 3; ++i) {
    CHECK(kv_average_cost(p_unit, pi1, pi2, i) == approx(1.0));
  }
  const Eigen::VectorXd p = kv_position_costs(AdjacentSwapCosts({2.0, 2.0}));
  CHECK(kv_average_cost(p, pi1, pi2, 1) == approx(2.0));  // (0 - 4) / (1 - 3)
  CHECK(kv_average_cost(p, pi1, pi1, 2) == approx(1.0));  // item does not move
}

namespace {

double oracle_average_cost(const Eigen::VectorXd& delta, const Ranking& a, const Ranking& b,
                           int item) {
  const int from = a.rank_of(item);
  const int to = b.rank_of(item);
  if (from == to) return 1.0;
  double cost_from = 0.0, cost_to = 0.0;
  for (int i = 1; i < from; ++i) cost_from += delta[i - 1];
  for (int i = 1; i < to; ++i) cost_to += delta[i - 1];
  return (cost_from - cost_to) / static_cast<double>(from - to);
}

double oracle_kv_kendall(const Eigen::VectorXd& delta, const Ranking& a, const Ranking& b) {
  double total = 0.0;
  for (int i = 1; i <= a.size(); ++i) {
    for (int j = i + 1; j <= a.size(); ++j) {
      const int sa = a.rank_of(i) - a.rank_of(j);
      const int sb = b.rank_of(i) - b.rank_of(j);
      if ((sa < 0 && sb > 0) || (sa > 0 && sb < 0)) {
        total += oracle_average_cost(delta, a, b, i) * oracle_average_cost(delta, a, b, j);
      }
    }
  }
  return total;
}

}  // namespace

TEST_CASE("kv_weighted_kendall reductions and oracle equivalence") {
  std::mt19937_64 rng(3303);
  std::uniform_real_distribution<double> cost(0.0, 3.0);
  for (int round = 0; round < 100; ++round) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Ranking a = random_permutation(n, rng);
    const Ranking b = random_permutation(n, rng);

    CHECK(kv_weighted_kendall(AdjacentSwapCosts(Eigen::VectorXd::Ones(n - 1)), a, b) ==
          approx(static_cast<double>(pair_stats(a, b).discordant)));
    CHECK(kv_weighted_kendall(AdjacentSwapCosts(Eigen::VectorXd::Ones(n - 1)), a, a) == 0.0);

    Eigen::VectorXd delta(n - 1);
    for (int i = 0; i < n - 1; ++i) delta[i] = cost(rng);
    CHECK(kv_weighted_kendall(AdjacentSwapCosts(delta), a, b) ==
          approx(oracle_kv_kendall(delta, a, b), 1e-9));
  }
}

TEST_CASE("kv_weighted_kendall scales quadratically in a constant cost when every item moves") {
  // An item left on its position carries average cost 1, not c, so the
  // c^2 * D identity needs every item of the pair to move.
  std::mt19937_64 rng(3305);
  std::uniform_real_distribution<double> cost(0.25, 3.0);
  for (int round = 0; round < 100; ++round) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Ranking a = random_permutation(n, rng);
    Ranking b = random_permutation(n, rng);
    bool all_moved = false;
    while (!all_moved) {
      b = random_permutation(n, rng);
      all_moved = true;
      for (int i = 1; i <= n; ++i) {
        if (a.rank_of(i) == b.rank_of(i)) all_moved = false;
      }
    }
    const double c = cost(rng);
    CHECK(kv_weighted_kendall(AdjacentSwapCosts(Eigen::VectorXd::Constant(n - 1, c)), a, b) ==
          approx(c * c * static_cast<double>(pair_stats(a, b).discordant), 1e-9));
  }
}

TEST_CASE("kv measures reject ties") {
  const Ranking tied = make_ranking({1, 1, 2});
  const Ranking perm = make_ranking({1, 2, 3});
  const AdjacentSwapCosts delta({1.0, 1.0});
  CHECK_THROWS_AS(kv_weighted_kendall(delta, tied, perm), UnsupportedInputError);
  CHECK_THROWS_AS(kv_gamma(delta, perm, tied), UnsupportedInputError);
}

TEST_CASE("kv_gamma reductions") {
  std::mt19937_64 rng(3304);
  for (int round = 0; round < 100; ++round) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const Ranking a = random_permutation(n, rng);
    const Ranking b = random_permutation(n, rng);
    const AdjacentSwapCosts unit(Eigen::VectorXd::Ones(n - 1));
    CHECK(*kv_gamma(unit, a, b) == approx(kendall_tau(a, b)));
    CHECK(*kv_gamma(unit, a, a) == approx(1.0));
    CHECK(*kv_gamma(AdjacentSwapCosts(Eigen::VectorXd::Constant(n - 1, 0.7)), a,
                    reversed(a)) == approx(-1.0));
  }
  // zero costs make every moved pair weightless
  const Ranking x = make_ranking({1, 2, 3});
  const Ranking y = make_ranking({3, 2, 1});
  CHECK_FALSE(kv_gamma(AdjacentSwapCosts({0.0, 0.0}), x, y).has_value());
}

TEST_CASE("kv_gamma and scaled_gamma collapse to the same crisp gamma exhaustively") {
  for (int n = 2; n <= 6; ++n) {
    const std::vector<Ranking> perms = all_permutations(n);
    const AdjacentSwapCosts unit(Eigen::VectorXd::Ones(n - 1));
    const ScaledGammaConfig crisp(uniform_scaling(n, 1.0));
    double worst = 0.0;
    for (const Ranking& a : perms) {
      for (const Ranking& b : perms) {
        const double kv = *kv_gamma(unit, a, b);
        const double scaled = *scaled_gamma(crisp, a, b);
        worst = std::max(worst, std::abs(kv - scaled));
      }
    }
    CHECK(worst <= 1e-12);
  }
}
