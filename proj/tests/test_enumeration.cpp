#include <doctest.h>

#include <set>

#include "mlq/enumeration.hpp"
#include "mlq/formulas.hpp"

using mlq::BigInt;
using mlq::EnumOptions;
using mlq::Rational;
using mlq::TypeVector;

namespace {
EnumOptions one_worker() {
  EnumOptions opts;
  opts.workers = 1;
  return opts;
}
}  // namespace

TEST_CASE("placement totals") {
  CHECK(mlq::placements_total(TypeVector({1, 1})) == BigInt(3));
  CHECK(mlq::placements_total(TypeVector({2, 1, 2})) == BigInt(2520));
  BigInt by_binomials = mlq::binomial(17, 1) * mlq::binomial(16, 4) *
                        mlq::binomial(12, 5) * mlq::binomial(7, 7);
  CHECK(mlq::placements_total(TypeVector({1, 3, 1, 2})) == by_binomials);
}

TEST_CASE("enumeration order is colex on the row assignment of 1..N") {
  // smaller row for the largest value comes first, then the next value down
  std::vector<mlq::Placement> seen;
  mlq::for_each_placement(TypeVector({1, 1}), [&](const mlq::Placement& p) {
    seen.push_back(p);
  }, one_worker());
  REQUIRE(seen.size() == 3);
  CHECK(seen[0] == mlq::Placement({{3}, {1, 2}}));
  CHECK(seen[1] == mlq::Placement({{2}, {1, 3}}));
  CHECK(seen[2] == mlq::Placement({{1}, {2, 3}}));
}

TEST_CASE("enumeration yields each placement exactly once, in chunks") {
  TypeVector type({1, 1, 1});
  std::vector<std::string> full;
  mlq::for_each_placement(type, [&](const mlq::Placement& p) {
    full.push_back(mlq::serialize_placement(p));
  }, one_worker());
  CHECK(full.size() == 60);
  CHECK(std::set<std::string>(full.begin(), full.end()).size() == 60);
  for (const auto& text : full) {
    CHECK(mlq::validate_placement(mlq::parse_placement(text), type));
  }
  std::vector<std::string> chunked;
  for (auto [b, e] : {std::pair<std::uint64_t, std::uint64_t>{0, 17},
                      {17, 40},
                      {40, 60}}) {
    mlq::for_each_placement_range(type, b, e, [&](const mlq::Placement& p) {
      chunked.push_back(mlq::serialize_placement(p));
    }, one_worker());
  }
  CHECK(chunked == full);
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(mlq::for_each_placement(TypeVector({5, 5, 5}),
                                          [](const mlq::Placement&) {},
                                          one_worker()),
                  mlq::BudgetExceeded);
  CHECK_THROWS_AS(mlq::correlations_direct(6, one_worker()), mlq::BudgetExceeded);
}

TEST_CASE("word distribution") {
  auto single = mlq::word_distribution(TypeVector({1}), one_worker());
  CHECK(single.total == BigInt(1));
  CHECK(single.counts.at("1") == BigInt(1));

  // hand enumeration of the three type-(1,1) placements
  auto two = mlq::word_distribution(TypeVector({1, 1}), one_worker());
  CHECK(two.total == BigInt(3));
  CHECK(two.counts.at("12") == BigInt(2));
  CHECK(two.counts.at("21") == BigInt(1));

  auto three = mlq::word_distribution(TypeVector({1, 1, 1}), one_worker());
  CHECK(three.total == BigInt(60));
  BigInt sum(0);
  for (const auto& [word, count] : three.counts) {
    CHECK(word.size() == 3);
    sum += count;
  }
  CHECK(sum == BigInt(60));
}

TEST_CASE("correlations_direct small cases") {
  auto two = mlq::correlations_direct(2, one_worker());
  CHECK(two.at(1, 2) == Rational(BigInt(1)));
  CHECK(two.at(2, 1) == Rational(BigInt(1)));

  auto three = mlq::correlations_direct(3, one_worker());
  CHECK(three.at(1, 2) == Rational(BigInt(4), BigInt(5)));
  CHECK(three.at(1, 3) == Rational(BigInt(1), BigInt(5)));
  CHECK(three.at(2, 1) == Rational(BigInt(1), BigInt(5)));
  CHECK(three.at(2, 3) == Rational(BigInt(4), BigInt(5)));
  CHECK(three.at(3, 1) == Rational(BigInt(4), BigInt(5)));
  CHECK(three.at(3, 2) == Rational(BigInt(1), BigInt(5)));

  // row sums are 1 for every fixed left label, and every entry is in [0,1]
  auto four = mlq::correlations_direct(4, one_worker());
  for (int i = 1; i <= 4; ++i) {
    Rational sum;
    for (int j = 1; j <= 4; ++j)
      if (i != j) sum += four.at(i, j);
    CHECK(sum == Rational(BigInt(1)));
  }
  for (const auto& [ij, value] : four.entries) {
    CHECK(value >= Rational(BigInt(0)));
    CHECK(value <= Rational(BigInt(1)));
  }
}

TEST_CASE("count_conditioned reproduces table cells") {
  CHECK(mlq::count_conditioned(TypeVector::three_species(1, 1, 5), 1, 3,
                               one_worker()) == BigInt(9));
  CHECK(mlq::count_conditioned(TypeVector::three_species(2, 2, 5), 1, 3,
                               one_worker()) == BigInt(140));
  CHECK(mlq::count_conditioned(TypeVector::three_species(3, 1, 6), 1, 3,
                               one_worker()) == BigInt(2772));
  // no label-3 particles when s+t = n
  CHECK(mlq::count_conditioned(TypeVector::three_species(2, 3, 5), 1, 3,
                               one_worker()) == BigInt(0));
  // tau matches the closed form on a small grid
  for (long long s = 0; s <= 2; ++s)
    for (long long t = 0; t <= 2; ++t)
      for (long long n = std::max<long long>(2, s + t); n + 2 * s + t <= 11; ++n) {
        TypeVector type = TypeVector::three_species(s, t, n);
        CHECK(mlq::count_conditioned(type, 3, 2, one_worker()) ==
              mlq::formulas::tau_closed(s, t, n));
      }
}

TEST_CASE("count_first_only") {
  TypeVector type = TypeVector::three_species(1, 1, 5);
  CHECK(mlq::count_first_only(type, 3, one_worker()) == BigInt(63));
  // a label with no particles never appears
  CHECK(mlq::count_first_only(TypeVector::three_species(2, 3, 5), 3,
                              one_worker()) == BigInt(0));
  // the three first-letter counts exhaust the pinned placements
  BigInt total_pinned = mlq::multinomial(7, {1, 2, 4});
  BigInt sum = mlq::count_first_only(type, 1, one_worker()) +
               mlq::count_first_only(type, 2, one_worker()) +
               mlq::count_first_only(type, 3, one_worker());
  CHECK(sum == total_pinned);
}

TEST_CASE("count_delta") {
  CHECK(mlq::count_delta(1, 3, 2, 2, one_worker()) == BigInt(1));  // f_(1,1)
  CHECK(mlq::count_delta(2, 4, 1, std::nullopt, one_worker()) == BigInt(5));
  for (long long n = 2; n <= 5; ++n)
    CHECK(mlq::count_delta(1, n, 1, 1, one_worker()) == BigInt(0));
  CHECK_THROWS_AS(mlq::count_delta(0, 3, 1, std::nullopt, one_worker()),
                  std::invalid_argument);
  CHECK_THROWS_AS(mlq::count_delta(3, 3, 1, std::nullopt, one_worker()),
                  std::invalid_argument);
}

TEST_CASE("count_alpha_beta") {
  auto [a15, b15] = mlq::count_alpha_beta(1, 1, 5, one_worker());
  CHECK(b15 == BigInt(0));  // beta needs s >= 2
  CHECK(a15 == BigInt(9));
  auto [a315, b315] = mlq::count_alpha_beta(3, 1, 5, one_worker());
  CHECK(b315 == BigInt(154));
  auto [a416, b416] = mlq::count_alpha_beta(4, 1, 6, one_worker());
  CHECK(b416 == BigInt(3822));
  for (long long t = 1; t <= 3; ++t) {
    auto [alpha, beta] = mlq::count_alpha_beta(1, t, t + 3, one_worker());
    CHECK(beta == BigInt(0));
  }
  // alpha + beta partitions n13
  auto [alpha, beta] = mlq::count_alpha_beta(2, 1, 5, one_worker());
  CHECK(alpha + beta == mlq::count_conditioned(TypeVector::three_species(2, 1, 5),
                                               1, 3, one_worker()));
}

TEST_CASE("count_gamma") {
  CHECK(mlq::count_gamma(2, 4, 2, one_worker()) == BigInt(5));
  CHECK_THROWS_AS(mlq::count_gamma(2, 4, 1, one_worker()), std::invalid_argument);
  CHECK_THROWS_AS(mlq::count_gamma(2, 4, 3, one_worker()), std::invalid_argument);
  // the gamma strata sum to beta at t=1
  for (long long s = 2; s <= 3; ++s)
    for (long long n = s + 2; n + 2 * s + 1 <= 12; ++n) {
      BigInt sum(0);
      for (long long ell = 2; ell <= s; ++ell)
        sum += mlq::count_gamma(s, n, ell, one_worker());
      CHECK(sum == mlq::count_alpha_beta(s, 1, n, one_worker()).second);
    }
}

TEST_CASE("count_rho") {
  CHECK(mlq::count_rho(1, 3, 2, 3, one_worker()) == BigInt(3));
  CHECK(mlq::count_rho(2, 4, 2, 3, one_worker()) == BigInt(40));
  CHECK(mlq::count_rho(3, 5, 2, 3, one_worker()) == BigInt(630));
  CHECK_THROWS_AS(mlq::count_rho(2, 3, 2, 3, one_worker()),
                  std::invalid_argument);
  // second-letter-only counts match the sum over first letters
  BigInt by_parts = mlq::count_rho(2, 4, 1, 3, one_worker()) +
                    mlq::count_rho(2, 4, 2, 3, one_worker()) +
                    mlq::count_rho(2, 4, 3, 3, one_worker());
  CHECK(mlq::count_rho(2, 4, std::nullopt, 3, one_worker()) == by_parts);
}

TEST_CASE("projection pipeline equals direct enumeration and closed forms") {
  for (int n = 2; n <= 4; ++n) {
    auto direct = mlq::correlations_direct(n, one_worker());
    auto projected = mlq::correlations_via_projection(n, one_worker());
    for (const auto& [ij, value] : direct.entries) {
      CHECK(projected.at(ij.first, ij.second) == value);
      CHECK(mlq::formulas::closed_correlation(ij.first, ij.second, n) == value);
    }
  }
  // the worked inclusion-exclusion instance: c_{2,1}(4)
  auto projected = mlq::correlations_via_projection(4, one_worker());
  Rational expected = Rational(BigInt(4)) / Rational(mlq::binomial(5, 2)) -
                      Rational(BigInt(4)) / Rational(mlq::binomial(6, 2));
  CHECK(projected.at(2, 1) == expected);
}

TEST_CASE("spot checks of tau and n13 beyond the default grids") {
  // a few larger instances, up to 16 integers per placement
  CHECK(mlq::count_conditioned(TypeVector::three_species(2, 2, 8), 3, 2,
                               one_worker()) ==
        mlq::formulas::tau_closed(2, 2, 8));
  CHECK(mlq::count_conditioned(TypeVector::three_species(3, 2, 7), 1, 3,
                               one_worker()) ==
        mlq::formulas::n13_closed(3, 2, 7));
  CHECK(mlq::count_conditioned(TypeVector::three_species(4, 1, 7), 1, 3,
                               one_worker()) ==
        mlq::formulas::n13_closed(4, 1, 7));
}

TEST_CASE("worker counts do not change any statistic") {
  TypeVector type = TypeVector::three_species(2, 1, 4);
  std::vector<BigInt> taus, n13s;
  for (int workers : {1, 2, 3, 8}) {
    EnumOptions opts;
    opts.workers = workers;
    taus.push_back(mlq::count_conditioned(type, 3, 2, opts));
    n13s.push_back(mlq::count_conditioned(type, 1, 3, opts));
  }
  for (std::size_t i = 1; i < taus.size(); ++i) {
    CHECK(taus[i] == taus[0]);
    CHECK(n13s[i] == n13s[0]);
  }
  EnumOptions eight;
  eight.workers = 8;
  auto direct1 = mlq::correlations_direct(3, one_worker());
  auto direct8 = mlq::correlations_direct(3, eight);
  CHECK(direct1.entries == direct8.entries);
}
