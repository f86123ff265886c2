#include <cmath>

#include "doctest.h"
#include "pacsent/analysis.hpp"
#include "pacsent/entanglement.hpp"
#include "pacsent/errors.hpp"
#include "pacsent/fock_oracle.hpp"
#include "test_support.hpp"

using namespace pacsent;
using pacsent::testing::Sampler;

namespace {

SuperpositionSpec spec_of(double alpha, double beta, double gamma, unsigned m, unsigned n,
                          double u = kInvSqrt2, double v = kInvSqrt2) {
  SuperpositionSpec s;
  s.alpha = alpha;
  s.beta = beta;
  s.gamma = gamma;
  s.m = m;
  s.n = n;
  s.u = u;
  s.v = v;
  return s;
}

// First p on a uniform grid of the given step where the depolarized state is
// no longer entangled; the threshold lies in (p - step, p].
double dense_scan(const SuperpositionSpec& spec, double step) {
  const auto c = qubit_coefficients(spec);
  for (double p = 0.0; p <= 0.75; p += step) {
    if (!(wootters_margin(depolarize(c, p)) > 0.0)) return p;
  }
  return 0.75;
}

double closed_form_pcrit(double c0) { return 3.0 * c0 / (2.0 + 4.0 * c0); }

}  // namespace

TEST_SUITE("sweep") {
  TEST_CASE("ECS gamma sweep rises from 0 to 1") {
    SweepGrid grid;
    grid.axes = {{"gamma", 0.0, 3.0, 101}};
    grid.fixed = spec_of(0, 0, 0, 0, 0);
    const auto table = sweep(grid);
    REQUIRE(table.rows.size() == 101);
    CHECK(table.columns == std::vector<std::string>{"gamma"});
    CHECK(table.rows.front().concurrence == 0.0);
    CHECK(table.rows.front().degenerate);
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
      CHECK_FALSE(table.rows[i].degenerate);
      CHECK(table.rows[i].concurrence > table.rows[i - 1].concurrence);
    }
    CHECK(table.rows.back().values[0] == 3.0);
    CHECK(table.rows.back().concurrence > 0.99);
  }

  TEST_CASE("added photons start at concurrence 1") {
    for (auto [m, n] : {std::pair{0u, 1u}, {2u, 0u}, {1u, 3u}, {0u, 3u}, {15u, 17u}}) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(std::abs(evaluate(spec_of(0, 0, 0, m, n)).concurrence - 1.0) < 1e-9);
    }
    // m = n at gamma = 0: both branches are |m>|m>, a product state.
    const auto same = evaluate(spec_of(0, 0, 0, 1, 1));
    CHECK(same.degenerate);
    CHECK(same.concurrence == 0.0);
  }

  TEST_CASE("u sweep has maxima at +-1/sqrt2") {
    SweepGrid grid;
    grid.axes = {{"u", -1.0, 1.0, 101}};
    grid.fixed = spec_of(3, 3, 0, 0, 1);
    const auto table = sweep(grid);
    std::vector<std::size_t> maxima;
    for (std::size_t i = 1; i + 1 < table.rows.size(); ++i) {
      const double c = table.rows[i].concurrence;
      if (c > table.rows[i - 1].concurrence && c >= table.rows[i + 1].concurrence) maxima.push_back(i);
    }
    REQUIRE(maxima.size() == 2);
    const double step = 0.02;
    CHECK(std::abs(table.rows[maxima[0]].values[0] + kInvSqrt2) <= step);
    CHECK(std::abs(table.rows[maxima[1]].values[0] - kInvSqrt2) <= step);
    CHECK(std::abs(evaluate(spec_of(3, 3, 0, 0, 1, -kInvSqrt2, kInvSqrt2)).concurrence - 1.0) < 1e-12);
    // Endpoints u = +-1 are product states.
    CHECK(table.rows.front().concurrence < 1e-12);
    CHECK(table.rows.back().concurrence < 1e-12);
  }

  TEST_CASE("single-point grid in the Bell case") {
    SweepGrid grid;
    grid.fixed = spec_of(2.5, 1.0, 0, 1, 4, kInvSqrt2, -kInvSqrt2);
    const auto table = sweep(grid);
    REQUIRE(table.rows.size() == 1);
    CHECK(table.rows[0].values.empty());
    CHECK(table.rows[0].concurrence == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("two-axis grid is row-major") {
    SweepGrid grid;
    grid.axes = {{"gamma", 0.0, 1.0, 3}, {"u", -1.0, 1.0, 5}};
    grid.fixed = spec_of(0, 0, 0, 1, 2);
    const auto table = sweep(grid);
    REQUIRE(table.rows.size() == 15);
    CHECK(table.rows[6].values == std::vector<double>{0.5, -0.5});
    CHECK(table.rows[14].values == std::vector<double>{1.0, 1.0});
  }

  TEST_CASE("p axis and fixed p") {
    SweepGrid grid;
    grid.axes = {{"p", 0.0, 0.75, 4}};
    grid.fixed = spec_of(1, 2, 0, 1, 3, kInvSqrt2, -kInvSqrt2);
    const auto table = sweep(grid);
    CHECK(table.rows[1].concurrence == doctest::Approx(0.5));
    CHECK(table.rows[3].concurrence == 0.0);

    SweepGrid fixed_p;
    fixed_p.axes = {{"alpha", 0.0, 2.0, 3}};
    fixed_p.fixed = grid.fixed;
    fixed_p.p = 0.25;
    for (const auto& row : sweep(fixed_p).rows) CHECK(row.concurrence == doctest::Approx(0.5));
  }

  TEST_CASE("integer axes report rounded values") {
    SweepGrid grid;
    grid.axes = {{"n", 0.0, 3.0, 7}};
    grid.fixed = spec_of(3, 3, 0, 0, 0);
    const auto table = sweep(grid);
    CHECK(table.rows[1].values[0] == 1.0);  // 0.5 rounds away from zero
    CHECK(table.rows[0].degenerate);
    CHECK(table.rows[6].values[0] == 3.0);
  }

  TEST_CASE("grid validation") {
    SweepGrid grid;
    grid.fixed = spec_of(1, 2, 0, 0, 1);
    grid.axes = {{"delta", 0, 1, 10}};
    CHECK_THROWS_AS(sweep(grid), InvalidArgument);
    grid.axes = {{"gamma", 0, 1, 1}};
    CHECK_THROWS_AS(sweep(grid), InvalidArgument);
    grid.axes = {{"gamma", 1, 1, 10}};
    CHECK_THROWS_AS(sweep(grid), InvalidArgument);
    grid.axes = {{"gamma", 0, 1, 3}, {"u", 0, 1, 3}, {"m", 0, 3, 4}};
    CHECK_THROWS_AS(sweep(grid), InvalidArgument);
    grid.axes = {{"u", -2, 1, 3}};
    CHECK_THROWS_AS(sweep(grid), InvalidArgument);
    grid.axes = {{"p", 0, 0.8, 3}};
    CHECK_THROWS_AS(sweep(grid), InvalidArgument);
    grid.axes = {{"gamma", 0, 1, 3}, {"gamma", 0, 2, 3}};
    CHECK_THROWS_AS(sweep(grid), InvalidArgument);
    grid.axes = {};
    grid.fixed.u = 1.0;
    CHECK_THROWS_AS(sweep(grid), InvalidArgument);
  }

  TEST_CASE("evaluate") {
    const auto degenerate = evaluate(spec_of(1.5, 1.5, 0, 2, 2));
    CHECK(degenerate.degenerate);
    CHECK(degenerate.concurrence == 0.0);
    CHECK_FALSE(evaluate(spec_of(1.5, 1.0, 0, 2, 2)).degenerate);
    CHECK_THROWS_AS(evaluate(spec_of(1, 2, 0, 0, 1), 0.8), RangeError);
    // Cancelling branches count as degenerate rather than erroring.
    CHECK(evaluate(spec_of(1, 1, 0, 2, 2, kInvSqrt2, -kInvSqrt2)).degenerate);
  }
}

TEST_SUITE("p_critical") {
  TEST_CASE("maximally entangled family reaches the Werner threshold") {
    for (auto spec : {spec_of(3, 3, 0, 1, 2, kInvSqrt2, -kInvSqrt2), spec_of(0, 0, 1, 0, 0, kInvSqrt2, -kInvSqrt2),
                      spec_of(2, -1, 0, 4, 4, kInvSqrt2, -kInvSqrt2)}) {
      CHECK(std::abs(p_critical(spec, 1e-8) - 0.5) <= 1e-8);
    }
  }

  TEST_CASE("unentangled specs give 0") {
    CHECK(p_critical(spec_of(2, 2, 0, 3, 3)) == 0.0);
    CHECK(p_critical(spec_of(0, 0, 0, 0, 0)) == 0.0);
    CHECK(p_critical(spec_of(2, 1, 0, 0, 3, 1.0, 0.0)) == 0.0);
    CHECK(p_critical_on_grid(spec_of(2, 2, 0, 3, 3)) == 0.0);
  }

  TEST_CASE("alpha = beta = 3, n = 2 against a dense scan") {
    const auto spec = spec_of(3, 3, 0, 0, 2);
    const double step = 1e-5;
    const double scan = dense_scan(spec, step);
    const double tol = 1e-10;
    const double bisect = p_critical(spec, tol);
    CHECK(bisect <= scan + 2 * tol);
    CHECK(bisect >= scan - step - 2 * tol);
    CHECK(std::abs(bisect - closed_form_pcrit(fock::oracle_concurrence(spec))) < 1e-9);
  }

  TEST_CASE("bisection matches the closed form on random specs") {
    Sampler rng(13);
    for (int t = 0; t < 100; ++t) {
      const auto spec = rng.spec(4.0, 8);
      if (spec.degenerate()) continue;
      const double c0 = fock::oracle_concurrence(spec);
      if (c0 < 1e-6) continue;
      CHECK(std::abs(p_critical(spec, 1e-10) - closed_form_pcrit(c0)) < 1e-8);
    }
  }

  TEST_CASE("global bound") {
    Sampler rng(14);
    for (int t = 0; t < 300; ++t) {
      const auto spec = rng.spec(6.0, 12);
      CHECK(p_critical(spec, 1e-9) <= 0.5 + 1e-9);
      CHECK(p_critical_on_grid(spec) <= 0.5);
    }
  }

  TEST_CASE("monotone in pure concurrence along n") {
    std::vector<std::pair<double, double>> points;
    for (unsigned n = 0; n <= 12; ++n) {
      const auto spec = spec_of(3, 3, 0, 0, n);
      points.emplace_back(evaluate(spec).concurrence, p_critical(spec));
    }
    std::sort(points.begin(), points.end());
    for (std::size_t i = 1; i < points.size(); ++i) CHECK(points[i].second >= points[i - 1].second);
  }

  TEST_CASE("grid estimator is the last entangled grid point") {
    Sampler rng(15);
    for (int t = 0; t < 100; ++t) {
      const auto spec = rng.spec(4.0, 8);
      if (spec.degenerate()) continue;
      const double exact = p_critical(spec);
      const double grid = p_critical_on_grid(spec, 101);
      CHECK(grid <= exact + 1e-12);
      if (exact > 0.0075) CHECK(grid > exact - 0.0075 - 1e-12);
    }
    CHECK(p_critical_on_grid(spec_of(3, 3, 0, 1, 2, kInvSqrt2, -kInvSqrt2), 101) == doctest::Approx(0.4950));
    CHECK_THROWS_AS(p_critical_on_grid(spec_of(3, 3, 0, 1, 2), 1), InvalidArgument);
  }

  TEST_CASE("tolerance floor") {
    CHECK_THROWS_AS(p_critical(spec_of(3, 3, 0, 1, 2), 1e-12), InvalidArgument);
    CHECK_THROWS_AS(p_critical(spec_of(3, 3, 0, 1, 2), 0.0), InvalidArgument);
  }
}
