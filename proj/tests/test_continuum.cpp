#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bikraw/continuum.hpp"

using namespace bikraw;

namespace {
DerivedParams base() { return derive_params({Rat(2), Rat(1), Rat(1), Rat(1)}); }
const std::vector<int> kLadder = {64, 256, 1024};
}  // namespace

TEST_CASE("coordinate map basics") {
  auto d = base();
  CoordMap map(d, 144);
  auto pt = map.to_lattice(0.0, 0.0);
  CHECK(pt.x == 80);  // N eta1 = 144 * 5/9
  CHECK(pt.y == 60);  // N eta2 = 144 * 5/12
  CHECK(pt.s_star == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(pt.t_star == doctest::Approx(0.0).epsilon(1e-12));

  // round trip: forward(inverse) on lattice points is the identity up to 1e-12
  for (auto [x, y] : {std::pair{80, 60}, {70, 55}, {90, 50}}) {
    auto [s, t] = map.inverse(x, y);
    auto [xf, yf] = map.forward(s, t);
    CHECK(xf == doctest::Approx(static_cast<double>(x)).epsilon(1e-12));
    CHECK(yf == doctest::Approx(static_cast<double>(y)).epsilon(1e-12));
  }
}

TEST_CASE("out-of-lattice samples are rejected with guidance") {
  auto d = base();
  CoordMap map(d, 64);
  // the (1,1) corner leaves T_64 at this parameter set (eta1+eta2 = 35/36)
  CHECK_FALSE(map.feasible(1.0, 1.0));
  CHECK_THROWS_WITH_AS(map.to_lattice(1.0, 1.0), doctest::Contains("outside T_64"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(map.to_lattice(40.0, -40.0), doctest::Contains("shrink |s|,|t|"), std::invalid_argument);
  auto samples = admissible_samples(d, kLadder, 5);
  CHECK(samples.size() == 24);  // only the (1,1) corner drops out
}

TEST_CASE("weight converges to the Gaussian at order ~ -1/2") {
  auto d = base();
  auto samples = admissible_samples(d, kLadder, 5);
  ConvergenceRecord rec;
  for (int n : kLadder) rec.add(n, weight_gaussian_error(n, d, samples));
  CHECK(rec.errors[0] > rec.errors[1]);
  CHECK(rec.errors[1] > rec.errors[2]);
  for (int i = 0; i < 2; ++i) {
    double ratio = rec.errors[static_cast<std::size_t>(i)] / rec.errors[static_cast<std::size_t>(i) + 1];
    CHECK(ratio > 1.6);
    CHECK(ratio < 2.6);
  }
  double order = estimate_order(rec);
  CHECK(order > -0.75);
  CHECK(order < -0.3);

  std::vector<std::pair<double, double>> bad = {{1.0, 1.0}};
  CHECK_THROWS_AS(weight_gaussian_error(64, d, bad), std::invalid_argument);
}

TEST_CASE("normalized polynomials tend to Hermite products") {
  auto d = base();
  auto samples = admissible_samples(d, kLadder, 5);
  // degree zero: both sides are identically one
  CHECK(hermite_limit_error(0, 0, 256, d, samples) == 0.0);
  // degree one is exact at finite N up to roundoff
  CHECK(hermite_limit_error(1, 0, 256, d, samples) < 1e-10);
  // (1,1) decays visibly
  double e64 = hermite_limit_error(1, 1, 64, d, samples);
  double e1024 = hermite_limit_error(1, 1, 1024, d, samples);
  CHECK(e64 > 2.5 * e1024);
  // sign agreement (epsilon = +1) wherever the Hermite product is away from zero
  CHECK(hermite_sign_agreement(1, 1, 1024, d, samples));
  CHECK(hermite_sign_agreement(2, 1, 1024, d, samples));
  CHECK_THROWS_AS(hermite_limit_error(5, 0, 64, d, samples), std::invalid_argument);
}

TEST_CASE("operator limits on polynomial test functions") {
  auto d = base();
  auto samples = admissible_samples(d, kLadder, 5);
  // constants are annihilated at every N
  CHECK(operator_limit_residual(LimitOperator::lambda1, 64, d, Poly2::named("1"), samples) == 0.0);
  // linear test functions are exact up to roundoff
  CHECK(operator_limit_residual(LimitOperator::lambda1, 256, d, Poly2::named("s"), samples) < 1e-10);
  // quadratics decay for all three operators
  for (auto which : {LimitOperator::lambda1, LimitOperator::lambda2, LimitOperator::l2}) {
    double prev = 1e300;
    for (int n : kLadder) {
      double e = operator_limit_residual(which, n, d, Poly2::named("s2"), samples);
      CHECK(e < prev);
      prev = e;
    }
  }
  CHECK_THROWS_AS(operator_limit_residual(LimitOperator::lambda1, 64, d, Poly2::monomial(4, 0), samples),
                  std::invalid_argument);
  CHECK_THROWS_AS(Poly2::named("exp"), std::invalid_argument);
}

TEST_CASE("limit image sanity: Hermite ladder identity on the continuum side") {
  // (2s - d/ds) H_0 = H_1 = 2s encoded through the Poly2 algebra
  Poly2 h0 = Poly2::named("1");
  Poly2 h1 = h0.mul_s().scaled(2.0) + h0.dds().scaled(-1.0);
  CHECK(h1.eval(0.7, -0.3) == doctest::Approx(2 * 0.7));
  // lambda1 limit image of s^2 is -1 + 2 s^2
  auto img = limit_image(LimitOperator::lambda1, Poly2::named("s2"), base());
  CHECK(img.eval(0.5, 0.9) == doctest::Approx(-1.0 + 2 * 0.25));
}

TEST_CASE("scaled ladder relations are exact at finite N") {
  auto d = base();
  for (int n : {32, 64}) {
    CHECK(scaled_ladder_limit_error('R', +1, 0, 0, n, d) < 1e-9);
    CHECK(scaled_ladder_limit_error('R', -1, 1, 0, n, d) < 1e-9);
    CHECK(scaled_ladder_limit_error('L', +1, 1, 1, n, d) < 1e-9);
    CHECK(scaled_ladder_limit_error('L', -1, 1, 1, n, d) < 1e-9);
  }
  CHECK_THROWS_AS(scaled_ladder_limit_error('R', -1, 0, 1, 32, d), std::invalid_argument);
}

TEST_CASE("convergence-order estimation") {
  ConvergenceRecord half, one;
  for (int n : kLadder) {
    half.add(n, 10.0 / std::sqrt(static_cast<double>(n)));
    one.add(n, 3.0 / n);
  }
  CHECK(estimate_order(half) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(estimate_order(one) == doctest::Approx(-1.0).epsilon(1e-12));

  ConvergenceRecord two;
  two.add(64, 1.0);
  two.add(256, 0.5);
  CHECK_THROWS_AS(estimate_order(two), std::invalid_argument);
  CHECK_THROWS_AS(two.add(128, 0.1), std::invalid_argument);
}
