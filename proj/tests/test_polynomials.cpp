#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bikraw/polynomials.hpp"

using namespace bikraw;

namespace {

DerivedParams base() { return derive_params({Rat(2), Rat(1), Rat(1), Rat(1)}); }
DerivedParams alt() { return derive_params({Rat(3), Rat(1), Rat(2), Rat(5)}); }

// Independent oracle: the quadruple sum over the full range 0 <= i+j+k+l <= N,
// no truncation, straight from the series definition.
Rat rahman_brute(int m, int n, int x, int y, const DerivedParams& d, int N) {
  auto poch = [](long a, int k) {
    Rat r(1);
    for (int i = 0; i < k; ++i) r *= Rat(a + i);
    return r;
  };
  Rat total(0);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; i + j <= N; ++j)
      for (int k = 0; i + j + k <= N; ++k)
        for (int l = 0; i + j + k + l <= N; ++l) {
          Rat num = poch(-m, i + j) * poch(-n, k + l) * poch(-x, i + k) * poch(-y, j + l);
          if (num == 0) continue;
          Rat den = Rat(factorial_z(i)) * Rat(factorial_z(j)) * Rat(factorial_z(k)) * Rat(factorial_z(l)) *
                    poch(-N, i + j + k + l);
          total += num / den * rat_pow(d.u1, i) * rat_pow(d.v1, j) * rat_pow(d.u2, k) * rat_pow(d.v2, l);
        }
  return total;
}

}  // namespace

TEST_CASE("univariate Krawtchouk basics") {
  for (int x = 0; x <= 5; ++x) CHECK(krawtchouk1<Rat>(0, x, Rat(1, 3), 5) == 1);
  // K_1(x;p;N) = -N + x/p
  for (int x = 0; x <= 4; ++x) CHECK(krawtchouk1<Rat>(1, x, Rat(1, 2), 4) == Rat(-4) + Rat(x) / Rat(1, 2));
  CHECK(krawtchouk1<Rat>(1, 2, Rat(1, 2), 4) == 0);
  CHECK_THROWS_AS(krawtchouk1<Rat>(1, 1, Rat(0), 4), std::invalid_argument);
  CHECK_THROWS_AS(krawtchouk1<Rat>(5, 1, Rat(1, 2), 4), std::invalid_argument);
}

TEST_CASE("univariate orthogonality against the binomial weight") {
  const int N = 6;
  const Rat p(1, 3);
  for (int m = 0; m <= N; ++m)
    for (int n = 0; n < m; ++n) {
      Rat sum(0);
      for (int x = 0; x <= N; ++x) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), N, static_cast<unsigned long>(x));
        Rat w = Rat(binom) * rat_pow(p, x) * rat_pow(1 - p, N - x);
        sum += w * krawtchouk1<Rat>(m, x, p, N) * krawtchouk1<Rat>(n, x, p, N);
      }
      CHECK(sum == 0);
    }
}

TEST_CASE("Rahman polynomial values") {
  auto d = base();
  // constant family member
  RahmanEvaluator<Rat> ev(d, 4);
  TriLattice lat(4);
  for (auto [x, y] : lat.points()) CHECK(ev.eval(0, 0, x, y) == 1);
  // value 1 at the origin for every degree
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; m + n <= 4; ++n) CHECK(ev.eval(m, n, 0, 0) == 1);
  // K_{1,0}(x,y) = 1 - (u1 x + v1 y)/N
  CHECK(rahman_eval<Rat>(PolyIndex{1, 0, 2}, d, 1, 0) == Rat(11, 20));
  TriLattice t2(2);
  for (auto [x, y] : t2.points())
    CHECK(rahman_eval<Rat>(PolyIndex{1, 0, 2}, d, x, y) == 1 - (d.u1 * x + d.v1 * y) / 2);
  CHECK_THROWS_AS(rahman_eval<Rat>(PolyIndex{1, 0, 2}, d, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS((PolyIndex{3, 2, 4}.validate()), std::invalid_argument);
}

TEST_CASE("truncation lemma: restricted sum equals the full-range series") {
  for (const auto& d : {base(), alt()}) {
    const int N = 4;
    RahmanEvaluator<Rat> ev(d, N);
    TriLattice lat(N);
    for (auto [m, n] : {std::pair{1, 0}, {2, 1}, {1, 2}, {0, 3}, {2, 2}})
      for (auto [x, y] : lat.points()) CHECK(ev.eval(m, n, x, y) == rahman_brute(m, n, x, y, d, N));
  }
}

TEST_CASE("recurrence propagation equals the direct sum exactly") {
  {
    auto d = base();
    auto direct = rahman_grid<ExactField>(PolyIndex{1, 0, 2}, d);
    auto prop = rahman_grid_recurrence<ExactField>(PolyIndex{1, 0, 2}, d);
    CHECK(grid_residual(direct, prop) == 0);
  }
  {
    auto d = alt();
    auto direct = rahman_grid<ExactField>(PolyIndex{2, 1, 4}, d);
    auto prop = rahman_grid_recurrence<ExactField>(PolyIndex{2, 1, 4}, d);
    CHECK(grid_residual(direct, prop) == 0);
  }
  // all degrees across two parameter sets at a moderate N
  for (const auto& d : {base(), alt()}) {
    const int N = 5;
    RahmanEvaluator<Rat> ev(d, N);
    for (int m = 0; m <= N; ++m)
      for (int n = 0; m + n <= N; ++n) {
        auto prop = rahman_grid_recurrence<ExactField>(PolyIndex{m, n, N}, d);
        auto vals = ev.grid(m, n);
        bool same = true;
        for (std::size_t i = 0; i < vals.size(); ++i) same = same && prop.values[i].re == vals[i];
        CHECK(same);
      }
  }
}

TEST_CASE("trinomial weight") {
  auto d = base();
  CHECK(trinomial_weight<Rat>(1, 1, 2, d.eta1, d.eta2) == Rat(25, 54));
  for (int N : {3, 5}) {
    Rat sum(0);
    TriLattice lat(N);
    for (auto [x, y] : lat.points()) sum += trinomial_weight<Rat>(x, y, N, d.eta1, d.eta2);
    CHECK(sum == 1);
    CHECK(trinomial_weight<Rat>(0, 0, N, d.eta1, d.eta2) == rat_pow(1 - d.eta1 - d.eta2, N));
  }
  CHECK_THROWS_AS(trinomial_weight<Rat>(0, 0, 2, Rat(1, 2), Rat(3, 4)), std::invalid_argument);
  CHECK_THROWS_AS(trinomial_weight<Rat>(2, 1, 2, d.eta1, d.eta2), std::invalid_argument);
}

TEST_CASE("normalization constants") {
  auto d = base();
  auto [grid, norm] = rahman_normalized(PolyIndex{0, 0, 3}, d);
  CHECK(norm.alpha == 1.0);
  CHECK(norm.alpha_squared == 1);
  CHECK(norm.norm_i == 1);
  for (auto& v : grid.values) CHECK(v.re == doctest::Approx(1.0));

  // sum_T w Khat^2 = 2^(m+n) m! n!, checked exactly on alpha^2 * I
  auto d2 = alt();
  for (auto [m, n] : {std::pair{1, 1}, {2, 0}, {1, 2}}) {
    const int N = 4;
    Rat gram(0);
    RahmanEvaluator<Rat> ev(d2, N);
    TriLattice lat(N);
    for (auto [x, y] : lat.points()) {
      Rat k = ev.eval(m, n, x, y);
      gram += trinomial_weight<Rat>(x, y, N, d2.eta1, d2.eta2) * k * k;
    }
    CHECK(alpha_sq(m, n, N, d2) * gram ==
          rat_pow(Rat(2), m + n) * Rat(factorial_z(static_cast<unsigned long>(m))) *
              Rat(factorial_z(static_cast<unsigned long>(n))));
    CHECK(gram == norm_I(m, n, N, d2));
  }
}

TEST_CASE("Tratnik polynomials") {
  auto d = base();
  TratnikEvaluator<Rat> ev(d, 3);
  TriLattice t3(3);
  for (auto [x, y] : t3.points()) CHECK(ev.eval(0, 0, x, y) == 1);
  // (n1,n2) = (1,0) at N=2: 1 - 9x/10
  TratnikEvaluator<Rat> ev2(d, 2);
  TriLattice u2(2);
  for (auto [x, y] : u2.points()) CHECK(ev2.eval(1, 0, x, y) == 1 - Rat(9, 10) * x);
  CHECK(ev2.eval(1, 0, 1, 0) == Rat(1, 10));
  CHECK_THROWS_AS(ev2.eval(2, 1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(ev2.eval(0, 0, 2, 1), std::invalid_argument);
}

TEST_CASE("Hermite polynomials and their orthogonality") {
  CHECK(hermite<Rat>(0, Rat(5)) == 1);
  CHECK(hermite<Rat>(2, Rat(1)) == 2);  // H_2 = 4s^2 - 2
  CHECK(hermite<double>(3, 0.5) == doctest::Approx(8 * 0.125 - 12 * 0.5));

  // quadrature oracle: trapezoid over [-9,9] is far below 1e-10 here
  const double h = 1e-3;
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= m; ++n) {
      double sum = 0.0;
      for (double s = -9.0; s <= 9.0; s += h)
        sum += hermite<double>(m, s) * hermite<double>(n, s) * std::exp(-s * s) * h;
      sum /= std::sqrt(M_PI);
      double expected = m == n ? std::pow(2.0, n) * std::tgamma(n + 1.0) : 0.0;
      CHECK(std::fabs(sum - expected) < 1e-10 * std::max(1.0, expected));
    }
}

TEST_CASE("float evaluation tracks the exact values at moderate degree") {
  auto d = alt();
  RahmanEvaluator<Rat> exact(d, 10);
  RahmanEvaluator<double> fl(d, 10);
  for (auto [m, n] : {std::pair{1, 0}, {2, 3}, {4, 4}})
    for (auto [x, y] : {std::pair{0, 0}, {3, 2}, {10, 0}, {2, 8}}) {
      double e = to_double(exact.eval(m, n, x, y));
      CHECK(fl.eval(m, n, x, y) == doctest::Approx(e).epsilon(1e-9));
    }
}
