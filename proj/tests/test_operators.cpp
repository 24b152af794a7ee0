#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bikraw/operators.hpp"
#include "bikraw/polynomials.hpp"

using namespace bikraw;

namespace {

DerivedParams base() { return derive_params({Rat(2), Rat(1), Rat(1), Rat(1)}); }
DerivedParams alt() { return derive_params({Rat(3), Rat(1), Rat(2), Rat(5)}); }

GridFunction<ExactField> kgrid(int m, int n, int N, const DerivedParams& d) {
  return rahman_grid<ExactField>(PolyIndex{m, n, N}, d);
}

Cplx<Rat> sc(const Rat& q) { return Cplx<Rat>(q); }

}  // namespace

TEST_CASE("shift building blocks") {
  const int N = 2;
  TriLattice lat(N);
  GridFunction<ExactField> ones(lat), coord_x(lat);
  for (std::size_t i = 0; i < lat.size(); ++i) {
    auto [x, y] = lat.point(i);
    ones.values[i] = sc(Rat(1));
    coord_x.values[i] = sc(Rat(x));
  }
  auto dx = build_shift_delta<ExactField>(1, 0, N);
  CHECK(dx.apply(ones).max_abs() == 0);

  // Delta_{-x,y} f = f(x-1,y+1) - f(x,y) on interior points
  auto dxy = build_shift_delta<ExactField>(-1, 1, N);
  auto img = dxy.apply(coord_x);
  CHECK(img.at(1, 0) == sc(Rat(-1)));
  CHECK(img.at(1, 1) == sc(Rat(-1)));

  auto tx = build_shift_t<ExactField>(1, 0, N);
  CHECK(tx.apply(coord_x).at(0, 0) == sc(Rat(1)));
}

TEST_CASE("Lambda eigenvalue equations") {
  {
    auto d = base();
    auto lam1 = build_lambda<ExactField>(1, 2, d);
    CHECK(lam1.apply(kgrid(0, 0, 2, d)).max_abs() == 0);
    auto k10 = kgrid(1, 0, 2, d);
    CHECK(grid_residual(lam1.apply(k10), k10) == 0);
  }
  {
    auto d = alt();
    auto lam2 = build_lambda<ExactField>(2, 4, d);
    auto k12 = kgrid(1, 2, 4, d);
    CHECK(grid_residual(lam2.apply(k12), k12.scaled(sc(Rat(2)))) == 0);
  }
  CHECK_THROWS_AS(build_lambda<ExactField>(3, 2, base()), std::invalid_argument);
}

TEST_CASE("ladder actions") {
  auto d = base();
  // A_-^R annihilates m = 0
  auto lower_r = build_ladder<ExactField>('R', -1, 3, d);
  CHECK(lower_r.apply(kgrid(0, 2, 3, d)).max_abs() == 0);
  // A_+^{R,N} K_{m,n}^N = (N+1) K_{m+1,n}^{N+1} at (0,0,1)
  auto raise_r = build_ladder<ExactField>('R', +1, 1, d);
  CHECK(grid_residual(raise_r.apply(kgrid(0, 0, 1, d)), kgrid(1, 0, 2, d).scaled(sc(Rat(2)))) == 0);
  // A_-^L K_{1,1}^3 = (1/3) K_{1,0}^2
  auto lower_l = build_ladder<ExactField>('L', -1, 3, d);
  CHECK(grid_residual(lower_l.apply(kgrid(1, 1, 3, d)), kgrid(1, 0, 2, d).scaled(sc(Rat(1, 3)))) == 0);

  CHECK_THROWS_AS(build_ladder<ExactField>('R', -1, 0, d), std::invalid_argument);
  CHECK_THROWS_AS(build_ladder<ExactField>('Q', -1, 2, d), std::invalid_argument);
}

TEST_CASE("Hamiltonians") {
  auto d = base();
  auto hiso = build_hamiltonian<ExactField>(true, 3, d);
  auto k11 = kgrid(1, 1, 3, d);
  CHECK(grid_residual(hiso.apply(k11), k11.scaled(sc(Rat(2)))) == 0);

  auto aniso_unit = build_hamiltonian<ExactField>(false, 3, d, std::make_pair(Rat(1), Rat(1)));
  CHECK(residual(aniso_unit, hiso) == 0);

  auto aniso = build_hamiltonian<ExactField>(false, 3, d, std::make_pair(Rat(1), Rat(2)));
  CHECK(grid_residual(aniso.apply(k11), k11.scaled(sc(Rat(3)))) == 0);

  CHECK_THROWS_AS(build_hamiltonian<ExactField>(false, 3, d), std::invalid_argument);
  CHECK_THROWS_AS(build_hamiltonian<ExactField>(false, 3, d, std::make_pair(Rat(0), Rat(1))),
                  std::invalid_argument);
}

TEST_CASE("symmetry generators and Casimir") {
  auto d = base();
  auto j = build_su2<ExactField>(4, d);
  auto k21 = kgrid(2, 1, 4, d);
  CHECK(grid_residual(j.jz.apply(k21), k21.scaled(sc(Rat(1, 2)))) == 0);

  // Q at (m,n,N) = (1,0,1): j(j+1) = 3/4
  auto j1 = build_su2<ExactField>(1, d);
  auto k10 = kgrid(1, 0, 1, d);
  CHECK(grid_residual(j1.casimir.apply(k10), k10.scaled(sc(Rat(3, 4)))) == 0);

  // [h_iso, J_X] = 0 on T_3
  auto j3 = build_su2<ExactField>(3, d);
  CHECK(commutator(build_hamiltonian<ExactField>(true, 3, d), j3.jx).max_abs() == 0);

  CHECK_THROWS_AS(build_su2<ExactField>(0, d), std::invalid_argument);
}

TEST_CASE("Tratnik operator pair and frak_k") {
  auto d = base();
  auto ops = build_tratnik_pair<ExactField>(3, d);
  TratnikEvaluator<Rat> ev(d, 3);
  TriLattice lat(3);
  auto tgrid = [&](int n1, int n2) {
    GridFunction<ExactField> g(lat);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      auto [x, y] = lat.point(i);
      g.values[i] = sc(ev.eval(n1, n2, x, y));
    }
    return g;
  };
  auto k11 = tgrid(1, 1);
  CHECK(grid_residual(ops.l1.apply(k11), k11.scaled(sc(Rat(2)))) == 0);
  CHECK(grid_residual(ops.l2.apply(k11), k11) == 0);

  auto frakk = build_frak_k<ExactField>(3, d);
  auto k20 = tgrid(2, 0);
  CHECK(grid_residual(frakk.apply(k20), k20.scaled(sc(Rat(1)))) == 0);
}

TEST_CASE("frak_k is the rotated J_Z") {
  for (const auto& d : {base(), alt()}) {
    auto j = build_su2<ExactField>(2, d);
    auto combo = j.jx.scaled(scalar_from<ExactField>(d.a)) + j.jy.scaled(scalar_from<ExactField>(d.b)) +
                 j.jz.scaled(scalar_from<ExactField>(d.c));
    CHECK(residual(build_frak_k<ExactField>(2, d), combo) == 0);
  }
}

TEST_CASE("five-term operator") {
  // p1p4 - p2p3 = 13 here, so this set is sensitive to the (N-x-y) scaling
  auto d = alt();
  const Rat lam = (d.p.p1 + d.p.p3) * 1 - (d.p.p2 + d.p.p4) * 1;
  auto five = build_five_term<ExactField>(3, d);
  auto k11 = kgrid(1, 1, 3, d);
  CHECK(grid_residual(five.apply(k11), k11.scaled(sc(lam))) == 0);

  auto combo = build_lambda<ExactField>(1, 3, d).scaled(sc(d.p.p1 + d.p.p3)) -
               build_lambda<ExactField>(2, 3, d).scaled(sc(d.p.p2 + d.p.p4));
  CHECK(residual(five, combo) == 0);

  // nearest-neighbor stencil only
  for (std::size_t r = 0; r < five.codomain().size(); ++r) {
    auto [xr, yr] = five.codomain().point(r);
    for (const auto& [c, v] : five.row(r)) {
      auto [xc, yc] = five.domain().point(static_cast<std::size_t>(c));
      CHECK(std::abs(xc - xr) + std::abs(yc - yr) <= 1);
    }
  }
}

TEST_CASE("anisotropic Hamiltonian at the formal nearest-neighbor frequencies") {
  auto d = alt();
  const Rat w1sq = -(d.p.p1 + d.p.p3), w2sq = d.p.p2 + d.p.p4;
  REQUIRE(check_nn_condition(w1sq, w2sq, d.p));
  auto ham = build_hamiltonian<ExactField>(false, 3, d, std::make_pair(w1sq, w2sq));
  for (std::size_t r = 0; r < ham.codomain().size(); ++r) {
    auto [xr, yr] = ham.codomain().point(r);
    for (const auto& [c, v] : ham.row(r)) {
      auto [xc, yc] = ham.domain().point(static_cast<std::size_t>(c));
      // no Delta_{-x,y} or Delta_{x,-y} couplings survive
      CHECK(std::abs(xc - xr) + std::abs(yc - yr) <= 1);
    }
  }
}

TEST_CASE("builders reject nonvanishing out-of-lattice couplings") {
  // constant coefficient pointing off the hypotenuse must be a hard error
  StencilTerms leak;
  leak.push_back({1, 0, [](int, int) { return Rat(1); }});
  TriLattice lat(2);
  CHECK_THROWS_WITH_AS(assemble_stencil<ExactField>(lat, lat, leak), doctest::Contains("out-of-lattice"),
                       std::logic_error);
  // the real builders vanish on every boundary by construction
  auto d = alt();
  CHECK_NOTHROW(build_lambda<ExactField>(1, 5, d));
  CHECK_NOTHROW(build_lambda<ExactField>(2, 5, d));
  CHECK_NOTHROW(build_ladder<ExactField>('R', +1, 4, d));
  CHECK_NOTHROW(build_five_term<ExactField>(4, d));
  CHECK_NOTHROW(build_rec_operator<ExactField>(1, 4, d));
  CHECK_NOTHROW(build_rec_operator<ExactField>(2, 4, d));
}

TEST_CASE("operator kind dispatch") {
  auto d = base();
  CHECK(residual(build_operator<ExactField>(OperatorKind::h_iso, 2, d),
                 build_operator<ExactField>(OperatorKind::lambda1, 2, d) +
                     build_operator<ExactField>(OperatorKind::lambda2, 2, d)) == 0);
  CHECK(operator_kind_from_string("frakk") == OperatorKind::frak_k);
  CHECK_THROWS_AS(operator_kind_from_string("bogus"), std::invalid_argument);
}
