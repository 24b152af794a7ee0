#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bikraw/linop.hpp"
#include "bikraw/params.hpp"
#include "bikraw/rational.hpp"

namespace bikraw {

/// One stencil entry: reads the operand at (x+dx, y+dy) with a coefficient
/// depending on the evaluation (codomain) point.
struct StencilTerm {
  int dx = 0, dy = 0;
  std::function<Rat(int, int)> coeff;
};
using StencilTerms = std::vector<StencilTerm>;

/// Coefficient lists straight from the operator definitions. Shared by the
/// matrix assembly below and by the local (matrix-free) application in the
/// continuum module.
StencilTerms lambda_terms(int which, int N, const DerivedParams& d);
StencilTerms aminus_terms(char side, const DerivedParams& d);
StencilTerms aplus_terms(char side, int formal_n, const DerivedParams& d);
StencilTerms five_term_terms(int N, const DerivedParams& d);
StencilTerms rec_terms(int which, int N, const DerivedParams& d);
StencilTerms shift_t_terms(int dx, int dy);
StencilTerms shift_delta_terms(int dx, int dy);

enum class OutOfLattice {
  reject,  // nonvanishing coefficient to an out-of-lattice point is a hard error
  drop,    // out-of-lattice targets contribute zero (bare shift semantics)
};

template <class Fd>
LatticeOperator<Fd> assemble_stencil(const TriLattice& domain, const TriLattice& codomain, const StencilTerms& terms,
                                     OutOfLattice policy = OutOfLattice::reject) {
  LatticeOperator<Fd> op(domain, codomain);
  for (std::size_t i = 0; i < codomain.size(); ++i) {
    auto [x, y] = codomain.point(i);
    for (const auto& t : terms) {
      Rat c = t.coeff(x, y);
      if (c == 0) continue;
      int tx = x + t.dx, ty = y + t.dy;
      if (!domain.contains(tx, ty)) {
        if (policy == OutOfLattice::drop) continue;
        throw std::logic_error("stencil assembly: nonvanishing coefficient " + rat_str(c) + " couples (" +
                               std::to_string(x) + "," + std::to_string(y) + ") to out-of-lattice (" +
                               std::to_string(tx) + "," + std::to_string(ty) + ") of " + domain.describe());
      }
      op.add_entry(i, domain.index_of(tx, ty), Fd::scalar(c));
    }
  }
  op.finalize();
  return op;
}

template <class Fd>
typename Fd::Scalar scalar_from(const Cplx<Rat>& z) {
  return {Fd::real(z.re), Fd::real(z.im)};
}

/// Bare shift T_{dx,dy} on T_N; out-of-lattice reads contribute zero.
template <class Fd>
LatticeOperator<Fd> build_shift_t(int dx, int dy, int N) {
  TriLattice lat(N);
  return assemble_stencil<Fd>(lat, lat, shift_t_terms(dx, dy), OutOfLattice::drop);
}

/// Difference operator Delta_{dx,dy} f = f(x+dx, y+dy) - f(x, y). Rows whose
/// shifted point leaves T_N are zero (the difference is dropped as a unit, so
/// Delta of a constant is the zero grid).
template <class Fd>
LatticeOperator<Fd> build_shift_delta(int dx, int dy, int N) {
  TriLattice lat(N);
  LatticeOperator<Fd> op(lat, lat);
  for (std::size_t i = 0; i < lat.size(); ++i) {
    auto [x, y] = lat.point(i);
    if (!lat.contains(x + dx, y + dy)) continue;
    op.add_entry(i, lat.index_of(x + dx, y + dy), Fd::scalar(Rat(1)));
    op.add_entry(i, i, Fd::scalar(Rat(-1)));
  }
  op.finalize();
  return op;
}

/// Seven-point difference operator Lambda_1 or Lambda_2 on T_N.
template <class Fd>
LatticeOperator<Fd> build_lambda(int which, int N, const DerivedParams& d) {
  if (which != 1 && which != 2) throw std::invalid_argument("build_lambda: which must be 1 or 2");
  TriLattice lat(N);
  return assemble_stencil<Fd>(lat, lat, lambda_terms(which, N, d));
}

/// Ladder operator. dir=-1 maps T_N -> T_{N-1} (N >= 1); dir=+1 maps
/// T_N -> T_{N+1}. side is 'R' (shifts m) or 'L' (shifts n).
template <class Fd>
LatticeOperator<Fd> build_ladder(char side, int dir, int N, const DerivedParams& d) {
  if (side != 'R' && side != 'L') throw std::invalid_argument("build_ladder: side must be 'R' or 'L'");
  if (dir == -1) {
    if (N < 1) throw std::invalid_argument("build_ladder: lowering requires N >= 1");
    return assemble_stencil<Fd>(TriLattice(N), TriLattice(N - 1), aminus_terms(side, d));
  }
  if (dir == +1) return assemble_stencil<Fd>(TriLattice(N), TriLattice(N + 1), aplus_terms(side, N, d));
  throw std::invalid_argument("build_ladder: dir must be +1 or -1");
}

/// h_iso = Lambda_1 + Lambda_2, or h_aniso = w1^2 Lambda_1 + w2^2 Lambda_2.
/// omega_sq passes the squared frequencies directly (rational; negative values
/// are allowed for the formal nearest-neighbor check).
template <class Fd>
LatticeOperator<Fd> build_hamiltonian(bool iso, int N, const DerivedParams& d,
                                      std::optional<std::pair<Rat, Rat>> omega_sq = std::nullopt) {
  auto l1 = build_lambda<Fd>(1, N, d);
  auto l2 = build_lambda<Fd>(2, N, d);
  if (iso) return l1 + l2;
  if (!omega_sq) throw std::invalid_argument("build_hamiltonian: anisotropic form requires omega_sq");
  if (omega_sq->first == 0 || omega_sq->second == 0)
    throw std::invalid_argument("build_hamiltonian: omega_sq components must be nonzero");
  return l1.scaled(Fd::scalar(omega_sq->first)) + l2.scaled(Fd::scalar(omega_sq->second));
}

template <class Fd>
struct Su2Ops {
  LatticeOperator<Fd> jx, jy, jz, casimir;
};

/// Symmetry generators on T_N (N >= 1) from ladder compositions, J_Y in the
/// Schwinger convention so that [J_X,J_Y] = iJ_Z, [J_Y,J_Z] = iJ_X,
/// [J_Z,J_X] = iJ_Y hold exactly.
template <class Fd>
Su2Ops<Fd> build_su2(int N, const DerivedParams& d, Exec exec = Exec::parallel) {
  if (N < 1) throw std::invalid_argument("build_su2: requires N >= 1");
  auto raise_r = build_ladder<Fd>('R', +1, N - 1, d);
  auto raise_l = build_ladder<Fd>('L', +1, N - 1, d);
  auto lower_r = build_ladder<Fd>('R', -1, N, d);
  auto lower_l = build_ladder<Fd>('L', -1, N, d);
  auto P = compose(raise_r, lower_l, exec);  // raises m, lowers n
  auto Q = compose(raise_l, lower_r, exec);
  const auto half = Fd::scalar(Rat(1, 2));
  const auto half_i = scalar_from<Fd>(Cplx<Rat>(Rat(0), Rat(1, 2)));
  Su2Ops<Fd> ops{(P + Q).scaled(half), (Q - P).scaled(half_i),
                 (compose(raise_r, lower_r, exec) - compose(raise_l, lower_l, exec)).scaled(half),
                 LatticeOperator<Fd>(TriLattice(N), TriLattice(N))};
  ops.casimir = compose(ops.jx, ops.jx, exec) + compose(ops.jy, ops.jy, exec) + compose(ops.jz, ops.jz, exec);
  return ops;
}

template <class Fd>
struct TratnikOps {
  LatticeOperator<Fd> l1, l2;
};

/// The commuting pair diagonalized by the Tratnik polynomials. The ladder
/// superscripts are N-1 (the square-operator reading; the raw display's N is
/// shape-inconsistent), validated by the eigenvalue equations.
template <class Fd>
TratnikOps<Fd> build_tratnik_pair(int N, const DerivedParams& d, Exec exec = Exec::parallel) {
  if (N < 1) throw std::invalid_argument("build_tratnik_pair: requires N >= 1");
  const Rat &p1 = d.p.p1, &p2 = d.p.p2, &p3 = d.p.p3, &p4 = d.p.p4;
  auto l1 = build_lambda<Fd>(1, N, d);
  auto l2 = build_lambda<Fd>(2, N, d);
  auto t1 = compose(build_ladder<Fd>('L', +1, N - 1, d), build_ladder<Fd>('R', -1, N, d), exec);
  auto t2 = compose(build_ladder<Fd>('R', +1, N - 1, d), build_ladder<Fd>('L', -1, N, d), exec);
  auto sum = t1.scaled(Fd::scalar(p2 * p4 / (p2 + p4))) + t2.scaled(Fd::scalar(p1 * p3 / (p1 + p3))) +
             l1.scaled(Fd::scalar(p1 * p4 / (p2 + p4))) + l2.scaled(Fd::scalar(p2 * p3 / (p1 + p3)));
  return {l1 + l2, sum.scaled(Fd::scalar(d.ell2))};
}

/// frak_k = (1/2) L_1 - L_2, the Tratnik-side analogue of J_Z.
template <class Fd>
LatticeOperator<Fd> build_frak_k(int N, const DerivedParams& d, Exec exec = Exec::parallel) {
  auto ops = build_tratnik_pair<Fd>(N, d, exec);
  return ops.l1.scaled(Fd::scalar(Rat(1, 2))) - ops.l2;
}

/// Nearest-neighbor five-term operator; equals (p1+p3) Lambda_1 - (p2+p4)
/// Lambda_2 as a matrix identity.
template <class Fd>
LatticeOperator<Fd> build_five_term(int N, const DerivedParams& d) {
  TriLattice lat(N);
  return assemble_stencil<Fd>(lat, lat, five_term_terms(N, d));
}

/// Recurrence-relation operator (the bracketed difference operator); equals
/// -[p2(p1+p3) Lambda_1 + p1(p2+p4) Lambda_2] for which=1 and
/// -[p4(p1+p3) Lambda_1 + p3(p2+p4) Lambda_2] for which=2.
template <class Fd>
LatticeOperator<Fd> build_rec_operator(int which, int N, const DerivedParams& d) {
  if (which != 1 && which != 2) throw std::invalid_argument("build_rec_operator: which must be 1 or 2");
  TriLattice lat(N);
  return assemble_stencil<Fd>(lat, lat, rec_terms(which, N, d));
}

enum class OperatorKind {
  lambda1,
  lambda2,
  five_term,
  rec1,
  rec2,
  a_minus_r,
  a_minus_l,
  a_plus_r,
  a_plus_l,
  h_iso,
  h_aniso,
  jx,
  jy,
  jz,
  casimir,
  l1,
  l2,
  frak_k,
};

OperatorKind operator_kind_from_string(const std::string& name);

template <class Fd>
LatticeOperator<Fd> build_operator(OperatorKind kind, int N, const DerivedParams& d,
                                   std::optional<std::pair<Rat, Rat>> omega_sq = std::nullopt,
                                   Exec exec = Exec::parallel) {
  switch (kind) {
    case OperatorKind::lambda1: return build_lambda<Fd>(1, N, d);
    case OperatorKind::lambda2: return build_lambda<Fd>(2, N, d);
    case OperatorKind::five_term: return build_five_term<Fd>(N, d);
    case OperatorKind::rec1: return build_rec_operator<Fd>(1, N, d);
    case OperatorKind::rec2: return build_rec_operator<Fd>(2, N, d);
    case OperatorKind::a_minus_r: return build_ladder<Fd>('R', -1, N, d);
    case OperatorKind::a_minus_l: return build_ladder<Fd>('L', -1, N, d);
    case OperatorKind::a_plus_r: return build_ladder<Fd>('R', +1, N, d);
    case OperatorKind::a_plus_l: return build_ladder<Fd>('L', +1, N, d);
    case OperatorKind::h_iso: return build_hamiltonian<Fd>(true, N, d);
    case OperatorKind::h_aniso: return build_hamiltonian<Fd>(false, N, d, omega_sq);
    case OperatorKind::jx: return build_su2<Fd>(N, d, exec).jx;
    case OperatorKind::jy: return build_su2<Fd>(N, d, exec).jy;
    case OperatorKind::jz: return build_su2<Fd>(N, d, exec).jz;
    case OperatorKind::casimir: return build_su2<Fd>(N, d, exec).casimir;
    case OperatorKind::l1: return build_tratnik_pair<Fd>(N, d, exec).l1;
    case OperatorKind::l2: return build_tratnik_pair<Fd>(N, d, exec).l2;
    case OperatorKind::frak_k: return build_frak_k<Fd>(N, d, exec);
  }
  throw std::invalid_argument("build_operator: unknown kind");
}

}  // namespace bikraw
