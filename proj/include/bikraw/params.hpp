#pragma once

#include <array>
#include <optional>
#include <string>

#include "bikraw/rational.hpp"
#include "bikraw/report.hpp"

namespace bikraw {

/// Raw model parameters. All four must be positive rationals with
/// p1*p4 != p2*p3 (that difference divides every operator coefficient).
struct RahmanParams {
  Rat p1, p2, p3, p4;

  void validate() const;  // throws std::invalid_argument naming the violated precondition
  std::string describe() const;
};

/// Anisotropic coupling frequencies (positive). Only their squares enter the
/// Hamiltonian, so omega_sq() stays rational.
struct FrequencyPair {
  Rat omega1, omega2;

  void validate() const;
  std::pair<Rat, Rat> omega_sq() const { return {omega1 * omega1, omega2 * omega2}; }
};

/// Every derived constant, computed once and validated on construction.
///
/// Sign conventions (see README): J_Y uses the Schwinger convention, so the
/// rotation coefficient `a` is the negative of the combination
/// ell2*(p2p4/(p2+p4) + p1p3/(p1+p3)); with that choice frak_k = a J_X + b J_Y
/// + c J_Z holds as an exact matrix identity and a^2+b^2+c^2 = 1. The c3
/// scaling coefficient takes the radicand 2*(sum p)*p1*p3/(p2+p4) (the one
/// that makes |c1 c4 - c2 c3| = 2*sqrt(eta1 eta2 (1-eta1-eta2)) hold and the
/// coordinate map diagonalize the trinomial covariance).
struct DerivedParams {
  RahmanParams p;

  Rat u1, u2, v1, v2;          // hypergeometric parameters
  Rat eta1, eta2;              // trinomial weight parameters
  Rat frak_p1, frak_p2;        // Tratnik parameters (= eta1, eta2)
  Rat ell2;                    // normalizer of the second Tratnik operator
  Cplx<Rat> a, b, c;           // rotation coefficients, a^2+b^2+c^2 = 1
  Rat sum_p;                   // p1+p2+p3+p4
  Rat det_p;                   // p1*p4 - p2*p3
  std::array<double, 4> cs;    // continuum scaling coefficients c1..c4
  double det2 = 0.0;           // |c1*c4 - c2*c3|
};

/// Computes and validates every derived constant.
DerivedParams derive_params(const RahmanParams& p);

/// The three functional relations among u, v, eta; exact residuals.
VerificationReport check_functional_relations(const DerivedParams& d);

/// True iff omega1^2*(p2+p4) + omega2^2*(p1+p3) == 0, i.e. (w1/w2)^2 =
/// -(p1+p3)/(p2+p4). Never true for positive parameters and real frequencies.
bool check_nn_condition(const Rat& omega1_sq, const Rat& omega2_sq, const RahmanParams& p);
bool check_nn_condition(const FrequencyPair& freqs, const RahmanParams& p);

}  // namespace bikraw
