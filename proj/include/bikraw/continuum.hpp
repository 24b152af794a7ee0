#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bikraw/params.hpp"

namespace bikraw {

/// Scaled coordinates: (x,y) = (N eta1 + sqrt(N) mu, N eta2 + sqrt(N) nu),
/// mu = c1 s + c2 t, nu = c3 s + c4 t.
struct ScaledCoords {
  double s = 0, t = 0;
  double x = 0, y = 0;
  double mu = 0, nu = 0;
  int N = 0;
};

/// Rounded lattice point with the exact preimage (s*, t*) of (x*, y*).
struct LatticeSample {
  int x = 0, y = 0;
  double s_star = 0, t_star = 0;
};

class CoordMap {
 public:
  CoordMap(const DerivedParams& d, int N);

  ScaledCoords coords(double s, double t) const;
  std::pair<double, double> forward(double s, double t) const;
  std::pair<double, double> inverse(double x, double y) const;
  bool feasible(double s, double t) const;

  /// Componentwise rounding to the nearest lattice point plus the exact
  /// preimage; rejects samples whose rounded point leaves T_N.
  LatticeSample to_lattice(double s, double t) const;

  int n() const { return n_; }

 private:
  double e1_, e2_, c_[4], det_, sqrt_n_;
  int n_;
};

/// k x k sample grid over |s|,|t| <= 1.
std::vector<std::pair<double, double>> sample_grid(int k);

/// Default samples filtered to those admissible at every N in the ladder
/// (near-corner samples can leave T_N at the smallest N when eta1+eta2 is
/// close to 1).
std::vector<std::pair<double, double>> admissible_samples(const DerivedParams& d, const std::vector<int>& n_list,
                                                          int k = 5);

/// max over samples of |2 pi N sqrt(eta1 eta2 (1-eta1-eta2)) w(x*,y*) - exp(-s*^2-t*^2)|
double weight_gaussian_error(int N, const DerivedParams& d, const std::vector<std::pair<double, double>>& samples);

/// max over samples of |Khat_{m,n}(x*,y*) - H_m(s*) H_n(t*)|; degrees capped at 4.
double hermite_limit_error(int m, int n, int N, const DerivedParams& d,
                           const std::vector<std::pair<double, double>>& samples);

/// True iff Khat agrees in sign with H_m(s*) H_n(t*) wherever |H_m H_n| > floor.
bool hermite_sign_agreement(int m, int n, int N, const DerivedParams& d,
                            const std::vector<std::pair<double, double>>& samples, double floor = 0.1);

/// Sparse polynomial in (s,t); the admissible test-function space for
/// operator limit checks (degree <= 3).
class Poly2 {
 public:
  Poly2() = default;
  static Poly2 monomial(int i, int j, double c = 1.0);
  /// Named test functions: 1, s, t, s2, st, t2, s3, s2t, st2, t3.
  static Poly2 named(const std::string& name);

  Poly2& add(int i, int j, double c);
  double eval(double s, double t) const;
  int degree() const;
  bool empty() const { return c_.empty(); }

  Poly2 dds() const;
  Poly2 ddt() const;
  Poly2 mul_s() const;
  Poly2 mul_t() const;
  Poly2 scaled(double f) const;
  friend Poly2 operator+(const Poly2& a, const Poly2& b);

 private:
  std::map<std::pair<int, int>, double> c_;  // (i,j) -> coefficient of s^i t^j
};

enum class LimitOperator { lambda1, lambda2, l2 };
LimitOperator limit_operator_from_string(const std::string& name);

/// Image of f under the N->infinity limit of the chosen lattice operator
/// (for l2 the limit is the rotated Hermite operator; see README).
Poly2 limit_image(LimitOperator which, const Poly2& f, const DerivedParams& d);

/// max over samples of |(Op^N (f o coords))(x*,y*) - (limit image of f)(s*,t*)|,
/// with the operator applied matrix-free through its stencil.
double operator_limit_residual(LimitOperator which, int N, const DerivedParams& d, const Poly2& f,
                               const std::vector<std::pair<double, double>>& samples);

/// Exact finite-N identity behind the scaled ladder limits:
/// dir=+1: scale * A_+ Khat_{m,n}^N = Khat_{m+1,n}^{N+1} (R side; L shifts n),
/// dir=-1: scale * A_- Khat_{m,n}^N = m Khat_{m-1,n}^{N-1}.
/// Returns the max-abs deviation over the codomain lattice.
double scaled_ladder_limit_error(char side, int dir, int m, int n, int N, const DerivedParams& d);

struct ConvergenceRecord {
  std::vector<int> n_values;
  std::vector<double> errors;

  void add(int n, double error);  // N strictly increasing, error >= 0
};

/// Least-squares slope of log(error) vs log(N); needs >= 3 points, all errors positive.
double estimate_order(const ConvergenceRecord& record);

}  // namespace bikraw
