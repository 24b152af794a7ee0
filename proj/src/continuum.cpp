#include "bikraw/continuum.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "bikraw/lattice.hpp"
#include "bikraw/operators.hpp"
#include "bikraw/polynomials.hpp"

namespace bikraw {

CoordMap::CoordMap(const DerivedParams& d, int N) : n_(N) {
  if (N < 1) throw std::invalid_argument("CoordMap: N must be positive");
  e1_ = to_double(d.eta1);
  e2_ = to_double(d.eta2);
  for (int i = 0; i < 4; ++i) c_[i] = d.cs[static_cast<std::size_t>(i)];
  det_ = c_[0] * c_[3] - c_[1] * c_[2];
  sqrt_n_ = std::sqrt(static_cast<double>(N));
}

ScaledCoords CoordMap::coords(double s, double t) const {
  ScaledCoords c;
  c.s = s;
  c.t = t;
  c.N = n_;
  c.mu = c_[0] * s + c_[1] * t;
  c.nu = c_[2] * s + c_[3] * t;
  c.x = n_ * e1_ + sqrt_n_ * c.mu;
  c.y = n_ * e2_ + sqrt_n_ * c.nu;
  return c;
}

std::pair<double, double> CoordMap::forward(double s, double t) const {
  auto c = coords(s, t);
  return {c.x, c.y};
}

std::pair<double, double> CoordMap::inverse(double x, double y) const {
  double mu = (x - n_ * e1_) / sqrt_n_;
  double nu = (y - n_ * e2_) / sqrt_n_;
  return {(c_[3] * mu - c_[1] * nu) / det_, (-c_[2] * mu + c_[0] * nu) / det_};
}

bool CoordMap::feasible(double s, double t) const {
  auto [x, y] = forward(s, t);
  long xr = std::llround(x), yr = std::llround(y);
  return xr >= 0 && yr >= 0 && xr + yr <= n_;
}

LatticeSample CoordMap::to_lattice(double s, double t) const {
  auto [x, y] = forward(s, t);
  long xr = std::llround(x), yr = std::llround(y);
  if (xr < 0 || yr < 0 || xr + yr > n_)
    throw std::invalid_argument("to_lattice: scaled point (" + format_double(x) + "," + format_double(y) +
                                ") for (s,t)=(" + format_double(s) + "," + format_double(t) + ") falls outside T_" +
                                std::to_string(n_) + "; shrink |s|,|t| or increase N so the sample grid stays inside");
  LatticeSample out;
  out.x = static_cast<int>(xr);
  out.y = static_cast<int>(yr);
  auto [ss, tt] = inverse(static_cast<double>(xr), static_cast<double>(yr));
  out.s_star = ss;
  out.t_star = tt;
  return out;
}

std::vector<std::pair<double, double>> sample_grid(int k) {
  if (k < 1) throw std::invalid_argument("sample_grid: k must be positive");
  std::vector<std::pair<double, double>> out;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      double s = k == 1 ? 0.0 : -1.0 + 2.0 * i / (k - 1);
      double t = k == 1 ? 0.0 : -1.0 + 2.0 * j / (k - 1);
      out.emplace_back(s, t);
    }
  return out;
}

std::vector<std::pair<double, double>> admissible_samples(const DerivedParams& d, const std::vector<int>& n_list,
                                                          int k) {
  auto all = sample_grid(k);
  std::vector<std::pair<double, double>> out;
  for (auto& st : all) {
    bool ok = true;
    for (int n : n_list)
      if (!CoordMap(d, n).feasible(st.first, st.second)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(st);
  }
  if (out.empty()) throw std::invalid_argument("admissible_samples: no sample survives the N ladder");
  return out;
}

namespace {

double log_weight(int x, int y, int N, double e1, double e2) {
  return std::lgamma(N + 1.0) - std::lgamma(x + 1.0) - std::lgamma(y + 1.0) - std::lgamma(N - x - y + 1.0) +
         x * std::log(e1) + y * std::log(e2) + (N - x - y) * std::log(1.0 - e1 - e2);
}

double apply_terms_at(const StencilTerms& terms, const std::function<double(int, int)>& g, int x, int y) {
  double acc = 0.0;
  for (const auto& t : terms) {
    Rat c = t.coeff(x, y);
    if (c == 0) continue;
    acc += to_double(c) * g(x + t.dx, y + t.dy);
  }
  return acc;
}

}  // namespace

double weight_gaussian_error(int N, const DerivedParams& d, const std::vector<std::pair<double, double>>& samples) {
  CoordMap map(d, N);
  const double e1 = to_double(d.eta1), e2 = to_double(d.eta2);
  const double scale = 2.0 * M_PI * N * std::sqrt(e1 * e2 * (1.0 - e1 - e2));
  double err = 0.0;
  for (auto [s, t] : samples) {
    auto pt = map.to_lattice(s, t);
    double w = std::exp(log_weight(pt.x, pt.y, N, e1, e2));
    double gauss = std::exp(-pt.s_star * pt.s_star - pt.t_star * pt.t_star);
    err = std::max(err, std::fabs(scale * w - gauss));
  }
  return err;
}

double hermite_limit_error(int m, int n, int N, const DerivedParams& d,
                           const std::vector<std::pair<double, double>>& samples) {
  if (m < 0 || n < 0 || m > 4 || n > 4)
    throw std::invalid_argument("hermite_limit_error: degrees capped at m,n <= 4 (float conditioning)");
  CoordMap map(d, N);
  RahmanEvaluator<double> ev(d, N, m + n);
  const double a = alpha_value(m, n, N, d);
  double err = 0.0;
  for (auto [s, t] : samples) {
    auto pt = map.to_lattice(s, t);
    double khat = a * ev.eval(m, n, pt.x, pt.y);
    double h = hermite(m, pt.s_star) * hermite(n, pt.t_star);
    err = std::max(err, std::fabs(khat - h));
  }
  return err;
}

bool hermite_sign_agreement(int m, int n, int N, const DerivedParams& d,
                            const std::vector<std::pair<double, double>>& samples, double floor) {
  CoordMap map(d, N);
  RahmanEvaluator<double> ev(d, N, m + n);
  const double a = alpha_value(m, n, N, d);
  for (auto [s, t] : samples) {
    auto pt = map.to_lattice(s, t);
    double h = hermite(m, pt.s_star) * hermite(n, pt.t_star);
    if (std::fabs(h) <= floor) continue;
    if (a * ev.eval(m, n, pt.x, pt.y) * h <= 0.0) return false;
  }
  return true;
}

Poly2 Poly2::monomial(int i, int j, double c) {
  Poly2 p;
  p.add(i, j, c);
  return p;
}

Poly2 Poly2::named(const std::string& name) {
  if (name == "1") return monomial(0, 0);
  if (name == "s") return monomial(1, 0);
  if (name == "t") return monomial(0, 1);
  if (name == "s2") return monomial(2, 0);
  if (name == "st") return monomial(1, 1);
  if (name == "t2") return monomial(0, 2);
  if (name == "s3") return monomial(3, 0);
  if (name == "s2t") return monomial(2, 1);
  if (name == "st2") return monomial(1, 2);
  if (name == "t3") return monomial(0, 3);
  throw std::invalid_argument("unknown test function \"" + name + "\" (use 1,s,t,s2,st,t2,s3,s2t,st2,t3)");
}

Poly2& Poly2::add(int i, int j, double c) {
  if (c != 0.0) {
    auto& slot = c_[{i, j}];
    slot += c;
    if (slot == 0.0) c_.erase({i, j});
  }
  return *this;
}

double Poly2::eval(double s, double t) const {
  double acc = 0.0;
  for (const auto& [ij, c] : c_) acc += c * std::pow(s, ij.first) * std::pow(t, ij.second);
  return acc;
}

int Poly2::degree() const {
  int deg = 0;
  for (const auto& [ij, c] : c_) deg = std::max(deg, ij.first + ij.second);
  return deg;
}

Poly2 Poly2::dds() const {
  Poly2 out;
  for (const auto& [ij, c] : c_)
    if (ij.first > 0) out.add(ij.first - 1, ij.second, c * ij.first);
  return out;
}

Poly2 Poly2::ddt() const {
  Poly2 out;
  for (const auto& [ij, c] : c_)
    if (ij.second > 0) out.add(ij.first, ij.second - 1, c * ij.second);
  return out;
}

Poly2 Poly2::mul_s() const {
  Poly2 out;
  for (const auto& [ij, c] : c_) out.add(ij.first + 1, ij.second, c);
  return out;
}

Poly2 Poly2::mul_t() const {
  Poly2 out;
  for (const auto& [ij, c] : c_) out.add(ij.first, ij.second + 1, c);
  return out;
}

Poly2 Poly2::scaled(double f) const {
  Poly2 out;
  for (const auto& [ij, c] : c_) out.add(ij.first, ij.second, c * f);
  return out;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
  Poly2 out = a;
  for (const auto& [ij, c] : b.c_) out.add(ij.first, ij.second, c);
  return out;
}

LimitOperator limit_operator_from_string(const std::string& name) {
  if (name == "lambda1") return LimitOperator::lambda1;
  if (name == "lambda2") return LimitOperator::lambda2;
  if (name == "l2") return LimitOperator::l2;
  throw std::invalid_argument("unknown limit operator \"" + name + "\" (use lambda1, lambda2, l2)");
}

Poly2 limit_image(LimitOperator which, const Poly2& f, const DerivedParams& d) {
  if (which == LimitOperator::lambda1) return f.dds().dds().scaled(-0.5) + f.dds().mul_s();
  if (which == LimitOperator::lambda2) return f.ddt().ddt().scaled(-0.5) + f.ddt().mul_t();
  // lim L2 = ell2 [ -B1/2 dss - B2/2 dtt + B1 s ds + B2 t dt
  //                 + sqrt(A1 A2) (s dt + t ds - ds dt) ],
  // the Hermite eigenvalue operator in a rotated coordinate.
  const double p1 = to_double(d.p.p1), p2 = to_double(d.p.p2), p3 = to_double(d.p.p3), p4 = to_double(d.p.p4);
  const double B1 = p1 * p4 / (p2 + p4), B2 = p2 * p3 / (p1 + p3);
  const double root = std::sqrt(p1 * p2 * p3 * p4 / ((p1 + p3) * (p2 + p4)));
  const double l2 = to_double(d.ell2);
  Poly2 out = f.dds().dds().scaled(-0.5 * B1) + f.ddt().ddt().scaled(-0.5 * B2) + f.dds().mul_s().scaled(B1) +
              f.ddt().mul_t().scaled(B2) +
              (f.ddt().mul_s() + f.dds().mul_t() + f.dds().ddt().scaled(-1.0)).scaled(root);
  return out.scaled(l2);
}

double operator_limit_residual(LimitOperator which, int N, const DerivedParams& d, const Poly2& f,
                               const std::vector<std::pair<double, double>>& samples) {
  if (f.degree() > 3)
    throw std::invalid_argument("operator_limit_residual: test functions capped at degree 3");
  CoordMap map(d, N);
  std::function<double(int, int)> g = [&](int x, int y) {
    auto [s, t] = map.inverse(static_cast<double>(x), static_cast<double>(y));
    return f.eval(s, t);
  };

  std::function<double(int, int)> lattice_apply;
  StencilTerms lam1 = lambda_terms(1, N, d);
  StencilTerms lam2 = lambda_terms(2, N, d);
  if (which == LimitOperator::lambda1) {
    lattice_apply = [&, lam1](int x, int y) { return apply_terms_at(lam1, g, x, y); };
  } else if (which == LimitOperator::lambda2) {
    lattice_apply = [&, lam2](int x, int y) { return apply_terms_at(lam2, g, x, y); };
  } else {
    const Rat p1 = d.p.p1, p2 = d.p.p2, p3 = d.p.p3, p4 = d.p.p4;
    const double A1 = to_double(p1 * p3 / (p1 + p3)), A2 = to_double(p2 * p4 / (p2 + p4));
    const double B1 = to_double(p1 * p4 / (p2 + p4)), B2 = to_double(p2 * p3 / (p1 + p3));
    const double l2 = to_double(d.ell2);
    StencilTerms am_r = aminus_terms('R', d), am_l = aminus_terms('L', d);
    StencilTerms ap_r = aplus_terms('R', N - 1, d), ap_l = aplus_terms('L', N - 1, d);
    auto g_am_r = [&, am_r](int x, int y) { return apply_terms_at(am_r, g, x, y); };
    auto g_am_l = [&, am_l](int x, int y) { return apply_terms_at(am_l, g, x, y); };
    lattice_apply = [=, &g](int x, int y) {
      return l2 * (A2 * apply_terms_at(ap_l, g_am_r, x, y) + A1 * apply_terms_at(ap_r, g_am_l, x, y) +
                   B1 * apply_terms_at(lam1, g, x, y) + B2 * apply_terms_at(lam2, g, x, y));
    };
  }

  Poly2 image = limit_image(which, f, d);
  double err = 0.0;
  for (auto [s, t] : samples) {
    auto pt = map.to_lattice(s, t);
    double lhs = lattice_apply(pt.x, pt.y);
    double rhs = image.eval(pt.s_star, pt.t_star);
    err = std::max(err, std::fabs(lhs - rhs));
  }
  return err;
}

double scaled_ladder_limit_error(char side, int dir, int m, int n, int N, const DerivedParams& d) {
  if (side != 'R' && side != 'L') throw std::invalid_argument("scaled_ladder_limit_error: side must be 'R' or 'L'");
  if (dir != 1 && dir != -1) throw std::invalid_argument("scaled_ladder_limit_error: dir must be +1 or -1");
  PolyIndex{m, n, N}.validate();
  if (dir == -1 && (side == 'R' ? m : n) < 1)
    throw std::invalid_argument("scaled_ladder_limit_error: lowering needs a positive degree on that side");
  const Rat p1 = d.p.p1, p2 = d.p.p2, p3 = d.p.p3, p4 = d.p.p4;
  const double radical =
      side == 'R' ? to_double(2 * p1 * p3 * d.sum_p * (p2 + p4)) : to_double(2 * p2 * p4 * d.sum_p * (p1 + p3));
  const double det = to_double(d.det_p);

  const int cod_n = N + dir;
  RahmanEvaluator<double> ev_src(d, N, m + n);
  const double alpha_src = alpha_value(m, n, N, d);
  TriLattice src(N), cod(cod_n);
  std::vector<double> grid_src(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto [x, y] = src.point(i);
    grid_src[i] = alpha_src * ev_src.eval(m, n, x, y);
  }
  std::function<double(int, int)> g = [&](int x, int y) {
    return src.contains(x, y) ? grid_src[src.index_of(x, y)] : 0.0;
  };

  StencilTerms terms = dir == 1 ? aplus_terms(side, N, d) : aminus_terms(side, d);
  double scale = dir == 1 ? -std::sqrt(radical) / (det * std::sqrt(static_cast<double>(N + 1)))
                          : -std::sqrt(static_cast<double>(N)) * det / std::sqrt(radical);

  const int tm = m + (side == 'R' ? dir : 0);
  const int tn = n + (side == 'L' ? dir : 0);
  RahmanEvaluator<double> ev_dst(d, cod_n, tm + tn);
  const double alpha_dst = alpha_value(tm, tn, cod_n, d);
  const double level = dir == 1 ? 1.0 : static_cast<double>(side == 'R' ? m : n);

  double err = 0.0;
  for (std::size_t i = 0; i < cod.size(); ++i) {
    auto [x, y] = cod.point(i);
    double lhs = scale * apply_terms_at(terms, g, x, y);
    double rhs = level * alpha_dst * ev_dst.eval(tm, tn, x, y);
    err = std::max(err, std::fabs(lhs - rhs));
  }
  return err;
}

void ConvergenceRecord::add(int n, double error) {
  if (!n_values.empty() && n <= n_values.back())
    throw std::invalid_argument("ConvergenceRecord: N values must be strictly increasing");
  if (error < 0.0) throw std::invalid_argument("ConvergenceRecord: negative error");
  n_values.push_back(n);
  errors.push_back(error);
}

double estimate_order(const ConvergenceRecord& record) {
  const std::size_t k = record.n_values.size();
  if (k < 3) throw std::invalid_argument("estimate_order: needs at least 3 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (record.errors[i] <= 0.0)
      throw std::invalid_argument("estimate_order: errors must be positive for a log-log fit");
    double lx = std::log(static_cast<double>(record.n_values[i]));
    double ly = std::log(record.errors[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double denom = k * sxx - sx * sx;
  return (k * sxy - sx * sy) / denom;
}

}  // namespace bikraw
