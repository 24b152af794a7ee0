#include "bikraw/polynomials.hpp"

#include <cmath>

namespace bikraw {

namespace {

Rat falling(int N, int count) {  // N (N-1) ... (N-count+1)
  Rat r(1);
  for (int i = 0; i < count; ++i) r *= N - i;
  return r;
}

}  // namespace

Rat norm_I(int m, int n, int N, const DerivedParams& d) {
  PolyIndex{m, n, N}.validate();
  const Rat &p1 = d.p.p1, &p2 = d.p.p2, &p3 = d.p.p3, &p4 = d.p.p4;
  Rat num = Rat(factorial_z(static_cast<unsigned long>(m))) * Rat(factorial_z(static_cast<unsigned long>(n))) *
            rat_pow(d.det_p, 2 * (m + n));
  Rat den = falling(N, m + n) * rat_pow(p1 * p3 * (p2 + p4), m) * rat_pow(p2 * p4 * (p1 + p3), n) *
            rat_pow(d.sum_p, m + n);
  return num / den;
}

Rat alpha_sq(int m, int n, int N, const DerivedParams& d) {
  PolyIndex{m, n, N}.validate();
  const Rat &p1 = d.p.p1, &p2 = d.p.p2, &p3 = d.p.p3, &p4 = d.p.p4;
  return rat_pow(2 * d.sum_p, m + n) / rat_pow(d.det_p, 2 * (m + n)) * falling(N, m + n) *
         rat_pow(p1 * p3 * (p2 + p4), m) * rat_pow(p2 * p4 * (p1 + p3), n);
}

double alpha_value(int m, int n, int N, const DerivedParams& d) {
  // alpha = (-sqrt(2 sum_p)/det_p)^(m+n) * sqrt(positive), so the sign is +1
  // for even m+n and -sign(det_p) for odd.
  double sign = ((m + n) % 2 == 0) ? 1.0 : (d.det_p > 0 ? -1.0 : 1.0);
  return sign * std::sqrt(to_double(alpha_sq(m, n, N, d)));
}

std::pair<GridFunction<FloatField>, NormalizationConstant> rahman_normalized(const PolyIndex& idx,
                                                                             const DerivedParams& d) {
  idx.validate();
  NormalizationConstant c;
  c.alpha_squared = alpha_sq(idx.m, idx.n, idx.N, d);
  c.norm_i = norm_I(idx.m, idx.n, idx.N, d);
  c.alpha = alpha_value(idx.m, idx.n, idx.N, d);
  Rat expected = Rat(factorial_z(static_cast<unsigned long>(idx.m))) *
                 Rat(factorial_z(static_cast<unsigned long>(idx.n))) * rat_pow(Rat(2), idx.m + idx.n);
  if (c.alpha_squared * c.norm_i != expected)
    throw std::logic_error("rahman_normalized: alpha^2 * I != 2^(m+n) m! n!");
  auto g = rahman_grid<FloatField>(idx, d);
  for (auto& v : g.values) v = FloatField::Scalar(c.alpha) * v;
  return {std::move(g), std::move(c)};
}

}  // namespace bikraw
