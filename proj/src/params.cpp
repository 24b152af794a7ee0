#include "bikraw/params.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace bikraw {

Rat parse_rat(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string s(text);
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
      throw std::invalid_argument("invalid rational literal: \"" + s + "\"");
  }
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("invalid rational literal: \"" + s + "\"");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in rational literal: \"" + s + "\"");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

Rat rat_pow(const Rat& q, long e) {
  if (e < 0) {
    if (q == 0) throw std::domain_error("rat_pow: zero base with negative exponent");
    return 1 / rat_pow(q, -e);
  }
  Rat r = 1, base = q;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

mpz_class factorial_z(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

void RahmanParams::validate() const {
  const Rat* ps[] = {&p1, &p2, &p3, &p4};
  for (int i = 0; i < 4; ++i)
    if (*ps[i] <= 0)
      throw std::invalid_argument("RahmanParams: p" + std::to_string(i + 1) + " = " + rat_str(*ps[i]) +
                                  " violates p_i > 0");
  if (p1 * p4 == p2 * p3)
    throw std::invalid_argument("RahmanParams: degenerate parameters, p1*p4 == p2*p3 (= " + rat_str(p1 * p4) +
                                "); this difference divides every operator coefficient");
}

std::string RahmanParams::describe() const {
  return rat_str(p1) + "," + rat_str(p2) + "," + rat_str(p3) + "," + rat_str(p4);
}

void FrequencyPair::validate() const {
  if (omega1 <= 0 || omega2 <= 0)
    throw std::invalid_argument("FrequencyPair: frequencies must be positive, got " + rat_str(omega1) + "," +
                                rat_str(omega2));
}

DerivedParams derive_params(const RahmanParams& p) {
  p.validate();
  DerivedParams d;
  d.p = p;
  const Rat &p1 = p.p1, &p2 = p.p2, &p3 = p.p3, &p4 = p.p4;
  const Rat S = p1 + p2 + p3 + p4;
  d.sum_p = S;
  d.det_p = p1 * p4 - p2 * p3;

  d.u1 = (p1 + p2) * (p1 + p3) / (p1 * S);
  d.u2 = (p1 + p2) * (p2 + p4) / (p2 * S);
  d.v1 = (p1 + p3) * (p3 + p4) / (p3 * S);
  d.v2 = (p2 + p4) * (p3 + p4) / (p4 * S);

  d.eta1 = p1 * p2 * S / ((p1 + p2) * (p1 + p3) * (p2 + p4));
  d.eta2 = p3 * p4 * S / ((p2 + p4) * (p3 + p4) * (p1 + p3));
  d.frak_p1 = d.eta1;
  d.frak_p2 = d.eta2;

  const Rat A1 = p1 * p3 / (p1 + p3);  // combinations recurring in ell2, a, b, c
  const Rat A2 = p2 * p4 / (p2 + p4);
  const Rat B1 = p1 * p4 / (p2 + p4);
  const Rat B2 = p2 * p3 / (p1 + p3);
  d.ell2 = 1 / (B1 + B2);

  d.a = Cplx<Rat>(-d.ell2 * (A2 + A1));
  d.b = Cplx<Rat>(Rat(0), d.ell2 * (A2 - A1));
  d.c = Cplx<Rat>(2 * d.ell2 * B2 - 1);

  const double p1f = to_double(p1), p2f = to_double(p2), p3f = to_double(p3), p4f = to_double(p4);
  const double Sf = to_double(S);
  const double r1 = std::sqrt(2.0 * Sf * p1f * p3f / (p2f + p4f));
  const double r2 = std::sqrt(2.0 * Sf * p2f * p4f / (p1f + p3f));
  d.cs[0] = -p2f / ((p1f + p2f) * (p1f + p3f)) * r1;
  d.cs[1] = p1f / ((p1f + p2f) * (p2f + p4f)) * r2;
  d.cs[2] = p4f / ((p3f + p4f) * (p1f + p3f)) * r1;
  d.cs[3] = -p3f / ((p3f + p4f) * (p2f + p4f)) * r2;
  d.det2 = std::fabs(d.cs[0] * d.cs[3] - d.cs[1] * d.cs[2]);

  // invariants asserted before return
  if (d.u1 * d.eta1 + d.v1 * d.eta2 != 1 || d.u2 * d.eta1 + d.v2 * d.eta2 != 1 ||
      d.u1 * d.u2 * d.eta1 + d.v1 * d.v2 * d.eta2 != 1)
    throw std::logic_error("derive_params: functional relations violated");
  if (!(d.eta1 > 0 && d.eta2 > 0 && d.eta1 + d.eta2 < 1))
    throw std::logic_error("derive_params: (eta1, eta2) outside the open simplex");
  if (!(d.a * d.a + d.b * d.b + d.c * d.c == Cplx<Rat>(Rat(1))))
    throw std::logic_error("derive_params: a^2+b^2+c^2 != 1");
  const double det_target = 2.0 * std::sqrt(to_double(d.eta1 * d.eta2 * (1 - d.eta1 - d.eta2)));
  if (std::fabs(d.det2 - det_target) > 1e-12 * det_target)
    throw std::logic_error("derive_params: |c1*c4 - c2*c3| mismatch with 2*sqrt(eta1*eta2*(1-eta1-eta2))");
  return d;
}

VerificationReport check_functional_relations(const DerivedParams& d) {
  VerificationReport rep;
  rep.suite = "functional-relations";
  rep.mode = "exact";
  const Rat res[3] = {abs(d.u1 * d.eta1 + d.v1 * d.eta2 - 1), abs(d.u2 * d.eta1 + d.v2 * d.eta2 - 1),
                      abs(d.u1 * d.u2 * d.eta1 + d.v1 * d.v2 * d.eta2 - 1)};
  for (int i = 0; i < 3; ++i) {
    CaseResult c;
    c.id = "fr." + std::to_string(i + 1);
    c.residual = rat_str(res[i]);
    c.residual_value = to_double(res[i]);
    c.pass = res[i] == 0;
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

bool check_nn_condition(const Rat& omega1_sq, const Rat& omega2_sq, const RahmanParams& p) {
  return omega1_sq * (p.p2 + p.p4) + omega2_sq * (p.p1 + p.p3) == 0;
}

bool check_nn_condition(const FrequencyPair& freqs, const RahmanParams& p) {
  freqs.validate();
  auto [w1, w2] = freqs.omega_sq();
  return check_nn_condition(w1, w2, p);
}

}  // namespace bikraw
