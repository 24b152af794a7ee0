#include "bikraw/operators.hpp"

namespace bikraw {

namespace {

// Delta_{dx,dy} contributes the shifted read plus a diagonal -coeff.
void push_delta(StencilTerms& terms, int dx, int dy, std::function<Rat(int, int)> coeff) {
  terms.push_back({dx, dy, coeff});
  terms.push_back({0, 0, [coeff](int x, int y) { return Rat(-coeff(x, y)); }});
}

}  // namespace

StencilTerms lambda_terms(int which, int N, const DerivedParams& d) {
  const Rat p1 = d.p.p1, p2 = d.p.p2, p3 = d.p.p3, p4 = d.p.p4;
  const Rat S = d.sum_p, D = d.det_p;
  StencilTerms t;
  if (which == 1) {
    const Rat fwd = p1 * p3 * S / ((p1 + p3) * D);
    const Rat bwd = D / ((p1 + p2) * (p3 + p4));
    push_delta(t, 1, 0, [=](int x, int y) { return Rat(fwd * (N - x - y) * p2 / (p1 + p2)); });
    push_delta(t, 0, 1, [=](int x, int y) { return Rat(-fwd * (N - x - y) * p4 / (p3 + p4)); });
    push_delta(t, -1, 0, [=](int x, int y) { return Rat(bwd * x * p3 / (p1 + p3)); });
    push_delta(t, 0, -1, [=](int x, int y) { return Rat(-bwd * y * p1 / (p1 + p3)); });
    push_delta(t, -1, 1, [=](int x, int y) { return Rat(Rat(-x) * p3 * p4 / ((p1 + p3) * (p3 + p4))); });
    push_delta(t, 1, -1, [=](int x, int y) { return Rat(Rat(-y) * p1 * p2 / ((p1 + p2) * (p1 + p3))); });
  } else {
    const Rat fwd = p2 * p4 * S / ((p2 + p4) * D);
    const Rat bwd = D / ((p1 + p2) * (p3 + p4));
    push_delta(t, 1, 0, [=](int x, int y) { return Rat(-fwd * (N - x - y) * p1 / (p1 + p2)); });
    push_delta(t, 0, 1, [=](int x, int y) { return Rat(fwd * (N - x - y) * p3 / (p3 + p4)); });
    push_delta(t, -1, 0, [=](int x, int y) { return Rat(-bwd * x * p4 / (p2 + p4)); });
    push_delta(t, 0, -1, [=](int x, int y) { return Rat(bwd * y * p2 / (p2 + p4)); });
    push_delta(t, -1, 1, [=](int x, int y) { return Rat(Rat(-x) * p3 * p4 / ((p2 + p4) * (p3 + p4))); });
    push_delta(t, 1, -1, [=](int x, int y) { return Rat(Rat(-y) * p1 * p2 / ((p1 + p2) * (p2 + p4))); });
  }
  return t;
}

StencilTerms aminus_terms(char side, const DerivedParams& d) {
  const Rat p1 = d.p.p1, p2 = d.p.p2, p3 = d.p.p3, p4 = d.p.p4;
  StencilTerms t;
  if (side == 'R') {
    const Rat cf = p1 * p2 * p3 * p4 * d.sum_p / ((p1 + p3) * d.det_p);
    push_delta(t, 1, 0, [=](int, int) { return Rat(cf / (p4 * (p1 + p2))); });
    push_delta(t, 0, 1, [=](int, int) { return Rat(-cf / (p2 * (p3 + p4))); });
  } else {
    const Rat cf = p1 * p2 * p3 * p4 * d.sum_p / ((p2 + p4) * d.det_p);
    push_delta(t, 1, 0, [=](int, int) { return Rat(-cf / (p3 * (p1 + p2))); });
    push_delta(t, 0, 1, [=](int, int) { return Rat(cf / (p1 * (p3 + p4))); });
  }
  return t;
}

StencilTerms aplus_terms(char side, int formal_n, const DerivedParams& d) {
  const Rat p1 = d.p.p1, p2 = d.p.p2, p3 = d.p.p3, p4 = d.p.p4;
  const Rat g = d.det_p / d.sum_p;
  StencilTerms t;
  if (side == 'R') {
    t.push_back({-1, 0, [=](int x, int) { return Rat(g * x / p1); }});
    t.push_back({0, -1, [=](int, int y) { return Rat(-g * y / p3); }});
  } else {
    t.push_back({-1, 0, [=](int x, int) { return Rat(-g * x / p2); }});
    t.push_back({0, -1, [=](int, int y) { return Rat(g * y / p4); }});
  }
  t.push_back({0, 0, [=](int x, int y) { return Rat(Rat(formal_n + 1 - x - y)); }});
  return t;
}

StencilTerms five_term_terms(int N, const DerivedParams& d) {
  const Rat p1 = d.p.p1, p2 = d.p.p2, p3 = d.p.p3, p4 = d.p.p4;
  const Rat S = d.sum_p, D = d.det_p;
  StencilTerms t;
  // the (N-x-y) coefficients carry 1/(p1 p4 - p2 p3); required by the matrix
  // identity with (p1+p3) Lambda_1 - (p2+p4) Lambda_2
  push_delta(t, 1, 0, [=](int x, int y) { return Rat(Rat(N - x - y) * p1 * p2 * (p3 + p4) * S / ((p1 + p2) * D)); });
  push_delta(t, 0, 1, [=](int x, int y) { return Rat(-Rat(N - x - y) * p3 * p4 * (p1 + p2) * S / ((p3 + p4) * D)); });
  push_delta(t, -1, 0, [=](int x, int) { return Rat(Rat(x) * D / (p1 + p2)); });
  push_delta(t, 0, -1, [=](int, int y) { return Rat(-Rat(y) * D / (p3 + p4)); });
  return t;
}

StencilTerms rec_terms(int which, int N, const DerivedParams& d) {
  const Rat p1 = d.p.p1, p2 = d.p.p2, p3 = d.p.p3, p4 = d.p.p4;
  const Rat S = d.sum_p, D = d.det_p;
  const Rat bwd = D * D / ((p1 + p2) * (p3 + p4));
  StencilTerms t;
  if (which == 1) {
    push_delta(t, 1, 0, [=](int x, int y) { return Rat(Rat(N - x - y) * p1 * p2 * S / (p1 + p2)); });
    push_delta(t, -1, 0, [=](int x, int) { return Rat(Rat(x) * bwd); });
    push_delta(t, -1, 1, [=](int x, int) { return Rat(Rat(x) * p3 * p4 * (p1 + p2) / (p3 + p4)); });
    push_delta(t, 1, -1, [=](int, int y) { return Rat(Rat(y) * p1 * p2); });
  } else {
    push_delta(t, 0, 1, [=](int x, int y) { return Rat(Rat(N - x - y) * p3 * p4 * S / (p3 + p4)); });
    push_delta(t, 0, -1, [=](int, int y) { return Rat(Rat(y) * bwd); });
    push_delta(t, -1, 1, [=](int x, int) { return Rat(Rat(x) * p3 * p4); });
    push_delta(t, 1, -1, [=](int, int y) { return Rat(Rat(y) * p1 * p2 * (p3 + p4) / (p1 + p2)); });
  }
  return t;
}

StencilTerms shift_t_terms(int dx, int dy) {
  StencilTerms t;
  t.push_back({dx, dy, [](int, int) { return Rat(Rat(1)); }});
  return t;
}

StencilTerms shift_delta_terms(int dx, int dy) {
  StencilTerms t;
  t.push_back({dx, dy, [](int, int) { return Rat(Rat(1)); }});
  t.push_back({0, 0, [](int, int) { return Rat(Rat(-1)); }});
  return t;
}

OperatorKind operator_kind_from_string(const std::string& name) {
  if (name == "lambda1") return OperatorKind::lambda1;
  if (name == "lambda2") return OperatorKind::lambda2;
  if (name == "fiveterm") return OperatorKind::five_term;
  if (name == "rec1") return OperatorKind::rec1;
  if (name == "rec2") return OperatorKind::rec2;
  if (name == "aminusr") return OperatorKind::a_minus_r;
  if (name == "aminusl") return OperatorKind::a_minus_l;
  if (name == "aplusr") return OperatorKind::a_plus_r;
  if (name == "aplusl") return OperatorKind::a_plus_l;
  if (name == "hiso") return OperatorKind::h_iso;
  if (name == "haniso") return OperatorKind::h_aniso;
  if (name == "jx") return OperatorKind::jx;
  if (name == "jy") return OperatorKind::jy;
  if (name == "jz") return OperatorKind::jz;
  if (name == "casimir") return OperatorKind::casimir;
  if (name == "l1") return OperatorKind::l1;
  if (name == "l2") return OperatorKind::l2;
  if (name == "frakk") return OperatorKind::frak_k;
  throw std::invalid_argument("unknown operator kind: \"" + name + "\"");
}

}  // namespace bikraw
