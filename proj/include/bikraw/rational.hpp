#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bikraw {

/// Exact rational scalar. Always canonical (reduced, positive denominator).
using Rat = mpq_class;

/// num/den in canonical form. The raw two-argument mpq_class constructor does
/// NOT reduce, and GMP arithmetic requires canonical operands; use this for
/// any quotient whose operands may share a factor.
inline Rat frac(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "num/den" or "num" (optional sign, arbitrary precision).
Rat parse_rat(std::string_view text);

/// Canonical string form: "num/den", or "num" when den == 1.
std::string rat_str(const Rat& q);

inline double to_double(const Rat& q) { return q.get_d(); }

/// q^e for integer e (negative e inverts; q must be nonzero then).
Rat rat_pow(const Rat& q, long e);

mpz_class factorial_z(unsigned long n);

/// Complex number over an exact or floating real type.
template <typename T>
struct Cplx {
  T re{};
  T im{};

  Cplx() = default;
  Cplx(T r) : re(std::move(r)) {}
  Cplx(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cplx operator*(const Cplx& a, const Cplx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Cplx operator-() const { return {-re, -im}; }
  Cplx& operator+=(const Cplx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Cplx& operator-=(const Cplx& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Cplx operator*(const T& s, const Cplx& a) { return {s * a.re, s * a.im}; }
  friend bool operator==(const Cplx& a, const Cplx& b) { return a.re == b.re && a.im == b.im; }

  bool is_zero() const { return re == T(0) && im == T(0); }
};

inline Rat abs_val(const Rat& q) { return abs(q); }
inline double abs_val(double v) { return std::fabs(v); }

/// Max-abs norm of a complex scalar: max(|re|, |im|). Zero iff the value is zero,
/// and exactly computable over rationals.
template <typename T>
T abs_max(const Cplx<T>& z) {
  T a = abs_val(z.re);
  T b = abs_val(z.im);
  return a < b ? b : a;
}

template <typename R>
R real_from_rat(const Rat& q);
template <>
inline Rat real_from_rat<Rat>(const Rat& q) {
  return q;
}
template <>
inline double real_from_rat<double>(const Rat& q) {
  return q.get_d();
}

/// Scalar field selection for grids and operators. Exact mode carries complex
/// numbers with arbitrary-precision rational components; identities are tested
/// for literal equality there.
struct ExactField {
  using Real = Rat;
  using Scalar = Cplx<Rat>;
  static constexpr bool exact = true;
  static const char* name() { return "exact"; }
  static Real real(const Rat& q) { return q; }
  static Scalar scalar(const Rat& q) { return Scalar(q); }
};

struct FloatField {
  using Real = double;
  using Scalar = Cplx<double>;
  static constexpr bool exact = false;
  static const char* name() { return "float"; }
  static Real real(const Rat& q) { return q.get_d(); }
  static Scalar scalar(const Rat& q) { return Scalar(q.get_d()); }
};

std::string format_double(double v);  // shortest round-trip decimal

}  // namespace bikraw
