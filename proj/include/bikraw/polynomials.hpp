#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "bikraw/grid.hpp"
#include "bikraw/lattice.hpp"
#include "bikraw/params.hpp"
#include "bikraw/rational.hpp"

namespace bikraw {

/// Degree pair (m, n) on T_N with 0 <= m+n <= N.
struct PolyIndex {
  int m = 0, n = 0, N = 0;

  void validate() const {
    if (m < 0 || n < 0 || N < 0 || m + n > N)
      throw std::invalid_argument("PolyIndex: need 0 <= m+n <= N, got m=" + std::to_string(m) +
                                  " n=" + std::to_string(n) + " N=" + std::to_string(N));
  }
};

/// Rising factorial (a)_k over the scalar type R.
template <class R>
R pochhammer(const R& a, int k) {
  R r(1);
  for (int i = 0; i < k; ++i) r *= a + R(i);
  return r;
}

/// Row of falling-style values (-v)_r, r = 0..rmax, for an integer v >= 0.
template <class R>
std::vector<R> poch_neg_row(long v, int rmax) {
  std::vector<R> out(static_cast<std::size_t>(rmax) + 1);
  out[0] = R(1);
  for (int r = 0; r < rmax; ++r) out[static_cast<std::size_t>(r) + 1] = out[static_cast<std::size_t>(r)] * R(-v + r);
  return out;
}

namespace detail {

/// Hypergeometric sum of the univariate Krawtchouk polynomial with the
/// (-M)_n prefactor. Terms whose numerator vanishes are skipped before the
/// division, so n may exceed M as long as (-x)_j cuts the sum off first
/// (the imbricated Tratnik product relies on that).
template <class R>
R kraw_core(int n, int x, const R& p, int M) {
  std::vector<R> pn = poch_neg_row<R>(n, n);
  std::vector<R> px = poch_neg_row<R>(x, n);
  std::vector<R> pM = poch_neg_row<R>(M, n);
  R inv_p = R(1) / p;
  R pw(1), fact(1), total(0);
  for (int j = 0; j <= n; ++j) {
    if (j > 0) {
      pw *= inv_p;
      fact *= R(j);
    }
    R num = pn[j] * px[j];
    if (num == R(0)) continue;
    if (pM[j] == R(0))
      throw std::domain_error("krawtchouk: pole, (-M)_j = 0 with nonvanishing numerator at j=" + std::to_string(j));
    total += num / (fact * pM[j]) * pw;
  }
  return pochhammer(R(-M), n) * total;
}

}  // namespace detail

/// K_n(x; p; N), the finite hypergeometric sum with (-N)_n prefactor.
template <class R>
R krawtchouk1(int n, int x, const R& p, int N) {
  if (p == R(0)) throw std::invalid_argument("krawtchouk1: p must be nonzero");
  if (n < 0 || n > N) throw std::invalid_argument("krawtchouk1: need 0 <= n <= N, got n=" + std::to_string(n));
  return detail::kraw_core(n, x, p, N);
}

/// Evaluator of the bivariate Rahman polynomials on T_N by the truncated
/// direct sum (i+j <= m, k+l <= n). The sum is reorganized as a 2-D
/// convolution over (i+k, j+l) followed by Pochhammer contractions; the
/// summands are identical, so exact-mode values equal the textbook quadruple
/// loop term by term.
template <class R>
class RahmanEvaluator {
 public:
  RahmanEvaluator(const DerivedParams& d, int N, int max_total_degree = -1)
      : N_(N), maxdeg_(max_total_degree < 0 ? N : max_total_degree) {
    if (N < 0) throw std::invalid_argument("RahmanEvaluator: negative N");
    if (maxdeg_ > N_) maxdeg_ = N_;
    u1_ = real_from_rat<R>(d.u1);
    u2_ = real_from_rat<R>(d.u2);
    v1_ = real_from_rat<R>(d.v1);
    v2_ = real_from_rat<R>(d.v2);
    pochv_.reserve(static_cast<std::size_t>(N) + 1);
    for (int v = 0; v <= N; ++v) pochv_.push_back(poch_neg_row<R>(v, maxdeg_));
    inv_pochN_.resize(static_cast<std::size_t>(maxdeg_) + 1);
    std::vector<R> pN = poch_neg_row<R>(N, maxdeg_);
    for (int k = 0; k <= maxdeg_; ++k) inv_pochN_[static_cast<std::size_t>(k)] = R(1) / pN[static_cast<std::size_t>(k)];
    inv_fact_.resize(static_cast<std::size_t>(maxdeg_) + 1);
    Rat f(1);
    for (int i = 0; i <= maxdeg_; ++i) {
      if (i > 0) f *= i;
      inv_fact_[static_cast<std::size_t>(i)] = real_from_rat<R>(1 / f);
    }
  }

  int n() const { return N_; }

  R eval(int m, int n, int x, int y) const {
    check_index(m, n);
    if (x < 0 || y < 0 || x + y > N_)
      throw std::invalid_argument("rahman_eval: point (" + std::to_string(x) + "," + std::to_string(y) +
                                  ") outside T_" + std::to_string(N_));
    auto ct = coeff_table(m, n);
    return eval_with(ct, m + n, x, y);
  }

  /// All values on T_N in canonical order.
  std::vector<R> grid(int m, int n) const {
    check_index(m, n);
    auto ct = coeff_table(m, n);
    TriLattice lat(N_);
    std::vector<R> out(lat.size());
    for (std::size_t i = 0; i < lat.size(); ++i) {
      auto [x, y] = lat.point(i);
      out[i] = eval_with(ct, m + n, x, y);
    }
    return out;
  }

 private:
  void check_index(int m, int n) const {
    if (m < 0 || n < 0 || m + n > N_)
      throw std::invalid_argument("rahman: degree (" + std::to_string(m) + "," + std::to_string(n) +
                                  ") outside 0 <= m+n <= N=" + std::to_string(N_));
    if (m + n > maxdeg_) throw std::logic_error("RahmanEvaluator: degree exceeds configured table width");
  }

  // ct[r][q] = sum_{i+k=r, j+l=q} (-m)_{i+j}(-n)_{k+l} u1^i v1^j u2^k v2^l
  //            / (i! j! k! l!)  * 1/(-N)_{r+q}
  std::vector<std::vector<R>> coeff_table(int m, int n) const {
    int deg = m + n;
    std::vector<std::vector<R>> ct(static_cast<std::size_t>(deg) + 1,
                                   std::vector<R>(static_cast<std::size_t>(deg) + 1, R(0)));
    std::vector<R> pm = poch_neg_row<R>(m, m), pn = poch_neg_row<R>(n, n);
    R u1p(1);
    for (int i = 0; i <= m; ++i, u1p *= u1_) {
      R v1p(1);
      for (int j = 0; i + j <= m; ++j, v1p *= v1_) {
        R aij = pm[static_cast<std::size_t>(i + j)] * u1p * v1p * inv_fact_[static_cast<std::size_t>(i)] *
                inv_fact_[static_cast<std::size_t>(j)];
        if (aij == R(0)) continue;
        R u2p(1);
        for (int k = 0; k <= n; ++k, u2p *= u2_) {
          R v2p(1);
          for (int l = 0; k + l <= n; ++l, v2p *= v2_) {
            R bkl = pn[static_cast<std::size_t>(k + l)] * u2p * v2p * inv_fact_[static_cast<std::size_t>(k)] *
                    inv_fact_[static_cast<std::size_t>(l)];
            if (bkl == R(0)) continue;
            ct[static_cast<std::size_t>(i + k)][static_cast<std::size_t>(j + l)] += aij * bkl;
          }
        }
      }
    }
    for (int r = 0; r <= deg; ++r)
      for (int q = 0; r + q <= deg; ++q)
        ct[static_cast<std::size_t>(r)][static_cast<std::size_t>(q)] *= inv_pochN_[static_cast<std::size_t>(r + q)];
    return ct;
  }

  R eval_with(const std::vector<std::vector<R>>& ct, int deg, int x, int y) const {
    const auto& px = pochv_[static_cast<std::size_t>(x)];
    const auto& py = pochv_[static_cast<std::size_t>(y)];
    R total(0);
    int rmax = std::min(deg, x);
    for (int r = 0; r <= rmax; ++r) {
      int qmax = std::min(deg - r, y);
      R acc(0);
      const auto& row = ct[static_cast<std::size_t>(r)];
      for (int q = 0; q <= qmax; ++q) acc += row[static_cast<std::size_t>(q)] * py[static_cast<std::size_t>(q)];
      total += px[static_cast<std::size_t>(r)] * acc;
    }
    return total;
  }

  int N_, maxdeg_;
  R u1_, u2_, v1_, v2_;
  std::vector<std::vector<R>> pochv_;  // (-v)_r tables, v = 0..N
  std::vector<R> inv_pochN_, inv_fact_;
};

template <class R>
R rahman_eval(const PolyIndex& idx, const DerivedParams& d, int x, int y) {
  idx.validate();
  return RahmanEvaluator<R>(d, idx.N, idx.m + idx.n).eval(idx.m, idx.n, x, y);
}

template <class Fd>
GridFunction<Fd> rahman_grid(const PolyIndex& idx, const DerivedParams& d) {
  idx.validate();
  RahmanEvaluator<typename Fd::Real> ev(d, idx.N, idx.m + idx.n);
  auto vals = ev.grid(idx.m, idx.n);
  GridFunction<Fd> g((TriLattice(idx.N)));
  for (std::size_t i = 0; i < vals.size(); ++i) g.values[i] = typename Fd::Scalar(std::move(vals[i]));
  return g;
}

/// Propagates K over T_N from K(0,0)=1 using the two recurrence relations,
/// sweeping diagonals in ascending x+y (relation 1 advances x, relation 2
/// advances y at x=0). Exactly equal to the direct sum in rational mode; the
/// float instantiation exists for completeness but is numerically unstable at
/// large N and is used as an oracle in exact mode only.
template <class Fd>
GridFunction<Fd> rahman_grid_recurrence(const PolyIndex& idx, const DerivedParams& d) {
  using R = typename Fd::Real;
  idx.validate();
  const int N = idx.N;
  const Rat &p1 = d.p.p1, &p2 = d.p.p2, &p3 = d.p.p3, &p4 = d.p.p4;
  const R lhs1 = real_from_rat<R>(p2 * (p1 + p3) * idx.m + p1 * (p2 + p4) * idx.n);
  const R lhs2 = real_from_rat<R>(p4 * (p1 + p3) * idx.m + p3 * (p2 + p4) * idx.n);
  const R cX = real_from_rat<R>(p1 * p2 * d.sum_p / (p1 + p2));
  const R cY = real_from_rat<R>(p3 * p4 * d.sum_p / (p3 + p4));
  const R cback = real_from_rat<R>(d.det_p * d.det_p / ((p1 + p2) * (p3 + p4)));
  const R c1xy = real_from_rat<R>(p3 * p4 * (p1 + p2) / (p3 + p4));  // rel 1, Delta_{-x,y}
  const R c1yx = real_from_rat<R>(p1 * p2);                          // rel 1, Delta_{x,-y}
  const R c2xy = real_from_rat<R>(p3 * p4);                          // rel 2, Delta_{-x,y}
  const R c2yx = real_from_rat<R>(p1 * p2 * (p3 + p4) / (p1 + p2));  // rel 2, Delta_{x,-y}

  std::vector<std::vector<R>> K(static_cast<std::size_t>(N) + 2,
                                std::vector<R>(static_cast<std::size_t>(N) + 2, R(0)));
  auto at = [&](int x, int y) -> R {
    if (x < 0 || y < 0) return R(0);
    return K[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  };
  K[0][0] = R(1);
  for (int dsum = 0; dsum < N; ++dsum) {
    for (int x = 0; x <= dsum; ++x) {
      int y = dsum - x;
      R piv = R(N - x - y) * cX;
      if (piv == R(0))
        throw std::runtime_error("recurrence propagation: zero pivot in relation 1 at (" + std::to_string(x) + "," +
                                 std::to_string(y) + ")");
      R k0 = at(x, y);
      R rhs = -lhs1 * k0 - R(x) * cback * (at(x - 1, y) - k0) - R(x) * c1xy * (at(x - 1, y + 1) - k0) -
              R(y) * c1yx * (at(x + 1, y - 1) - k0) + piv * k0;
      K[static_cast<std::size_t>(x) + 1][static_cast<std::size_t>(y)] = rhs / piv;
    }
    {
      int x = 0, y = dsum;
      R piv = R(N - x - y) * cY;
      if (piv == R(0))
        throw std::runtime_error("recurrence propagation: zero pivot in relation 2 at (0," + std::to_string(y) + ")");
      R k0 = at(x, y);
      R rhs = -lhs2 * k0 - R(y) * cback * (at(x, y - 1) - k0) - R(x) * c2xy * (at(x - 1, y + 1) - k0) -
              R(y) * c2yx * (at(x + 1, y - 1) - k0) + piv * k0;
      K[0][static_cast<std::size_t>(y) + 1] = rhs / piv;
    }
  }
  GridFunction<Fd> g((TriLattice(N)));
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    auto [x, y] = g.lattice.point(i);
    g.values[i] = typename Fd::Scalar(K[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
  }
  return g;
}

template <class FdTo>
GridFunction<FdTo> convert_grid(const GridFunction<ExactField>& g) {
  GridFunction<FdTo> out(g.lattice);
  for (std::size_t i = 0; i < g.values.size(); ++i)
    out.values[i] = typename FdTo::Scalar(FdTo::real(g.values[i].re), FdTo::real(g.values[i].im));
  return out;
}

/// Squared norm I of the orthogonality relation (diagonal entry).
Rat norm_I(int m, int n, int N, const DerivedParams& d);

/// alpha^2 as an exact rational; alpha itself carries a square root.
Rat alpha_sq(int m, int n, int N, const DerivedParams& d);
double alpha_value(int m, int n, int N, const DerivedParams& d);

struct NormalizationConstant {
  double alpha = 1.0;
  Rat alpha_squared;
  Rat norm_i;
};

/// K-hat = alpha * K as a float grid (alpha is irrational; exact mode works on
/// squared quantities via alpha_sq/norm_I). Asserts alpha^2 * I = 2^(m+n) m! n!
/// exactly before returning.
std::pair<GridFunction<FloatField>, NormalizationConstant> rahman_normalized(const PolyIndex& idx,
                                                                             const DerivedParams& d);

/// Trinomial weight at one point, exact; R converts at the end.
template <class R>
R trinomial_weight(int x, int y, int N, const Rat& eta1, const Rat& eta2) {
  if (!(eta1 > 0 && eta2 > 0 && eta1 + eta2 < 1))
    throw std::invalid_argument("trinomial_weight: (eta1, eta2) outside the open simplex");
  if (x < 0 || y < 0 || x + y > N)
    throw std::invalid_argument("trinomial_weight: point (" + std::to_string(x) + "," + std::to_string(y) +
                                ") outside T_" + std::to_string(N));
  mpz_class mult;
  mpz_bin_uiui(mult.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(x));
  mpz_class m2;
  mpz_bin_uiui(m2.get_mpz_t(), static_cast<unsigned long>(N - x), static_cast<unsigned long>(y));
  mult *= m2;
  Rat w = Rat(mult) * rat_pow(eta1, x) * rat_pow(eta2, y) * rat_pow(1 - eta1 - eta2, N - x - y);
  return real_from_rat<R>(w);
}

template <class Fd>
GridFunction<Fd> weight_grid(int N, const DerivedParams& d) {
  GridFunction<Fd> g((TriLattice(N)));
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    auto [x, y] = g.lattice.point(i);
    g.values[i] = typename Fd::Scalar(trinomial_weight<typename Fd::Real>(x, y, N, d.eta1, d.eta2));
  }
  return g;
}

/// Tratnik polynomials as imbricated univariate Krawtchouk products, with the
/// univariate values memoized per (parameter slot, M, n) row.
template <class R>
class TratnikEvaluator {
 public:
  TratnikEvaluator(const DerivedParams& d, int N) : N_(N) {
    p_[0] = real_from_rat<R>(d.frak_p1);
    p_[1] = real_from_rat<R>(d.frak_p2 / (1 - d.frak_p1));
    inv_pochN_ = poch_neg_row<R>(N, N);
    for (auto& v : inv_pochN_) v = R(1) / v;
  }

  R eval(int n1, int n2, int x, int y) const {
    if (n1 < 0 || n2 < 0 || n1 + n2 > N_)
      throw std::invalid_argument("tratnik_eval: degrees (" + std::to_string(n1) + "," + std::to_string(n2) +
                                  ") outside 0 <= n1+n2 <= N=" + std::to_string(N_));
    if (x < 0 || y < 0 || x + y > N_)
      throw std::invalid_argument("tratnik_eval: point (" + std::to_string(x) + "," + std::to_string(y) +
                                  ") outside T_" + std::to_string(N_));
    const R& f1 = row(0, N_ - n2, n1)[static_cast<std::size_t>(x)];
    const R& f2 = row(1, N_ - x, n2)[static_cast<std::size_t>(y)];
    return f1 * inv_pochN_[static_cast<std::size_t>(n1 + n2)] * f2;
  }

 private:
  // values of k_n(x; p_slot; M) for x = 0..N. Slot 0 (first factor) is read
  // at every lattice x and stays pole-free since n1 <= M there; slot 1 is only
  // ever read at y <= M = N-x, so entries past M are never touched.
  const std::vector<R>& row(int slot, int M, int n) const {
    auto key = std::make_pair(M, n);
    auto it = memo_[slot].find(key);
    if (it != memo_[slot].end()) return it->second;
    std::vector<R> vals(static_cast<std::size_t>(N_) + 1, R(0));
    const int limit = slot == 0 ? N_ : std::min(M, N_);
    for (int x = 0; x <= limit; ++x) vals[static_cast<std::size_t>(x)] = detail::kraw_core(n, x, p_[slot], M);
    return memo_[slot].emplace(key, std::move(vals)).first->second;
  }

  int N_;
  R p_[2];
  std::vector<R> inv_pochN_;
  mutable std::map<std::pair<int, int>, std::vector<R>> memo_[2];
};

template <class R>
R tratnik_eval(int n1, int n2, int x, int y, const DerivedParams& d, int N) {
  return TratnikEvaluator<R>(d, N).eval(n1, n2, x, y);
}

template <class Fd>
GridFunction<Fd> tratnik_grid(int n1, int n2, const DerivedParams& d, int N) {
  TratnikEvaluator<typename Fd::Real> ev(d, N);
  GridFunction<Fd> g((TriLattice(N)));
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    auto [x, y] = g.lattice.point(i);
    g.values[i] = typename Fd::Scalar(ev.eval(n1, n2, x, y));
  }
  return g;
}

/// Physicists' Hermite polynomial by the three-term recurrence.
template <class R>
R hermite(int n, const R& s) {
  if (n < 0) throw std::invalid_argument("hermite: negative degree");
  R h0(1), h1 = R(2) * s;
  if (n == 0) return h0;
  for (int k = 1; k < n; ++k) {
    R h2 = R(2) * s * h1 - R(2 * k) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

}  // namespace bikraw
