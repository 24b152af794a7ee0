#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bikraw/grid.hpp"
#include "bikraw/lattice.hpp"
#include "bikraw/rational.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bikraw {

/// Execution policy for the data-parallel kernels. Both paths produce
/// identical results (rows are independent and within-row accumulation order
/// is fixed); the serial path is the reference implementation kept for tests
/// and benchmarks.
enum class Exec { serial, parallel };

/// Linear map between grid functions, possibly across lattices of different N.
/// Rows are stored sparse and column-sorted; row index = codomain point, column
/// index = domain point, both in canonical order.
template <class Fd>
class LatticeOperator {
 public:
  using Scalar = typename Fd::Scalar;
  using Real = typename Fd::Real;
  using Entry = std::pair<std::int32_t, Scalar>;

  LatticeOperator(const TriLattice& domain, const TriLattice& codomain)
      : dom_(domain), cod_(codomain), rows_(codomain.size()) {}

  static LatticeOperator identity(const TriLattice& lat) {
    LatticeOperator op(lat, lat);
    for (std::size_t i = 0; i < lat.size(); ++i) op.rows_[i].emplace_back(static_cast<std::int32_t>(i), Scalar(typename Fd::Real(1)));
    return op;
  }

  const TriLattice& domain() const { return dom_; }
  const TriLattice& codomain() const { return cod_; }
  bool square() const { return dom_ == cod_; }

  const std::vector<Entry>& row(std::size_t i) const { return rows_[i]; }
  std::vector<Entry>& mutable_row(std::size_t i) { return rows_[i]; }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  /// Accumulates into (r, c); used by builders. Rows are finalized (sorted,
  /// zero entries dropped) by finalize().
  void add_entry(std::size_t r, std::size_t c, const Scalar& v) {
    rows_[r].emplace_back(static_cast<std::int32_t>(c), v);
  }

  void finalize() {
    for (auto& r : rows_) {
      std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
      std::vector<Entry> out;
      out.reserve(r.size());
      for (auto& e : r) {
        if (!out.empty() && out.back().first == e.first)
          out.back().second += e.second;
        else
          out.push_back(std::move(e));
      }
      std::erase_if(out, [](const Entry& e) { return e.second.is_zero(); });
      r = std::move(out);
    }
  }

  GridFunction<Fd> apply(const GridFunction<Fd>& f, Exec exec = Exec::parallel) const {
    if (!(f.lattice == dom_))
      throw std::invalid_argument("apply: operator domain " + dom_.describe() + " does not match grid lattice " +
                                  f.lattice.describe());
    GridFunction<Fd> out(cod_);
    const auto n = static_cast<std::int64_t>(rows_.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
      Scalar acc{};
      for (const auto& [c, v] : rows_[i]) acc += v * f.values[static_cast<std::size_t>(c)];
      out.values[static_cast<std::size_t>(i)] = std::move(acc);
    }
    (void)exec;
    return out;
  }

  friend LatticeOperator compose(const LatticeOperator& a, const LatticeOperator& b, Exec exec = Exec::parallel) {
    if (!(b.cod_ == a.dom_))
      throw std::invalid_argument("compose: inner shapes mismatch, left domain " + a.dom_.describe() +
                                  " vs right codomain " + b.cod_.describe());
    LatticeOperator out(b.dom_, a.cod_);
    const auto n = static_cast<std::int64_t>(a.rows_.size());
    const std::size_t width = b.dom_.size();
#ifdef _OPENMP
#pragma omp parallel if (exec == Exec::parallel)
#endif
    {
      std::vector<Scalar> scratch(width);
      std::vector<char> seen(width, 0);
      std::vector<std::int32_t> touched;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
      for (std::int64_t i = 0; i < n; ++i) {
        touched.clear();
        for (const auto& [k, av] : a.rows_[i]) {
          for (const auto& [c, bv] : b.rows_[static_cast<std::size_t>(k)]) {
            const auto ci = static_cast<std::size_t>(c);
            if (!seen[ci]) {
              seen[ci] = 1;
              touched.push_back(c);
            }
            scratch[ci] += av * bv;
          }
        }
        std::sort(touched.begin(), touched.end());
        auto& row = out.rows_[static_cast<std::size_t>(i)];
        row.reserve(touched.size());
        for (auto c : touched) {
          const auto ci = static_cast<std::size_t>(c);
          if (!scratch[ci].is_zero()) row.emplace_back(c, scratch[ci]);
          scratch[ci] = Scalar{};
          seen[ci] = 0;
        }
      }
    }
    (void)exec;
    return out;
  }

  friend LatticeOperator commutator(const LatticeOperator& a, const LatticeOperator& b, Exec exec = Exec::parallel) {
    return compose(a, b, exec) - compose(b, a, exec);
  }

  friend LatticeOperator operator+(const LatticeOperator& a, const LatticeOperator& b) { return combine(a, b, false); }
  friend LatticeOperator operator-(const LatticeOperator& a, const LatticeOperator& b) { return combine(a, b, true); }

  LatticeOperator scaled(const Scalar& s) const {
    LatticeOperator out(dom_, cod_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      out.rows_[i].reserve(rows_[i].size());
      for (const auto& [c, v] : rows_[i]) {
        Scalar sv = s * v;
        if (!sv.is_zero()) out.rows_[i].emplace_back(c, std::move(sv));
      }
    }
    return out;
  }

  /// Max-abs of all entries.
  Real max_abs() const {
    Real m(0);
    for (const auto& r : rows_)
      for (const auto& [c, v] : r) {
        Real a = abs_max(v);
        if (m < a) m = a;
      }
    return m;
  }

  /// Max-abs entrywise difference; shapes must match exactly.
  friend Real residual(const LatticeOperator& a, const LatticeOperator& b) {
    if (!(a.dom_ == b.dom_) || !(a.cod_ == b.cod_))
      throw std::invalid_argument("residual: shape mismatch, " + a.cod_.describe() + "x" + a.dom_.describe() +
                                  " vs " + b.cod_.describe() + "x" + b.dom_.describe());
    return (a - b).max_abs();
  }

 private:
  static LatticeOperator combine(const LatticeOperator& a, const LatticeOperator& b, bool subtract) {
    if (!(a.dom_ == b.dom_) || !(a.cod_ == b.cod_))
      throw std::invalid_argument("operator+/-: shape mismatch, " + a.cod_.describe() + "x" + a.dom_.describe() +
                                  " vs " + b.cod_.describe() + "x" + b.dom_.describe());
    LatticeOperator out(a.dom_, a.cod_);
    for (std::size_t i = 0; i < a.rows_.size(); ++i) {
      auto& row = out.rows_[i];
      auto ia = a.rows_[i].begin(), ea = a.rows_[i].end();
      auto ib = b.rows_[i].begin(), eb = b.rows_[i].end();
      while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
          row.emplace_back(*ia++);
        } else if (ia == ea || ib->first < ia->first) {
          row.emplace_back(ib->first, subtract ? -ib->second : ib->second);
          ++ib;
        } else {
          Scalar v = subtract ? ia->second - ib->second : ia->second + ib->second;
          if (!v.is_zero()) row.emplace_back(ia->first, std::move(v));
          ++ia;
          ++ib;
        }
      }
    }
    return out;
  }

  TriLattice dom_, cod_;
  std::vector<std::vector<Entry>> rows_;
};

}  // namespace bikraw
