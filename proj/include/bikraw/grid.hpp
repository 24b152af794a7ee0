#pragma once

#include <stdexcept>
#include <vector>

#include "bikraw/lattice.hpp"
#include "bikraw/rational.hpp"

namespace bikraw {

/// Scalar-valued function on a TriLattice, stored in canonical order.
template <class Fd>
struct GridFunction {
  using Scalar = typename Fd::Scalar;
  using Real = typename Fd::Real;

  TriLattice lattice;
  std::vector<Scalar> values;

  explicit GridFunction(const TriLattice& lat) : lattice(lat), values(lat.size()) {}
  GridFunction(const TriLattice& lat, std::vector<Scalar> vals) : lattice(lat), values(std::move(vals)) {
    if (values.size() != lattice.size()) throw std::invalid_argument("GridFunction: value count != lattice size");
  }

  const Scalar& at(int x, int y) const { return values[lattice.index_of(x, y)]; }
  Scalar& at(int x, int y) { return values[lattice.index_of(x, y)]; }

  Real max_abs() const {
    Real m(0);
    for (const auto& v : values) {
      Real a = abs_max(v);
      if (m < a) m = a;
    }
    return m;
  }

  friend GridFunction operator-(const GridFunction& a, const GridFunction& b) {
    if (!(a.lattice == b.lattice))
      throw std::invalid_argument("GridFunction: lattice mismatch " + a.lattice.describe() + " vs " +
                                  b.lattice.describe());
    GridFunction r(a.lattice);
    for (std::size_t i = 0; i < a.values.size(); ++i) r.values[i] = a.values[i] - b.values[i];
    return r;
  }

  GridFunction scaled(const Scalar& s) const {
    GridFunction r(lattice);
    for (std::size_t i = 0; i < values.size(); ++i) r.values[i] = s * values[i];
    return r;
  }
};

/// Max-abs distance between two grid functions on the same lattice.
template <class Fd>
typename Fd::Real grid_residual(const GridFunction<Fd>& a, const GridFunction<Fd>& b) {
  return (a - b).max_abs();
}

}  // namespace bikraw
