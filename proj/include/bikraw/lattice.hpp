#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bikraw {

/// Triangular lattice T_N = {(x,y) in Z^2, x,y >= 0, x+y <= N} with the
/// canonical enumeration: ascending x+y, then ascending x. The enumeration is
/// normative for file output.
class TriLattice {
 public:
  explicit TriLattice(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("TriLattice: N must be nonnegative, got " + std::to_string(n));
    pts_.reserve(size());
    for (int d = 0; d <= n; ++d)
      for (int x = 0; x <= d; ++x) pts_.emplace_back(x, d - x);
  }

  int n() const { return n_; }
  std::size_t size() const { return static_cast<std::size_t>(n_ + 1) * (n_ + 2) / 2; }
  const std::vector<std::pair<int, int>>& points() const { return pts_; }
  std::pair<int, int> point(std::size_t i) const { return pts_[i]; }

  bool contains(int x, int y) const { return x >= 0 && y >= 0 && x + y <= n_; }

  std::size_t index_of(int x, int y) const {
    if (!contains(x, y))
      throw std::out_of_range("TriLattice: point (" + std::to_string(x) + "," + std::to_string(y) +
                              ") outside T_" + std::to_string(n_));
    int d = x + y;
    return static_cast<std::size_t>(d) * (d + 1) / 2 + static_cast<std::size_t>(x);
  }

  friend bool operator==(const TriLattice& a, const TriLattice& b) { return a.n_ == b.n_; }

  std::string describe() const { return "T_" + std::to_string(n_) + "(size " + std::to_string(size()) + ")"; }

 private:
  int n_;
  std::vector<std::pair<int, int>> pts_;
};

}  // namespace bikraw
