#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace rmhd {

/// Uniform grid on [0, L1] x T (half-strip, nodes at both x1 ends) or on a
/// fully periodic box when periodic1 is set (then h1 = L1/n1, no duplicate
/// node). x2 always spans the unit circle with n2 nodes.
struct Grid {
  double L1 = 10.0;
  int n1 = 41;
  int n2 = 32;
  double T = 1.0;
  double cfl = 0.4;  ///< dt = cfl * min(h1, h2) against unit signal speed
  bool periodic1 = false;

  double h1() const { return L1 / (periodic1 ? n1 : n1 - 1); }
  double h2() const { return 1.0 / n2; }
  double x1(int i) const { return i * h1(); }
  double x2(int j) const { return j * h2(); }

  int steps() const {
    const double dt_max = cfl * std::min(h1(), h2());
    return std::max(1, static_cast<int>(std::ceil(T / dt_max - 1e-12)));
  }
  double dt() const { return T / steps(); }

  void validate() const {
    if (n1 < 5 || n2 < 5) throw std::invalid_argument("Grid: need n1, n2 >= 5");
    if (!(L1 > 0.0) || !(T > 0.0)) throw std::invalid_argument("Grid: L1, T > 0");
    if (!(cfl > 0.0) || cfl > 0.5)
      throw std::invalid_argument("Grid: CFL must lie in (0, 1/2]");
  }
};

/// Dense nodal field with nc components, x2-periodic indexing.
class Field {
 public:
  Field() = default;
  Field(int n1, int n2, int nc)
      : n1_(n1), n2_(n2), nc_(nc), data_(static_cast<size_t>(n1) * n2 * nc, 0.0) {}

  int n1() const { return n1_; }
  int n2() const { return n2_; }
  int nc() const { return nc_; }

  double& operator()(int i, int j, int c) { return data_[idx(i, j, c)]; }
  double operator()(int i, int j, int c) const { return data_[idx(i, j, c)]; }

  std::vector<double>& raw() { return data_; }
  const std::vector<double>& raw() const { return data_; }

  void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

  template <class Vec>
  void set_vec(int i, int j, const Vec& v) {
    for (int c = 0; c < nc_; ++c) data_[idx(i, j, c)] = v[c];
  }

 private:
  size_t idx(int i, int j, int c) const {
    j = ((j % n2_) + n2_) % n2_;
    return (static_cast<size_t>(i) * n2_ + j) * nc_ + c;
  }
  int n1_ = 0, n2_ = 0, nc_ = 0;
  std::vector<double> data_;
};

}  // namespace rmhd
