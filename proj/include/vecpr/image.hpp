#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace vecpr {

using cplx = std::complex<double>;

/// Square n-by-n grid of values, row-major. The atom of all fields,
/// spectra, intensity images and pupil maps in this library.
template <typename T>
class Grid2D {
 public:
  Grid2D() = default;

  explicit Grid2D(int n, T fill = T{}) : n_(n), data_(static_cast<size_t>(n) * n, fill) {
    if (n < 2) throw std::invalid_argument("Grid2D: n must be >= 2");
  }

  int n() const { return n_; }
  bool empty() const { return n_ == 0; }
  size_t size() const { return data_.size(); }

  T& operator()(int row, int col) { return data_[static_cast<size_t>(row) * n_ + col]; }
  const T& operator()(int row, int col) const { return data_[static_cast<size_t>(row) * n_ + col]; }

  T& operator[](size_t i) { return data_[i]; }
  const T& operator[](size_t i) const { return data_[i]; }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  bool same_shape(const Grid2D& other) const { return n_ == other.n_; }

 private:
  int n_ = 0;
  std::vector<T> data_;
};

using ComplexImage = Grid2D<cplx>;
using RealImage = Grid2D<double>;
using MaskImage = Grid2D<unsigned char>;

inline double norm_sq(const ComplexImage& x) {
  double s = 0;
  for (const cplx& v : x) s += std::norm(v);
  return s;
}

inline double norm_sq(const RealImage& x) {
  double s = 0;
  for (double v : x) s += v * v;
  return s;
}

template <typename T>
double frob_norm(const Grid2D<T>& x) {
  return std::sqrt(norm_sq(x));
}

template <typename T>
bool all_finite(const Grid2D<T>& x) {
  for (const T& v : x) {
    if constexpr (std::is_same_v<T, cplx>) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    } else {
      if (!std::isfinite(static_cast<double>(v))) return false;
    }
  }
  return true;
}

inline double sum(const RealImage& x) {
  double s = 0;
  for (double v : x) s += v;
  return s;
}

/// Grid center used by the centered FFT convention and all pupil
/// coordinates: pixel (n/2, n/2) with integer division.
inline int grid_center(int n) { return n / 2; }

}  // namespace vecpr
