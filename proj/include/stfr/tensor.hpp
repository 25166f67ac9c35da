// Minimal dense tensor containers used across the solver. Row-major,
// contiguous, last index fastest.
#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace stfr {

struct Tensor3 {
  int n0 = 0, n1 = 0, n2 = 0;
  std::vector<double> a;

  Tensor3() = default;
  Tensor3(int a0, int a1, int a2, double fill = 0.0)
      : n0(a0), n1(a1), n2(a2), a(static_cast<size_t>(a0) * a1 * a2, fill) {}

  double& operator()(int i, int j, int k) {
    return a[(static_cast<size_t>(i) * n1 + j) * n2 + k];
  }
  double operator()(int i, int j, int k) const {
    return a[(static_cast<size_t>(i) * n1 + j) * n2 + k];
  }
  size_t size() const { return a.size(); }
  bool same_shape(const Tensor3& o) const {
    return n0 == o.n0 && n1 == o.n1 && n2 == o.n2;
  }
};

struct Tensor4 {
  int n0 = 0, n1 = 0, n2 = 0, n3 = 0;
  std::vector<double> a;

  Tensor4() = default;
  Tensor4(int a0, int a1, int a2, int a3, double fill = 0.0)
      : n0(a0), n1(a1), n2(a2), n3(a3),
        a(static_cast<size_t>(a0) * a1 * a2 * a3, fill) {}

  double& operator()(int i, int j, int k, int v) {
    return a[((static_cast<size_t>(i) * n1 + j) * n2 + k) * n3 + v];
  }
  double operator()(int i, int j, int k, int v) const {
    return a[((static_cast<size_t>(i) * n1 + j) * n2 + k) * n3 + v];
  }
  double* ptr(int i, int j, int k) {
    return &a[((static_cast<size_t>(i) * n1 + j) * n2 + k) * n3];
  }
  const double* ptr(int i, int j, int k) const {
    return &a[((static_cast<size_t>(i) * n1 + j) * n2 + k) * n3];
  }
  size_t size() const { return a.size(); }
};

// Dense matrix, row-major. Small sizes only (basis operators).
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(int r, int c, double fill = 0.0)
      : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {}

  double& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  double operator()(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }
  const double* row(int i) const { return &a[static_cast<size_t>(i) * cols]; }
};

}  // namespace stfr
