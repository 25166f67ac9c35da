// One-dimensional polynomial machinery: Gauss quadrature, Lagrange
// interpolation/differentiation, Radau correction functions, and the
// nodal L2 projection / filtering operators built on top of them.
#pragma once

#include <array>
#include <vector>

#include "stfr/tensor.hpp"

namespace stfr::basis {

// Quadrature rule on [-1,1]. Points strictly increasing, weights positive.
struct Quadrature1D {
  std::vector<double> points;
  std::vector<double> weights;
  int npts() const { return static_cast<int>(points.size()); }
};

// Lagrange basis on a distinct node set in [-1,1].
//   diff_matrix(a,b) = phi_b'(node_a)
//   boundary rows hold phi_b(-1) and phi_b(+1).
struct LagrangeBasis1D {
  std::vector<double> nodes;
  std::vector<double> bary;  // barycentric weights
  Matrix diff_matrix;
  std::vector<double> at_left;   // phi_b(-1)
  std::vector<double> at_right;  // phi_b(+1)

  int npts() const { return static_cast<int>(nodes.size()); }

  // phi_b(x) for all b.
  std::vector<double> eval(double x) const;
  // phi_b'(x) for all b.
  std::vector<double> eval_deriv(double x) const;
  // Interpolate nodal values to x.
  double interpolate(const std::vector<double>& vals, double x) const;
};

// Radau correction functions of a given degree, tabulated at a node set.
// g_L is the right Radau polynomial; g_R(s) = g_L(-s).
struct CorrectionFunctions {
  int degree = 0;
  std::vector<double> gl_deriv_at;  // g_L'(node_a)
  std::vector<double> gr_deriv_at;  // g_R'(node_a)
  double gl_left = 0, gl_right = 0, gr_left = 0, gr_right = 0;
};

Quadrature1D gauss_legendre(int npts);
Quadrature1D gauss_lobatto(int npts);

// Cached variants; the returned references stay valid for the program
// lifetime and are safe to share across threads.
const Quadrature1D& gauss_legendre_cached(int npts);
const Quadrature1D& gauss_lobatto_cached(int npts);
const LagrangeBasis1D& lagrange_gl_cached(int npts);
const LagrangeBasis1D& lagrange_gll_cached(int npts);

LagrangeBasis1D lagrange_basis(const std::vector<double>& nodes);

CorrectionFunctions radau_correction(int degree,
                                     const std::vector<double>& eval_nodes);

// Legendre polynomial value and derivative at x (used by quadrature and the
// Radau correction functions).
double legendre(int n, double x);
double legendre_deriv(int n, double x);
// Right Radau polynomial of the given degree and its derivative.
double radau_right(int degree, double x);
double radau_right_deriv(int degree, double x);

// Pairing of a high nodal space with a lower projection space, per
// dimension, plus the blending parameter theta. Both spaces live on
// Gauss-Legendre nodes. Counts are node counts (degree + 1); the low count
// may equal the high count in a dimension, in which case the projection is
// the identity along it.
class ProjectionPair {
 public:
  ProjectionPair(std::array<int, 3> high_counts, std::array<int, 3> low_counts,
                 double theta);

  const std::array<int, 3>& high_counts() const { return high_; }
  const std::array<int, 3>& low_counts() const { return low_; }
  double theta() const { return theta_; }

  // Nodal L2 projection onto the low space: returns low-space coefficients.
  Tensor3 project(const Tensor3& values_high) const;
  // Evaluate a low-space field at the high nodes.
  Tensor3 lift(const Tensor3& values_low) const;
  // theta-blend of the field with its projection, evaluated at high nodes.
  Tensor3 filter(const Tensor3& values_high) const;
  // In-place filter over an interleaved (n0,n1,n2,nvar) block.
  void filter_inplace(Tensor4& field) const;
  // Energy of (field - projection) via the high-space quadrature.
  double difference_energy(const Tensor3& values_high) const;

 private:
  std::array<int, 3> high_, low_;
  double theta_;
  std::array<Matrix, 3> proj_;  // low x high, per dimension
  std::array<Matrix, 3> lift_;  // high x low
  std::array<const Quadrature1D*, 3> quad_high_;
};

Tensor3 project_field(const Tensor3& values_high, const ProjectionPair& pair);
Tensor3 filter_field(const Tensor3& values_high, const ProjectionPair& pair);
double difference_energy(const Tensor3& values_high,
                         const ProjectionPair& pair);

}  // namespace stfr::basis
