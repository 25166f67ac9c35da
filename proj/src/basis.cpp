#include "stfr/basis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace stfr::basis {

double legendre(int n, double x) {
  if (n == 0) return 1.0;
  if (n == 1) return x;
  double pm = 1.0, p = x;
  for (int j = 1; j < n; ++j) {
    double pn = ((2.0 * j + 1.0) * x * p - j * pm) / (j + 1.0);
    pm = p;
    p = pn;
  }
  return p;
}

double legendre_deriv(int n, double x) {
  if (n == 0) return 0.0;
  if (x == 1.0 || x == -1.0) {
    // P_n'(+-1) = (+-1)^(n-1) n(n+1)/2
    double s = (n % 2 == 0) ? ((x > 0) ? 1.0 : -1.0) : 1.0;
    return s * 0.5 * n * (n + 1.0);
  }
  // (1-x^2) P_n' = n (P_{n-1} - x P_n)
  return n * (legendre(n - 1, x) - x * legendre(n, x)) / (1.0 - x * x);
}

Quadrature1D gauss_legendre(int npts) {
  if (npts < 1) throw std::invalid_argument("gauss_legendre: npts must be >= 1");
  Quadrature1D q;
  q.points.resize(npts);
  q.weights.resize(npts);
  const int n = npts;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev initial guess, refined by Newton iteration on P_n.
    double x = -std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double f = legendre(n, x);
      double df = legendre_deriv(n, x);
      double dx = f / df;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double dp = legendre_deriv(n, x);
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    q.points[i] = x;
    q.weights[i] = w;
    q.points[n - 1 - i] = -x;
    q.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) q.points[n / 2] = 0.0;
  return q;
}

Quadrature1D gauss_lobatto(int npts) {
  if (npts < 2) throw std::invalid_argument("gauss_lobatto: npts must be >= 2");
  Quadrature1D q;
  const int n = npts - 1;  // polynomial order N; interior nodes are roots of P_N'
  q.points.resize(npts);
  q.weights.resize(npts);
  q.points.front() = -1.0;
  q.points.back() = 1.0;
  for (int i = 1; i < npts - 1; ++i) {
    // Chebyshev-Lobatto initial guess, refined by Newton iteration on P_N'.
    double x = -std::cos(M_PI * i / n);
    for (int it = 0; it < 100; ++it) {
      double f = legendre_deriv(n, x);
      // (1-x^2) P_N'' = 2x P_N' - N(N+1) P_N
      double df = (2.0 * x * f - n * (n + 1.0) * legendre(n, x)) / (1.0 - x * x);
      double dx = f / df;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    q.points[i] = x;
  }
  std::sort(q.points.begin(), q.points.end());
  // Enforce the symmetry of the rule exactly.
  for (int i = 0; i < npts / 2; ++i) {
    double x = 0.5 * (q.points[npts - 1 - i] - q.points[i]);
    q.points[i] = -x;
    q.points[npts - 1 - i] = x;
  }
  if (npts % 2 == 1) q.points[npts / 2] = 0.0;
  for (int i = 0; i < npts; ++i) {
    double p = legendre(n, q.points[i]);
    q.weights[i] = 2.0 / (n * (n + 1.0) * p * p);
  }
  return q;
}

std::vector<double> LagrangeBasis1D::eval(double x) const {
  const int n = npts();
  std::vector<double> out(n, 0.0);
  for (int j = 0; j < n; ++j) {
    if (x == nodes[j]) {
      out[j] = 1.0;
      return out;
    }
  }
  double l = 1.0;
  for (int j = 0; j < n; ++j) l *= (x - nodes[j]);
  for (int j = 0; j < n; ++j) out[j] = l * bary[j] / (x - nodes[j]);
  return out;
}

std::vector<double> LagrangeBasis1D::eval_deriv(double x) const {
  // Differentiate through the barycentric form; exact at nodes via the
  // differentiation-matrix identities.
  const int n = npts();
  std::vector<double> out(n, 0.0);
  for (int a = 0; a < n; ++a) {
    if (x == nodes[a]) {
      for (int b = 0; b < n; ++b) out[b] = diff_matrix(a, b);
      return out;
    }
  }
  // phi_j(x) = l(x) w_j / (x - x_j);  phi_j'(x) = phi_j(x) (l'/l - 1/(x-x_j))
  double l = 1.0, dl_over_l = 0.0;
  for (int j = 0; j < n; ++j) {
    l *= (x - nodes[j]);
    dl_over_l += 1.0 / (x - nodes[j]);
  }
  for (int j = 0; j < n; ++j) {
    double phi = l * bary[j] / (x - nodes[j]);
    out[j] = phi * (dl_over_l - 1.0 / (x - nodes[j]));
  }
  return out;
}

double LagrangeBasis1D::interpolate(const std::vector<double>& vals,
                                    double x) const {
  auto phi = eval(x);
  double s = 0.0;
  for (int j = 0; j < npts(); ++j) s += phi[j] * vals[j];
  return s;
}

LagrangeBasis1D lagrange_basis(const std::vector<double>& nodes) {
  const int n = static_cast<int>(nodes.size());
  if (n < 1) throw std::invalid_argument("lagrange_basis: empty node set");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (nodes[i] == nodes[j])
        throw std::invalid_argument("lagrange_basis: duplicate nodes");

  LagrangeBasis1D b;
  b.nodes = nodes;
  b.bary.assign(n, 1.0);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k)
      if (k != j) b.bary[j] /= (nodes[j] - nodes[k]);
  }
  b.diff_matrix = Matrix(n, n);
  for (int i = 0; i < n; ++i) {
    double rowsum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i != j) {
        double d = (b.bary[j] / b.bary[i]) / (nodes[i] - nodes[j]);
        b.diff_matrix(i, j) = d;
        rowsum += d;
      }
    }
    b.diff_matrix(i, i) = -rowsum;  // rows annihilate constants exactly
  }
  b.at_left = b.eval(-1.0);
  b.at_right = b.eval(1.0);
  return b;
}

double radau_right(int degree, double x) {
  // g_L(s) = (-1)^d / 2 * (P_d(s) - P_{d-1}(s)); g_L(-1)=1, g_L(1)=0.
  double sgn = (degree % 2 == 0) ? 1.0 : -1.0;
  return 0.5 * sgn * (legendre(degree, x) - legendre(degree - 1, x));
}

double radau_right_deriv(int degree, double x) {
  double sgn = (degree % 2 == 0) ? 1.0 : -1.0;
  return 0.5 * sgn * (legendre_deriv(degree, x) - legendre_deriv(degree - 1, x));
}

CorrectionFunctions radau_correction(int degree,
                                     const std::vector<double>& eval_nodes) {
  if (degree < 1)
    throw std::invalid_argument("radau_correction: degree must be >= 1");
  CorrectionFunctions c;
  c.degree = degree;
  c.gl_deriv_at.resize(eval_nodes.size());
  c.gr_deriv_at.resize(eval_nodes.size());
  for (size_t i = 0; i < eval_nodes.size(); ++i) {
    c.gl_deriv_at[i] = radau_right_deriv(degree, eval_nodes[i]);
    // g_R(s) = g_L(-s)  =>  g_R'(s) = -g_L'(-s)
    c.gr_deriv_at[i] = -radau_right_deriv(degree, -eval_nodes[i]);
  }
  c.gl_left = radau_right(degree, -1.0);
  c.gl_right = radau_right(degree, 1.0);
  c.gr_left = radau_right(degree, 1.0);
  c.gr_right = radau_right(degree, -1.0);
  return c;
}

namespace {

template <typename T, typename F>
const T& cached(std::map<int, T>& store, std::mutex& mtx, int key, F make) {
  std::lock_guard<std::mutex> lock(mtx);
  auto it = store.find(key);
  if (it == store.end()) it = store.emplace(key, make(key)).first;
  return it->second;
}

}  // namespace

const Quadrature1D& gauss_legendre_cached(int npts) {
  static std::map<int, Quadrature1D> store;
  static std::mutex mtx;
  return cached(store, mtx, npts, [](int n) { return gauss_legendre(n); });
}

const Quadrature1D& gauss_lobatto_cached(int npts) {
  static std::map<int, Quadrature1D> store;
  static std::mutex mtx;
  return cached(store, mtx, npts, [](int n) { return gauss_lobatto(n); });
}

const LagrangeBasis1D& lagrange_gl_cached(int npts) {
  static std::map<int, LagrangeBasis1D> store;
  static std::mutex mtx;
  return cached(store, mtx, npts, [](int n) {
    return lagrange_basis(gauss_legendre_cached(n).points);
  });
}

const LagrangeBasis1D& lagrange_gll_cached(int npts) {
  static std::map<int, LagrangeBasis1D> store;
  static std::mutex mtx;
  return cached(store, mtx, npts, [](int n) {
    return lagrange_basis(gauss_lobatto_cached(n).points);
  });
}

namespace {

// Apply a (rows x cols) operator along dimension `dim` of a tensor whose
// extent along that dimension is `cols`.
Tensor3 apply_dim(const Tensor3& in, const Matrix& op, int dim) {
  int d0 = in.n0, d1 = in.n1, d2 = in.n2;
  if (dim == 0) d0 = op.rows;
  if (dim == 1) d1 = op.rows;
  if (dim == 2) d2 = op.rows;
  Tensor3 out(d0, d1, d2);
  for (int i = 0; i < d0; ++i)
    for (int j = 0; j < d1; ++j)
      for (int k = 0; k < d2; ++k) {
        double s = 0.0;
        if (dim == 0)
          for (int c = 0; c < op.cols; ++c) s += op(i, c) * in(c, j, k);
        else if (dim == 1)
          for (int c = 0; c < op.cols; ++c) s += op(j, c) * in(i, c, k);
        else
          for (int c = 0; c < op.cols; ++c) s += op(k, c) * in(i, j, c);
        out(i, j, k) = s;
      }
  return out;
}

}  // namespace

ProjectionPair::ProjectionPair(std::array<int, 3> high_counts,
                               std::array<int, 3> low_counts, double theta)
    : high_(high_counts), low_(low_counts), theta_(theta) {
  if (theta < 0.0 || theta > 1.0)
    throw std::invalid_argument("ProjectionPair: theta must lie in [0,1]");
  for (int d = 0; d < 3; ++d) {
    if (low_[d] < 1 || high_[d] < 1 || low_[d] > high_[d])
      throw std::invalid_argument(
          "ProjectionPair: need 1 <= low count <= high count per dimension");
    const auto& qh = gauss_legendre_cached(high_[d]);
    const auto& low_basis = lagrange_gl_cached(low_[d]);
    const auto& ql = gauss_legendre_cached(low_[d]);
    quad_high_[d] = &qh;
    Matrix P(low_[d], high_[d]);
    Matrix L(high_[d], low_[d]);
    for (int i = 0; i < high_[d]; ++i) {
      auto phiL = low_basis.eval(qh.points[i]);
      for (int j = 0; j < low_[d]; ++j) {
        // Q^L_j = (1/w^L_j) sum_i Q^H_i phi^L_j(x^H_i) w^H_i
        P(j, i) = phiL[j] * qh.weights[i] / ql.weights[j];
        L(i, j) = phiL[j];
      }
    }
    proj_[d] = std::move(P);
    lift_[d] = std::move(L);
  }
}

Tensor3 ProjectionPair::project(const Tensor3& values_high) const {
  if (values_high.n0 != high_[0] || values_high.n1 != high_[1] ||
      values_high.n2 != high_[2])
    throw std::invalid_argument("project: field shape mismatch");
  Tensor3 t = apply_dim(values_high, proj_[0], 0);
  t = apply_dim(t, proj_[1], 1);
  return apply_dim(t, proj_[2], 2);
}

Tensor3 ProjectionPair::lift(const Tensor3& values_low) const {
  if (values_low.n0 != low_[0] || values_low.n1 != low_[1] ||
      values_low.n2 != low_[2])
    throw std::invalid_argument("lift: field shape mismatch");
  Tensor3 t = apply_dim(values_low, lift_[0], 0);
  t = apply_dim(t, lift_[1], 1);
  return apply_dim(t, lift_[2], 2);
}

Tensor3 ProjectionPair::filter(const Tensor3& values_high) const {
  Tensor3 low_at_high = lift(project(values_high));
  Tensor3 out = values_high;
  for (size_t i = 0; i < out.a.size(); ++i)
    out.a[i] = low_at_high.a[i] + theta_ * (values_high.a[i] - low_at_high.a[i]);
  return out;
}

void ProjectionPair::filter_inplace(Tensor4& field) const {
  if (field.n0 != high_[0] || field.n1 != high_[1] || field.n2 != high_[2])
    throw std::invalid_argument("filter_inplace: field shape mismatch");
  Tensor3 comp(high_[0], high_[1], high_[2]);
  for (int v = 0; v < field.n3; ++v) {
    for (int i = 0; i < field.n0; ++i)
      for (int j = 0; j < field.n1; ++j)
        for (int k = 0; k < field.n2; ++k) comp(i, j, k) = field(i, j, k, v);
    Tensor3 f = filter(comp);
    for (int i = 0; i < field.n0; ++i)
      for (int j = 0; j < field.n1; ++j)
        for (int k = 0; k < field.n2; ++k) field(i, j, k, v) = f(i, j, k);
  }
}

double ProjectionPair::difference_energy(const Tensor3& values_high) const {
  Tensor3 low_at_high = lift(project(values_high));
  double e = 0.0;
  for (int i = 0; i < high_[0]; ++i)
    for (int j = 0; j < high_[1]; ++j)
      for (int k = 0; k < high_[2]; ++k) {
        double d = values_high(i, j, k) - low_at_high(i, j, k);
        e += d * d * quad_high_[0]->weights[i] * quad_high_[1]->weights[j] *
             quad_high_[2]->weights[k];
      }
  return e;
}

Tensor3 project_field(const Tensor3& values_high, const ProjectionPair& pair) {
  return pair.project(values_high);
}

Tensor3 filter_field(const Tensor3& values_high, const ProjectionPair& pair) {
  return pair.filter(values_high);
}

double difference_energy(const Tensor3& values_high,
                         const ProjectionPair& pair) {
  return pair.difference_energy(values_high);
}

}  // namespace stfr::basis
