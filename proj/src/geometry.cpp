#include "stfr/geometry.hpp"

#include <cmath>
#include <sstream>

namespace stfr::geometry {

using basis::lagrange_gll_cached;

DegenerateElementError::DegenerateElementError(int elem_id, double tau,
                                               double xi, double eta,
                                               double detj)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "degenerate space-time element " << elem_id << ": |J| = " << detj
           << " at (tau,xi,eta) = (" << tau << ", " << xi << ", " << eta
           << ")";
        return os.str();
      }()) {}

GeomEval geometry_maps(const SpaceTimeElement& elem, double tau, double xi,
                       double eta) {
  const auto& bx = lagrange_gll_cached(elem.l + 1);
  const auto& bt = lagrange_gll_cached(elem.n + 1);
  auto px = bx.eval(xi), dpx = bx.eval_deriv(xi);
  auto py = bx.eval(eta), dpy = bx.eval_deriv(eta);
  auto pt = bt.eval(tau), dpt = bt.eval_deriv(tau);

  GeomEval g;
  for (int q = 0; q <= elem.n; ++q) {
    g.t += pt[q] * elem.t_nodes[q];
    g.t_tau += dpt[q] * elem.t_nodes[q];
  }
  for (int i = 0; i <= elem.l; ++i) {
    for (int j = 0; j <= elem.l; ++j) {
      double vx = 0, vy = 0, vtx = 0, vty = 0;
      for (int q = 0; q <= elem.n; ++q) {
        vx += pt[q] * elem.xy(i, j, q, 0);
        vy += pt[q] * elem.xy(i, j, q, 1);
        vtx += dpt[q] * elem.xy(i, j, q, 0);
        vty += dpt[q] * elem.xy(i, j, q, 1);
      }
      double pij = px[i] * py[j];
      double dpi = dpx[i] * py[j];
      double dpj = px[i] * dpy[j];
      g.x += pij * vx;
      g.y += pij * vy;
      g.x_xi += dpi * vx;
      g.y_xi += dpi * vy;
      g.x_eta += dpj * vx;
      g.y_eta += dpj * vy;
      g.x_tau += pij * vtx;
      g.y_tau += pij * vty;
    }
  }
  return g;
}

MetricsST metrics_from_geom(const GeomEval& g, const SpaceTimeElement& elem,
                            double tau, double xi, double eta) {
  MetricsST m;
  m.jt_tau_t = g.x_xi * g.y_eta - g.x_eta * g.y_xi;
  m.detJ = g.t_tau * m.jt_tau_t;
  if (!(m.detJ > 0.0))
    throw DegenerateElementError(elem.id, tau, xi, eta, m.detJ);
  m.jt_xi_t = -g.x_tau * g.y_eta + g.y_tau * g.x_eta;
  m.jt_eta_t = g.x_tau * g.y_xi - g.y_tau * g.x_xi;
  m.jt_xi_x = g.t_tau * g.y_eta;
  m.jt_xi_y = -g.t_tau * g.x_eta;
  m.jt_eta_x = -g.t_tau * g.y_xi;
  m.jt_eta_y = g.t_tau * g.x_xi;
  return m;
}

MetricsST metrics_nonconservative(const SpaceTimeElement& elem, double tau,
                                  double xi, double eta) {
  return metrics_from_geom(geometry_maps(elem, tau, xi, eta), elem, tau, xi,
                           eta);
}

std::array<double, 3> gcl_residual(const SpaceTimeElement& elem, int alpha,
                                   int beta) {
  if (alpha < 1 || beta < 1)
    throw std::invalid_argument("gcl_residual: degrees must be >= 1");
  const int ns = alpha + 1, nt = beta + 1;
  const auto& qs = basis::gauss_legendre_cached(ns);
  const auto& qt = basis::gauss_legendre_cached(nt);
  const auto& bs = basis::lagrange_gl_cached(ns);
  const auto& bt = basis::lagrange_gl_cached(nt);

  // Metric samples on the tensor grid; layout (xi, eta, tau).
  Tensor3 u_tau_t(ns, ns, nt), u_xi_t(ns, ns, nt), u_eta_t(ns, ns, nt);
  Tensor3 u_xi_x(ns, ns, nt), u_xi_y(ns, ns, nt);
  Tensor3 u_eta_x(ns, ns, nt), u_eta_y(ns, ns, nt);
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j)
      for (int q = 0; q < nt; ++q) {
        auto m = metrics_nonconservative(elem, qt.points[q], qs.points[i],
                                         qs.points[j]);
        u_tau_t(i, j, q) = m.jt_tau_t;
        u_xi_t(i, j, q) = m.jt_xi_t;
        u_eta_t(i, j, q) = m.jt_eta_t;
        u_xi_x(i, j, q) = m.jt_xi_x;
        u_xi_y(i, j, q) = m.jt_xi_y;
        u_eta_x(i, j, q) = m.jt_eta_x;
        u_eta_y(i, j, q) = m.jt_eta_y;
      }

  auto d_xi = [&](const Tensor3& u, int i, int j, int q) {
    double s = 0;
    for (int c = 0; c < ns; ++c) s += bs.diff_matrix(i, c) * u(c, j, q);
    return s;
  };
  auto d_eta = [&](const Tensor3& u, int i, int j, int q) {
    double s = 0;
    for (int c = 0; c < ns; ++c) s += bs.diff_matrix(j, c) * u(i, c, q);
    return s;
  };
  auto d_tau = [&](const Tensor3& u, int i, int j, int q) {
    double s = 0;
    for (int c = 0; c < nt; ++c) s += bt.diff_matrix(q, c) * u(i, j, c);
    return s;
  };

  std::array<double, 3> r{0.0, 0.0, 0.0};
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j)
      for (int q = 0; q < nt; ++q) {
        // Row t: d_tau(|J|tau_t) + d_xi(|J|xi_t) + d_eta(|J|eta_t)
        double rt = d_tau(u_tau_t, i, j, q) + d_xi(u_xi_t, i, j, q) +
                    d_eta(u_eta_t, i, j, q);
        // Rows x and y have no tau term since |J|tau_x = |J|tau_y = 0.
        double rx = d_xi(u_xi_x, i, j, q) + d_eta(u_eta_x, i, j, q);
        double ry = d_xi(u_xi_y, i, j, q) + d_eta(u_eta_y, i, j, q);
        r[0] = std::max(r[0], std::abs(rt));
        r[1] = std::max(r[1], std::abs(rx));
        r[2] = std::max(r[2], std::abs(ry));
      }
  return r;
}

const char* to_string(SchemeLabel s) {
  switch (s) {
    case SchemeLabel::S: return "S";
    case SchemeLabel::P: return "P";
    case SchemeLabel::V: return "V";
  }
  return "?";
}

SchemeLabel classify_spatial(int k, int l, int sp_space) {
  if (sp_space >= k + 2 * l) return SchemeLabel::S;
  if (sp_space >= std::max(2 * l, k) + 1) return SchemeLabel::P;
  return SchemeLabel::V;
}

SchemeLabel classify_temporal(int m, int n, int sp_time) {
  if (sp_time >= m + 3 * n) return SchemeLabel::S;
  if (sp_time >= std::max(2 * n, m) + 1) return SchemeLabel::P;
  return SchemeLabel::V;
}

SchemeLabel classify_scheme(int k, int m, int l, int n, int sp_space,
                            int sp_time) {
  SchemeLabel a = classify_spatial(k, l, sp_space);
  SchemeLabel b = classify_temporal(m, n, sp_time);
  return std::max(a, b, [](SchemeLabel u, SchemeLabel v) {
    return static_cast<int>(u) < static_cast<int>(v);
  });
}

std::array<double, 3> face_point(Face f, double a, double b) {
  switch (f) {
    case Face::TauMinus: return {-1.0, a, b};  // (xi, eta) in-face
    case Face::TauPlus: return {1.0, a, b};
    case Face::XiMinus: return {a, -1.0, b};  // (tau, eta)
    case Face::XiPlus: return {a, 1.0, b};
    case Face::EtaMinus: return {a, b, -1.0};  // (tau, xi)
    case Face::EtaPlus: return {a, b, 1.0};
  }
  return {0, 0, 0};
}

FaceGeom face_geometry(const SpaceTimeElement& elem, Face f, double a,
                       double b) {
  auto pt = face_point(f, a, b);
  auto g = geometry_maps(elem, pt[0], pt[1], pt[2]);
  auto m = metrics_from_geom(g, elem, pt[0], pt[1], pt[2]);

  std::array<double, 3> grad{};  // |J| grad_st of the face coordinate
  double side = 0.0;
  switch (f) {
    case Face::TauMinus:
    case Face::TauPlus:
      grad = {m.jt_tau_t, 0.0, 0.0};
      side = (f == Face::TauPlus) ? 1.0 : -1.0;
      break;
    case Face::XiMinus:
    case Face::XiPlus:
      grad = {m.jt_xi_t, m.jt_xi_x, m.jt_xi_y};
      side = (f == Face::XiPlus) ? 1.0 : -1.0;
      break;
    case Face::EtaMinus:
    case Face::EtaPlus:
      grad = {m.jt_eta_t, m.jt_eta_x, m.jt_eta_y};
      side = (f == Face::EtaPlus) ? 1.0 : -1.0;
      break;
  }
  double norm =
      std::sqrt(grad[0] * grad[0] + grad[1] * grad[1] + grad[2] * grad[2]);
  FaceGeom out;
  // With |J| > 0, sign(n_st . grad_st) is + on plus faces and - on minus
  // faces, and |J| ||grad_st|| equals the norm of the scaled gradient.
  out.scaling = side * norm;
  for (int c = 0; c < 3; ++c) out.normal[c] = side * grad[c] / norm;
  out.x = g.x;
  out.y = g.y;
  out.t = g.t;
  return out;
}

double face_flux_scaling(const SpaceTimeElement& elem, Face f, double a,
                         double b) {
  return face_geometry(elem, f, a, b).scaling;
}

}  // namespace stfr::geometry
