#include "stfr/physics.hpp"

#include <cmath>
#include <sstream>

namespace stfr::physics {

void Advection1D::exact(double x, double y, double t, double* q) const {
  (void)y;
  q[0] = std::sin(2.0 * M_PI * (x - c_ * t));
}

Advection2D::Advection2D(double cx, double cy)
    : cx_(cx), cy_(cy), initial_([](double x, double y) {
        return std::sin(2.0 * M_PI * (x + y));
      }) {}

Advection2D::Advection2D(double cx, double cy, Profile initial)
    : cx_(cx), cy_(cy), initial_(std::move(initial)) {}

void Advection2D::exact(double x, double y, double t, double* q) const {
  q[0] = initial_(x - cx_ * t, y - cy_ * t);
}

double Euler2D::pressure(const double* q) const {
  double rho = q[0];
  double ke = 0.5 * (q[1] * q[1] + q[2] * q[2]) / rho;
  return (gamma_ - 1.0) * (q[3] - ke);
}

namespace {
void check_admissible(const double* q, double p, const char* where) {
  if (!(q[0] > 0.0) || !(p > 0.0)) {
    std::ostringstream os;
    os << where << ": inadmissible state rho = " << q[0] << ", p = " << p;
    throw InadmissibleStateError(os.str());
  }
}
}  // namespace

void Euler2D::flux(const double* q, double* f, double* g) const {
  double rho = q[0];
  double u = q[1] / rho, v = q[2] / rho, E = q[3];
  double p = pressure(q);
  check_admissible(q, p, "euler_flux");
  f[0] = q[1];
  f[1] = q[1] * u + p;
  f[2] = q[1] * v;
  f[3] = (E + p) * u;
  g[0] = q[2];
  g[1] = q[2] * u;
  g[2] = q[2] * v + p;
  g[3] = (E + p) * v;
}

double Euler2D::max_wavespeed_st(const double* q,
                                 const std::array<double, 3>& nst) const {
  double rho = q[0];
  double u = q[1] / rho, v = q[2] / rho;
  double p = pressure(q);
  check_admissible(q, p, "euler_wavespeed");
  double c = std::sqrt(gamma_ * p / rho);
  double sn = std::hypot(nst[1], nst[2]);
  return std::abs(nst[0] + u * nst[1] + v * nst[2]) + c * sn;
}

std::array<double, 4> euler_conserved(double rho, double u, double v, double p,
                                      double gamma) {
  double E = p / (gamma - 1.0) + 0.5 * rho * (u * u + v * v);
  return {rho, rho * u, rho * v, E};
}

void Euler2D::set_freestream(const std::array<double, 4>& prim) {
  free_prim_ = prim;
  freestream_mode_ = true;
  has_exact_ = true;
}

void Euler2D::exact(double x, double y, double t, double* q) const {
  if (!has_exact_) ConservationLaw::exact(x, y, t, q);
  if (freestream_mode_) {
    auto c = euler_conserved(free_prim_[0], free_prim_[1], free_prim_[2],
                             free_prim_[3], gamma_);
    for (int v = 0; v < 4; ++v) q[v] = c[v];
    return;
  }
  const auto& vp = vortex_;
  double dx = x - vp.x0 - vp.u_inf * t;
  double dy = y - vp.y0 - vp.v_inf * t;
  if (vp.domain > 0.0) {
    dx -= vp.domain * std::round(dx / vp.domain);
    dy -= vp.domain * std::round(dy / vp.domain);
  }
  double r2 = dx * dx + dy * dy;
  double ex = std::exp(0.5 * (1.0 - r2));
  double du = vp.beta / (2.0 * M_PI) * ex * (-dy);
  double dv = vp.beta / (2.0 * M_PI) * ex * dx;
  double dT = -(gamma_ - 1.0) * vp.beta * vp.beta /
              (8.0 * gamma_ * M_PI * M_PI) * std::exp(1.0 - r2);
  double T = 1.0 + dT;
  double rho = std::pow(T, 1.0 / (gamma_ - 1.0));
  double p = std::pow(T, gamma_ / (gamma_ - 1.0));
  auto c = euler_conserved(rho, vp.u_inf + du, vp.v_inf + dv, p, gamma_);
  for (int v = 0; v < 4; ++v) q[v] = c[v];
}

void rusanov_spacetime(const ConservationLaw& law, const double* ql,
                       const double* qr, const std::array<double, 3>& nst,
                       double* out) {
  const int nv = law.n_vars();
  double fl[kMaxVars], gl[kMaxVars], fr[kMaxVars], gr[kMaxVars];
  law.flux(ql, fl, gl);
  law.flux(qr, fr, gr);
  double lam = std::max(law.max_wavespeed_st(ql, nst),
                        law.max_wavespeed_st(qr, nst));
  for (int v = 0; v < nv; ++v) {
    double fn_l = nst[0] * ql[v] + nst[1] * fl[v] + nst[2] * gl[v];
    double fn_r = nst[0] * qr[v] + nst[1] * fr[v] + nst[2] * gr[v];
    out[v] = 0.5 * (fn_l + fn_r) - 0.5 * lam * (qr[v] - ql[v]);
  }
}

void rusanov_flux(const ConservationLaw& law, const double* ql,
                  const double* qr, const std::array<double, 2>& n,
                  double* out) {
  rusanov_spacetime(law, ql, qr, {0.0, n[0], n[1]}, out);
}

}  // namespace stfr::physics
