// Conservation-law definitions (linear advection, 2D Euler), exact
// solutions for verification, and the Rusanov common flux in both its
// spatial and space-time normal forms.
#pragma once

#include <array>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace stfr::physics {

constexpr int kMaxVars = 4;

class InadmissibleStateError : public std::runtime_error {
 public:
  explicit InadmissibleStateError(const std::string& what)
      : std::runtime_error(what) {}
};

// A hyperbolic conservation law in up to two space dimensions. Flux
// evaluators are pure; max_wavespeed_st bounds the spectral radius of the
// space-time normal flux Jacobian n_t I + n_x dF/dQ + n_y dG/dQ.
class ConservationLaw {
 public:
  virtual ~ConservationLaw() = default;
  virtual int n_vars() const = 0;
  virtual int dim() const = 0;
  virtual std::string name() const = 0;

  virtual void flux(const double* q, double* f, double* g) const = 0;
  virtual double max_wavespeed_st(const double* q,
                                  const std::array<double, 3>& nst) const = 0;

  virtual bool has_exact() const { return false; }
  virtual void exact(double x, double y, double t, double* q) const {
    throw std::runtime_error(name() + ": no exact solution configured");
  }
};

// q_t + c q_x = 0 with the sine profile q(x,0) = sin(2 pi x).
class Advection1D : public ConservationLaw {
 public:
  explicit Advection1D(double c) : c_(c) {}
  int n_vars() const override { return 1; }
  int dim() const override { return 1; }
  std::string name() const override { return "advection1d"; }
  void flux(const double* q, double* f, double* g) const override {
    f[0] = c_ * q[0];
    g[0] = 0.0;
  }
  double max_wavespeed_st(const double* q,
                          const std::array<double, 3>& nst) const override {
    (void)q;
    return std::abs(nst[0] + c_ * nst[1]);
  }
  bool has_exact() const override { return true; }
  void exact(double x, double y, double t, double* q) const override;
  double speed() const { return c_; }

 private:
  double c_;
};

// Scalar advection with velocity (cx, cy); exact solution is a translated
// initial profile (default: plane wave sin(2 pi (x + y))).
class Advection2D : public ConservationLaw {
 public:
  using Profile = std::function<double(double, double)>;
  Advection2D(double cx, double cy);
  Advection2D(double cx, double cy, Profile initial);
  int n_vars() const override { return 1; }
  int dim() const override { return 2; }
  std::string name() const override { return "advection2d"; }
  void flux(const double* q, double* f, double* g) const override {
    f[0] = cx_ * q[0];
    g[0] = cy_ * q[0];
  }
  double max_wavespeed_st(const double* q,
                          const std::array<double, 3>& nst) const override {
    (void)q;
    return std::abs(nst[0] + cx_ * nst[1] + cy_ * nst[2]);
  }
  bool has_exact() const override { return true; }
  void exact(double x, double y, double t, double* q) const override;
  double cx() const { return cx_; }
  double cy() const { return cy_; }

 private:
  double cx_, cy_;
  Profile initial_;
};

struct VortexParams {
  double beta = 5.0;        // vortex strength parameter
  double x0 = 5.0, y0 = 5.0;
  double u_inf = 1.0, v_inf = 1.0;
  double domain = 10.0;     // periodic wrap length (0 disables wrapping)
};

// 2D Euler with the perfect-gas closure. Optional exact solutions: uniform
// freestream or the isentropic vortex.
class Euler2D : public ConservationLaw {
 public:
  explicit Euler2D(double gamma = 1.4) : gamma_(gamma) {}
  int n_vars() const override { return 4; }
  int dim() const override { return 2; }
  std::string name() const override { return "euler2d"; }
  void flux(const double* q, double* f, double* g) const override;
  double max_wavespeed_st(const double* q,
                          const std::array<double, 3>& nst) const override;
  double gamma() const { return gamma_; }
  double pressure(const double* q) const;

  void set_vortex(const VortexParams& vp) { vortex_ = vp; has_exact_ = true; }
  void set_freestream(const std::array<double, 4>& prim_rho_u_v_p);
  bool has_exact() const override { return has_exact_; }
  void exact(double x, double y, double t, double* q) const override;

 private:
  double gamma_;
  bool has_exact_ = false;
  bool freestream_mode_ = false;
  VortexParams vortex_;
  std::array<double, 4> free_prim_{1.0, 0.0, 0.0, 1.0};
};

// Primitive (rho, u, v, p) -> conserved.
std::array<double, 4> euler_conserved(double rho, double u, double v, double p,
                                      double gamma);

// Rusanov common flux for the space-time normal nst = (n_t, n_x, n_y):
//   0.5 (Fn(qL) + Fn(qR)) - 0.5 lambda (qR - qL),
// with Fn = n_t q + n_x F + n_y G and lambda the larger of the two states'
// space-time wavespeed bounds. The result is single-valued: flipping the
// normal and swapping the states negates it exactly.
void rusanov_spacetime(const ConservationLaw& law, const double* ql,
                       const double* qr, const std::array<double, 3>& nst,
                       double* out);

// Purely spatial normal form (stationary-face special case, n_t = 0).
void rusanov_flux(const ConservationLaw& law, const double* ql,
                  const double* qr, const std::array<double, 2>& n,
                  double* out);

// Causal common value on temporal faces: information flows forward in time.
inline const double* temporal_common_flux(const double* q_below,
                                          const double* q_above) {
  (void)q_above;
  return q_below;
}

}  // namespace stfr::physics
