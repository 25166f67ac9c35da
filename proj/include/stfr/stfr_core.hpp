// The space-time flux reconstruction residual in its hybrid
// reference-physics form, explicit pseudo-time relaxation, slab solver,
// time marching, and the post-slab projection filter hook.
//
// Geometry factors (Jacobians, metric ratios, face normals and scalings)
// are evaluated exactly from the polynomial element maps at every solution
// and flux point; physical quantities are interpolated nodally. The
// correction terms act on differences of physical normal fluxes scaled into
// the reference domain, which is what keeps a constant state exactly
// constant on arbitrary moving curvilinear grids.
#pragma once

#include <array>
#include <functional>
#include <memory>
#include <vector>

#include "stfr/basis.hpp"
#include "stfr/geometry.hpp"
#include "stfr/meshmotion.hpp"
#include "stfr/physics.hpp"
#include "stfr/tensor.hpp"

namespace stfr::core {

struct FilterSettings {
  bool enabled = false;
  bool in_space = false;
  bool in_time = false;
  int space_points = 0;  // low-space nodal count per spatial dimension
  int time_points = 0;   // low-space temporal nodal count
  double theta = 1.0;
};

struct SolverConfig {
  int sp_x = 3, sp_y = 3, sp_t = 2;  // solution-point counts per axis
  double cfl = 0.5;
  double residual_tol = 1e-11;    // relative to the slab's initial residual
  double residual_floor = 1e-13;  // absolute convergence floor
  long max_iters = 2000000;
  int threads = 1;
  FilterSettings filter;
};

struct SolveReport {
  long iters = 0;
  double initial_residual = 0;
  double final_residual = 0;
  double wall_ms = 0;
  bool diverged = false;
};

class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(long iter, const std::string& what)
      : std::runtime_error(what), iteration(iter) {}
  long iteration;
};

// Conserved nodal values of every element of a slab; each element block has
// shape (sp_x, sp_y, sp_t, n_vars).
struct FieldSet {
  int nx = 0, ny = 0, nt = 0, nv = 0;
  std::vector<Tensor4> elems;

  static FieldSet zeros(int nelem, int nx, int ny, int nt, int nv);
  int n_elements() const { return static_cast<int>(elems.size()); }
};

// Per-element trace on the slab bottom/top: sp_x * sp_y * n_vars values.
using TraceSet = std::vector<std::vector<double>>;

// Cached per-axis operators for a solution-point configuration.
struct AxisOps {
  int n = 0;
  const basis::Quadrature1D* quad = nullptr;
  const basis::LagrangeBasis1D* lag = nullptr;
  std::vector<double> gl_deriv;  // correction derivative at nodes, degree n
  std::vector<double> gr_deriv;
};

struct SchemeOps {
  AxisOps x, y, t;
};

SchemeOps make_scheme_ops(int sp_x, int sp_y, int sp_t);

// Exact geometric data cached at the solution and flux points of one
// space-time element.
struct ElementMetrics {
  // Solution points, flattened (i * ny + j) * nt + q.
  std::vector<double> detJ;
  std::vector<double> r_tau_t;  // inverse-Jacobian ratios tau_t etc.
  std::vector<double> r_xi_t, r_xi_x, r_xi_y;
  std::vector<double> r_eta_t, r_eta_x, r_eta_y;

  struct FaceData {
    std::vector<double> scaling;                // signed reference scaling
    std::vector<std::array<double, 3>> normal;  // outward unit (t, x, y)
    std::vector<std::array<double, 3>> xyt;     // physical position and time
  };
  std::array<FaceData, 6> face;  // indexed by geometry::Face
};

// Everything needed to evaluate the residual of one slab.
class SlabContext {
 public:
  SlabContext(const meshmotion::Mesh2D& mesh,
              std::vector<geometry::SpaceTimeElement> slab,
              const physics::ConservationLaw& law, const SolverConfig& cfg);

  int n_elements() const { return static_cast<int>(slab_.size()); }
  const std::vector<geometry::SpaceTimeElement>& elements() const {
    return slab_;
  }
  const ElementMetrics& metrics(int e) const { return metrics_[e]; }
  const SchemeOps& ops() const { return ops_; }
  const SolverConfig& config() const { return cfg_; }
  const physics::ConservationLaw& law() const { return law_; }

  // Bottom-face states feeding the causal temporal flux.
  void set_bottom_from_exact();
  void set_bottom(TraceSet bottom) { bottom_ = std::move(bottom); }
  const TraceSet& bottom() const { return bottom_; }

  // Constant-in-time extension of the bottom state (slab initial guess).
  FieldSet field_from_bottom() const;
  // Exact solution sampled at the space-time solution points (tests).
  FieldSet field_from_exact() const;

  // Pointwise physical fluxes at solution points.
  void local_fluxes(const Tensor4& q, Tensor4& f, Tensor4& g) const;

  // Full STFR residual R = -(local divergence + correction field / |J|);
  // returns the max-norm over all elements, points, and variables.
  double residual(const FieldSet& u, FieldSet& r) const;

  // One SSPRK2 pseudo-time step with element-local step sizes. Throws
  // DivergenceError when non-finite values appear.
  double pseudo_time_step(FieldSet& u, long iter) const;

  // Iterate to the configured tolerance.
  SolveReport solve(FieldSet& u) const;

  // Temporal interpolation of the field to the slab top.
  void top_trace(const FieldSet& u, TraceSet& out) const;

  // Quadrature-weighted integral of each variable over the slab top.
  std::vector<double> conserved_integral_top(const FieldSet& u) const;

 private:
  struct Workspace;
  void element_traces(const FieldSet& u, int e) const;
  void element_residual(const FieldSet& u, int e, Tensor4& r,
                        Workspace& ws) const;
  void gather_outside(int e, int face, const FieldSet& u, double t_scale,
                      std::vector<double>& out) const;

  const meshmotion::Mesh2D& mesh_;
  std::vector<geometry::SpaceTimeElement> slab_;
  const physics::ConservationLaw& law_;
  SolverConfig cfg_;
  SchemeOps ops_;
  std::vector<ElementMetrics> metrics_;
  TraceSet bottom_;
  // Phase-1 output: per element, per face, trace of q at the face points.
  mutable std::vector<std::array<std::vector<double>, 6>> traces_;
  mutable std::vector<std::unique_ptr<Workspace>> workspaces_;
};

// theta-blend of each element field with its projection onto the configured
// lower space. Filtered dimensions must sit strictly below the working
// counts.
void filter_hook(FieldSet& u, const FilterSettings& filter);

struct AdvanceSpec {
  const meshmotion::Mesh2D* mesh = nullptr;
  meshmotion::MotionLaw motion;
  const physics::ConservationLaw* law = nullptr;
  double t0 = 0.0;
  double T = 1.0;
  double dt = 0.1;
  int geom_n = 1;  // temporal geometry degree of the slab elements
  SolverConfig solver;
};

struct SlabObservation {
  int slab_index;
  double t_top;
  const FieldSet& field;
  const SlabContext& ctx;
  const SolveReport& report;
};

struct AdvanceResult {
  FieldSet field;  // converged (and possibly filtered) final slab field
  std::unique_ptr<SlabContext> last_ctx;
  std::vector<SolveReport> reports;
  TraceSet top;  // final top trace
  double t_end = 0;
  bool diverged = false;
  long total_iters = 0;
};

using SlabObserver = std::function<void(const SlabObservation&)>;

AdvanceResult advance(const AdvanceSpec& spec,
                      const SlabObserver& observer = nullptr);

}  // namespace stfr::core
