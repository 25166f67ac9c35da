// Curvilinear space-time element geometry: coordinate maps, Jacobians,
// the non-conservative metric identities, discrete geometric-conservation
// diagnostics, and the S/P/V resolution classification.
#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "stfr/basis.hpp"
#include "stfr/tensor.hpp"

namespace stfr::geometry {

// One space-time element of a slab. Geometry nodes sit on Gauss-Lobatto
// tensor grids: (l+1)^2 in space times (n+1) temporal levels. The physical
// time is a 1D map t(tau) shared by all spatial nodes, which is what makes
// the slab structure (t independent of xi, eta) hold by construction.
struct SpaceTimeElement {
  int l = 1;  // spatial geometry degree
  int n = 1;  // temporal geometry degree
  // xy(i,j,q,c): coordinate c of the node at (xi_i, eta_j, tau_q).
  Tensor4 xy;
  std::vector<double> t_nodes;  // physical times at temporal Lobatto nodes
  int id = -1;                  // diagnostic label (mesh element index)
};

struct GeomEval {
  double x = 0, y = 0, t = 0;
  double t_tau = 0;
  double x_tau = 0, x_xi = 0, x_eta = 0;
  double y_tau = 0, y_xi = 0, y_eta = 0;
};

// The seven |J|-scaled inverse-Jacobian entries of the slab transformation
// plus |J| itself. |J| tau_x and |J| tau_y vanish identically.
struct MetricsST {
  double detJ = 0;
  double jt_tau_t = 0;
  double jt_xi_t = 0, jt_xi_x = 0, jt_xi_y = 0;
  double jt_eta_t = 0, jt_eta_x = 0, jt_eta_y = 0;
};

class DegenerateElementError : public std::runtime_error {
 public:
  DegenerateElementError(int elem_id, double tau, double xi, double eta,
                         double detj);
};

GeomEval geometry_maps(const SpaceTimeElement& elem, double tau, double xi,
                       double eta);

// Entries per Eq. of the non-conservative formulation; throws
// DegenerateElementError when |J| <= 0.
MetricsST metrics_nonconservative(const SpaceTimeElement& elem, double tau,
                                  double xi, double eta);
MetricsST metrics_from_geom(const GeomEval& g, const SpaceTimeElement& elem,
                            double tau, double xi, double eta);

// Max-norm residuals of the three geometric conservation rows (t, x, y),
// sampled on the (alpha+1)^2 x (beta+1) Gauss-Legendre tensor grid and
// differentiated with the matching Lagrange operators.
std::array<double, 3> gcl_residual(const SpaceTimeElement& elem, int alpha,
                                   int beta);

enum class SchemeLabel { S, P, V };

const char* to_string(SchemeLabel s);

// Resolution labels per axis. sp counts are solution-point counts.
SchemeLabel classify_spatial(int k, int l, int sp_space);
SchemeLabel classify_temporal(int m, int n, int sp_time);
// Combined label: the weaker of the two axis labels (S > P > V).
SchemeLabel classify_scheme(int k, int m, int l, int n, int sp_space,
                            int sp_time);

enum class Face { TauMinus, TauPlus, XiMinus, XiPlus, EtaMinus, EtaPlus };

// Reference coordinates of a point on the given face; (a, b) are the two
// in-face coordinates in the element's axis order (tau before xi before eta).
std::array<double, 3> face_point(Face f, double a, double b);

// |J| * ||grad_st(phi)||_2 * sign(n_st . grad_st(phi)) for the face's
// reference coordinate phi. Multiplying the physical common normal flux by
// this factor yields the reference-domain numerical flux.
double face_flux_scaling(const SpaceTimeElement& elem, Face f, double a,
                         double b);

// Outward unit space-time normal (n_t, n_x, n_y) at a face point, plus the
// scaling above, evaluated in one pass.
struct FaceGeom {
  double scaling = 0;
  std::array<double, 3> normal{};  // outward unit (t, x, y)
  double x = 0, y = 0, t = 0;
};
FaceGeom face_geometry(const SpaceTimeElement& elem, Face f, double a,
                       double b);

}  // namespace stfr::geometry
