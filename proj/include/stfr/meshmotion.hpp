// Structured quadrilateral meshes, prescribed motion laws, and space-time
// slab assembly. Meshes store reference (t=0) coordinates; motion is a pure
// function of reference position and time, so slabs of any step size sample
// the same trajectories.
#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stfr/geometry.hpp"
#include "stfr/tensor.hpp"

namespace stfr::meshmotion {

struct SymDeformParams {
  double A_x = 0.1, A_y = 0.1;
  double L_x = 1.0, L_y = 1.0;
  double n_t = 0.5, n_x = 4.0, n_y = 4.0;
  double t_max = 0.2;
};

struct CircularParams {
  double A_theta = M_PI;
  double A_a = 1.5;
  double A_g = 0.15;
};

// Closed-form displacement of the deforming-square law, with the sine
// factors frozen at the reference coordinates.
std::array<double, 2> sym_deform_position(double x0, double y0, double t,
                                          const SymDeformParams& p);

// Shear * rotation * anisotropic scaling applied to the reference polar
// position; identity at t = 0.
std::array<double, 2> circular_position(double r0, double theta0, double t,
                                        const CircularParams& p);

// Motion blending polynomial alpha(t) = t^3 (8 - 3t) / 16 and helpers of the
// circular law, exposed for tests.
double circular_alpha(double t);
double circular_fg(double r0, double theta0, double t);

enum class MotionKind { Stationary, SymDeform, Circular };

struct MotionLaw {
  MotionKind kind = MotionKind::Stationary;
  SymDeformParams sym;
  CircularParams circ;

  std::array<double, 2> position(double x0, double y0, double t) const;
  bool is_stationary() const { return kind == MotionKind::Stationary; }
};

enum class FaceKind { Interior, Periodic, Analytic };

// One of the four spatial faces of a quad element, in reference order
// W (xi-), E (xi+), S (eta-), N (eta+).
struct FaceLink {
  FaceKind kind = FaceKind::Interior;
  int neighbor = -1;       // element index (Interior/Periodic)
  int neighbor_face = -1;  // 0..3 on the neighbor
  bool reversed = false;   // in-face index order flips across the seam
};

struct Mesh2D {
  int l = 1;  // spatial geometry degree
  // Per element: (l+1)x(l+1) reference coordinates at spatial Lobatto nodes,
  // layout ref(elem)(i,j,c) flattened as Tensor3 per element.
  std::vector<Tensor3> ref_nodes;  // each (l+1, l+1, 2)
  std::vector<std::array<FaceLink, 4>> faces;

  int n_elements() const { return static_cast<int>(ref_nodes.size()); }
};

constexpr int kFaceW = 0, kFaceE = 1, kFaceS = 2, kFaceN = 3;

// Uniform periodic lattice on [0,1]^2.
Mesh2D build_square_mesh(int nx, int ny, int l);

// Five-block butterfly decomposition of the radius-0.5 disk. Level 1 has a
// 2x2 central block and 2x2 annular blocks; each level doubles the element
// count per direction. Outer faces are tagged analytic.
Mesh2D build_disk_mesh(int levels, int l);

// Plain-text mesh serialization (versioned, stable for golden tests).
void write_mesh(std::ostream& os, const Mesh2D& mesh);
Mesh2D read_mesh(std::istream& is);

// Sample the motion law at the temporal Lobatto levels of the slab
// [t_start, t_start + dt] and assemble one space-time element per mesh
// element (temporal geometry degree n).
std::vector<geometry::SpaceTimeElement> build_slab(const Mesh2D& mesh,
                                                   const MotionLaw& motion,
                                                   double t_start, double dt,
                                                   int n);

}  // namespace stfr::meshmotion
