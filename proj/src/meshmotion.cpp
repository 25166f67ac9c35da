#include "stfr/meshmotion.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace stfr::meshmotion {

std::array<double, 2> sym_deform_position(double x0, double y0, double t,
                                          const SymDeformParams& p) {
  const double om_t = p.n_t * M_PI / p.t_max;
  const double om_x = p.n_x * M_PI / p.L_x;
  const double om_y = p.n_y * M_PI / p.L_y;
  // Time integral of the displacement rate with the sine factors frozen at
  // the reference coordinates.
  const double shape = std::sin(om_x * x0) * std::sin(om_y * y0);
  const double ramp = (1.0 - std::cos(om_t * t)) / (om_t * p.t_max);
  return {x0 + p.A_x * p.L_x * shape * ramp, y0 + p.A_y * p.L_y * shape * ramp};
}

double circular_alpha(double t) { return t * t * t * (8.0 - 3.0 * t) / 16.0; }

namespace {
double eta_perturb(double lambda, double omega, double phase) {
  return std::sin(omega * lambda + phase * (1.0 - std::cos(omega * lambda)));
}
}  // namespace

double circular_fg(double r0, double theta0, double t) {
  const double t6 = std::pow(t, 6);
  const double mollify = t6 / (t6 + 0.01);  // removes the motion jump at t=0
  const double r4 = 16.0 * std::pow(r0, 4);
  const double radial =
      r4 + eta_perturb(t, 10.0, 0.7) * (std::cos(32.0 * M_PI * std::pow(r0, 4)) - 1.0);
  return mollify * radial * eta_perturb(theta0, 1.0, 0.7);
}

std::array<double, 2> circular_position(double r0, double theta0, double t,
                                        const CircularParams& p) {
  const double a = circular_alpha(t);
  const double psi = 1.0 + (p.A_a - 1.0) * a;
  const double theta_g = theta0 + p.A_g * circular_fg(r0, theta0, t);

  double x = r0 * std::cos(theta_g);
  double y = r0 * std::sin(theta_g);
  // anisotropic scaling
  x *= psi;
  y /= psi;
  // rotation
  const double c = std::cos(p.A_theta * a), s = std::sin(p.A_theta * a);
  double xr = c * x - s * y;
  double yr = s * x + c * y;
  // vertical shear of the homogeneous coordinate: translation by alpha
  return {xr, yr + a};
}

std::array<double, 2> MotionLaw::position(double x0, double y0,
                                          double t) const {
  switch (kind) {
    case MotionKind::Stationary:
      return {x0, y0};
    case MotionKind::SymDeform:
      return sym_deform_position(x0, y0, t, sym);
    case MotionKind::Circular: {
      double r0 = std::hypot(x0, y0);
      double th0 = std::atan2(y0, x0);
      return circular_position(r0, th0, t, circ);
    }
  }
  return {x0, y0};
}

namespace {

double blend(double lo, double hi, double g) {
  return 0.5 * ((1.0 - g) * lo + (1.0 + g) * hi);
}

}  // namespace

Mesh2D build_square_mesh(int nx, int ny, int l) {
  if (nx < 1 || ny < 1 || l < 1)
    throw std::invalid_argument("build_square_mesh: need nx, ny >= 1, l >= 1");
  Mesh2D mesh;
  mesh.l = l;
  const auto& gll = basis::gauss_lobatto_cached(l + 1).points;
  const double hx = 1.0 / nx, hy = 1.0 / ny;
  mesh.ref_nodes.reserve(static_cast<size_t>(nx) * ny);
  mesh.faces.resize(static_cast<size_t>(nx) * ny);
  auto id = [&](int i, int j) { return i * ny + j; };
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      Tensor3 nodes(l + 1, l + 1, 2);
      for (int a = 0; a <= l; ++a)
        for (int b = 0; b <= l; ++b) {
          nodes(a, b, 0) = blend(i * hx, (i + 1) * hx, gll[a]);
          nodes(a, b, 1) = blend(j * hy, (j + 1) * hy, gll[b]);
        }
      mesh.ref_nodes.push_back(std::move(nodes));

      auto& f = mesh.faces[id(i, j)];
      auto link = [&](int face, int ni, int nj, int nface, bool wraps) {
        f[face].kind = wraps ? FaceKind::Periodic : FaceKind::Interior;
        f[face].neighbor = id((ni + nx) % nx, (nj + ny) % ny);
        f[face].neighbor_face = nface;
        f[face].reversed = false;
      };
      link(kFaceW, i - 1, j, kFaceE, i == 0);
      link(kFaceE, i + 1, j, kFaceW, i == nx - 1);
      link(kFaceS, i, j - 1, kFaceN, j == 0);
      link(kFaceN, i, j + 1, kFaceS, j == ny - 1);
    }
  }
  return mesh;
}

Mesh2D build_disk_mesh(int levels, int l) {
  if (levels < 1 || l < 1)
    throw std::invalid_argument("build_disk_mesh: need levels >= 1, l >= 1");
  const double R = 0.5;
  const double a = 0.25;  // central square half-width
  const int s = 1 << levels;

  Mesh2D mesh;
  mesh.l = l;
  const auto& gll = basis::gauss_lobatto_cached(l + 1).points;
  const int per_block = s * s;
  mesh.ref_nodes.resize(static_cast<size_t>(5) * per_block);
  mesh.faces.resize(static_cast<size_t>(5) * per_block);

  // Block ids: 0 center, then E, N, W, S annular blocks with azimuthal
  // centers 0, pi/2, pi, 3pi/2. Annular block coordinates: u radial
  // (u = -1 on the square), v azimuthal.
  auto id = [&](int blk, int iu, int iv) { return blk * per_block + iu * s + iv; };

  auto center_point = [&](double u, double v) {
    return std::array<double, 2>{a * u, a * v};
  };
  auto annular_point = [&](int blk, double u, double v) {
    // inner edge on the square, outer edge on the arc
    std::array<double, 2> inner{}, outer{};
    double phi_c = 0.5 * M_PI * (blk - 1);
    switch (blk) {
      case 1: inner = {a, a * v}; break;
      case 2: inner = {-a * v, a}; break;
      case 3: inner = {-a, -a * v}; break;
      case 4: inner = {a * v, -a}; break;
    }
    double phi = phi_c + v * (0.25 * M_PI);
    outer = {R * std::cos(phi), R * std::sin(phi)};
    double w = 0.5 * (u + 1.0);
    return std::array<double, 2>{(1.0 - w) * inner[0] + w * outer[0],
                                 (1.0 - w) * inner[1] + w * outer[1]};
  };

  const double h = 2.0 / s;
  for (int blk = 0; blk < 5; ++blk) {
    for (int iu = 0; iu < s; ++iu) {
      for (int iv = 0; iv < s; ++iv) {
        Tensor3 nodes(l + 1, l + 1, 2);
        for (int p = 0; p <= l; ++p)
          for (int q = 0; q <= l; ++q) {
            double u = blend(-1.0 + iu * h, -1.0 + (iu + 1) * h, gll[p]);
            double v = blend(-1.0 + iv * h, -1.0 + (iv + 1) * h, gll[q]);
            auto xy = (blk == 0) ? center_point(u, v) : annular_point(blk, u, v);
            nodes(p, q, 0) = xy[0];
            nodes(p, q, 1) = xy[1];
          }
        mesh.ref_nodes[id(blk, iu, iv)] = std::move(nodes);
      }
    }
  }

  auto connect = [&](int e, int face, int ne, int nface, bool rev,
                     FaceKind kind = FaceKind::Interior) {
    mesh.faces[e][face] = FaceLink{kind, ne, nface, rev};
  };

  for (int blk = 0; blk < 5; ++blk) {
    for (int iu = 0; iu < s; ++iu) {
      for (int iv = 0; iv < s; ++iv) {
        int e = id(blk, iu, iv);
        // interior lattice links within the block
        if (iu > 0) connect(e, kFaceW, id(blk, iu - 1, iv), kFaceE, false);
        if (iu < s - 1) connect(e, kFaceE, id(blk, iu + 1, iv), kFaceW, false);
        if (iv > 0) connect(e, kFaceS, id(blk, iu, iv - 1), kFaceN, false);
        if (iv < s - 1) connect(e, kFaceN, id(blk, iu, iv + 1), kFaceS, false);
      }
    }
  }

  for (int i = 0; i < s; ++i) {
    // center <-> annular seams
    connect(id(0, s - 1, i), kFaceE, id(1, 0, i), kFaceW, false);
    connect(id(1, 0, i), kFaceW, id(0, s - 1, i), kFaceE, false);

    connect(id(0, i, s - 1), kFaceN, id(2, 0, s - 1 - i), kFaceW, true);
    connect(id(2, 0, i), kFaceW, id(0, s - 1 - i, s - 1), kFaceN, true);

    connect(id(0, 0, i), kFaceW, id(3, 0, s - 1 - i), kFaceW, true);
    connect(id(3, 0, i), kFaceW, id(0, 0, s - 1 - i), kFaceW, true);

    connect(id(0, i, 0), kFaceS, id(4, 0, i), kFaceW, false);
    connect(id(4, 0, i), kFaceW, id(0, i, 0), kFaceS, false);

    // ring seams between annular blocks (radial in-face coordinate)
    for (int b = 1; b <= 4; ++b) {
      int nb = (b % 4) + 1;  // E->N->W->S->E
      connect(id(b, i, s - 1), kFaceN, id(nb, i, 0), kFaceS, false);
      connect(id(nb, i, 0), kFaceS, id(b, i, s - 1), kFaceN, false);
    }

    // outer arcs
    for (int b = 1; b <= 4; ++b)
      mesh.faces[id(b, s - 1, i)][kFaceE] = FaceLink{FaceKind::Analytic, -1, -1, false};
  }
  return mesh;
}

void write_mesh(std::ostream& os, const Mesh2D& mesh) {
  os << "stfr-mesh 1\n";
  os << "l " << mesh.l << "\n";
  os << "elements " << mesh.n_elements() << "\n";
  os.precision(17);
  for (int e = 0; e < mesh.n_elements(); ++e) {
    os << "element " << e << "\n";
    const auto& nd = mesh.ref_nodes[e];
    for (int i = 0; i < nd.n0; ++i)
      for (int j = 0; j < nd.n1; ++j)
        os << nd(i, j, 0) << " " << nd(i, j, 1) << "\n";
  }
  os << "faces\n";
  for (int e = 0; e < mesh.n_elements(); ++e) {
    for (int f = 0; f < 4; ++f) {
      const auto& fl = mesh.faces[e][f];
      const char* kind = fl.kind == FaceKind::Interior   ? "interior"
                         : fl.kind == FaceKind::Periodic ? "periodic"
                                                         : "analytic";
      os << e << " " << f << " " << kind << " " << fl.neighbor << " "
         << fl.neighbor_face << " " << (fl.reversed ? 1 : 0) << "\n";
    }
  }
}

Mesh2D read_mesh(std::istream& is) {
  std::string tag;
  int version = 0;
  is >> tag >> version;
  if (tag != "stfr-mesh" || version != 1)
    throw std::runtime_error("read_mesh: unrecognized mesh header");
  Mesh2D mesh;
  int nelem = 0;
  is >> tag >> mesh.l;
  if (tag != "l") throw std::runtime_error("read_mesh: expected 'l'");
  is >> tag >> nelem;
  if (tag != "elements") throw std::runtime_error("read_mesh: expected 'elements'");
  mesh.ref_nodes.resize(nelem);
  mesh.faces.resize(nelem);
  for (int e = 0; e < nelem; ++e) {
    int eid;
    is >> tag >> eid;
    if (tag != "element" || eid != e)
      throw std::runtime_error("read_mesh: malformed element record");
    Tensor3 nd(mesh.l + 1, mesh.l + 1, 2);
    for (int i = 0; i <= mesh.l; ++i)
      for (int j = 0; j <= mesh.l; ++j) is >> nd(i, j, 0) >> nd(i, j, 1);
    mesh.ref_nodes[e] = std::move(nd);
  }
  is >> tag;
  if (tag != "faces") throw std::runtime_error("read_mesh: expected 'faces'");
  for (int k = 0; k < nelem * 4; ++k) {
    int e, f, nbr, nface, rev;
    std::string kind;
    is >> e >> f >> kind >> nbr >> nface >> rev;
    if (!is) throw std::runtime_error("read_mesh: truncated face table");
    FaceLink fl;
    fl.kind = kind == "interior"   ? FaceKind::Interior
              : kind == "periodic" ? FaceKind::Periodic
                                   : FaceKind::Analytic;
    fl.neighbor = nbr;
    fl.neighbor_face = nface;
    fl.reversed = rev != 0;
    mesh.faces[e][f] = fl;
  }
  return mesh;
}

std::vector<geometry::SpaceTimeElement> build_slab(const Mesh2D& mesh,
                                                   const MotionLaw& motion,
                                                   double t_start, double dt,
                                                   int n) {
  if (dt <= 0.0) throw std::invalid_argument("build_slab: dt must be positive");
  if (n < 1) throw std::invalid_argument("build_slab: n must be >= 1");
  const auto& gll_t = basis::gauss_lobatto_cached(n + 1).points;
  std::vector<double> t_levels(n + 1);
  for (int q = 0; q <= n; ++q) t_levels[q] = t_start + dt * 0.5 * (gll_t[q] + 1.0);

  const int l = mesh.l;
  std::vector<geometry::SpaceTimeElement> slab(mesh.n_elements());
  for (int e = 0; e < mesh.n_elements(); ++e) {
    auto& el = slab[e];
    el.l = l;
    el.n = n;
    el.id = e;
    el.t_nodes = t_levels;
    el.xy = Tensor4(l + 1, l + 1, n + 1, 2);
    const auto& ref = mesh.ref_nodes[e];
    for (int i = 0; i <= l; ++i)
      for (int j = 0; j <= l; ++j)
        for (int q = 0; q <= n; ++q) {
          auto xy = motion.position(ref(i, j, 0), ref(i, j, 1), t_levels[q]);
          el.xy(i, j, q, 0) = xy[0];
          el.xy(i, j, q, 1) = xy[1];
        }
    // Quick non-degeneracy sweep on a grid slightly finer than the geometry;
    // throws DegenerateElementError on a tangled element. The metric caches
    // check again at every solution and flux point.
    const auto& cs = basis::gauss_legendre_cached(l + 2).points;
    const auto& ct = basis::gauss_legendre_cached(n + 2).points;
    for (double xi : cs)
      for (double eta : cs)
        for (double tau : ct) geometry::metrics_nonconservative(el, tau, xi, eta);
  }
  return slab;
}

}  // namespace stfr::meshmotion
