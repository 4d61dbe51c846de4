#pragma once

#include <cstdint>
#include <vector>

#include "kolab/geometry.hpp"

namespace kolab {

// Lipschitz defining function psi: R^(m-1) -> R, closed-form families only.
// For m = 1 the graph coordinate has no argument; psi is the constant c.
struct PsiSpec {
  enum class Kind { constant, affine, sine, smooth_abs };
  Kind kind = Kind::constant;
  double c = 0.0;      // offset (all kinds)
  double slope = 0.0;  // affine: c + slope*x; smooth_abs: c + slope*sqrt(x^2+eps^2)
  double amp = 0.0;    // sine: c + amp*sin(freq*x + phase)
  double freq = 1.0;
  double phase = 0.0;
  double eps = 0.1;
};

class GraphDomain {
 public:
  GraphDomain(int m, PsiSpec spec);

  int m() const { return m_; }
  const PsiSpec& spec() const { return spec_; }

  // graph value and derivative at tangential coordinate x (m = 2 only; for
  // m = 1 the argument is ignored and psi is the constant)
  double psi(double x = 0.0) const;
  double grad_psi(double x = 0.0) const;

  // analytic Lipschitz bound of the family
  double lipschitz_M() const { return lip_; }

  // x_m - psi(x): positive inside, zero on the boundary
  double gap(const PhasePoint& p) const;
  bool contains(const PhasePoint& p) const { return gap(p) > 0.0; }

  // sqrt(1 + |grad psi|^2)
  double surface_density(double x = 0.0) const;

  // boundary point from surface parameters (x used only when m = 2)
  PhasePoint boundary_point(double x, const VecM& Y, double t) const;

 private:
  int m_;
  PsiSpec spec_;
  double lip_;
};

// axis-parallel surface cube: parameter box of half-widths (r, r^3, r^2) in
// (x, Y, t) attached at a boundary center by the group translation
struct SurfaceCube {
  PhasePoint center;
  double r = 1.0;
};

enum class MeasureKind { E, P, K };

// validates that the center lies on the graph (1e-12)
SurfaceCube make_surface_cube(const GraphDomain& dom, const PhasePoint& center, double r);

// membership against the group-translated parameter box; the E/P variants
// test only the projected coordinates
bool cube_contains(const GraphDomain& dom, const SurfaceCube& cube, const PhasePoint& p,
                   MeasureKind which);

// sigma_E integrates the surface density over the x box; sigma_P adds the
// t factor 2r^2 and sigma_K the (2r^3)^m (Y) and 2r^2 (t) factors
double sigma_of_cube(const GraphDomain& dom, const SurfaceCube& cube, MeasureKind which);

// symmetric m x m matrix (m <= 2), stored (a11, a12, a22)
struct SymMat {
  int m = 1;
  double a11 = 0.0, a12 = 0.0, a22 = 0.0;

  static SymMat identity(int m) { return SymMat{m, 1.0, 0.0, 1.0}; }
  static SymMat diag(double d1, double d2) { return SymMat{2, d1, 0.0, d2}; }
  static SymMat scalar(double a) { return SymMat{1, a, 0.0, 0.0}; }

  VecM apply(const VecM& v) const;
  double quad(const VecM& v) const;  // v^T A v
  double frob() const;
  double spec_norm() const;  // largest |eigenvalue|
  double eig_min() const;
  double eig_max() const;
};

inline SymMat operator+(SymMat a, const SymMat& b) {
  a.a11 += b.a11;
  a.a12 += b.a12;
  a.a22 += b.a22;
  return a;
}
inline SymMat operator*(double s, SymMat a) {
  a.a11 *= s;
  a.a12 *= s;
  a.a22 *= s;
  return a;
}

// one trigonometric mode amp * sin(2 pi freq.X + phase) * B
struct CoeffMode {
  SymMat B;
  double amp = 0.0;
  std::array<double, 2> freq{0.0, 0.0};
  double phase = 0.0;
};

// A(X) = A0 + sum of modes, optionally blended to the identity outside a
// radius; closed-form values and first derivatives
class CoefficientField {
 public:
  CoefficientField(int m, SymMat A0, std::vector<CoeffMode> modes = {});

  static CoefficientField constant(SymMat A0);
  // m=1 scalar a(x) = offset + amp*sin(2 pi k x + phase)
  static CoefficientField trig1(double offset, double amp, double k, double phase = 0.0);
  // m=2 laminate diag(a(x1), b(x1)) with sinusoidal entries
  static CoefficientField laminate(double offset1, double amp1, double offset2, double amp2,
                                   double k = 1.0);

  int m() const { return m_; }
  double kappa() const { return kappa_; }
  bool periodic_lattice() const { return periodic_; }
  bool xm_independent() const { return xm_independent_; }

  SymMat eval(const VecM& X) const;
  VecM drift(const VecM& X) const;

  // principal symmetric square root of 2A(X); throws if not SPD
  SymMat sqrt2A(const VecM& X) const;

  // identity blending outside |X| in [radius, 2*radius]; off by default
  void set_blend_to_identity(double radius);

  // closed-form rescale A(X/eps): frequencies scale by 1/eps
  CoefficientField rescaled(double eps) const;

 private:
  int m_;
  SymMat A0_;
  std::vector<CoeffMode> modes_;
  bool blend_ = false;
  double blend_radius_ = 0.0;
  double kappa_ = 1.0;
  bool periodic_ = false;
  bool xm_independent_ = false;
  void certify();
};

// sup_{x, |l1-l2|<=rho} |A(x,l1)-A(x,l2)|_F, the last coordinate varied;
// sampled on an x grid times lambda pairs (sizes configurable)
double dini_modulus(const CoefficientField& field, double rho, int x_grid = 256,
                    int lambda_grid = 256);

// integral of theta(rho)^2 / rho over (cutoff, 1]
double dini_integral(const CoefficientField& field, double cutoff = 1e-6, int n_rho = 128);

}  // namespace kolab
