#include "kolab/domain.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "kolab/numerics.hpp"

namespace kolab {

GraphDomain::GraphDomain(int m, PsiSpec spec) : m_(m), spec_(spec) {
  if (m < 1 || m > 2) throw std::invalid_argument("graph domain: m must be 1 or 2");
  if (m == 1 && spec.kind != PsiSpec::Kind::constant)
    throw std::invalid_argument("graph domain: m=1 requires a constant psi");
  switch (spec_.kind) {
    case PsiSpec::Kind::constant: lip_ = 0.0; break;
    case PsiSpec::Kind::affine: lip_ = std::fabs(spec_.slope); break;
    case PsiSpec::Kind::sine: lip_ = std::fabs(spec_.amp * spec_.freq); break;
    case PsiSpec::Kind::smooth_abs:
      if (!(spec_.eps > 0)) throw std::invalid_argument("graph domain: smooth_abs needs eps > 0");
      lip_ = std::fabs(spec_.slope);
      break;
  }
}

double GraphDomain::psi(double x) const {
  switch (spec_.kind) {
    case PsiSpec::Kind::constant: return spec_.c;
    case PsiSpec::Kind::affine: return spec_.c + spec_.slope * x;
    case PsiSpec::Kind::sine: return spec_.c + spec_.amp * std::sin(spec_.freq * x + spec_.phase);
    case PsiSpec::Kind::smooth_abs:
      return spec_.c + spec_.slope * std::sqrt(x * x + spec_.eps * spec_.eps);
  }
  return spec_.c;
}

double GraphDomain::grad_psi(double x) const {
  switch (spec_.kind) {
    case PsiSpec::Kind::constant: return 0.0;
    case PsiSpec::Kind::affine: return spec_.slope;
    case PsiSpec::Kind::sine: return spec_.amp * spec_.freq * std::cos(spec_.freq * x + spec_.phase);
    case PsiSpec::Kind::smooth_abs:
      return spec_.slope * x / std::sqrt(x * x + spec_.eps * spec_.eps);
  }
  return 0.0;
}

double GraphDomain::gap(const PhasePoint& p) const {
  if (p.m() != m_) throw std::invalid_argument("graph domain: dimension mismatch");
  return m_ == 1 ? p.X[0] - spec_.c : p.X[1] - psi(p.X[0]);
}

double GraphDomain::surface_density(double x) const {
  double g = grad_psi(x);
  return std::sqrt(1.0 + g * g);
}

PhasePoint GraphDomain::boundary_point(double x, const VecM& Y, double t) const {
  if (m_ == 1) return PhasePoint(vec1(spec_.c), Y, t);
  return PhasePoint(vec2(x, psi(x)), Y, t);
}

SurfaceCube make_surface_cube(const GraphDomain& dom, const PhasePoint& center, double r) {
  if (!(r > 0)) throw std::invalid_argument("surface cube: r must be positive");
  if (std::fabs(dom.gap(center)) > 1e-12)
    throw std::invalid_argument("surface cube: center not on the boundary");
  return SurfaceCube{center, r};
}

bool cube_contains(const GraphDomain& dom, const SurfaceCube& cube, const PhasePoint& p,
                   MeasureKind which) {
  PhasePoint rel = group_rel(p, cube.center);
  double r = cube.r;
  if (dom.m() == 2 && std::fabs(rel.X[0]) >= r) return false;
  if (which == MeasureKind::E) return true;
  if (std::fabs(rel.t) >= r * r) return false;
  if (which == MeasureKind::P) return true;
  double r3 = r * r * r;
  for (int i = 0; i < dom.m(); ++i)
    if (std::fabs(rel.Y[i]) >= r3) return false;
  return true;
}

double sigma_of_cube(const GraphDomain& dom, const SurfaceCube& cube, MeasureKind which) {
  double r = cube.r;
  double sigma_e = 1.0;
  if (dom.m() == 2) {
    double x0 = cube.center.X[0];
    sigma_e = integrate_1d([&](double x) { return dom.surface_density(x); }, x0 - r, x0 + r,
                           1e-13 * 2.0 * r);
  }
  if (which == MeasureKind::E) return sigma_e;
  double tfac = 2.0 * r * r;
  if (which == MeasureKind::P) return sigma_e * tfac;
  double yfac = 1.0;
  for (int i = 0; i < dom.m(); ++i) yfac *= 2.0 * r * r * r;
  return sigma_e * yfac * tfac;
}

VecM SymMat::apply(const VecM& v) const {
  if (m == 1) return vec1(a11 * v[0]);
  return vec2(a11 * v[0] + a12 * v[1], a12 * v[0] + a22 * v[1]);
}

double SymMat::quad(const VecM& v) const {
  if (m == 1) return a11 * v[0] * v[0];
  return a11 * v[0] * v[0] + 2.0 * a12 * v[0] * v[1] + a22 * v[1] * v[1];
}

double SymMat::frob() const {
  if (m == 1) return std::fabs(a11);
  return std::sqrt(a11 * a11 + 2.0 * a12 * a12 + a22 * a22);
}

double SymMat::eig_min() const {
  if (m == 1) return a11;
  double mid = 0.5 * (a11 + a22);
  double rad = std::sqrt(0.25 * (a11 - a22) * (a11 - a22) + a12 * a12);
  return mid - rad;
}

double SymMat::eig_max() const {
  if (m == 1) return a11;
  double mid = 0.5 * (a11 + a22);
  double rad = std::sqrt(0.25 * (a11 - a22) * (a11 - a22) + a12 * a12);
  return mid + rad;
}

double SymMat::spec_norm() const { return std::max(std::fabs(eig_min()), std::fabs(eig_max())); }

CoefficientField::CoefficientField(int m, SymMat A0, std::vector<CoeffMode> modes)
    : m_(m), A0_(A0), modes_(std::move(modes)) {
  if (m < 1 || m > 2) throw std::invalid_argument("coefficient field: m must be 1 or 2");
  if (A0_.m != m) throw std::invalid_argument("coefficient field: A0 dimension mismatch");
  for (const auto& mode : modes_)
    if (mode.B.m != m) throw std::invalid_argument("coefficient field: mode dimension mismatch");
  certify();
}

void CoefficientField::certify() {
  double lo = A0_.eig_min(), hi = A0_.eig_max();
  for (const auto& mode : modes_) {
    double w = std::fabs(mode.amp) * mode.B.spec_norm();
    lo -= w;
    hi += w;
  }
  if (blend_) {
    lo = std::min(lo, 1.0);
    hi = std::max(hi, 1.0);
  }
  if (!(lo > 0)) throw std::invalid_argument("coefficient field: ellipticity certificate failed");
  kappa_ = std::max({hi, 1.0 / lo, 1.0});
  periodic_ = !blend_;
  for (const auto& mode : modes_)
    for (int i = 0; i < m_; ++i)
      if (std::fabs (mode.freq[size_t(i)] - std::round(mode.freq[size_t(i)])) > 1e-12)
        periodic_ = false;
  xm_independent_ = true;
  for (const auto& mode : modes_)
    if (mode.freq[size_t(m_ - 1)] != 0.0) xm_independent_ = false;
}

CoefficientField CoefficientField::constant(SymMat A0) { return CoefficientField(A0.m, A0); }

CoefficientField CoefficientField::trig1(double offset, double amp, double k, double phase) {
  std::vector<CoeffMode> modes{CoeffMode{SymMat::scalar(1.0), amp, {k, 0.0}, phase}};
  return CoefficientField(1, SymMat::scalar(offset), std::move(modes));
}

CoefficientField CoefficientField::laminate(double offset1, double amp1, double offset2,
                                            double amp2, double k) {
  std::vector<CoeffMode> modes{CoeffMode{SymMat::diag(1.0, 0.0), amp1, {k, 0.0}, 0.0},
                               CoeffMode{SymMat::diag(0.0, 1.0), amp2, {k, 0.0}, 0.0}};
  return CoefficientField(2, SymMat::diag(offset1, offset2), std::move(modes));
}

void CoefficientField::set_blend_to_identity(double radius) {
  if (!(radius > 0)) throw std::invalid_argument("coefficient field: blend radius must be positive");
  blend_ = true;
  blend_radius_ = radius;
  certify();
}

namespace {

double smoothstep(double u) {
  if (u <= 0) return 0.0;
  if (u >= 1) return 1.0;
  return u * u * (3.0 - 2.0 * u);
}

double smoothstep_deriv(double u) {
  if (u <= 0 || u >= 1) return 0.0;
  return 6.0 * u * (1.0 - u);
}

}  // namespace

SymMat CoefficientField::eval(const VecM& X) const {
  SymMat A = A0_;
  for (const auto& mode : modes_) {
    double arg = mode.phase;
    for (int i = 0; i < m_; ++i) arg += 2.0 * kPi * mode.freq[size_t(i)] * X[i];
    A = A + (mode.amp * std::sin(arg)) * mode.B;
  }
  if (blend_) {
    double rho = norm2(X);
    double s = smoothstep((rho - blend_radius_) / blend_radius_);
    A = (1.0 - s) * A + s * SymMat::identity(m_);
  }
  return A;
}

VecM CoefficientField::drift(const VecM& X) const {
  VecM b = VecM::zero(m_);
  for (const auto& mode : modes_) {
    double arg = mode.phase;
    for (int i = 0; i < m_; ++i) arg += 2.0 * kPi * mode.freq[size_t(i)] * X[i];
    double c = mode.amp * 2.0 * kPi * std::cos(arg);
    // sum_i f_i B_ij
    if (m_ == 1) {
      b[0] += c * mode.freq[0] * mode.B.a11;
    } else {
      b[0] += c * (mode.freq[0] * mode.B.a11 + mode.freq[1] * mode.B.a12);
      b[1] += c * (mode.freq[0] * mode.B.a12 + mode.freq[1] * mode.B.a22);
    }
  }
  if (blend_) {
    // A_b = (1-s) A + s I; b_j = (1-s) b_j + ds_i (delta_ij - a_ij)
    double rho = norm2(X);
    double u = (rho - blend_radius_) / blend_radius_;
    double s = smoothstep(u);
    SymMat A = A0_;
    for (const auto& mode : modes_) {
      double arg = mode.phase;
      for (int i = 0; i < m_; ++i) arg += 2.0 * kPi * mode.freq[size_t(i)] * X[i];
      A = A + (mode.amp * std::sin(arg)) * mode.B;
    }
    VecM bb = VecM::zero(m_);
    double dsd = rho > 0 ? smoothstep_deriv(u) / blend_radius_ / rho : 0.0;
    if (m_ == 1) {
      bb[0] = (1.0 - s) * b[0] + dsd * X[0] * (1.0 - A.a11);
    } else {
      bb[0] = (1.0 - s) * b[0] + dsd * (X[0] * (1.0 - A.a11) + X[1] * (0.0 - A.a12));
      bb[1] = (1.0 - s) * b[1] + dsd * (X[0] * (0.0 - A.a12) + X[1] * (1.0 - A.a22));
    }
    return bb;
  }
  return b;
}

SymMat CoefficientField::sqrt2A(const VecM& X) const {
  SymMat M = 2.0 * eval(X);
  if (m_ == 1) {
    if (!(M.a11 > 0)) throw std::runtime_error("coefficient field: matrix not positive definite");
    return SymMat::scalar(std::sqrt(M.a11));
  }
  double det = M.a11 * M.a22 - M.a12 * M.a12;
  double tr = M.a11 + M.a22;
  if (!(det > 0) || !(tr > 0))
    throw std::runtime_error("coefficient field: matrix not positive definite");
  double s = std::sqrt(det);
  double t = std::sqrt(tr + 2.0 * s);
  return SymMat{2, (M.a11 + s) / t, M.a12 / t, (M.a22 + s) / t};
}

CoefficientField CoefficientField::rescaled(double eps) const {
  if (!(eps > 0)) throw std::invalid_argument("coefficient field: eps must be positive");
  std::vector<CoeffMode> modes = modes_;
  for (auto& mode : modes)
    for (int i = 0; i < m_; ++i) mode.freq[size_t(i)] /= eps;
  CoefficientField out(m_, A0_, std::move(modes));
  if (blend_) out.set_blend_to_identity(blend_radius_ * eps);
  return out;
}

double dini_modulus(const CoefficientField& field, double rho, int x_grid, int lambda_grid) {
  if (!(rho > 0) || rho > 1) throw std::invalid_argument("dini_modulus: rho must lie in (0,1]");
  int m = field.m();
  int nx = m == 2 ? x_grid : 1;
  const int ndelta = 16;
  double sup = 0.0;
  for (int ix = 0; ix < nx; ++ix) {
    double x = double(ix) / double(nx);
    for (int il = 0; il < lambda_grid; ++il) {
      double l1 = double(il) / double(lambda_grid);
      VecM X1 = m == 1 ? vec1(l1) : vec2(x, l1);
      SymMat A1 = field.eval(X1);
      for (int id = 1; id <= ndelta; ++id) {
        double l2 = l1 + rho * double(id) / double(ndelta);
        VecM X2 = m == 1 ? vec1(l2) : vec2(x, l2);
        SymMat D = field.eval(X2) + (-1.0) * A1;
        sup = std::max(sup, D.frob());
      }
    }
  }
  return sup;
}

double dini_integral(const CoefficientField& field, double cutoff, int n_rho) {
  if (!(cutoff > 0) || cutoff >= 1) throw std::invalid_argument("dini_integral: bad cutoff");
  // integrate theta(rho)^2 d(log rho) on a log grid
  double lo = std::log(cutoff);
  std::vector<double> th(size_t(n_rho));
  for (int i = 0; i < n_rho; ++i) {
    double rho = std::exp(lo - lo * double(i) / double(n_rho - 1));
    th[size_t(i)] = dini_modulus(field, rho, 64, 64);
  }
  double du = -lo / double(n_rho - 1);
  double total = 0.0;
  for (int i = 0; i + 1 < n_rho; ++i)
    total += 0.5 * (th[size_t(i)] * th[size_t(i)] + th[size_t(i + 1)] * th[size_t(i + 1)]) * du;
  return total;
}

}  // namespace kolab
