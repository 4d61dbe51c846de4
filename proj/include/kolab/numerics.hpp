#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace kolab {

// adaptive Simpson on [a,b]
template <class F>
double integrate_1d(F f, double a, double b, double tol = 1e-12, int depth = 24) {
  auto simpson = [](double a_, double fa, double b_, double fb, double fm) {
    return (b_ - a_) / 6.0 * (fa + 4.0 * fm + fb);
  };
  struct Frame {
    double a, fa, b, fb, m, fm, whole, tol;
    int depth;
  };
  if (!(b > a)) {
    if (a == b) return 0.0;
    throw std::invalid_argument("integrate_1d: reversed interval");
  }
  double fa = f(a), fb = f(b), mid = 0.5 * (a + b), fm = f(mid);
  if (!std::isfinite(fa) || !std::isfinite(fb) || !std::isfinite(fm))
    throw std::runtime_error("integrate_1d: non-finite integrand");
  std::vector<Frame> stack{{a, fa, b, fb, mid, fm, simpson(a, fa, b, fb, fm), tol, depth}};
  double total = 0.0;
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    double lm = 0.5 * (fr.a + fr.m), rm = 0.5 * (fr.m + fr.b);
    double flm = f(lm), frm = f(rm);
    if (!std::isfinite(flm) || !std::isfinite(frm))
      throw std::runtime_error("integrate_1d: non-finite integrand");
    double left = simpson(fr.a, fr.fa, fr.m, fr.fm, flm);
    double right = simpson(fr.m, fr.fm, fr.b, fr.fb, frm);
    double delta = left + right - fr.whole;
    if (fr.depth <= 0 || std::fabs(delta) <= 15.0 * fr.tol) {
      total += left + right + delta / 15.0;
    } else {
      stack.push_back({fr.a, fr.fa, fr.m, fr.fm, lm, flm, left, 0.5 * fr.tol, fr.depth - 1});
      stack.push_back({fr.m, fr.fm, fr.b, fr.fb, rm, frm, right, 0.5 * fr.tol, fr.depth - 1});
    }
  }
  return total;
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

inline LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_line: need >= 2 points");
  double n = double(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
  }
  double vx = sxx - sx * sx / n;
  double vy = syy - sy * sy / n;
  double cxy = sxy - sx * sy / n;
  if (vx <= 0) throw std::invalid_argument("fit_line: degenerate abscissae");
  LineFit out;
  out.slope = cxy / vx;
  out.intercept = (sy - out.slope * sx) / n;
  out.r2 = vy > 0 ? cxy * cxy / (vx * vy) : 1.0;
  return out;
}

// tridiagonal solve (Thomas); rhs overwritten with the solution
inline void solve_tridiag(std::vector<double>& lower, std::vector<double>& diag,
                          std::vector<double>& upper, std::vector<double>& rhs) {
  size_t n = diag.size();
  for (size_t i = 1; i < n; ++i) {
    double w = lower[i] / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  rhs[n - 1] /= diag[n - 1];
  for (size_t i = n - 1; i-- > 0;) rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
}

// conjugate gradients on a matrix-free SPD operator; apply(x, out)
// projector, if supplied, is applied to rhs/iterates (for the periodic
// cell problem's zero-mean gauge)
template <class Apply, class Project>
int conjugate_gradient(Apply apply, std::vector<double>& x, std::vector<double> b,
                       double tol, int maxit, Project project) {
  size_t n = x.size();
  std::vector<double> r(n), p(n), ap(n);
  project(b);
  apply(x, ap);
  for (size_t i = 0; i < n; ++i) r[i] = b[i] - ap[i];
  project(r);
  p = r;
  double rr = 0;
  for (size_t i = 0; i < n; ++i) rr += r[i] * r[i];
  double b2 = 0;
  for (size_t i = 0; i < n; ++i) b2 += b[i] * b[i];
  double stop = tol * tol * (b2 > 0 ? b2 : 1.0);
  int it = 0;
  while (rr > stop && it < maxit) {
    apply(p, ap);
    double pap = 0;
    for (size_t i = 0; i < n; ++i) pap += p[i] * ap[i];
    if (pap <= 0) throw std::runtime_error("conjugate_gradient: operator not positive definite");
    double alpha = rr / pap;
    for (size_t i = 0; i < n; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * ap[i];
    }
    project(r);
    double rr2 = 0;
    for (size_t i = 0; i < n; ++i) rr2 += r[i] * r[i];
    double beta = rr2 / rr;
    rr = rr2;
    for (size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
    ++it;
  }
  if (rr > stop) throw std::runtime_error("conjugate_gradient: no convergence within iteration cap");
  return it;
}

}  // namespace kolab
