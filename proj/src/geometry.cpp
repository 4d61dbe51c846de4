#include "kolab/geometry.hpp"

#include <cmath>
#include <string>

#include "kolab/parallel.hpp"
#include "kolab/rng.hpp"

namespace kolab {

namespace {

void require_finite(const VecM& v, const char* what) {
  for (int i = 0; i < v.m; ++i)
    if (!std::isfinite(v[i])) throw std::invalid_argument(std::string(what) + ": non-finite component");
}

void require_same_m(const PhasePoint& p, const PhasePoint& q) {
  if (p.m() != q.m()) throw std::invalid_argument("phase points of different dimension");
}

}  // namespace

PhasePoint::PhasePoint(const VecM& X_, const VecM& Y_, double t_) : X(X_), Y(Y_), t(t_) {
  if (X.m < 1 || X.m > 2 || X.m != Y.m) throw std::invalid_argument("phase point: bad dimension");
  require_finite(X, "phase point X");
  require_finite(Y, "phase point Y");
  if (!std::isfinite(t)) throw std::invalid_argument("phase point t: non-finite");
}

PhasePoint pp1(double x, double y, double t) { return PhasePoint(vec1(x), vec1(y), t); }
PhasePoint pp2(double x0, double x1, double y0, double y1, double t) {
  return PhasePoint(vec2(x0, x1), vec2(y0, y1), t);
}
PhasePoint origin(int m) { return PhasePoint(VecM::zero(m), VecM::zero(m), 0.0); }

int homogeneous_dimension(int m) { return 4 * m + 2; }

PhasePoint compose(const PhasePoint& p, const PhasePoint& q) {
  require_same_m(p, q);
  PhasePoint r;
  r.X = p.X + q.X;
  r.Y = p.Y + q.Y - q.t * p.X;
  r.t = p.t + q.t;
  return r;
}

PhasePoint inverse(const PhasePoint& p) {
  PhasePoint r;
  r.X = -p.X;
  r.Y = -(p.Y + p.t * p.X);
  r.t = -p.t;
  return r;
}

PhasePoint dilate(double r, const PhasePoint& p) {
  if (!(r > 0)) throw std::invalid_argument("dilate: r must be positive");
  PhasePoint s;
  s.X = r * p.X;
  s.Y = (r * r * r) * p.Y;
  s.t = r * r * p.t;
  return s;
}

double group_norm(const PhasePoint& p) {
  return norm2(p.X) + std::cbrt(norm2(p.Y)) + std::sqrt(std::fabs(p.t));
}

PhasePoint group_rel(const PhasePoint& p, const PhasePoint& q) {
  require_same_m(p, q);
  PhasePoint r;
  r.X = p.X - q.X;
  r.Y = p.Y - q.Y + (p.t - q.t) * q.X;
  r.t = p.t - q.t;
  return r;
}

double quasi_distance(const PhasePoint& p, const PhasePoint& q) {
  return 0.5 * (group_norm(group_rel(p, q)) + group_norm(group_rel(q, p)));
}

bool ball_contains(const PhasePoint& center, double r, const PhasePoint& p) {
  if (!(r > 0)) throw std::invalid_argument("ball_contains: r must be positive");
  return quasi_distance(p, center) < r;
}

PhasePoint reference_offset(int m, const ReferenceParams& rp) {
  if (!(rp.rho > 0)) throw std::invalid_argument("reference params: rho must be positive");
  if (!(rp.lambda >= 1)) throw std::invalid_argument("reference params: lambda must be >= 1");
  double s = rp.sign == RefSign::plus ? 1.0 : -1.0;
  VecM X = VecM::zero(m);
  VecM Y = VecM::zero(m);
  X[m - 1] = rp.lambda * rp.rho;
  Y[m - 1] = -s * (2.0 / 3.0) * rp.lambda * rp.rho * rp.rho * rp.rho;
  return PhasePoint(X, Y, s * rp.rho * rp.rho);
}

PhasePoint reference_point(const PhasePoint& base, const ReferenceParams& rp) {
  return compose(base, reference_offset(base.m(), rp));
}

VecM project_X(const PhasePoint& p) { return p.X; }
XtPoint project_Xt(const PhasePoint& p) { return XtPoint{p.X, p.t}; }

namespace {

struct VolAcc {
  double sum = 0.0;
  double sumsq = 0.0;
};

}  // namespace

BallVolumeEstimate mc_ball_volume(int m, double r, int64_t n, uint64_t seed, uint64_t stream) {
  if (m < 1 || m > 2) throw std::invalid_argument("mc_ball_volume: m must be 1 or 2");
  if (!(r > 0) || n < 1) throw std::invalid_argument("mc_ball_volume: bad r or n");

  // d(p, 0) >= |X| + |t|^(1/2), so (X, t) ranges over the |X| < r ball times
  // |t| < r^2; the Y slice is bounded through |Y + tX| >= |Y| - |t||X|
  const double vol_xt = (m == 1 ? 2.0 * r : kPi * r * r) * (2.0 * r * r);
  const PhasePoint c = origin(m);

  VolAcc acc;
  blockwise_reduce(
      n, int64_t(1) << 16, acc,
      [&](int64_t lo, int64_t hi, VolAcc& a) {
        for (int64_t i = lo; i < hi; ++i) {
          CounterRng g(seed, stream * 0x100000000ULL + uint64_t(i));
          PhasePoint p = origin(m);
          double xn;
          if (m == 1) {
            p.X[0] = g.uniform(-r, r);
            xn = std::fabs(p.X[0]);
          } else {
            double rad = r * std::sqrt(g.next_unit());
            double ang = 2.0 * kPi * g.next_unit();
            p.X[0] = rad * std::cos(ang);
            p.X[1] = rad * std::sin(ang);
            xn = rad;
          }
          p.t = g.uniform(-r * r, r * r);
          double slack = r - xn - std::sqrt(std::fabs(p.t));
          if (slack <= 0) continue;
          double a3 = slack * slack * slack;
          double ymax = std::min(8.0 * a3, std::fabs(p.t) * xn + a3);
          double wy;
          if (m == 1) {
            p.Y[0] = g.uniform(-ymax, ymax);
            wy = 2.0 * ymax;
          } else {
            double rad = ymax * std::sqrt(g.next_unit());
            double ang = 2.0 * kPi * g.next_unit();
            p.Y[0] = rad * std::cos(ang);
            p.Y[1] = rad * std::sin(ang);
            wy = kPi * ymax * ymax;
          }
          if (ball_contains(c, r, p)) {
            double v = vol_xt * wy;
            a.sum += v;
            a.sumsq += v * v;
          }
        }
      },
      [](VolAcc& t, const VolAcc& part) {
        t.sum += part.sum;
        t.sumsq += part.sumsq;
      });

  BallVolumeEstimate out;
  out.n = n;
  out.volume = acc.sum / double(n);
  double var = acc.sumsq / double(n) - out.volume * out.volume;
  out.stderr_ = std::sqrt(std::max(0.0, var) / double(n));
  return out;
}

}  // namespace kolab
