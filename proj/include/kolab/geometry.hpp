#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace kolab {

inline constexpr double kPi = 3.14159265358979323846;

// vector in R^m, m in {1,2}; fixed capacity keeps hot loops allocation-free
struct VecM {
  int m = 1;
  std::array<double, 2> c{};

  double& operator[](int i) { return c[size_t(i)]; }
  double operator[](int i) const { return c[size_t(i)]; }
  static VecM zero(int m) { return VecM{m, {0.0, 0.0}}; }
};

inline VecM vec1(double x) { return VecM{1, {x, 0.0}}; }
inline VecM vec2(double x0, double x1) { return VecM{2, {x0, x1}}; }

inline VecM operator+(VecM a, const VecM& b) {
  for (int i = 0; i < a.m; ++i) a.c[size_t(i)] += b.c[size_t(i)];
  return a;
}
inline VecM operator-(VecM a, const VecM& b) {
  for (int i = 0; i < a.m; ++i) a.c[size_t(i)] -= b.c[size_t(i)];
  return a;
}
inline VecM operator*(double s, VecM a) {
  for (int i = 0; i < a.m; ++i) a.c[size_t(i)] *= s;
  return a;
}
inline VecM operator-(VecM a) { return -1.0 * a; }
inline double dot(const VecM& a, const VecM& b) {
  double s = 0;
  for (int i = 0; i < a.m; ++i) s += a.c[size_t(i)] * b.c[size_t(i)];
  return s;
}
inline double norm2(const VecM& a) { return std::sqrt(dot(a, a)); }

// point (X, Y, t) on the Kolmogorov group; constructors reject non-finite input
struct PhasePoint {
  VecM X{};
  VecM Y{};
  double t = 0.0;

  PhasePoint() = default;
  PhasePoint(const VecM& X_, const VecM& Y_, double t_);
  int m() const { return X.m; }
};

PhasePoint pp1(double x, double y, double t);
PhasePoint pp2(double x0, double x1, double y0, double y1, double t);
PhasePoint origin(int m);

// q = 4m + 2
int homogeneous_dimension(int m);

PhasePoint compose(const PhasePoint& p, const PhasePoint& q);
PhasePoint inverse(const PhasePoint& p);
PhasePoint dilate(double r, const PhasePoint& p);

// |X| + |Y|^(1/3) + |t|^(1/2), Euclidean norms on the blocks
double group_norm(const PhasePoint& p);

// q^-1 o p in closed form: (X - X~, Y - Y~ + (t - t~) X~, t - t~).
// Algebraically equal to compose(inverse(q), p) but cancels exactly on the
// diagonal, which the cube root in the norm would otherwise amplify.
PhasePoint group_rel(const PhasePoint& p, const PhasePoint& q);

// (|q^-1 o p| + |p^-1 o q|) / 2; symmetric, vanishes only on the diagonal
double quasi_distance(const PhasePoint& p, const PhasePoint& q);

// open ball: strict inequality
bool ball_contains(const PhasePoint& center, double r, const PhasePoint& p);

enum class RefSign { plus, minus };

struct ReferenceParams {
  double rho = 1.0;
  double lambda = 1.0;
  RefSign sign = RefSign::plus;
};

// the tuple (0, L*rho, 0, -+ (2/3) L rho^3, +- rho^2) in the
// R^(m-1) x R x R^(m-1) x R x R coordinate split
PhasePoint reference_offset(int m, const ReferenceParams& rp);
// base composed with the offset tuple
PhasePoint reference_point(const PhasePoint& base, const ReferenceParams& rp);

VecM project_X(const PhasePoint& p);
struct XtPoint {
  VecM X;
  double t;
};
XtPoint project_Xt(const PhasePoint& p);

// Monte Carlo ball-volume estimate with a conditional Y-slice estimator:
// (X, t) drawn from the tight product region forced by d >= |X| + |t|^(1/2),
// then Y from the disc allowed by the remaining slack, weighted by its area.
struct BallVolumeEstimate {
  double volume = 0.0;
  double stderr_ = 0.0;
  int64_t n = 0;
};
BallVolumeEstimate mc_ball_volume(int m, double r, int64_t n, uint64_t seed,
                                  uint64_t stream = 0);

}  // namespace kolab
