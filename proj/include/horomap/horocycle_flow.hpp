// Return time of the section map along the horocycle flow (two tables of
// rows built from the support functions u, v, delta), the PSL(2,R) lift
// of a section point, the matrix route to the same return time, the
// upper-half-plane chart, and the event-driven suspension flow.
#pragma once

#include "horomap/wpoint.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

namespace horomap {

using PslMatrix = Eigen::Matrix2d;

struct NonUnipotentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UvDelta {
  double u;
  double v;
  int delta;  // 1 exactly on the tangency sheet
};

// u = -eps sqrt(r^2-gamma^2)/gamma, v = eps r/gamma, delta = [eps = 0].
template <typename S>
UvDelta uv_delta(const WPoint<S>& p) {
  const double g = to_double(p.gamma);
  const double r = to_double(p.r);
  const int e = eps_value(p.eps);
  if (e == 0) return {0.0, 0.0, 1};
  const double root = std::sqrt(std::max(0.0, r * r - g * g));
  return {-e * root / g, e * r / g, 0};
}

// s_h < 0 everywhere: the flow reaches the section only at negative times.
template <typename S>
double return_time(const WPoint<S>& p) {
  const UvDelta in = uv_delta(p);
  const UvDelta out = uv_delta(step(p).image);
  const double g = to_double(p.gamma);
  const double r = to_double(p.r);
  const double dsum = out.delta + in.delta;
  if (p.eps == Eps::minus) {
    const double low = 1.0 + g;
    const double high = g * (1.0 + g);
    if (r < std::min(low, high)) return out.u - in.u;
    if (r < high) return (out.u - out.v) - (in.u - in.v) + dsum;
    return (out.u + out.v) - (in.u + in.v) - dsum;
  }
  if (r < 1.0 - g) return (out.u - out.v) - (in.u - in.v) + dsum;
  return (out.u + out.v) - (in.u + in.v) - dsum;
}

// The unique Gamma in PSL(2,R) carrying (i, up) to the section point.
template <typename S>
PslMatrix lift(const WPoint<S>& p) {
  const double g = to_double(p.gamma);
  const double r = to_double(p.r);
  const int e = eps_value(p.eps);
  const double root = e == 0 ? 0.0 : std::sqrt(std::max(0.0, r * r - g * g));
  const double s = std::sqrt(2.0 * r);
  PslMatrix m;
  m << g / s, -(r + e * root) / s, 1.0 / s, (r - e * root) / (g * s);
  return m;
}

inline PslMatrix to_psl(const Mat2Z& g) {
  PslMatrix m;
  m << g.a.convert_to<double>(), g.b.convert_to<double>(), g.c.convert_to<double>(),
      g.d.convert_to<double>();
  return m;
}

// Independent route to s_h: lift both endpoints, undo the step matrix and
// read the translation part of the resulting parabolic element. Any
// deviation from an upper-triangular unipotent signals a wrong branch.
template <typename S>
double return_time_matrix(const WPoint<S>& p, double tol = 1e-9) {
  const HoroStep<S> st = step(p);
  PslMatrix prod =
      lift(p).inverse() * to_psl(st.matrix).inverse() * lift(st.image);
  if (prod.trace() < 0) prod = -prod;  // PSL sign normalisation
  if (std::abs(prod(0, 0) - 1.0) > tol || std::abs(prod(1, 1) - 1.0) > tol ||
      std::abs(prod(1, 0)) > tol)
    throw NonUnipotentError("return-time product is not unipotent upper-triangular");
  return prod(0, 1);
}

struct ChartPoint {
  double x;
  double y;
  double theta;
};

// (gamma, r) with the from-the-top horocycle parameter xi mapped to the
// upper half-plane; xi = 0 is the top of the horocycle, theta = -pi.
template <typename S>
ChartPoint chart_to_upper_half_plane(const WPoint<S>& p, double xi) {
  const double g = to_double(p.gamma);
  const double r = to_double(p.r);
  const double denom = xi * xi + 1.0;
  ChartPoint out;
  out.x = g - 2.0 * r * xi / denom;
  out.y = 2.0 * r / denom;
  out.theta = xi == 0.0 ? -std::numbers::pi : -2.0 * std::atan(1.0 / xi);
  return out;
}

template <typename S>
struct SuspensionPoint {
  WPoint<S> base;
  double xi;  // time offset from the section hit, s_h(base) <= xi <= 0

  SuspensionPoint(WPoint<S> base_, double xi_) : base(std::move(base_)), xi(xi_) {
    if (xi > 0 || xi < return_time(base))
      throw DomainError("suspension coordinate outside [s_h, 0]");
  }
};

// Flow by dt, crossing cells event by event: downward crossings apply the
// section map, upward crossings its inverse.
template <typename S>
SuspensionPoint<S> suspension_step(const SuspensionPoint<S>& s, double dt) {
  WPoint<S> base = s.base;
  double xi = s.xi + dt;
  while (xi <= return_time(base)) {
    xi -= return_time(base);
    base = step(base).image;
  }
  while (xi > 0) {
    base = step_inverse(base);
    xi += return_time(base);
  }
  return SuspensionPoint<S>(std::move(base), xi);
}

}  // namespace horomap
