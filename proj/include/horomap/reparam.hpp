// Time reparameterization of the section map on X = [1,oo)^2 x {0,+1}:
// the step counts n1 (reach first coordinate >= 1) and n2 (sheet -1 back
// to +1), the accelerated map with its time leap tau, and the factor map
// T(t) = 1/(1+floor(t)-t) conjugate to the backward continued fraction
// map.
#pragma once

#include "horomap/wpoint.hpp"

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace horomap {

template <typename S>
struct XPoint {
  S gamma;
  S r;
  Eps eps;

  XPoint(S gamma_, S r_, Eps eps_)
      : gamma(std::move(gamma_)), r(std::move(r_)), eps(eps_) {
    if (eps == Eps::minus) throw DomainError("X excludes the sheet eps = -1");
    if (!(gamma >= S(1)) || !(r >= S(1))) throw DomainError("X needs gamma, r >= 1");
    if (r < gamma || ((r == gamma) != (eps == Eps::zero)))
      throw DomainError("X inherits the W invariants");
  }

  WPoint<S> as_wpoint() const { return WPoint<S>(gamma, r, eps); }
};

// Least n with first coordinate of the n-th iterate >= 1, for a start
// (gamma, r, eps != -1) with gamma < 1: one more than the first k >= 0
// with r >= (1-(k+1)gamma)(1-k gamma), capped by the step at which the
// gamma-iterates themselves pass 1.
inline Int n1_steps(const Rational& gamma, const Rational& r) {
  if (!(gamma > 0) || !(gamma < 1)) throw DomainError("n1 needs 0 < gamma < 1");
  Int k = 0;
  while ((1 - (k + 1) * gamma) * (1 - k * gamma) > r) ++k;
  Int j = 1;
  while (1 - j * gamma > gamma) ++j;
  return 1 + (k < j ? k : j);
}

// Count of Farey pairs (p/q, p'/q') with (q gamma + p)(q' gamma + p')
// below r: doubled, plus ties, minus one for the section itself. Equals
// per(r) - 1 at gamma = 1. Enumerated on the mediant tree of pairs from
// (0/1, 1/0), where each pair is carried by its two linear factors.
template <typename S>
Int n2_steps(const S& gamma, const S& r) {
  if (!(gamma > S(0))) throw DomainError("n2 needs gamma > 0");
  Int strict = 0, ties = 0;
  std::vector<std::pair<S, S>> stack{{gamma, S(1)}};
  while (!stack.empty()) {
    auto [fx, fy] = std::move(stack.back());
    stack.pop_back();
    const S phi = fx * fy;
    if (phi > r) continue;
    if (phi == r)
      ++ties;
    else
      ++strict;
    S fm = fx + fy;
    stack.push_back({fx, fm});
    stack.push_back({std::move(fm), std::move(fy)});
  }
  return 2 * strict + ties - 1;
}

// Time leap of the accelerated map.
inline Int tau_steps(const Rational& gamma, const Rational& r) {
  if (is_integer(gamma)) return num(gamma) - 1;
  const Int fl = floor_int(gamma);
  const Rational shrink = 1 + Rational(fl) - gamma;  // in (0,1)
  return fl + 1 + n2_steps(Rational(1) / shrink, r / (shrink * shrink));
}

template <typename S>
struct AccStep {
  XPoint<S> image;
  Int tau;
  bool snapped = false;  // float mode: gamma was snapped to an integer
};

// The accelerated map: tau applications of the section map, landing back
// in X at (1/(1+floor(gamma)-gamma), r/(1+floor(gamma)-gamma)^2) for
// non-integer gamma and at (1, r, +1) for integer gamma >= 2; gamma = 1
// is the identity (tau = 0). The image sheet comes from the actual
// composition, which is also checked against the closed form.
inline AccStep<Rational> acc_step(const XPoint<Rational>& p) {
  const Int tau = tau_steps(p.gamma, p.r);
  WPoint<Rational> it = p.as_wpoint();
  for (Int i = 0; i < tau; ++i) it = step(it).image;
  Rational gamma_expected = 1, r_expected = p.r;
  if (!is_integer(p.gamma)) {
    const Rational shrink = 1 + Rational(floor_int(p.gamma)) - p.gamma;
    gamma_expected = Rational(1) / shrink;
    r_expected = p.r / (shrink * shrink);
  }
  if (it.gamma != gamma_expected || it.r != r_expected)
    throw std::logic_error("accelerated map: composition disagrees with closed form");
  return AccStep<Rational>{XPoint<Rational>(it.gamma, it.r, it.eps), tau, false};
}

inline AccStep<double> acc_step(const XPoint<double>& p, double snap_tol = 1e-12) {
  const double rounded = std::round(p.gamma);
  const bool snapped = p.gamma != rounded &&
                       std::abs(p.gamma - rounded) <= snap_tol * std::max(1.0, rounded);
  const double g = snapped ? rounded : p.gamma;
  Int tau;
  double gamma_out, r_out;
  if (g == std::floor(g)) {
    tau = Int(static_cast<long long>(g)) - 1;
    gamma_out = 1.0;
    r_out = p.r;
  } else {
    const double fl = std::floor(g);
    const double shrink = 1.0 + fl - g;
    tau = Int(static_cast<long long>(fl)) + 1 +
          n2_steps(1.0 / shrink, p.r / (shrink * shrink));
    gamma_out = 1.0 / shrink;
    r_out = p.r / (shrink * shrink);
  }
  WPoint<double> it(g, p.r, p.eps);
  for (Int i = 0; i < tau; ++i) it = step(it).image;
  return AccStep<double>{XPoint<double>(gamma_out, r_out, it.eps), tau, snapped};
}

// T(t) = 1/(1 + floor(t) - t) on [1, oo); fixes 1, sends every integer
// to 1.
inline Rational t_map(const Rational& t) {
  if (t < 1) throw DomainError("T is defined on [1, oo)");
  return Rational(1) / (1 + Rational(floor_int(t)) - t);
}

inline double t_map(double t) {
  if (t < 1) throw DomainError("T is defined on [1, oo)");
  return 1.0 / (1.0 + std::floor(t) - t);
}

// F(s) = 1/(1-s) mod 1 on [0,1), the backward continued fraction map.
inline Rational backward_cf(const Rational& s) {
  if (s < 0 || s >= 1) throw DomainError("F is defined on [0, 1)");
  return frac_part(Rational(1) / (1 - s));
}

inline double backward_cf(double s) {
  if (s < 0 || s >= 1) throw DomainError("F is defined on [0, 1)");
  const double y = 1.0 / (1.0 - s);
  return y - std::floor(y);
}

// The conjugacy phi(t) = 1 - 1/t between T and F.
inline Rational t_conjugacy(const Rational& t) { return 1 - Rational(1) / t; }

// Least k with T^k(t) = 1; finite for every rational t >= 1.
inline Int rational_absorption(const Rational& t) {
  if (t < 1) throw DomainError("absorption is defined on [1, oo)");
  Rational x = t;
  Int k = 0;
  const Int limit = num(t) + den(t);
  while (x != 1) {
    x = t_map(x);
    ++k;
    if (k > limit) throw std::logic_error("absorption did not terminate");
  }
  return k;
}

// mu_T([a,b]) for 1 < a < b, the T-invariant measure dt/(t(t-1)).
inline double mu_t_measure(double a, double b) {
  if (!(1.0 < a && a < b)) throw DomainError("mu_T needs 1 < a < b");
  return std::log((b - 1.0) / b) - std::log((a - 1.0) / a);
}

}  // namespace horomap
