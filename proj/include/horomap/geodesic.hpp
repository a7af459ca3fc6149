// The companion first-return map of the geodesic flow on the same
// section: coordinates (gamma, eta) = (forward endpoint, minus backward
// endpoint), its three-branch map with the cusp sentinel at gamma = 1,
// the positive return time rho_g, the PSL(2,R) lift, the chart, and the
// invariant measure with density (gamma+eta)^-2.
#pragma once

#include "horomap/horocycle_flow.hpp"
#include "horomap/lr_word.hpp"
#include "horomap/quadrature.hpp"
#include "horomap/rational.hpp"

#include <cmath>
#include <optional>
#include <random>

namespace horomap {

template <typename S>
struct GPoint {
  S gamma;
  S eta;

  GPoint(S gamma_, S eta_) : gamma(std::move(gamma_)), eta(std::move(eta_)) {
    if (!(gamma > 0) || !(eta > 0)) throw DomainError("GPoint needs gamma, eta > 0");
  }

  friend bool operator==(const GPoint& x, const GPoint& y) {
    return x.gamma == y.gamma && x.eta == y.eta;
  }
};

using GPointQ = GPoint<Rational>;
using GPointD = GPoint<double>;

// Image of one geodesic return; an empty image is the sentinel (0, oo):
// the geodesic ends in the cusp and the orbit stops.
template <typename S>
struct GStep {
  std::optional<GPoint<S>> image;
  std::optional<double> rho;
};

// (gamma-1, eta+1) if gamma > 1; (gamma/(1-gamma), eta/(1+eta)) if
// gamma < 1; the sentinel if gamma = 1. The first coordinate is the
// extended Farey map.
template <typename S>
GStep<S> g_step(const GPoint<S>& p) {
  const S one(1);
  const int cg = cmp3(p.gamma, one).sign;
  if (cg == 0) return GStep<S>{std::nullopt, std::nullopt};
  GStep<S> out;
  if (cg > 0)
    out.image.emplace(S(p.gamma - one), S(p.eta + one));
  else
    out.image.emplace(S(p.gamma / (one - p.gamma)), S(p.eta / (one + p.eta)));
  const double g = to_double(p.gamma), e = to_double(p.eta);
  out.rho = cg > 0 ? 0.5 * std::log((1.0 + 1.0 / e) / (1.0 - 1.0 / g))
                   : 0.5 * std::log((1.0 + e) / (1.0 - g));
  return out;
}

template <typename S>
double g_return_time(const GPoint<S>& p) {
  const GStep<S> st = g_step(p);
  if (!st.rho) throw DomainError("return time undefined at gamma = 1");
  return *st.rho;
}

template <typename S>
PslMatrix g_lift(const GPoint<S>& p) {
  const double g = to_double(p.gamma), e = to_double(p.eta);
  const double q = std::pow(e / g, 0.25);
  const double s = std::sqrt(g + e);
  PslMatrix m;
  m << q * g / s, -(1.0 / q) * e / s, q / s, (1.0 / q) / s;
  return m;
}

// Geodesic chart: tau = 0 is the top of the half-circle with diameter
// [-eta, gamma]; the flow translates tau.
template <typename S>
ChartPoint g_chart(const GPoint<S>& p, double tau) {
  const double g = to_double(p.gamma), e = to_double(p.eta);
  const double ep = std::exp(tau), em = std::exp(-tau);
  return ChartPoint{(g * ep - e * em) / (ep + em), (g + e) / (ep + em),
                    -2.0 * std::atan(ep)};
}

// mu of the rectangle (s,t) x (u,v) in (gamma, eta).
inline double mu_measure(double s, double t, double u, double v) {
  if (!(t > s && v > u && s >= 0 && u >= 0)) throw EmptyRegion("degenerate region");
  return std::log((t + u) * (s + v) / ((s + u) * (t + v)));
}

// Integral of rho_g against mu over the quadrant, compactified by
// gamma = a/(1-a), eta = b/(1-b); the gamma = 1 line is an integrable
// log singularity and is approached but not touched.
inline double geodesic_volume(double tol = 1e-6) {
  auto integrand = [](double a, double b) {
    const double g = a / (1.0 - a), e = b / (1.0 - b);
    const double ja = 1.0 / ((1.0 - a) * (1.0 - a)), jb = 1.0 / ((1.0 - b) * (1.0 - b));
    const double rho = g > 1.0 ? 0.5 * std::log((1.0 + 1.0 / e) / (1.0 - 1.0 / g))
                               : 0.5 * std::log((1.0 + e) / (1.0 - g));
    return rho / ((g + e) * (g + e)) * ja * jb;
  };
  const double eps = 1e-9;
  double total = 0.0;
  total += integrate2d(integrand, eps, 0.5 - eps, eps, 1.0 - eps, tol);
  total += integrate2d(integrand, 0.5 + eps, 1.0 - eps, eps, 1.0 - eps, tol);
  return total;
}

// mu(P_g^-1 A) for a rectangle A, by importance sampling over the exact
// branch preimage boxes; the eta'-range must stay clear of 1 on the
// contracting branch (its inverse has a pole there).
inline MonteCarloEstimate mu_preimage_estimate(double g_lo, double g_hi, double e_lo,
                                               double e_hi, std::size_t samples,
                                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  MonteCarloEstimate out;
  double variance = 0.0;
  std::vector<Box> boxes;
  if (e_hi > 1.0)  // expanding branch: (g'+1, e'-1)
    boxes.push_back(Box{g_lo + 1.0, g_hi + 1.0, std::max(e_lo, 1.0) - 1.0, e_hi - 1.0});
  if (e_lo < 1.0) {  // contracting branch: (g'/(1+g'), e'/(1-e'))
    const double hi = std::min(e_hi, 1.0);
    if (hi == 1.0) throw DomainError("preimage box unbounded: eta-range touches 1");
    boxes.push_back(Box{g_lo / (1.0 + g_lo), g_hi / (1.0 + g_hi), e_lo / (1.0 - e_lo),
                        hi / (1.0 - hi)});
  }
  for (const Box& box : boxes) {
    Box b = box;
    b.g_lo = std::max(b.g_lo, 1e-12);
    b.r_lo = std::max(b.r_lo, 1e-12);
    if (b.empty()) continue;
    const double area = (b.g_hi - b.g_lo) * (b.r_hi - b.r_lo);
    double sum = 0.0, sum2 = 0.0;
    for (std::size_t n = 0; n < samples; ++n) {
      const double g = b.g_lo + unif(rng) * (b.g_hi - b.g_lo);
      const double e = b.r_lo + unif(rng) * (b.r_hi - b.r_lo);
      double w = 0.0;
      const GStep<double> st = g_step(GPointD(g, e));
      if (st.image && st.image->gamma > g_lo && st.image->gamma < g_hi &&
          st.image->eta > e_lo && st.image->eta < e_hi)
        w = 1.0 / ((g + e) * (g + e));
      sum += w;
      sum2 += w * w;
    }
    const double mean = sum / double(samples);
    out.value += area * mean;
    variance += area * area * (sum2 / double(samples) - mean * mean) / double(samples);
  }
  out.stderr_ = std::sqrt(variance);
  return out;
}

}  // namespace horomap
