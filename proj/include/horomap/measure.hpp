// The invariant measure nu (density r^-2) of the section map: closed
// forms on rectangles and trapezoids clipped to r >= gamma, the total
// suspension volume by quadrature, and a Monte-Carlo pushforward check
// of invariance on rectangles.
#pragma once

#include "horomap/horocycle_flow.hpp"
#include "horomap/quadrature.hpp"
#include "horomap/wpoint.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace horomap {

struct EmptyRegion : std::domain_error {
  using std::domain_error::domain_error;
};

enum class EpsFilter { Plus, Minus, Zero, NotMinus, Any };

inline const char* eps_filter_name(EpsFilter f) {
  switch (f) {
    case EpsFilter::Plus: return "+1";
    case EpsFilter::Minus: return "-1";
    case EpsFilter::Zero: return "0";
    case EpsFilter::NotMinus: return "!-1";
    case EpsFilter::Any: return "any";
  }
  return "?";
}

inline bool eps_filter_matches(EpsFilter f, Eps e) {
  switch (f) {
    case EpsFilter::Plus: return e == Eps::plus;
    case EpsFilter::Minus: return e == Eps::minus;
    case EpsFilter::Zero: return e == Eps::zero;
    case EpsFilter::NotMinus: return e != Eps::minus;
    case EpsFilter::Any: return true;
  }
  return false;
}

// Open rectangle in the (gamma, r) plane together with a sheet filter.
struct RegionW {
  Rational gamma_lo, gamma_hi, r_lo, r_hi;
  EpsFilter eps = EpsFilter::NotMinus;

  template <typename S>
  bool contains(const WPoint<S>& p) const {
    if (!eps_filter_matches(eps, p.eps)) return false;
    return p.gamma > S(to_scalar<S>(gamma_lo)) && p.gamma < S(to_scalar<S>(gamma_hi)) &&
           p.r > S(to_scalar<S>(r_lo)) && p.r < S(to_scalar<S>(r_hi));
  }

  template <typename S>
  static S to_scalar(const Rational& x) {
    if constexpr (is_exact_scalar<S>)
      return x;
    else
      return to_double(x);
  }
};

// How many unit-weight sheets the filter selects (the tangency sheet is
// nu-null).
inline int sheet_multiplicity(EpsFilter f) {
  switch (f) {
    case EpsFilter::Plus:
    case EpsFilter::Minus:
    case EpsFilter::NotMinus: return 1;
    case EpsFilter::Any: return 2;
    case EpsFilter::Zero: return 0;
  }
  return 0;
}

// Integral of r^-2 over {s < gamma < t, u < r < v, r > gamma} on one sheet.
inline double nu_sheet_integral(double s, double t, double u, double v) {
  if (!(s >= 0 && t > s && v > u && u > 0)) throw EmptyRegion("degenerate region");
  double total = 0.0;
  // gamma-range limited by r: for r < t the slice is (s, r).
  const double lo1 = std::max(u, s), hi1 = std::min(v, t);
  if (hi1 > lo1) total += std::log(hi1 / lo1) - s * (1.0 / lo1 - 1.0 / hi1);
  const double lo2 = std::max(u, t), hi2 = v;
  if (hi2 > lo2) total += (t - s) * (1.0 / lo2 - 1.0 / hi2);
  if (total <= 0.0) throw EmptyRegion("region does not meet W");
  return total;
}

inline double nu_measure(const RegionW& region) {
  const int mult = sheet_multiplicity(region.eps);
  if (mult == 0) return 0.0;
  return mult * nu_sheet_integral(to_double(region.gamma_lo), to_double(region.gamma_hi),
                                  to_double(region.r_lo), to_double(region.r_hi));
}

// Total mass of the suspension: integral of |s_h| against nu over both
// open sheets, in the coordinates gamma = w e^x, r = e^x where the
// nu-element becomes dw dx.
inline double suspension_volume(double tol = 1e-5, double x_span = 36.0) {
  double total = 0.0;
  for (int e : {-1, +1}) {
    auto integrand = [&](double x, double w) {
      const double r = std::exp(x);
      const double g = w * r;
      if (!(g < r)) return 0.0;
      return std::abs(return_time(WPointD(g, r, eps_from_int(e))));
    };
    total += integrate2d(integrand, -x_span, x_span, 1e-12, 1.0 - 1e-12, tol);
  }
  return total;
}

struct MonteCarloEstimate {
  double value = 0.0;
  double stderr_ = 0.0;
};

struct Box {
  double g_lo = 0, g_hi = 0, r_lo = 0, r_hi = 0;
  bool empty() const { return !(g_hi > g_lo) || !(r_hi > r_lo); }
};

namespace detail {

inline Box box_union(const Box& a, const Box& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return Box{std::min(a.g_lo, b.g_lo), std::max(a.g_hi, b.g_hi),
             std::min(a.r_lo, b.r_lo), std::max(a.r_hi, b.r_hi)};
}

// Rows whose input and image regions both carry positive nu-measure; the
// equality rows are nu-null and do not affect the preimage cover.
inline const std::vector<Branch>& open_rows() {
  static const std::vector<Branch> rows{Branch::T1R1, Branch::T1R3, Branch::T1R5,
                                        Branch::T2R1, Branch::T2R3, Branch::T2R5};
  return rows;
}

// Closure of the gamma'-interval the row's image region allows.
inline Box clip_gamma(Branch b, double g_lo, double g_hi) {
  double lo = g_lo, hi = g_hi;
  switch (b) {
    case Branch::T2R1:
    case Branch::T1R5: hi = std::min(hi, 1.0); break;
    case Branch::T1R3: lo = std::max(lo, 1.0); break;
    case Branch::T2R3: lo = std::max(lo, 2.0); break;
    default: break;
  }
  return Box{lo, hi, 0, 1};
}

// Conservative bounding box of the preimage of box `a` under one row.
// Throws if the inverse Moebius map has a pole on the clipped interval.
inline Box row_preimage_box(Branch b, const Box& a) {
  const BranchInfo& info = branch_info(b);
  const Box clip = clip_gamma(b, a.g_lo, a.g_hi);
  if (!(clip.g_hi > clip.g_lo)) return Box{};
  const Mat2Z ginv = info.matrix.inverse();
  const double c = ginv.c.convert_to<double>(), d = ginv.d.convert_to<double>();
  const double den_lo = c * clip.g_lo + d, den_hi = c * clip.g_hi + d;
  if (den_lo == 0.0 || den_hi == 0.0 || (den_lo < 0) != (den_hi < 0))
    throw DomainError("preimage box unbounded: pole inside the clipped interval");
  const double ga = mobius_apply(ginv, clip.g_lo), gb = mobius_apply(ginv, clip.g_hi);
  // r = r' (c gamma' + d)^2 on the inverse, monotone between poles.
  const double m2a = den_lo * den_lo, m2b = den_hi * den_hi;
  Box out;
  out.g_lo = std::min(ga, gb);
  out.g_hi = std::max(ga, gb);
  out.r_lo = a.r_lo * std::min(m2a, m2b);
  out.r_hi = a.r_hi * std::max(m2a, m2b);
  return out;
}

}  // namespace detail

// nu(P_h^-1 A) estimated by importance sampling over a box that covers the
// preimage on each input sheet up to nu-null sets, for comparison against
// nu(A).
inline MonteCarloEstimate nu_preimage_estimate(const RegionW& region, std::size_t samples,
                                               std::uint64_t seed) {
  const Box a{to_double(region.gamma_lo), to_double(region.gamma_hi),
              to_double(region.r_lo), to_double(region.r_hi)};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  MonteCarloEstimate out;
  double variance = 0.0;
  for (int sheet : {-1, +1}) {
    Box box;
    for (Branch b : detail::open_rows()) {
      const BranchInfo& info = branch_info(b);
      if (eps_value(info.input_sheet) != sheet) continue;
      if (!eps_filter_matches(region.eps, info.output_sheet)) continue;
      box = detail::box_union(box, detail::row_preimage_box(b, a));
    }
    if (box.empty()) continue;
    box.r_lo = std::max(box.r_lo, 1e-12);
    const double area = (box.g_hi - box.g_lo) * (box.r_hi - box.r_lo);
    double sum = 0.0, sum2 = 0.0;
    for (std::size_t n = 0; n < samples; ++n) {
      const double g = box.g_lo + unif(rng) * (box.g_hi - box.g_lo);
      const double r = box.r_lo + unif(rng) * (box.r_hi - box.r_lo);
      double w = 0.0;
      if (r > g) {
        const WPointD p(g, r, eps_from_int(sheet));
        if (region.contains(step(p).image)) w = 1.0 / (r * r);
      }
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
