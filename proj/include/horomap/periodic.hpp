// Periodic structure of the section map: every orbit with rational
// tangency point closes, the closed horocycle of length 1/y embeds as
// (1, 1/(2y), -1), the period counts coprime pairs below the radius, the
// permuted-tree walk reproduces the dynamical order, and orbit points
// equidistribute against nu.
#pragma once

#include "horomap/measure.hpp"
#include "horomap/stern_brocot.hpp"
#include "horomap/wpoint.hpp"

#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

namespace horomap {

struct OutOfRange : std::domain_error {
  using std::domain_error::domain_error;
};

struct ZeroCount : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The closed horocycle {x + iy} of length 1/y meets the section iff
// y <= 1/2; its section point is (1, 1/(2y), -1), tangent when y = 1/2.
inline WPointQ closed_horocycle_embed(const Rational& y) {
  if (!(y > 0) || y > Rational(1, 2))
    throw OutOfRange("closed horocycle misses the section unless 0 < y <= 1/2");
  if (y == Rational(1, 2)) return WPointQ(1, 1, Eps::zero);
  return WPointQ(1, Rational(1) / (2 * y), Eps::minus);
}

// per(r) = 2 #{(a,b)=1, ab<r} + #{(a,b)=1, ab=r}.
inline Int period_formula(const Rational& r) {
  if (r < 1) throw OutOfRange("period is defined for r >= 1");
  Int strict = 0, ties = 0;
  for_each_energy_bounded(r, [&](std::int64_t p, std::int64_t q) {
    const Rational e(Int(p) * Int(q));
    if (e < r)
      ++strict;
    else
      ++ties;
  });
  return 2 * strict + ties;
}

// The orbit of (1, r, -1) as a set: one point per sheet for each coprime
// (a,b) with ab < r, plus the tangency points at ab = r.
inline std::vector<WPointQ> orbit_set(const Rational& r) {
  if (r < 1) throw OutOfRange("orbits of (1,r,-1) need r >= 1");
  std::vector<WPointQ> pts;
  for_each_energy_bounded(r, [&](std::int64_t p, std::int64_t q) {
    const Rational gamma(Int(p), Int(q));
    const Rational radius = r / Rational(Int(q) * Int(q));
    if (Rational(Int(p) * Int(q)) < r) {
      pts.emplace_back(gamma, radius, Eps::minus);
      pts.emplace_back(gamma, radius, Eps::plus);
    } else {
      pts.emplace_back(gamma, radius, Eps::zero);
    }
  });
  return pts;
}

// Iterate the section map from `start` until it returns (at most
// max_steps applications); the result lists the full cycle in order.
inline std::vector<WPointQ> iterate_orbit(const WPointQ& start,
                                          std::size_t max_steps = 1u << 22) {
  std::vector<WPointQ> orbit{start};
  WPointQ p = step(start).image;
  while (!(p == start)) {
    if (orbit.size() > max_steps) throw std::runtime_error("orbit did not close");
    orbit.push_back(p);
    p = step(p).image;
  }
  return orbit;
}

// Dynamical order of the periodic orbit of (1, r, -1), read off the
// permuted tree: depth-first with the energy cutoff, a fraction visited
// on sheet -1 going down and +1 coming back, once on sheet 0 at a tie.
template <typename S>
std::vector<std::pair<Rational, Eps>> dynamical_walk(const S& r) {
  if (r < S(1)) throw OutOfRange("walk needs r >= 1");
  std::vector<std::pair<Rational, Eps>> out;
  struct Frame {
    std::int64_t p, q;
    bool expanded;
  };
  std::vector<Frame> stack{{1, 1, false}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const S e = [&] {
      if constexpr (is_exact_scalar<S>)
        return S(Int(f.p) * Int(f.q));
      else
        return double(f.p) * double(f.q);
    }();
    if (!f.expanded) {
      if (e > r) {
        stack.pop_back();
        continue;
      }
      if (e == r) {
        out.emplace_back(Rational(Int(f.p), Int(f.q)), Eps::zero);
        stack.pop_back();
        continue;
      }
      out.emplace_back(Rational(Int(f.p), Int(f.q)), Eps::minus);
      f.expanded = true;
      const std::int64_t p = f.p, q = f.q;
      stack.push_back({p + q, q, false});  // right daughter, explored second
      stack.push_back({p, p + q, false});  // left daughter, explored first
    } else {
      out.emplace_back(Rational(Int(f.p), Int(f.q)), Eps::plus);
      stack.pop_back();
    }
  }
  return out;
}

// Same period counted over Farey pairs in [0,1]: 2 #{qq' < r} + #{qq' = r},
// enumerated on the mediant tree of pairs rooted at (0/1, 1/1).
inline Int period_via_farey_pairs(const Rational& r) {
  if (r < 1) throw OutOfRange("period is defined for r >= 1");
  Int strict = 0, ties = 0;
  struct Pair {
    std::int64_t q_lo, q_hi;
  };
  std::vector<Pair> stack{{1, 1}};
  while (!stack.empty()) {
    const Pair pr = stack.back();
    stack.pop_back();
    const Rational prod(Int(pr.q_lo) * Int(pr.q_hi));
    if (prod > r) continue;
    if (prod == r)
      ++ties;
    else
      ++strict;
    stack.push_back({pr.q_lo, pr.q_lo + pr.q_hi});
    stack.push_back({pr.q_lo + pr.q_hi, pr.q_hi});
  }
  return 2 * strict + ties;
}

// Moebius function by linear sieve.
inline std::vector<std::int8_t> moebius_sieve(std::int64_t n) {
  std::vector<std::int8_t> mu(n + 1, 0);
  std::vector<std::int64_t> primes;
  std::vector<bool> composite(n + 1, false);
  if (n >= 1) mu[1] = 1;
  for (std::int64_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (std::int64_t p : primes) {
      if (i * p > n) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  return mu;
}

// #Pi(R) = #{(a,b)=1 : ab <= R} = sum over n <= R of mu^2(n) floor(R/n)
// (the summand counts squarefree divisors).
inline Int coprime_pairs_upto(std::int64_t R, const std::vector<std::int8_t>& mu) {
  Int total = 0;
  for (std::int64_t n = 1; n <= R; ++n)
    if (mu[n] != 0) total += R / n;
  return total;
}

// 2^omega(n): the number of coprime factorizations n = ab.
inline Int squarefree_divisor_count(std::int64_t n) {
  Int count = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      count *= 2;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) count *= 2;
  return count;
}

struct PeriodAsymptoticsRow {
  std::int64_t R;
  Int pi_count;  // #Pi(R)
  Int period;    // per(R)
  double ratio;  // per(R) pi^2 / (12 R log R)
};

// per(R) for integer R via the sieve identity per(R) = 2 #Pi(R) - 2^omega(R),
// with the ratio against the leading asymptotic term.
inline std::vector<PeriodAsymptoticsRow> period_asymptotics_report(
    const std::vector<std::int64_t>& R_list) {
  std::vector<PeriodAsymptoticsRow> rows;
  if (R_list.empty()) return rows;
  std::int64_t maxR = 0;
  for (std::int64_t R : R_list) {
    if (R < 2) throw OutOfRange("asymptotics rows need R >= 2");
    maxR = std::max(maxR, R);
  }
  const auto mu = moebius_sieve(maxR);
  for (std::int64_t R : R_list) {
    PeriodAsymptoticsRow row;
    row.R = R;
    row.pi_count = coprime_pairs_upto(R, mu);
    const Int ties = squarefree_divisor_count(R);
    row.period = 2 * (row.pi_count - ties) + ties;
    row.ratio = row.period.convert_to<double>() * std::numbers::pi * std::numbers::pi /
                (12.0 * double(R) * std::log(double(R)));
    rows.push_back(row);
  }
  return rows;
}

struct CountStatistic {
  Rational R;
  RegionW region;
  Int count = 0;
  double predicted = 0.0;  // (3/pi^2) R nu(region)

  double residual() const { return count.convert_to<double>() - predicted; }
};

// Streaming count of orbit points of (1,R,-1) inside a region; no orbit
// is materialised, the coprime pairs are enumerated with the energy
// cutoff and tested exactly.
inline CountStatistic count_orbit_points(const Rational& R, const RegionW& region) {
  CountStatistic stat;
  stat.R = R;
  stat.region = region;
  const Int g_lo_n = num(region.gamma_lo), g_lo_d = den(region.gamma_lo);
  const Int g_hi_n = num(region.gamma_hi), g_hi_d = den(region.gamma_hi);
  const Int r_lo_n = num(region.r_lo), r_lo_d = den(region.r_lo);
  const Int r_hi_n = num(region.r_hi), r_hi_d = den(region.r_hi);
  const Int Rn = num(R), Rd = den(R);
  Int count = 0;
  for_each_energy_bounded(R, [&](std::int64_t pa, std::int64_t qb) {
    const Int a(pa), b(qb);
    // gamma = a/b strictly inside the gamma-range
    if (!(a * g_lo_d > g_lo_n * b) || !(a * g_hi_d < g_hi_n * b)) return;
    // r = R/b^2 strictly inside the r-range
    const Int b2 = b * b;
    if (!(Rn * r_lo_d > r_lo_n * Rd * b2) || !(Rn * r_hi_d < r_hi_n * Rd * b2)) return;
    const bool tie = a * b * Rd == Rn;
    for (Eps e : {Eps::minus, Eps::zero, Eps::plus}) {
      if (tie != (e == Eps::zero)) continue;
      if (eps_filter_matches(region.eps, e)) ++count;
    }
  });
  stat.count = count;
  stat.predicted = 3.0 / (std::numbers::pi * std::numbers::pi) * to_double(R) *
                   nu_measure(region);
  return stat;
}

struct EquidistributionResult {
  CountStatistic a;
  CountStatistic b;
  double ratio = 0.0;
  double target = 0.0;  // nu(A)/nu(B)
};

inline EquidistributionResult equidistribution_statistic(const Rational& R,
                                                         const RegionW& A,
                                                         const RegionW& B) {
  EquidistributionResult out;
  out.a = count_orbit_points(R, A);
  out.b = count_orbit_points(R, B);
  if (out.b.count == 0) throw ZeroCount("empty reference count; R too small for B");
  out.ratio = out.a.count.convert_to<double>() / out.b.count.convert_to<double>();
  out.target = nu_measure(A) / nu_measure(B);
  return out;
}

}  // namespace horomap
