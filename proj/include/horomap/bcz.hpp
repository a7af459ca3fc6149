// The Farey-triangle side of the story: the BCZ map V on Omega, Farey
// sequences through the next-term recurrence, the passage set F~(Q) that
// matches the orbit of (1, Q^2/2, -1), and the predicate deciding when a
// return interval of the section map crosses the companion section.
#pragma once

#include "horomap/rational.hpp"
#include "horomap/wpoint.hpp"

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace horomap {

struct NotAPassage : std::domain_error {
  using std::domain_error::domain_error;
};

// (alpha, beta) in (0,1]^2 with alpha + beta > 1.
struct OmegaPoint {
  Rational alpha, beta;

  OmegaPoint(Rational alpha_, Rational beta_)
      : alpha(std::move(alpha_)), beta(std::move(beta_)) {
    if (!(alpha > 0) || alpha > 1 || !(beta > 0) || beta > 1 || !(alpha + beta > 1))
      throw DomainError("point outside Omega");
  }

  friend bool operator==(const OmegaPoint& x, const OmegaPoint& y) {
    return x.alpha == y.alpha && x.beta == y.beta;
  }
  friend bool operator<(const OmegaPoint& x, const OmegaPoint& y) {
    if (x.alpha != y.alpha) return x.alpha < y.alpha;
    return x.beta < y.beta;
  }
};

// V(alpha, beta) = (beta, -alpha + floor((1+alpha)/beta) beta).
inline OmegaPoint bcz_step(const OmegaPoint& p) {
  const Int k = floor_int((1 + p.alpha) / p.beta);
  return OmegaPoint(p.beta, -p.alpha + Rational(k) * p.beta);
}

struct FareySeq {
  std::int64_t Q = 1;
  std::vector<Rational> fractions;  // ascending, 0/1 first, 1/1 last

  std::int64_t N() const { return std::int64_t(fractions.size()) - 1; }
};

// All reduced fractions in [0,1] with denominator <= Q, by the next-term
// recurrence q_{i+1} = floor((Q + q_{i-1})/q_i) q_i - q_{i-1}.
inline FareySeq farey_sequence(std::int64_t Q) {
  if (Q < 1) throw DomainError("Farey sequences need Q >= 1");
  FareySeq seq;
  seq.Q = Q;
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = Q;
  seq.fractions.emplace_back(Int(p0), Int(q0));
  while (!(p1 == 1 && q1 == 1)) {
    seq.fractions.emplace_back(Int(p1), Int(q1));
    const std::int64_t k = (Q + q0) / q1;
    const std::int64_t p2 = k * p1 - p0, q2 = k * q1 - q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  seq.fractions.emplace_back(Int(1), Int(1));
  return seq;
}

inline std::vector<std::int64_t> euler_totients(std::int64_t n) {
  std::vector<std::int64_t> phi(n + 1);
  std::iota(phi.begin(), phi.end(), 0);
  for (std::int64_t p = 2; p <= n; ++p)
    if (phi[p] == p)  // p prime
      for (std::int64_t m = p; m <= n; m += p) phi[m] -= phi[m] / p;
  return phi;
}

inline std::int64_t totient_sum(std::int64_t Q) {
  const auto phi = euler_totients(Q);
  std::int64_t sum = 0;
  for (std::int64_t q = 1; q <= Q; ++q) sum += phi[q];
  return sum;
}

// F~(Q) = {(a,b)=1, a<=b<=Q, ab<=Q^2/2} u {(a,b)=1, a>b, a+b<=Q,
// a(a+b)>Q^2/2}; exactly one passage per orbit point, #F~(Q) = N(Q).
inline std::vector<std::pair<std::int64_t, std::int64_t>> tilde_farey(std::int64_t Q) {
  if (Q < 2) throw DomainError("the passage set needs Q >= 2");
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  const std::int64_t q2 = Q * Q;
  for (std::int64_t b = 1; b <= Q; ++b)
    for (std::int64_t a = 1; a <= b; ++a)
      if (2 * a * b <= q2 && std::gcd(a, b) == 1) out.emplace_back(a, b);
  for (std::int64_t b = 1; 2 * b < Q; ++b)
    for (std::int64_t a = b + 1; a + b <= Q; ++a)
      if (2 * a * (a + b) > q2 && std::gcd(a, b) == 1) out.emplace_back(a, b);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool in_tilde_farey(std::int64_t a, std::int64_t b, std::int64_t Q) {
  if (a < 1 || b < 1 || std::gcd(a, b) != 1) return false;
  const std::int64_t q2 = Q * Q;
  if (a <= b) return b <= Q && 2 * a * b <= q2;
  return a + b <= Q && 2 * a * (a + b) > q2;
}

// Where the passage for (a,b) lands in Omega.
inline OmegaPoint passage_point(std::int64_t a, std::int64_t b, std::int64_t Q) {
  if (!in_tilde_farey(a, b, Q)) throw NotAPassage("(a,b) is not a passage for this Q");
  if (a <= b) {
    const std::int64_t k = (Q - a) / b;
    return OmegaPoint(Rational(Int(b), Int(Q)), Rational(Int(a + k * b), Int(Q)));
  }
  return OmegaPoint(Rational(Int(a + b), Int(Q)), Rational(Int(a), Int(Q)));
}

// The point of the fundamental strip seen at a passage: x + iy with
// y = 1/alpha^2 >= 1.
inline std::pair<Rational, Rational> embed_alpha_beta(const OmegaPoint& p) {
  const Rational ratio = p.beta / p.alpha;
  const Rational y = Rational(1) / (p.alpha * p.alpha);
  if (is_integer(ratio)) return {Rational(1), y};
  return {frac_part(ratio), y};
}

// True iff the horocycle arc between this return and the next crosses
// the companion section.
template <typename S>
bool nonperiodic_passage_predicate(const WPoint<S>& p) {
  const S one(1);
  const S half = [&] {
    if constexpr (is_exact_scalar<S>)
      return Rational(1, 2);
    else
      return 0.5;
  }();
  if (p.eps != Eps::minus) return !(p.gamma > one) && p.r >= half;
  if (!(p.gamma > one)) return false;
  const S lo = (one + p.gamma) * (one + p.gamma) / (one + one);
  const S hi = p.gamma * (one + p.gamma);
  return p.r >= lo && p.r < hi;
}

}  // namespace horomap
