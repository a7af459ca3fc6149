// The section coordinates W = {(gamma, r, eps) : r >= gamma, eps = 0 iff
// r = gamma} and the first-return map of the horocycle flow on them,
// given by fifteen table rows (five per sheet). Works on exact rationals
// or on doubles; in double mode boundary comparisons within 1e-12 are
// reported through a flag instead of being silently resolved.
#pragma once

#include "horomap/lr_word.hpp"
#include "horomap/mat2z.hpp"
#include "horomap/rational.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

namespace horomap {

enum class Eps : std::int8_t { minus = -1, zero = 0, plus = +1 };

inline int eps_value(Eps e) { return static_cast<int>(e); }

inline Eps eps_from_int(int v) {
  if (v < -1 || v > 1) throw DomainError("eps must be -1, 0 or +1");
  return static_cast<Eps>(v);
}

template <typename S>
inline constexpr bool is_exact_scalar = std::is_same_v<S, Rational>;

struct Cmp3 {
  int sign = 0;      // sign of a - b
  bool near = false; // double mode only: |a - b| within tolerance
};

inline constexpr double kBoundaryTol = 1e-12;

inline Cmp3 cmp3(const Rational& a, const Rational& b) {
  return {a < b ? -1 : (b < a ? 1 : 0), false};
}

inline Cmp3 cmp3(double a, double b) {
  const double diff = a - b;
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  Cmp3 c;
  c.sign = diff < 0 ? -1 : (diff > 0 ? 1 : 0);
  c.near = std::abs(diff) <= kBoundaryTol * scale;
  return c;
}

template <typename S>
struct WPoint {
  S gamma;
  S r;
  Eps eps;

  WPoint(S gamma_, S r_, Eps eps_)
      : gamma(std::move(gamma_)), r(std::move(r_)), eps(eps_) {
    if (!(gamma > 0)) throw DomainError("WPoint needs gamma > 0");
    if (r < gamma) throw DomainError("WPoint needs r >= gamma");
    if ((r == gamma) != (eps == Eps::zero))
      throw DomainError("WPoint needs eps = 0 exactly when r = gamma");
  }

  friend bool operator==(const WPoint& x, const WPoint& y) {
    return x.eps == y.eps && x.gamma == y.gamma && x.r == y.r;
  }
};

// Row identifiers: table (input sheet) and row, in the order the tables
// list them.
enum class Branch : std::uint8_t {
  T1R1, T1R2, T1R3, T1R4, T1R5,  // eps = +1
  T2R1, T2R2, T2R3, T2R4, T2R5,  // eps = -1
  T3R1, T3R2, T3R3, T3R4, T3R5,  // eps = 0
};

inline const char* branch_name(Branch b) {
  switch (b) {
    case Branch::T1R1: return "T1R1";
    case Branch::T1R2: return "T1R2";
    case Branch::T1R3: return "T1R3";
    case Branch::T1R4: return "T1R4";
    case Branch::T1R5: return "T1R5";
    case Branch::T2R1: return "T2R1";
    case Branch::T2R2: return "T2R2";
    case Branch::T2R3: return "T2R3";
    case Branch::T2R4: return "T2R4";
    case Branch::T2R5: return "T2R5";
    case Branch::T3R1: return "T3R1";
    case Branch::T3R2: return "T3R2";
    case Branch::T3R3: return "T3R3";
    case Branch::T3R4: return "T3R4";
    case Branch::T3R5: return "T3R5";
  }
  return "?";
}

// How M(gamma') is obtained from M(gamma) on the row.
enum class WordAction { Shift, Identity, PrependRShift, PrependL, PrependR };

inline LRWord apply_word_action(WordAction action, const LRWord& w) {
  LRWord out;
  switch (action) {
    case WordAction::Identity:
      return w;
    case WordAction::Shift:
      out.letters.assign(w.letters.begin() + (w.empty() ? 0 : 1), w.letters.end());
      return out;
    case WordAction::PrependRShift:
      out.letters.push_back(Letter::R);
      out.letters.insert(out.letters.end(), w.letters.begin() + (w.empty() ? 0 : 1),
                         w.letters.end());
      return out;
    case WordAction::PrependL:
      out.letters.push_back(Letter::L);
      out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
      return out;
    case WordAction::PrependR:
      out.letters.push_back(Letter::R);
      out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
      return out;
  }
  return out;
}

struct BranchInfo {
  Eps input_sheet;
  Eps output_sheet;
  Mat2Z matrix;
  WordAction word_action;
};

inline const BranchInfo& branch_info(Branch b) {
  static const Mat2Z I = mat_identity();
  static const Mat2Z L = mat_L();
  static const Mat2Z R = mat_R();
  static const Mat2Z Rinv = mat_R().inverse();
  static const Mat2Z Linv = mat_L().inverse();
  static const Mat2Z SRinv = mat_S() * Rinv;         // (0 1; -1 1)
  static const Mat2Z SRinv2 = mat_S() * Rinv * Rinv; // (0 1; -1 2)
  static const BranchInfo table[] = {
      {Eps::plus, Eps::plus, Rinv, WordAction::Shift},           // T1R1
      {Eps::plus, Eps::minus, SRinv2, WordAction::Identity},     // T1R2
      {Eps::plus, Eps::minus, SRinv, WordAction::PrependRShift}, // T1R3
      {Eps::plus, Eps::zero, SRinv, WordAction::PrependRShift},  // T1R4
      {Eps::plus, Eps::plus, Linv, WordAction::Shift},           // T1R5
      {Eps::minus, Eps::minus, L, WordAction::PrependL},         // T2R1
      {Eps::minus, Eps::zero, L, WordAction::PrependL},          // T2R2
      {Eps::minus, Eps::minus, R, WordAction::PrependR},         // T2R3
      {Eps::minus, Eps::zero, R, WordAction::PrependR},          // T2R4
      {Eps::minus, Eps::plus, I, WordAction::Identity},          // T2R5
      {Eps::zero, Eps::plus, Rinv, WordAction::Shift},           // T3R1
      {Eps::zero, Eps::zero, SRinv2, WordAction::Identity},      // T3R2
      {Eps::zero, Eps::minus, SRinv, WordAction::PrependRShift}, // T3R3
      {Eps::zero, Eps::zero, SRinv, WordAction::PrependRShift},  // T3R4
      {Eps::zero, Eps::plus, Linv, WordAction::Shift},           // T3R5
  };
  return table[static_cast<std::size_t>(b)];
}

struct ClassifyResult {
  Branch branch;
  bool boundary = false;  // double mode: a decisive comparison was within tolerance
};

// Exactly one row matches any point of W; the trichotomies are resolved
// exactly on rationals.
template <typename S>
ClassifyResult classify(const WPoint<S>& p) {
  const S one(1);
  bool near = false;
  auto pick = [&near](const Cmp3& c) {
    near = near || c.near;
    return c.sign;
  };
  switch (p.eps) {
    case Eps::plus: {
      const int cg = pick(cmp3(p.gamma, one));
      if (cg > 0) return {Branch::T1R1, near};
      if (cg == 0) return {Branch::T1R2, near};
      const int cr = pick(cmp3(p.r, S(one - p.gamma)));
      if (cr > 0) return {Branch::T1R3, near};
      if (cr == 0) return {Branch::T1R4, near};
      return {Branch::T1R5, near};
    }
    case Eps::minus: {
      const int chigh = pick(cmp3(p.r, S(p.gamma * (one + p.gamma))));
      if (chigh > 0) return {Branch::T2R1, near};
      if (chigh == 0) return {Branch::T2R2, near};
      const int clow = pick(cmp3(p.r, S(one + p.gamma)));
      if (clow > 0) return {Branch::T2R3, near};
      if (clow == 0) return {Branch::T2R4, near};
      return {Branch::T2R5, near};
    }
    case Eps::zero: {
      const int cg = pick(cmp3(p.gamma, one));
      if (cg > 0) return {Branch::T3R1, near};
      if (cg == 0) return {Branch::T3R2, near};
      const int ch = pick(cmp3(p.gamma + p.gamma, one));
      if (ch > 0) return {Branch::T3R3, near};
      if (ch == 0) return {Branch::T3R4, near};
      return {Branch::T3R5, near};
    }
  }
  throw DomainError("invalid eps");
}

template <typename S>
struct HoroStep {
  Branch branch;
  bool boundary;
  Mat2Z matrix;
  WordAction word_action;
  WPoint<S> image;
};

// One application of the first-return map: gamma' = Gamma(gamma),
// r' = D[Gamma](gamma) * r, eps' from the row.
template <typename S>
HoroStep<S> step(const WPoint<S>& p) {
  const ClassifyResult cls = classify(p);
  const BranchInfo& info = branch_info(cls.branch);
  S gamma_out = [&] {
    if constexpr (is_exact_scalar<S>)
      return mobius_apply(info.matrix, p.gamma);
    else
      return mobius_apply(info.matrix, to_double(p.gamma));
  }();
  S r_out = S(deformation_factor(info.matrix, p.gamma) * p.r);
  if (info.output_sheet == Eps::zero) r_out = gamma_out;  // tangency rows land on r = gamma
  return HoroStep<S>{cls.branch, cls.boundary, info.matrix, info.word_action,
                     WPoint<S>(std::move(gamma_out), std::move(r_out), info.output_sheet)};
}

struct AmbiguityError : std::logic_error {
  using std::logic_error::logic_error;
};

namespace detail {

// Image region of each row, expressed in the output coordinates. The
// fifteen regions partition W, which step_inverse asserts.
template <typename S>
bool image_region_contains(Branch b, const WPoint<S>& p) {
  const S one(1);
  const S g = p.gamma, r = p.r;
  switch (b) {
    case Branch::T1R1: return p.eps == Eps::plus && cmp3(r, S(g + one)).sign > 0;
    case Branch::T3R1: return p.eps == Eps::plus && cmp3(r, S(g + one)).sign == 0;
    case Branch::T1R5:
      return p.eps == Eps::plus && cmp3(r, S(g * (one + g))).sign > 0 &&
             cmp3(r, S(g + one)).sign < 0;
    case Branch::T3R5:
      return p.eps == Eps::plus && cmp3(g, one).sign < 0 &&
             cmp3(r, S(g * (one + g))).sign == 0;
    case Branch::T2R5:
      return p.eps == Eps::plus && cmp3(r, S(g + one)).sign < 0 &&
             cmp3(r, S(g * (one + g))).sign < 0;
    case Branch::T2R1: return p.eps == Eps::minus && cmp3(g, one).sign < 0;
    case Branch::T1R2: return p.eps == Eps::minus && cmp3(g, one).sign == 0;
    case Branch::T1R3:
      return p.eps == Eps::minus && cmp3(g, one).sign > 0 &&
             cmp3(r, S(g * (g - one))).sign > 0;
    case Branch::T3R3:
      return p.eps == Eps::minus && cmp3(g, one).sign > 0 &&
             cmp3(r, S(g * (g - one))).sign == 0;
    case Branch::T2R3:
      return p.eps == Eps::minus && cmp3(g, one).sign > 0 &&
             cmp3(r, S(g * (g - one))).sign < 0;
    case Branch::T2R2: return p.eps == Eps::zero && cmp3(g, one).sign < 0;
    case Branch::T3R2: return p.eps == Eps::zero && cmp3(g, one).sign == 0;
    case Branch::T1R4:
      return p.eps == Eps::zero && cmp3(g, one).sign > 0 && cmp3(g, S(one + one)).sign < 0;
    case Branch::T3R4: return p.eps == Eps::zero && cmp3(g, S(one + one)).sign == 0;
    case Branch::T2R4: return p.eps == Eps::zero && cmp3(g, S(one + one)).sign > 0;
  }
  return false;
}

}  // namespace detail

// Inverse of step: find the unique row whose image region contains p,
// undo its matrix, and put the point back on the row's input sheet.
template <typename S>
WPoint<S> step_inverse(const WPoint<S>& p) {
  int matches = 0;
  Branch found = Branch::T1R1;
  for (std::uint8_t i = 0; i < 15; ++i) {
    const Branch b = static_cast<Branch>(i);
    if (detail::image_region_contains(b, p)) {
      ++matches;
      found = b;
    }
  }
  if (matches != 1)
    throw AmbiguityError(std::string("step_inverse: ") + std::to_string(matches) +
                         " image regions match");
  const BranchInfo& info = branch_info(found);
  const Mat2Z ginv = info.matrix.inverse();
  S gamma_in = [&] {
    if constexpr (is_exact_scalar<S>)
      return mobius_apply(ginv, p.gamma);
    else
      return mobius_apply(ginv, to_double(p.gamma));
  }();
  // r' = D[Gamma](gamma) r  =>  r = D[Gamma^-1](gamma') r' by the cocycle rule.
  S r_in = S(deformation_factor(ginv, p.gamma) * p.r);
  if (info.input_sheet == Eps::zero) r_in = gamma_in;
  return WPoint<S>(std::move(gamma_in), std::move(r_in), info.input_sheet);
}

using WPointQ = WPoint<Rational>;
using WPointD = WPoint<double>;

}  // namespace horomap
