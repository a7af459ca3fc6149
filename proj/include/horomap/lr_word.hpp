// {L,R} words: the path coding of positive rationals on the Stern-Brocot
// tree, word/matrix reversal, and the extended Farey map whose branches
// generate the coding.
#pragma once

#include "horomap/mat2z.hpp"
#include "horomap/rational.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace horomap {

enum class Letter : char { L = 'L', R = 'R' };

struct LRWord {
  std::vector<Letter> letters;

  LRWord() = default;
  explicit LRWord(std::vector<Letter> ls) : letters(std::move(ls)) {}
  static LRWord from_string(std::string_view s) {
    LRWord w;
    w.letters.reserve(s.size());
    for (char ch : s) {
      if (ch == 'L')
        w.letters.push_back(Letter::L);
      else if (ch == 'R')
        w.letters.push_back(Letter::R);
      else
        throw DomainError("LRWord letters must be L or R");
    }
    return w;
  }

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  std::string str() const {
    std::string s;
    s.reserve(letters.size());
    for (Letter l : letters) s.push_back(static_cast<char>(l));
    return s;
  }

  friend bool operator==(const LRWord& x, const LRWord& y) { return x.letters == y.letters; }
};

// Product of the letter matrices read left to right; empty word -> identity.
inline Mat2Z word_to_matrix(const LRWord& w) {
  Mat2Z m = mat_identity();
  for (Letter l : w.letters) m = m * (l == Letter::L ? mat_L() : mat_R());
  return m;
}

// The fraction (a+b)/(c+d) sitting at this tree position.
inline Rational word_to_rational(const LRWord& w) {
  const Mat2Z m = word_to_matrix(w);
  return Rational(m.a + m.b, m.c + m.d);
}

inline LRWord reverse_word(const LRWord& w) {
  LRWord r = w;
  std::reverse(r.letters.begin(), r.letters.end());
  return r;
}

// (a b; c d) -> (d b; c a); valid on coding matrices, i.e. entries >= 0.
inline Mat2Z reverse_matrix(const Mat2Z& m) {
  if (!m.nonnegative()) throw DomainError("reverse_matrix needs a nonnegative coding matrix");
  return Mat2Z(m.d, m.b, m.c, m.a);
}

// U(x) = x/(1-x) on [0,1), x-1 on [1,oo).
inline Rational extended_farey(const Rational& x) {
  if (x <= 0) throw DomainError("extended Farey map needs x > 0");
  if (x < 1) return x / (Rational(1) - x);
  return x - 1;
}

inline double extended_farey(double x) {
  if (x <= 0) throw DomainError("extended Farey map needs x > 0");
  if (x < 1) return x / (1.0 - x);
  return x - 1.0;
}

// Branch record of the extended Farey map: L while x < 1, R while x >= 1,
// stopping at 1. This is the tree path of x read from the root.
inline LRWord coding_of_rational(const Rational& x) {
  if (x <= 0) throw DomainError("coding is defined for positive rationals");
  LRWord w;
  Int p = num(x), q = den(x);
  while (p != q) {
    if (p < q) {
      w.letters.push_back(Letter::L);
      q -= p;  // x/(1-x) on p/q
    } else {
      w.letters.push_back(Letter::R);
      p -= q;  // x - 1
    }
  }
  return w;
}

struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// First k letters of the coding of a positive real; iterates the extended
// Farey map in floating point, so the input is expected to be irrational.
inline LRWord coding_prefix_of_real(double x, std::size_t k, double tol = 1e-12) {
  if (x <= 0) throw DomainError("coding is defined for positive reals");
  LRWord w;
  w.letters.reserve(k);
  while (w.letters.size() < k) {
    if (std::abs(x - 1.0) <= tol)
      throw DegenerateError("coding iterate hit 1 within tolerance");
    if (x < 1.0) {
      w.letters.push_back(Letter::L);
      x = x / (1.0 - x);
    } else {
      w.letters.push_back(Letter::R);
      x = x - 1.0;
    }
  }
  return w;
}

}  // namespace horomap
