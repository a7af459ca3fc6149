// Integer 2x2 matrices of determinant one (the modular group), their
// Moebius action on the extended rational line and on reals, and the
// deformation factor (cz+d)^-2 that drives how horocycle radii change.
#pragma once

#include "horomap/rational.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace horomap {

struct Mat2Z {
  Int a{1}, b{0}, c{0}, d{1};

  Mat2Z() = default;
  Mat2Z(Int a_, Int b_, Int c_, Int d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (det() != 1) throw DomainError("Mat2Z requires determinant 1");
  }

  Int det() const { return a * d - b * c; }

  Mat2Z inverse() const { return Mat2Z(d, -b, -c, a); }

  friend Mat2Z operator*(const Mat2Z& x, const Mat2Z& y) {
    return Mat2Z(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                 x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d);
  }

  friend bool operator==(const Mat2Z& x, const Mat2Z& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }

  bool nonnegative() const { return a >= 0 && b >= 0 && c >= 0 && d >= 0; }

  std::string str() const {
    return "(" + a.str() + " " + b.str() + "; " + c.str() + " " + d.str() + ")";
  }
};

inline Mat2Z mat_identity() { return Mat2Z(1, 0, 0, 1); }
inline Mat2Z mat_L() { return Mat2Z(1, 0, 1, 1); }
inline Mat2Z mat_R() { return Mat2Z(1, 1, 0, 1); }
inline Mat2Z mat_S() { return Mat2Z(0, 1, -1, 0); }

inline Mat2Z mat_pow(const Mat2Z& g, unsigned long n) {
  Mat2Z acc = mat_identity();
  for (unsigned long i = 0; i < n; ++i) acc = acc * g;
  return acc;
}

// g(x) = (ax+b)/(cx+d) on the extended line; cx+d = 0 maps to 1/0.
inline ExtRational mobius_apply(const Mat2Z& g, const ExtRational& x) {
  if (x.is_infinite()) {
    if (g.c == 0) return ExtRational::infinity();
    return ExtRational(Rational(g.a, g.c));
  }
  const Int p = num(x.value()), q = den(x.value());
  Int n = g.a * p + g.b * q;
  Int d = g.c * p + g.d * q;
  if (d == 0) return ExtRational::infinity();
  return ExtRational(Rational(n, d));
}

inline Rational mobius_apply(const Mat2Z& g, const Rational& x) {
  ExtRational y = mobius_apply(g, ExtRational(x));
  if (y.is_infinite()) throw PoleError("Moebius image is infinite");
  return y.value();
}

inline double mobius_apply(const Mat2Z& g, double x) {
  const double c = g.c.convert_to<double>(), d = g.d.convert_to<double>();
  return (g.a.convert_to<double>() * x + g.b.convert_to<double>()) / (c * x + d);
}

// D[g](x) = (cx+d)^-2, the derivative of the Moebius action.
inline Rational deformation_factor(const Mat2Z& g, const Rational& x) {
  Rational t = Rational(g.c) * x + Rational(g.d);
  if (t == 0) throw PoleError("deformation factor at a pole");
  return Rational(1) / (t * t);
}

inline double deformation_factor(const Mat2Z& g, double x) {
  const double t = g.c.convert_to<double>() * x + g.d.convert_to<double>();
  if (t == 0.0) throw PoleError("deformation factor at a pole");
  return 1.0 / (t * t);
}

}  // namespace horomap
