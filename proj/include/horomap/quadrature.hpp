// Adaptive Simpson quadrature, 1-D and iterated 2-D. Good enough for the
// measure checks here: integrands are piecewise smooth with integrable
// log singularities at worst.
#pragma once

#include <cmath>
#include <functional>

namespace horomap {

namespace detail {

template <typename F>
double simpson(F&& f, double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive_rec(F&& f, double a, double b, double fa, double fm, double fb,
                    double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, m, fa, flm, fm);
  const double right = simpson(f, m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

template <typename F>
double adaptive_simpson(F&& f, double a, double b, double tol = 1e-10,
                        int max_depth = 40) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = detail::simpson(f, a, b, fa, fm, fb);
  return detail::adaptive_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// Iterated 2-D integral of f(x, y) over [ax,bx] x [ay,by].
template <typename F>
double integrate2d(F&& f, double ax, double bx, double ay, double by,
                   double tol = 1e-8, int max_depth = 24) {
  return adaptive_simpson(
      [&](double x) {
        return adaptive_simpson([&](double y) { return f(x, y); }, ay, by,
                                tol * 0.1, max_depth);
      },
      ax, bx, tol, max_depth);
}

}  // namespace horomap
