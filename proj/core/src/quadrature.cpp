#include "ginprod/quadrature.hpp"

#include <cmath>

namespace ginprod {

namespace {

double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                   double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0) throw QuadratureError("adaptive_simpson: depth limit reached before convergence");
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

double bessel_k0_integral(double r, double tol) {
  if (!(r > 0)) throw QuadratureError("bessel_k0_integral: requires r > 0");
  // u = (r/2) e^t maps the integral to 2 * int_0^inf exp(-r cosh t) dt.
  if (r >= 745.0) return 0.0;  // integrand underflows everywhere
  const double t_max = std::acosh(745.0 / r);
  const auto f = [r](double t) { return std::exp(-r * std::cosh(t)); };
  return 2.0 * adaptive_simpson(f, 0.0, t_max, tol);
}

}  // namespace ginprod
