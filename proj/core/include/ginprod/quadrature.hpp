#pragma once

#include <functional>
#include <stdexcept>

namespace ginprod {

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance
/// `tol`.  Throws QuadratureError if the recursion depth limit is hit
/// before convergence.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 48);

/// I(r) = \int_0^inf du u^{-1} exp(-u - r^2/(4u))   (= 2 K_0(r), r > 0),
/// evaluated by adaptive quadrature after the substitution u = (r/2) e^t,
/// which turns the integrand into exp(-r cosh t) with doubly-exponential
/// decay.
double bessel_k0_integral(double r, double tol = 1e-12);

}  // namespace ginprod
