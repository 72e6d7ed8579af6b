#pragma once

#include <cstddef>
#include <functional>

namespace hulthen {

/// Degree and exponents of a Jacobi polynomial P_n^{(a,b)}.
struct JacobiParams {
    int n;     ///< degree, >= 0
    double a;  ///< > -1
    double b;  ///< > -1
};

/// P_n^{(a,b)}(x) by the three-term recurrence. Admits x outside [-1,1]
/// (polynomial extrapolation); a,b <= -1 is a domain error.
double jacobi_poly(const JacobiParams& jp, double x);

/// d/dx P_n^{(a,b)}(x) = (n+a+b+1)/2 * P_{n-1}^{(a+1,b+1)}(x).
double jacobi_poly_derivative(const JacobiParams& jp, double x);

/// Endpoint value P_n^{(a,b)}(1) = Gamma(n+a+1)/(n! Gamma(a+1)), via log-Gamma.
double jacobi_endpoint_value(const JacobiParams& jp);

/// Terminating Gauss series 2F1(-n, b; c; s): exact sum of n+1 terms.
/// c hitting a non-positive integer inside the sum is a domain error.
double hyp2f1_terminating(int n, double b, double c, double s);

/// Adaptive Simpson quadrature of f over [lo, hi] to absolute tolerance.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol = 1e-10, int max_depth = 40);

}  // namespace hulthen
