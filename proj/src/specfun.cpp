#include "hulthen/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hulthen {

namespace {
void check_jacobi(const JacobiParams& jp) {
    if (jp.n < 0) throw std::domain_error("jacobi_poly: degree must be >= 0");
    if (!(jp.a > -1.0) || !(jp.b > -1.0))
        throw std::domain_error("jacobi_poly: parameters must satisfy a > -1 and b > -1");
}
}  // namespace

double jacobi_poly(const JacobiParams& jp, double x) {
    check_jacobi(jp);
    // Extended precision internally: the recurrence loses a few digits per
    // step near the interval edges and downstream identities are checked at
    // the 1e-11 level.
    const long double a = jp.a, b = jp.b, xl = x;
    if (jp.n == 0) return 1.0;
    long double pm1 = 1.0L;
    long double p = 0.5L * (a - b) + 0.5L * (a + b + 2.0L) * xl;
    // Recurrence is safe for n >= 2: a+b > -2 keeps every denominator nonzero.
    for (int k = 2; k <= jp.n; ++k) {
        const long double n2ab = 2.0L * k + a + b;
        const long double c1 = 2.0L * k * (k + a + b) * (n2ab - 2.0L);
        const long double c2 = (n2ab - 1.0L) * (a * a - b * b);
        const long double c3 = (n2ab - 1.0L) * n2ab * (n2ab - 2.0L);
        const long double c4 = 2.0L * (k + a - 1.0L) * (k + b - 1.0L) * n2ab;
        const long double next = ((c2 + c3 * xl) * p - c4 * pm1) / c1;
        pm1 = p;
        p = next;
    }
    return static_cast<double>(p);
}

double jacobi_poly_derivative(const JacobiParams& jp, double x) {
    check_jacobi(jp);
    if (jp.n == 0) return 0.0;
    const JacobiParams shifted{jp.n - 1, jp.a + 1.0, jp.b + 1.0};
    return 0.5 * (jp.n + jp.a + jp.b + 1.0) * jacobi_poly(shifted, x);
}

double jacobi_endpoint_value(const JacobiParams& jp) {
    check_jacobi(jp);
    // All Gamma arguments are positive for a > -1, n >= 0.
    return std::exp(std::lgamma(jp.n + jp.a + 1.0) - std::lgamma(jp.n + 1.0) - std::lgamma(jp.a + 1.0));
}

double hyp2f1_terminating(int n, double b, double c, double s) {
    if (n < 0) throw std::domain_error("hyp2f1_terminating: first parameter must be -n with n >= 0");
    // The sum alternates with terms that can dwarf the result; extended
    // precision keeps the cancellation below the 1e-11 identity tolerance.
    long double sum = 1.0L;
    long double term = 1.0L;
    for (int k = 0; k < n; ++k) {
        const long double ck = static_cast<long double>(c) + k;
        if (ck == 0.0L)
            throw std::domain_error("hyp2f1_terminating: denominator parameter hits a pole at k=" +
                                    std::to_string(k + 1));
        term *= (static_cast<long double>(-n + k) * (static_cast<long double>(b) + k)) /
                (ck * (k + 1.0L)) * static_cast<long double>(s);
        sum += term;
    }
    return static_cast<double>(sum);
}

namespace {
double simpson(const std::function<double(double)>& f, double lo, double hi, double flo, double fmid,
               double fhi) {
    return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
}

double adapt(const std::function<double(double)>& f, double lo, double hi, double flo, double fmid,
             double fhi, double whole, double tol, int depth, int max_depth) {
    const double mid = 0.5 * (lo + hi);
    const double lmid = 0.5 * (lo + mid);
    const double rmid = 0.5 * (mid + hi);
    const double flm = f(lmid);
    const double frm = f(rmid);
    if (!std::isfinite(flm) || !std::isfinite(frm))
        throw std::runtime_error("integrate: non-finite integrand near x=" + std::to_string(mid));
    const double left = simpson(f, lo, mid, flo, flm, fmid);
    const double right = simpson(f, mid, hi, fmid, frm, fhi);
    const double err = left + right - whole;
    if (depth >= max_depth || std::fabs(err) <= 15.0 * tol) return left + right + err / 15.0;
    return adapt(f, lo, mid, flo, flm, fmid, left, tol / 2.0, depth + 1, max_depth) +
           adapt(f, mid, hi, fmid, frm, fhi, right, tol / 2.0, depth + 1, max_depth);
}
}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi, double abs_tol,
                 int max_depth) {
    if (lo == hi) return 0.0;
    const double flo = f(lo);
    const double fhi = f(hi);
    const double fmid = f(0.5 * (lo + hi));
    if (!std::isfinite(flo) || !std::isfinite(fhi) || !std::isfinite(fmid))
        throw std::runtime_error("integrate: non-finite integrand at an interval endpoint");
    const double whole = simpson(f, lo, hi, flo, fmid, fhi);
    return adapt(f, lo, hi, flo, fmid, fhi, whole, abs_tol, 0, max_depth);
}

}  // namespace hulthen
