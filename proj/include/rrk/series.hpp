#ifndef RRK_SERIES_HPP
#define RRK_SERIES_HPP

#include <vector>

#include "rrk/elliptic.hpp"
#include "rrk/numerics.hpp"
#include "rrk/qseries.hpp"
#include "rrk/report.hpp"
#include "rrk/transform.hpp"

namespace rrk {

/// Weight of the form sum_m a_m x^{p_m} with positive real exponents.
struct PolynomialWeight {
    std::vector<double> coeffs;
    std::vector<double> exponents;

    void validate() const;
    double eval(double x) const;
};

/// Kernel a w^2 + b w + c raised to power m inside the U substitution.
/// Real branches require either a < 0 (kernel positive between its roots)
/// or integer m.
struct QuadraticKernel {
    double a = 0.0, b = 0.0, c = 0.0;
    double m = 0.0;
    double D() const { return b * b - 4.0 * a * c; }
};

/// C(nu) = Gamma(5/6) W^{-1/6-nu} Gamma(1/6+nu)/Gamma(1+nu)
///         * 2F1(1/6, 1/6+nu; 1+nu; (11-5 sqrt 5)/(11+5 sqrt 5)),
/// W = (11+5 sqrt 5)/2.
double C_closed(double nu);

/// Same value for nu = 1/5 in its alternative closed form.
double C_eq91();

/// Quadrature oracle: pi int_0^inf eta(it/2)^4 R(e^{-pi t})^{5 nu} dt.
double C_quadrature(double nu, const QuadratureConfig& cfg = {});

/// sum_m a_m C(p_m / 5): the closed-form route of the polynomial expansion.
double theorem9_sum(const PolynomialWeight& g);

/// The defining integral of the same quantity (the inverse integral in the
/// r -> 0 limit).
double theorem9_integral(const PolynomialWeight& g,
                         const QuadratureConfig& cfg = {});

/// theorem9_sum restricted to integer exponents, the root of
/// y(x) = radicand_root() for the weight's Theorem-1 y.
double corollary4_root(const PolynomialWeight& g);

/// F_i: inverse of y -> int_0^y dt / rad(t); F_i_inv is the integral,
/// F_i_sup its (improper) value at radicand_root().
double F_i_inv(double y);
double F_i_of(double x);
double F_i_sup();

/// U(a,b,c;m;x) with real positive branches; the inverse solves U(w) = u on
/// the branch where U increases (U' = (a w^2 + b w + c)^{-m}).
double U_of(const QuadraticKernel& k, double x);
double U_inv(const QuadraticKernel& k, double u);

/// Generalized Maclaurin coefficients of x * F(x) (F the inverse of F_i):
/// exponents 17/6 + 5k. These are the F_n of the special-case expansion.
PolynomialWeight corollary5_weight(int terms);

/// 5 int_{U^{-1}(0)}^{U^{-1}(F(x0))} G(F_i(U(w))) / (F_i(U(w)) Q(w)^m) dw
/// against sum a_m C(p_m/5). The integrand carries the 1/F_i factor and the
/// lower limit U^{-1}(0) that the change of variables requires.
IdentityReport theorem12_check(const QuadraticKernel& k,
                               const PolynomialWeight& g, double tol = 1e-6);

} // namespace rrk

#endif
