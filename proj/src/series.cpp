#include "rrk/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rrk {

namespace {

double golden_w() { return 0.5 * (11.0 + 5.0 * std::sqrt(5.0)); }

// Phase of (-1)^{1-m} a^{m-1} on the real positive branch. For a < 0 the two
// half-integer phases cancel exactly; for a > 0 the value is real only when
// 1-m is an integer, otherwise the complex phase is dropped.
double branch_phase(double a, double m) {
    if (a < 0.0) return 1.0;
    const double n = 1.0 - m;
    const double r = std::round(n);
    if (std::abs(n - r) < 1e-12)
        return std::fmod(std::abs(r), 2.0) < 0.5 ? 1.0 : -1.0;
    return 1.0;
}

bool integer_order(double m) {
    return std::abs(m - std::round(m)) < 1e-12;
}

// Endpoints of the w-interval where the beta argument z runs over [0,1];
// first() is the z=0 end, where U vanishes.
struct KernelPath {
    double w_zero; // z = 0, U = 0
    double w_one;  // z = 1
};

KernelPath kernel_path(const QuadraticKernel& k) {
    const double sd = std::sqrt(k.D());
    return {(sd - k.b) / (2.0 * k.a), (-sd - k.b) / (2.0 * k.a)};
}

} // namespace

void PolynomialWeight::validate() const {
    if (coeffs.size() != exponents.size())
        throw DomainError("PolynomialWeight: coefficient/exponent size mismatch");
    for (double p : exponents)
        if (!(p > 0.0))
            throw DomainError("PolynomialWeight: exponents must be positive");
}

double PolynomialWeight::eval(double x) const {
    double s = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        s += coeffs[i] * std::pow(x, exponents[i]);
    return s;
}

double C_closed(double nu) {
    if (!(nu > 0.0)) throw DomainError("C_closed: nu must be positive");
    const double w = golden_w();
    const double z = (11.0 - 5.0 * std::sqrt(5.0)) / (11.0 + 5.0 * std::sqrt(5.0));
    // Log-gamma keeps the ratio finite for large nu.
    const double lg = std::lgamma(1.0 / 6.0 + nu) - std::lgamma(1.0 + nu) +
                      (-1.0 / 6.0 - nu) * std::log(w);
    return std::tgamma(5.0 / 6.0) * std::exp(lg) *
           hyp2f1(1.0 / 6.0, 1.0 / 6.0 + nu, 1.0 + nu, z);
}

double C_eq91() {
    const double s5 = std::sqrt(5.0);
    const double z = -123.0 / 2.0 + 55.0 * s5 / 2.0;
    return std::pow(2.0 / (11.0 + 5.0 * s5), 11.0 / 30.0) *
           std::tgamma(11.0 / 30.0) * std::tgamma(5.0 / 6.0) /
           std::tgamma(6.0 / 5.0) *
           hyp2f1(1.0 / 6.0, 11.0 / 30.0, 6.0 / 5.0, z);
}

double C_quadrature(double nu, const QuadratureConfig& cfg) {
    if (!(nu > 0.0)) throw DomainError("C_quadrature: nu must be positive");
    WeightG g;
    const double p = 5.0 * nu;
    g.eval = [p](double x) { return std::pow(x, p); };
    g.positive_flag = true;
    g.label = "power";
    return MGContext(std::move(g), cfg).m_inv_sup();
}

double theorem9_sum(const PolynomialWeight& g) {
    g.validate();
    double s = 0.0;
    for (std::size_t i = 0; i < g.coeffs.size(); ++i)
        s += g.coeffs[i] * C_closed(g.exponents[i] / 5.0);
    return s;
}

double theorem9_integral(const PolynomialWeight& g, const QuadratureConfig& cfg) {
    g.validate();
    if (g.coeffs.empty()) return 0.0;
    bool nonneg = true;
    for (double a : g.coeffs) nonneg = nonneg && a >= 0.0;
    WeightG w;
    w.eval = [g](double x) { return g.eval(x); };
    w.positive_flag = nonneg;
    w.label = "polynomial";
    return MGContext(std::move(w), cfg).m_inv_sup();
}

double corollary4_root(const PolynomialWeight& g) {
    g.validate();
    for (double p : g.exponents)
        if (!integer_order(p))
            throw DomainError("corollary4_root: exponents must be integers");
    return theorem9_sum(g);
}

double F_i_inv(double y) {
    const double top = radicand_root();
    if (!(y >= 0.0 && y <= top)) throw OutOfRange("F_i_inv: y outside [0, radicand_root()]");
    if (y == 0.0) return 0.0;
    // 1/rad = t^{5/6}(1 - 11 t^5 - t^10)^{-1/6}: smooth at 0, integrable at top.
    return integrate_finite([](double t) { return 1.0 / rr_rad(t); }, 0.0,
                            std::min(y, top * (1.0 - 1e-15)));
}

double F_i_sup() {
    static const double x = F_i_inv(radicand_root() * (1.0 - 1e-13));
    return x;
}

double F_i_of(double x) {
    if (!(x >= 0.0 && x < F_i_sup())) throw OutOfRange("F_i_of: x outside [0, X_max)");
    if (x == 0.0) return 0.0;
    const double top = radicand_root() * (1.0 - 1e-13);
    // Newton on the defining ODE F_i' = rad(F_i), seeded with the small-y
    // behaviour x ~ (6/11) y^{11/6}; safeguarded by a Brent fallback.
    double y = std::min(top, std::pow(11.0 * x / 6.0, 6.0 / 11.0));
    for (int i = 0; i < 50; ++i) {
        const double step = (x - F_i_inv(y)) * rr_rad(y);
        y = std::clamp(y + step, 0.0, top);
        if (std::abs(step) < 1e-14 * std::max(1.0, y)) return y;
    }
    return invert_monotone([](double yy) { return F_i_inv(yy); }, x, {0.0, top},
                           1e-14);
}

double U_of(const QuadraticKernel& k, double x) {
    const double D = k.D();
    if (!(D > 0.0)) throw DomainError("U_of: D must be positive");
    if (!(k.m < 1.0)) throw DomainError("U_of: m must be below 1");
    const double sd = std::sqrt(D);
    const double z = (-k.b + sd - 2.0 * k.a * x) / (2.0 * sd);
    const double n = 1.0 - k.m;
    const double coef = branch_phase(k.a, k.m) *
                        std::pow(std::abs(k.a), k.m - 1.0) *
                        std::pow(D, -k.m + 0.5);
    double beta;
    if (integer_order(k.m)) {
        // B(z, n, n) with integer n >= 1 is a polynomial; any real z is fine.
        beta = integrate_finite(
            [n](double t) {
                return std::pow(t, n - 1.0) * std::pow(1.0 - t, n - 1.0);
            },
            0.0, z);
    } else {
        if (z == 0.0) return 0.0;
        if (!(z > 0.0 && z < 1.0))
            throw DomainError("U_of: beta argument outside (0,1)");
        beta = incomplete_beta(z, n, n);
    }
    return coef * beta;
}

double U_inv(const QuadraticKernel& k, double u) {
    const KernelPath path = kernel_path(k);
    if (u == 0.0) return path.w_zero;
    auto f = [&k](double w) { return U_of(k, w); };
    if (integer_order(k.m)) {
        // Polynomial beta: extend the bracket past the z in [0,1] window, in
        // the direction where U takes the sign of the target.
        double lo = path.w_zero, hi = path.w_zero;
        const double span = path.w_zero - path.w_one;
        const double slope = -f(path.w_one) / span; // sign of dU/dw
        double step = (u > 0.0 ? 1.0 : -1.0) * (slope > 0.0 ? 1.0 : -1.0) *
                      std::max(1.0, std::abs(span));
        for (int i = 0; i < 60 && (f(hi) - u) * (f(lo) - u) > 0.0; ++i) {
            hi += step;
            step *= 1.5;
        }
        if ((f(hi) - u) * (f(lo) - u) > 0.0)
            throw OutOfRange("U_inv: target not enclosed");
        return invert_monotone(f, u, {std::min(lo, hi), std::max(lo, hi)}, 1e-13);
    }
    const double eps = 1e-13;
    const double near_one =
        path.w_one + (path.w_zero - path.w_one) * eps;
    const double lo = std::min(path.w_zero, near_one);
    const double hi = std::max(path.w_zero, near_one);
    if ((f(lo) - u) * (f(hi) - u) > 0.0)
        throw OutOfRange("U_inv: target outside the range of U on its branch");
    return invert_monotone(f, u, {lo, hi}, 1e-13);
}

PolynomialWeight corollary5_weight(int terms) {
    if (terms < 1) throw DomainError("corollary5_weight: need at least one term");
    // 1/rad = t^{5/6} S(t^5), S(v) = (1 - 11v - v^2)^{-1/6} = sum c_k v^k with
    // 6(k+1)c_{k+1} = (66k + 11)c_k + (6k - 4)c_{k-1}. Then
    // x F(x) = sum_k c_k/(11/6 + 5k) x^{17/6 + 5k}.
    PolynomialWeight w;
    double cm1 = 0.0, c0 = 1.0;
    for (int k = 0; k < terms; ++k) {
        w.coeffs.push_back(c0 / (11.0 / 6.0 + 5.0 * k));
        w.exponents.push_back(17.0 / 6.0 + 5.0 * k);
        const double c1 =
            ((66.0 * k + 11.0) * c0 + (6.0 * k - 4.0) * cm1) / (6.0 * (k + 1.0));
        cm1 = c0;
        c0 = c1;
    }
    return w;
}

IdentityReport theorem12_check(const QuadraticKernel& k,
                               const PolynomialWeight& g, double tol) {
    g.validate();
    if (!(k.D() > 0.0)) throw DomainError("theorem12_check: D must be positive");
    if (!(k.m < 1.0)) throw DomainError("theorem12_check: m must be below 1");
    const double x_max = F_i_sup();
    // The improper endpoint F(x0) = X_max is approached from below; the
    // discarded sliver of the t-integral is O(eps^{5/6}).
    const double u_top = x_max * (1.0 - 1e-9);
    const double w_lo = U_inv(k, 0.0);
    const double w_hi = U_inv(k, u_top);
    auto integrand = [&](double w) {
        double u = U_of(k, w);
        if (!(u > 0.0)) return 0.0;
        u = std::min(u, u_top);
        const double t = F_i_of(u);
        const double q = k.a * w * w + k.b * w + k.c;
        return g.eval(t) / (t * std::pow(q, k.m));
    };
    double lhs;
    if (k.m > 0.0) {
        // Q vanishes at the z=0 endpoint w_lo, so the integrand carries a
        // |w - w_lo|^{-m} singularity there; w = w_lo + sgn s^{1/(1-m)}
        // flattens it (the Jacobian exactly cancels the blow-up).
        const double p = 1.0 / (1.0 - k.m);
        const double sgn = (w_hi > w_lo) ? 1.0 : -1.0;
        const double smax = std::pow(std::abs(w_hi - w_lo), 1.0 / p);
        lhs = 5.0 * integrate_finite(
                        [&](double s) {
                            const double w = w_lo + sgn * std::pow(s, p);
                            return integrand(w) * p * std::pow(s, p - 1.0);
                        },
                        0.0, smax);
    } else {
        lhs = 5.0 * integrate_finite(integrand, std::min(w_lo, w_hi),
                                     std::max(w_lo, w_hi));
    }
    const double rhs = theorem9_sum(g);
    return make_report(
        "THM12", {{"a", k.a}, {"b", k.b}, {"c", k.c}, {"m", k.m}}, lhs, rhs,
        tol,
        "change of variables carries 1/F_i in the integrand and lower limit "
        "U^{-1}(0); series weights read as generalized Maclaurin coefficients");
}

} // namespace rrk
