#include "rrk/modular.hpp"

#include <algorithm>
#include <cmath>

namespace rrk {

Nome rr_inverse(RRValue x) {
    if (x.x >= rr_sup() - 4e-16)
        throw OutOfRange(
            "rr_inverse: x within a few ulps of the supremum; the nome is "
            "not recoverable in double precision");
    if (std::pow(x.x, 5.0) < 1e-290)
        throw OutOfRange("rr_inverse: nome underflows for this x");
    // R(q) ~ q^{1/5} near 0, so seed the bracket from x^5.
    const double lo = std::max(1e-300, 0.1 * std::pow(x.x, 5.0));
    const double hi = 1.0 - 1e-12;
    const double q = invert_monotone(
        [](double qq) { return rr(Nome(qq)).x; }, x.x, {lo, hi}, 1e-15);
    return Nome(q);
}

RParam m_R(RRValue x) {
    const double q = rr_inverse(x).q;
    return RParam(std::pow(std::log(q) / M_PI, 2.0));
}

RRValue omega_n(RRValue x, ModularIndex n) {
    const double lnq = std::log(rr_inverse(x).q);
    const double lnqn = n.n * lnq;
    if (lnqn < -700.0)
        throw OutOfRange("omega_n: q^n underflows for this x and n");
    return rr(Nome(std::exp(lnqn)));
}

double q_n(const MGContext& ctx, double A, ModularIndex n) {
    return m_forward(ctx, n.n * m_inv(ctx, RParam(A))).r;
}

double q_star(const MGContext& ctx, double A, ModularIndex n) {
    return m_inv(ctx, RParam(n.n * m_forward(ctx, A).r));
}

double k_i_of(double A) {
    if (!(A > 0.0 && A < 1.0)) throw DomainError("k_i_of: A outside (0,1)");
    const double comp = std::min(std::sqrt((1.0 - A) * (1.0 + A)),
                                 std::nextafter(1.0, 0.0));
    const double kc = agm_K(Modulus(comp));
    const double kk = agm_K(Modulus(A));
    return kc * kc / (kk * kk);
}

IdentityReport theorem6_check(const MGContext& ctx, double x, ModularIndex n,
                              double tol) {
    const double lhs = n.n * n.n * m_forward(ctx, x).r;
    const double rhs = b_inv(F1_inv(omega_n(y_of(ctx, x), n))).r;
    return make_report("THM6", {{"x", x}, {"n", n.n}}, lhs, rhs, tol,
                       "weight " + ctx.weight().label);
}

IdentityReport theorem11_check(const MGContext& ctx, double x, ModularIndex n,
                               double tol) {
    const double n2 = n.n * n.n;
    const double lhs = y_of(ctx, n2 * x).x;
    const double rx = b_inv(F1_inv(y_of(ctx, x))).r; // = m_forward(x)
    const double rhs = F1_of(b_of_r(RParam(q_n(ctx, rx, ModularIndex(n2))))).x;
    // Theorem-7 variant: y(n^2 x) = H_n((n^2 Q_{n^2})(n^{-2} H_n_inv(y(x)))),
    // H_n = Omega_{1/n} . F1 . b, H_n_inv = b^{-1} . F1^{-1} . Omega_n.
    const double u = b_inv(F1_inv(omega_n(y_of(ctx, x), n))).r;
    const double v = n2 * q_n(ctx, u / n2, ModularIndex(n2));
    const double alt =
        omega_n(F1_of(b_of_r(RParam(v))), ModularIndex(1.0 / n.n)).x;
    return make_report("THM11", {{"x", x}, {"n", n.n}}, lhs, rhs, tol,
                       "weight " + ctx.weight().label +
                           "; H_n-variant residual " +
                           std::to_string(std::abs(lhs - alt)));
}

IdentityReport eq77_check(double A, ModularIndex n, double tol) {
    const MGContext ctx = make_singular_modulus_context();
    const double n2 = n.n * n.n;
    const double lhs = singular_modulus(RParam(n2 * A)).k;
    const double kA = singular_modulus(RParam(A)).k;
    if (!(kA < rr_sup()))
        throw OutOfRange("eq77_check: k_A leaves the F1 domain; take A larger");
    const double rx = b_inv(F1_inv(RRValue(kA))).r;
    const double rhs = F1_of(b_of_r(RParam(q_n(ctx, rx, ModularIndex(n2))))).x;
    return make_report("EQ77", {{"A", A}, {"n", n.n}}, lhs, rhs, tol);
}

IdentityReport eq79_check(double A, double tol) {
    const double lhs = derivative_central(k_i_of, A, 1e-6);
    const double K = agm_K(Modulus(A));
    const double rhs =
        -M_PI * std::sqrt(k_i_of(A)) / (A * (1.0 - A * A) * K * K);
    return make_report("EQ79", {{"A", A}}, lhs, rhs, tol,
                       "denominator read as A(1-A^2)K(A)^2");
}

IdentityReport eq80_check(RRValue x, ModularIndex n, double tol) {
    const double lhs = omega_n(x, n).x;
    const double r = b_inv(F1_inv(x)).r; // = m_R(x)
    const double chain = n.n * n.n * k_i_of(singular_modulus(RParam(r)).k);
    const double rhs = F1_of(b_of_r(RParam(chain))).x;
    return make_report("EQ80", {{"x", x.x}, {"n", n.n}}, lhs, rhs, tol,
                       "type-consistent rearrangement of the printed chain");
}

} // namespace rrk
