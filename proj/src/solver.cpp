#include "rrk/solver.hpp"

#include <cmath>
#include <limits>

namespace rrk {

WeightG weight_from_f(const SmoothMap& m) {
    for (double x : {0.1, 0.3, 0.5}) {
        const double fd = derivative_central(m.f, x, 1e-6);
        const double an = m.df(x);
        if (std::abs(fd - an) > 1e-4 * std::max(1.0, std::abs(an)))
            throw DomainError("weight_from_f: df disagrees with finite "
                              "differences of f near x=" + std::to_string(x));
        if (m.monotone_flag && !(an > 0.0))
            throw DomainError("weight_from_f: df not positive at x=" +
                              std::to_string(x));
    }
    WeightG g;
    RealFn f_prime = m.df;
    g.eval = [f_prime](double x) { return x * f_prime(x) * rr_rad(x) / 5.0; };
    g.positive_flag = m.monotone_flag;
    g.label = m.label.empty() ? "from-f" : m.label;
    return g;
}

double solve_via_rr(const SmoothMap& m, double a, const QuadratureConfig& quad) {
    const MGContext ctx(weight_from_f(m), quad);
    return y_of(ctx, a).x; // OutOfRange when a leaves f((0, radicand_root()))
}

double solve_by_fundamental(double mzero_target, const WeightG& g0,
                            const QuadratureConfig& quad) {
    if (!(mzero_target > 0.0 && mzero_target < rr_sup()))
        throw OutOfRange(
            "solve_by_fundamental: target outside (0, radicand_root())");
    const double m0 = m_R(RRValue(mzero_target)).r;
    const MGContext ctx(g0, quad);
    return m_inv(ctx, RParam(m0));
}

IdentityReport eq60_check(Nome x, const RealFn& g, const RealFn& dg,
                          double tol) {
    // The measure reads dq/q (the integrand is 5 R'(q) g'(R) by the
    // log-derivative identity); q = s^5 tames the q^{-4/5} origin.
    const double lhs = integrate_finite(
        [&](double s) {
            if (s <= 0.0) return 0.0;
            const double q = std::pow(s, 5.0);
            const double f1 = f_minus_q(Nome(q));
            const double f5 = f_minus_q(Nome(std::pow(q, 5.0)));
            const double R = rr(Nome(q)).x;
            return 5.0 * std::pow(f1, 5.0) * R * dg(R) / (s * f5);
        },
        0.0, std::pow(x.q, 0.2));
    const double rhs = 5.0 * g(rr(x).x);
    return make_report("EQ60", {{"x", x.q}}, lhs, rhs, tol,
                       "integrand taken against dq/q");
}

IdentityReport example12_check(ModularIndex n, double target, double tol) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (!(target > 0.0 && target < rr_sup())) {
        IdentityReport rep =
            make_report("EX12", {{"n", n.n}, {"target", target}}, nan, nan, tol);
        rep.notes = "Unsolvable: Omega_n maps into (0, " +
                    std::to_string(rr_sup()) +
                    "), so Omega_n(x^5+x) = target has no root; for n=1 the "
                    "root of x^5+x = target would also leave the domain";
        return rep;
    }
    // x_n = BR(Omega_{1/n}(target)).
    const double xn =
        bring_radical(omega_n(RRValue(target), ModularIndex(1.0 / n.n)).x);
    const MGContext ctx = make_quintic_context();
    const double wn = m_inv(ctx, RParam(xn));
    const double n2 = n.n * n.n;
    try {
        const double qn = q_n(ctx, xn, ModularIndex(n2));
        const double lhs = bring_radical(n2 * wn);
        const double rhs =
            jacobi_am_sn_cn_dn(H_o_of(b_of_r(RParam(qn)), Modulus(0.5)),
                               Modulus(0.5))
                .sn;
        return make_report("EX12", {{"n", n.n}, {"target", target}}, lhs, rhs,
                           tol, "sn taken at k=1/2");
    } catch (const OutOfRange& e) {
        IdentityReport rep =
            make_report("EX12", {{"n", n.n}, {"target", target}}, nan, nan, tol);
        rep.notes = std::string("chain leaves the quintic range: ") + e.what();
        return rep;
    }
}

std::vector<SmoothMap> solver_registry() {
    std::vector<SmoothMap> maps;
    {
        SmoothMap m;
        m.f = [](double x) { return std::pow(x, 5.0) + x; };
        m.df = [](double x) { return 5.0 * std::pow(x, 4.0) + 1.0; };
        m.label = "quintic";
        maps.push_back(std::move(m));
    }
    {
        SmoothMap m;
        m.f = [](double x) { return x; };
        m.df = [](double) { return 1.0; };
        m.label = "identity";
        maps.push_back(std::move(m));
    }
    {
        SmoothMap m;
        m.f = [](double x) { return x * x * x + x; };
        m.df = [](double x) { return 3.0 * x * x + 1.0; };
        m.label = "cubic";
        maps.push_back(std::move(m));
    }
    return maps;
}

} // namespace rrk
