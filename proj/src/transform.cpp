#include "rrk/transform.hpp"

#include <algorithm>
#include <cmath>

namespace rrk {

double radicand_root() {
    static const double root = [] {
        const double v = std::pow(0.5 * (-11.0 + 5.0 * std::sqrt(5.0)), 0.2);
        if (std::abs(v - rr_sup()) > 1e-14)
            throw NumericError("radicand_root: algebraic identity violated");
        return v;
    }();
    return root;
}

MGContext::MGContext(WeightG g, QuadratureConfig quad)
    : g_(std::move(g)), quad_(quad) {
    quad_.validate();
    const int samples = 400;
    const double tmax = radicand_root();
    double m = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = tmax * (i + 0.5) / samples;
        const double v = g_.eval(t);
        if (g_.positive_flag && !(v > 0.0))
            throw DomainError("MGContext: positive_flag weight is not positive at t=" +
                              std::to_string(t));
        m = std::max(m, std::abs(v));
    }
    sup_g_ = 2.0 * m;
    // Head budget: pi int_0^t0 (4/t^2) e^{-2 pi/(3t)} sup dt = 6 sup e^{-2 pi/(3 t0)}.
    t_cut_ = sup_g_ > 0.0
                 ? 2.0 * M_PI / (3.0 * std::log(6.0 * sup_g_ / quad_.tail_eps))
                 : 0.0;
}

MGContext& MGContext::with_analytic_m_inv(RealFn f) {
    analytic_ = std::move(f);
    return *this;
}

double MGContext::m_inv_sup() const {
    if (a_sup_ < 0.0) {
        const double r_min =
            std::max(1e-12, 0.25 * t_cut_ * t_cut_); // below the cutoff anyway
        a_sup_ = m_inv(*this, RParam(r_min));
    }
    return a_sup_;
}

double m_inv(const MGContext& ctx, RParam r) {
    if (ctx.has_analytic_m_inv()) return ctx.analytic_m_inv()(r.r);
    const double sup_g = ctx.sup_weight();
    if (sup_g == 0.0) return 0.0;
    double lo = std::sqrt(r.r);
    // Below the cutoff the eta^4 collapse makes the head worth < tail_eps.
    lo = std::max(lo, ctx.small_t_cutoff());
    auto integrand = [&ctx](double t) {
        const double e = dedekind_eta_axis(t);
        const double R = rr(Nome(std::exp(-M_PI * t))).x;
        return M_PI * e * e * e * e * ctx.weight().eval(R);
    };
    auto tail = [sup_g](double T) {
        return 12.0 * sup_g * std::exp(-M_PI * T / 6.0);
    };
    return integrate_decaying(integrand, lo, tail, ctx.quad());
}

RParam m_forward(const MGContext& ctx, double A) {
    if (!ctx.has_analytic_m_inv()) {
        if (!ctx.weight().positive_flag)
            throw DomainError("m_forward: weight must be positive for inversion");
        if (!(A > 0.0)) throw OutOfRange("m_forward: A must be positive");
        if (!(A < ctx.m_inv_sup()))
            throw OutOfRange("m_forward: A is at or above the supremum of m_inv");
    }
    auto f = [&ctx](double r) { return m_inv(ctx, RParam(r)); };
    // m_inv is decreasing for positive weights but analytic closed forms may
    // run the other way; expand the bracket until it straddles A either way.
    double lo = 1e-3, hi = 1e3;
    double flo = f(lo), fhi = f(hi);
    for (int i = 0; (flo - A) * (fhi - A) > 0.0; ++i) {
        if (i >= 6) throw OutOfRange("m_forward: A outside the range of m_inv");
        lo /= 10.0;
        hi *= 10.0;
        flo = f(lo);
        fhi = f(hi);
    }
    return RParam(invert_monotone(f, A, {lo, hi}, 1e-13));
}

RRValue y_of(const MGContext& ctx, double A) {
    return rr(m_forward(ctx, A).nome());
}

double phi_of(const MGContext& ctx, RParam r) {
    const double e = dedekind_eta_axis(std::sqrt(r.r));
    const double g = ctx.weight().eval(rr(r.nome()).x);
    if (g == 0.0) throw PoleError("phi_of: weight vanishes at R(q)");
    return 2.0 * std::sqrt(r.r) / (M_PI * e * e * e * e * g);
}

double b_of_r(RParam r) {
    const double k = singular_modulus(r).k;
    return 3.0 * std::cbrt(2.0 * k) * hyp2f1(1.0 / 6.0, 1.0 / 3.0, 7.0 / 6.0, k * k);
}

RParam b_inv(double b) {
    if (!(b > 0.0)) throw OutOfRange("b_inv: b must be positive");
    auto f = [](double r) { return b_of_r(RParam(r)); };
    // b_of_r decreases in r.
    double lo = 1e-4, hi = 1e4;
    for (int i = 0; f(hi) > b; ++i) {
        if (i >= 4) throw OutOfRange("b_inv: b below the reachable range");
        hi *= 100.0;
    }
    for (int i = 0; f(lo) < b; ++i) {
        if (i >= 4) throw OutOfRange("b_inv: b above the reachable range");
        lo /= 100.0;
    }
    return RParam(invert_monotone(f, b, {lo, hi}, 1e-13));
}

double F1_inv(RRValue y) {
    // t = s^6 regularizes the t^{-1/6} behaviour at the origin.
    return integrate_finite(
        [](double s) { return 30.0 / (s * rr_rad(std::pow(s, 6.0))); }, 0.0,
        std::pow(y.x, 1.0 / 6.0));
}

RRValue F1_of(double x) {
    if (!(x > 0.0)) throw OutOfRange("F1_of: x must be positive");
    const double hi = radicand_root() * (1.0 - 1e-13);
    if (!(x < F1_inv(RRValue(hi))))
        throw OutOfRange("F1_of: x beyond the domain endpoint");
    return RRValue(invert_monotone(
        [](double y) { return F1_inv(RRValue(y)); }, x, {1e-14, hi}, 1e-14));
}

double h_inv(const MGContext& ctx, double A) {
    return F1_inv(y_of(ctx, A));
}

double h_of(const MGContext& ctx, double x) {
    // y(A) = F1_of(x) pins the nome, hence r, hence A = m_inv(r).
    const RRValue y = F1_of(x);
    auto f = [](double q) { return rr(Nome(q)).x; };
    const double q = invert_monotone(f, y.x, {1e-12, 1.0 - 1e-12}, 1e-15);
    const double r = std::pow(std::log(q) / M_PI, 2.0);
    return m_inv(ctx, RParam(r));
}

double H_o_inv(double x, Modulus k, const QuadratureConfig& cfg) {
    if (!(x >= 0.0)) throw OutOfRange("H_o_inv: x must be nonnegative");
    if (x == 0.0) return 0.0;
    const double u_max = incomplete_F(std::asin(radicand_root()), k);
    if (!(x < u_max))
        throw OutOfRange("H_o_inv: sn(u) leaves (0, radicand_root()) before x");
    return integrate_finite(
        [&k](double u) {
            const JacobiValues j = jacobi_am_sn_cn_dn(u, k);
            return 5.0 * j.dn * j.cn / (j.sn * rr_rad(j.sn));
        },
        0.0, x, cfg);
}

double H_o_of(double x, Modulus k, const QuadratureConfig& cfg) {
    if (!(x >= 0.0)) throw OutOfRange("H_o_of: x must be nonnegative");
    if (x == 0.0) return 0.0;
    const double u_max = incomplete_F(std::asin(radicand_root()), k);
    const double hi = u_max * (1.0 - 1e-10);
    if (!(x < H_o_inv(hi, k, cfg)))
        throw OutOfRange("H_o_of: x beyond the domain endpoint");
    return invert_monotone([&](double u) { return H_o_inv(u, k, cfg); }, x,
                           {1e-12, hi}, 1e-13);
}

IdentityReport theorem2_check(const MGContext& ctx, double A, double tol) {
    auto k_of_A = [&ctx](double a) {
        return singular_modulus(m_forward(ctx, a)).k;
    };
    const double h = 1e-4 * std::max(1.0, std::abs(A));
    const double dk_dA = derivative_central(k_of_A, A, h);
    const double lhs = 1.0 / dk_dA;
    const Modulus k(k_of_A(A));
    const double y = y_of(ctx, A).x;
    const double rhs = std::cbrt(2.0) * ctx.weight().eval(y) /
                       std::pow(k.k * k.complement(), 2.0 / 3.0);
    return make_report("THM2", {{"A", A}}, lhs, rhs, tol,
                       "weight " + ctx.weight().label);
}

MGContext make_quintic_context(QuadratureConfig quad) {
    WeightG g;
    g.eval = [](double x) {
        return x * (5.0 * std::pow(x, 4.0) + 1.0) * rr_rad(x) / 5.0;
    };
    g.positive_flag = true;
    g.label = "quintic";
    return MGContext(std::move(g), quad);
}

MGContext make_identity_context(QuadratureConfig quad) {
    WeightG g;
    g.eval = [](double x) { return x * rr_rad(x) / 5.0; };
    g.positive_flag = true;
    g.label = "identity-map";
    return MGContext(std::move(g), quad);
}

MGContext make_linear_context(QuadratureConfig quad) {
    WeightG g;
    g.eval = [](double x) { return x; };
    g.positive_flag = true;
    g.label = "linear";
    return MGContext(std::move(g), quad);
}

MGContext make_arcsine_context(QuadratureConfig quad) {
    WeightG g;
    g.eval = [](double x) {
        return x * rr_rad(x) / (5.0 * std::sqrt((1.0 - x) * (1.0 + x)));
    };
    g.positive_flag = true;
    g.label = "arcsine";
    return MGContext(std::move(g), quad);
}

MGContext make_jacobi_context(Modulus k, QuadratureConfig quad) {
    const double k2 = k.k * k.k;
    WeightG g;
    g.eval = [k2](double x) {
        return x * rr_rad(x) /
               (5.0 * std::sqrt((1.0 - x * x) * (1.0 - k2 * x * x)));
    };
    g.positive_flag = true;
    g.label = "jacobi";
    return MGContext(std::move(g), quad);
}

namespace {

// K(sqrt(1-a^2))^2 / K(a)^2, the inverse of r -> k_r; the complement is
// clamped one ulp below 1 so tiny arguments stay inside Modulus.
double k_i_ratio(double a) {
    const double comp = std::min(std::sqrt((1.0 - a) * (1.0 + a)),
                                 std::nextafter(1.0, 0.0));
    const double kc = agm_K(Modulus(comp));
    const double kk = agm_K(Modulus(a));
    return kc * kc / (kk * kk);
}

} // namespace

MGContext make_singular_modulus_context(QuadratureConfig quad) {
    WeightG g;
    // G = x k_i'(x) rad(x)/5 changes sign conventions awkwardly (k_i is
    // decreasing); the analytic inverse integral below is what the chains
    // actually need, so the weight itself is only sampled for bookkeeping.
    g.eval = [](double x) {
        const double d = derivative_central(k_i_ratio, x, 1e-5);
        return std::abs(x * d * rr_rad(x) / 5.0);
    };
    g.positive_flag = true;
    g.label = "singular-modulus";
    MGContext ctx(std::move(g), quad);
    ctx.with_analytic_m_inv(
        [](double r) { return k_i_ratio(rr(RParam(r).nome()).x); });
    return ctx;
}

} // namespace rrk
