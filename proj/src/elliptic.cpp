#include "rrk/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace rrk {

double agm_K(Modulus k) {
    double a = 1.0, b = k.complement();
    for (int i = 0; i < 40 && std::abs(a - b) > 4e-16 * a; ++i) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return M_PI / (2.0 * a);
}

double agm_E(Modulus k) {
    double a = 1.0, b = k.complement(), c = k.k;
    double sum = 0.5 * c * c;
    double pow2 = 1.0;
    for (int i = 0; i < 40 && std::abs(c) > 4e-17; ++i) {
        const double an = 0.5 * (a + b);
        c = 0.5 * (a - b);
        b = std::sqrt(a * b);
        a = an;
        pow2 *= 2.0;
        sum += 0.5 * pow2 * c * c;
    }
    return agm_K(k) * (1.0 - sum);
}

double modulus_from_nome(double q) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("modulus_from_nome: bad q");
    double th2 = 0.0, th3 = 1.0;
    for (int n = 0; n < 4000; ++n) {
        const double t2 = std::pow(q, n * (n + 1.0)); // q^{n(n+1)}, later * q^{1/4}
        th2 += t2;
        const double t3 = n == 0 ? 0.0 : 2.0 * std::pow(q, double(n) * n);
        th3 += t3;
        if (n > 0 && t2 < 1e-18 && t3 < 1e-18) break;
    }
    th2 *= 2.0 * std::pow(q, 0.25);
    const double k = (th2 * th2) / (th3 * th3);
    return k;
}

Modulus singular_modulus(RParam r) {
    if (r.r < 1.0) {
        // k_r and k_{1/r} are complementary; for tiny kc the complement
        // rounds onto 1, which Modulus rejects, so stay one ulp below.
        const double kc = singular_modulus(RParam(1.0 / r.r)).k;
        return Modulus(std::min(std::sqrt((1.0 - kc) * (1.0 + kc)),
                                std::nextafter(1.0, 0.0)));
    }
    return Modulus(modulus_from_nome(r.nome().q));
}

IdentityReport dk_dq_check(RParam r, double tol) {
    const double q = r.nome().q;
    const double h = 1e-6 * q;
    const double lhs =
        derivative_central([](double qq) { return modulus_from_nome(qq); }, q, h);
    const Modulus k = singular_modulus(r);
    const double kp = k.complement();
    const double K = agm_K(k);
    const double rhs = 2.0 * k.k * kp * kp * K * K / (q * M_PI * M_PI);
    return make_report("EQ7", {{"r", r.r}}, lhs, rhs, tol,
                       "positive-sign reading; matches finite differences");
}

JacobiValues jacobi_am_sn_cn_dn(double u, Modulus k) {
    if (k.k == 0.0) return {u, std::sin(u), std::cos(u), 1.0};
    std::vector<double> as, cs;
    double a = 1.0, b = k.complement(), c = k.k;
    as.push_back(a);
    cs.push_back(c);
    int n = 0;
    while (std::abs(c) > 1e-16 * a && n < 60) {
        const double an = 0.5 * (a + b);
        c = 0.5 * (a - b);
        b = std::sqrt(a * b);
        a = an;
        as.push_back(a);
        cs.push_back(c);
        ++n;
    }
    double phi = std::ldexp(1.0, n) * a * u;
    for (int i = n; i >= 1; --i)
        phi = 0.5 * (phi + std::asin(std::clamp(cs[i] / as[i] * std::sin(phi), -1.0, 1.0)));
    const double sn = std::sin(phi);
    const double cn = std::cos(phi);
    const double dn = std::sqrt(std::max(0.0, 1.0 - k.k * k.k * sn * sn));
    return {phi, sn, cn, dn};
}

namespace {

// Carlson symmetric integral R_F by the duplication theorem.
double carlson_rf(double x, double y, double z) {
    const double err = 1e-14;
    double mu, dx, dy, dz;
    do {
        const double lam = std::sqrt(x * y) + std::sqrt(y * z) + std::sqrt(z * x);
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        mu = (x + y + z) / 3.0;
        dx = (mu - x) / mu;
        dy = (mu - y) / mu;
        dz = (mu - z) / mu;
    } while (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) > err);
    const double e2 = dx * dy - dz * dz;
    const double e3 = dx * dy * dz;
    return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) /
           std::sqrt(mu);
}

} // namespace

double incomplete_F(double phi, Modulus k) {
    if (std::abs(phi) > M_PI / 2.0 + 1e-12)
        throw DomainError("incomplete_F: |phi| > pi/2");
    if (phi == 0.0) return 0.0;
    const double s = std::sin(phi);
    const double c2 = 1.0 - s * s;
    const double q = 1.0 - k.k * k.k * s * s;
    return s * carlson_rf(c2, q, 1.0);
}

namespace {

double hyp2f1_series(double a, double b, double c, double z,
                     const SeriesConfig& cfg) {
    double term = 1.0, sum = 1.0;
    for (int n = 0; n < cfg.max_terms; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
        sum += term;
        if (std::abs(term) < cfg.term_tol * std::abs(sum) && n > 4) return sum;
    }
    throw NonConvergence("hyp2f1: series did not converge");
}

} // namespace

double hyp2f1(double a, double b, double c, double z, const SeriesConfig& cfg) {
    if (!(z < 1.0)) throw NonConvergence("hyp2f1: z >= 1 not supported");
    if (z == 0.0) return 1.0;
    if (z < 0.0) {
        // Pfaff transform maps z<0 into (0,1).
        const double w = z / (z - 1.0);
        if (w < 0.7) return std::pow(1.0 - z, -a) * hyp2f1_series(a, c - b, c, w, cfg);
    }
    if (z <= 0.7) return hyp2f1_series(a, b, c, z, cfg);
    // Linear connection at z -> 1-z; requires c-a-b non-integer (true for all
    // parameter sets used here).
    const double s = c - a - b;
    const double g1 = gamma_fn(c) * gamma_fn(s) / (gamma_fn(c - a) * gamma_fn(c - b));
    const double g2 = gamma_fn(c) * gamma_fn(-s) / (gamma_fn(a) * gamma_fn(b));
    const double w = 1.0 - z;
    return g1 * hyp2f1_series(a, b, 1.0 - s, w, cfg) +
           g2 * std::pow(w, s) * hyp2f1_series(c - a, c - b, 1.0 + s, w, cfg);
}

double appell_F1(double a, double b1, double b2, double c, double x, double y,
                 const SeriesConfig& cfg) {
    if (!(std::abs(x) < 1.0 && std::abs(y) < 1.0))
        throw NonConvergence("appell_F1: arguments must lie in the unit bidisk");
    double sum = 0.0;
    double rowlead = 1.0; // (a)_m (b1)_m / ((c)_m m!) x^m
    for (int m = 0; m < cfg.max_terms; ++m) {
        double term = rowlead;
        double rowsum = term;
        for (int n = 0; n + 1 < cfg.max_terms; ++n) {
            term *= (a + m + n) * (b2 + n) / ((c + m + n) * (n + 1.0)) * y;
            rowsum += term;
            if (std::abs(term) < cfg.term_tol * (std::abs(sum) + std::abs(rowsum)) + 1e-300)
                break;
        }
        sum += rowsum;
        if (std::abs(rowsum) < cfg.term_tol * std::abs(sum) + 1e-300 && m > 4)
            return sum;
        rowlead *= (a + m) * (b1 + m) / ((c + m) * (m + 1.0)) * x;
    }
    throw NonConvergence("appell_F1: double series did not converge");
}

double gamma_fn(double x) {
    if (x <= 0.0 && x == std::floor(x)) throw PoleError("gamma_fn: pole");
    return std::tgamma(x);
}

double incomplete_beta(double x, double a, double b, const QuadratureConfig& cfg) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("incomplete_beta: x outside [0,1]");
    if (!(a > 0.0)) throw DomainError("incomplete_beta: a must be positive");
    if (x == 0.0) return 0.0;
    if (b <= 0.0 && x >= 1.0 - 1e-14)
        throw DivergentIntegral("incomplete_beta: divergent endpoint for b <= 0");

    // Power substitution t = s^{1/a} kills the t^{a-1} endpoint singularity.
    auto lower_part = [&](double hi) {
        return integrate_finite(
                   [&](double s) {
                       const double t = std::pow(s, 1.0 / a);
                       return std::pow(1.0 - t, b - 1.0);
                   },
                   0.0, std::pow(hi, a), cfg) / a;
    };
    const double split = 0.5;
    if (x <= split) return lower_part(x);
    double upper;
    if (b > 0.0) {
        // Mirror substitution u = (1-t) = v^{1/b}.
        upper = integrate_finite(
                    [&](double v) {
                        const double u = std::pow(v, 1.0 / b);
                        return std::pow(1.0 - u, a - 1.0);
                    },
                    std::pow(1.0 - x, b), std::pow(1.0 - split, b), cfg) / b;
    } else {
        upper = integrate_finite(
            [&](double t) { return std::pow(t, a - 1.0) * std::pow(1.0 - t, b - 1.0); },
            split, x, cfg);
    }
    return lower_part(split) + upper;
}

double bring_radical(double a) {
    if (a == 0.0) return 0.0;
    const double m = std::max(1.5, std::pow(std::abs(a), 0.2) + 1.0);
    double x = invert_monotone([](double t) { return t * t * t * t * t + t; }, a,
                               {-m, m}, 1e-14);
    // One Newton polish.
    const double fx = x * x * x * x * x + x - a;
    x -= fx / (5.0 * x * x * x * x + 1.0);
    return x;
}

} // namespace rrk
