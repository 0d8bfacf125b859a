#include "rrk/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace rrk {

double rr_sup() { return 0.5 * (std::sqrt(5.0) - 1.0); }

double rr_radicand(double x) {
    return std::pow(x, -5.0) - 11.0 - std::pow(x, 5.0);
}

double rr_rad(double x) {
    const double v = rr_radicand(x);
    if (!(v > 0.0)) throw DomainError("rr_rad: radicand not positive");
    return std::pow(v, 1.0 / 6.0);
}

namespace {

// Pentagonal-number series: f(-q) = 1 + sum_k (-1)^k (q^{k(3k-1)/2} + q^{k(3k+1)/2}).
double pentagonal_series(double q, const SeriesConfig& cfg) {
    const double lnq = std::log(q);
    double sum = 1.0;
    for (int k = 1; k <= cfg.max_terms; ++k) {
        const double e1 = 0.5 * k * (3.0 * k - 1.0);
        const double e2 = 0.5 * k * (3.0 * k + 1.0);
        const double term = std::exp(e1 * lnq) + std::exp(e2 * lnq);
        sum += (k % 2 == 1) ? -term : term;
        if (term < cfg.term_tol) return sum;
    }
    throw NonConvergence("f_minus_q: pentagonal series did not converge");
}

} // namespace

double dedekind_eta_axis(double t, const SeriesConfig& cfg) {
    if (!(t > 0.0)) throw DomainError("dedekind_eta_axis: t must be positive");
    if (t < 1.0) {
        // eta(i t/2) = sqrt(2/t) * eta(2 i / t); 2i/t = i(4/t)/2.
        return std::sqrt(2.0 / t) * dedekind_eta_axis(4.0 / t, cfg);
    }
    return std::exp(-M_PI * t / 24.0) * pentagonal_series(std::exp(-M_PI * t), cfg);
}

double f_minus_q(Nome q, const SeriesConfig& cfg) {
    if (q.q >= 1.0 - 1e-15) throw NonConvergence("f_minus_q: q too close to 1");
    if (q.q <= 0.85) return pentagonal_series(q.q, cfg);
    const double t = -std::log(q.q) / M_PI;
    return dedekind_eta_axis(t, cfg) * std::exp(M_PI * t / 24.0);
}

namespace {

// Largest value the library distinguishes from the supremum. Near q=1 the
// true R(q) sits within ~1e-30 of rr_sup(), unrepresentable in double.
double rr_clamp(double x) {
    const double hi = std::nextafter(rr_sup(), 0.0);
    return std::min(x, hi);
}

} // namespace

RRValue rr_cf_direct(Nome q, int depth_cap) {
    std::vector<double> pw{1.0};
    auto truncated = [&](int depth) {
        while (static_cast<int>(pw.size()) <= depth)
            pw.push_back(pw.back() * q.q);
        double v = 1.0;
        for (int n = depth; n >= 1; --n) v = 1.0 + pw[n] / v;
        return std::pow(q.q, 0.2) / v;
    };
    int depth = 16;
    double prev = truncated(depth);
    while (depth < depth_cap) {
        depth *= 2;
        const double cur = truncated(depth);
        if (std::abs(cur - prev) < 1e-13) return RRValue(rr_clamp(cur));
        prev = cur;
    }
    throw NonConvergence("rr_cf_direct: depth cap reached");
}

RRValue rr_from_eta(Nome q) {
    const double f1 = f_minus_q(q);
    const double f5 = f_minus_q(Nome(std::pow(q.q, 5.0)));
    const double target = std::pow(f1, 6.0) / (q.q * std::pow(f5, 6.0));
    // x -> x^{-5}-11-x^5 is strictly decreasing on (0, rr_sup()).
    const double hi = rr_sup() * (1.0 - 4e-16);
    if (!(target > rr_radicand(hi))) return RRValue(rr_clamp(hi));
    const double x =
        invert_monotone([](double t) { return rr_radicand(t); }, target,
                        {1e-12, hi}, 1e-15);
    return RRValue(x);
}

RRValue rr(Nome q) {
    return q.q <= 0.95 ? rr_cf_direct(q) : rr_from_eta(q);
}

double rr_derivative(Nome q) {
    const double R = rr(q).x;
    return 0.2 * std::pow(q.q, -5.0 / 6.0) * std::pow(f_minus_q(q), 4.0) * R *
           rr_rad(R);
}

IdentityReport rr_log_derivative_check(Nome q, double tol) {
    const double R = rr(q).x;
    const double lhs = rr_derivative(q) / R;
    const double f1 = f_minus_q(q);
    const double f5 = f_minus_q(Nome(std::pow(q.q, 5.0)));
    const double rhs = std::pow(f1, 5.0) / (5.0 * q.q * f5);
    return make_report("EQ61", {{"q", q.q}}, lhs, rhs, tol);
}

} // namespace rrk
