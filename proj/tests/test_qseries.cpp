#include <cmath>

#include "doctest.h"
#include "rrk/elliptic.hpp"
#include "rrk/qseries.hpp"

using namespace rrk;

namespace {

// Brute-force truncated Euler product, the oracle for f(-q).
double product_oracle(double q) {
    double p = 1.0;
    double qn = 1.0;
    for (int n = 1; n < 4000; ++n) {
        qn *= q;
        if (qn < 1e-18) break;
        p *= 1.0 - qn;
    }
    return p;
}

} // namespace

TEST_CASE("f_minus_q against the truncated product") {
    for (double q : {1e-8, 0.1, 0.3, 0.5, 0.8, 0.9, 0.95}) {
        CHECK(std::abs(f_minus_q(Nome(q)) - product_oracle(q)) < 1e-12);
    }
    CHECK(f_minus_q(Nome(0.1)) == doctest::Approx(0.8900100999).epsilon(1e-9));
    CHECK(f_minus_q(Nome(1e-12)) == doctest::Approx(1.0));
}

TEST_CASE("f_minus_q eta-elliptic evaluation at q=e^{-pi}") {
    const double q = std::exp(-M_PI);
    const double k = 1.0 / std::sqrt(2.0); // k_1
    const double kp = std::sqrt(1.0 - k * k);
    const double rhs = std::cbrt(2.0) / std::sqrt(M_PI) * std::pow(q, -1.0 / 24.0) *
                       std::pow(k, 1.0 / 12.0) * std::pow(kp, 1.0 / 3.0) *
                       std::sqrt(agm_K(Modulus(k)));
    CHECK(std::abs(f_minus_q(Nome(q)) - rhs) / rhs < 1e-12);
}

TEST_CASE("dedekind_eta_axis definition and modular transform") {
    const double t = 2.0;
    const double direct =
        std::exp(-M_PI / 12.0) * f_minus_q(Nome(std::exp(-2.0 * M_PI)));
    CHECK(std::abs(dedekind_eta_axis(t) - direct) < 1e-14);
    // eta(it/2) * sqrt(t/2) = eta(2i/t) for sampled t.
    for (double tt : {0.5, 1.0, 2.0, 4.0}) {
        const double lhs = dedekind_eta_axis(tt) * std::sqrt(tt / 2.0);
        const double rhs = dedekind_eta_axis(4.0 / tt);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
    // Decreasing for large t.
    CHECK(dedekind_eta_axis(6.0) > dedekind_eta_axis(8.0));
}

TEST_CASE("rr_cf_direct basics") {
    // R(q)/q^{1/5} -> 1 as q -> 0.
    const double q = 1e-10;
    CHECK(rr_cf_direct(Nome(q)).x / std::pow(q, 0.2) ==
          doctest::Approx(1.0).epsilon(1e-9));
    // Radical value at q = e^{-2pi}.
    const double radical =
        0.5 * (-1.0 - std::sqrt(5.0) + std::sqrt(2.0 * (5.0 + std::sqrt(5.0))));
    CHECK(std::abs(rr_cf_direct(Nome(std::exp(-2.0 * M_PI))).x - radical) < 1e-12);
    CHECK(radical == doctest::Approx(0.284079).epsilon(1e-6));
}

TEST_CASE("rr_from_eta agrees with the continued fraction") {
    for (double q = 0.05; q < 0.91; q += 0.05) {
        CHECK(std::abs(rr_from_eta(Nome(q)).x - rr_cf_direct(Nome(q)).x) < 1e-10);
    }
    CHECK(std::abs(rr_from_eta(Nome(0.5)).x - rr_cf_direct(Nome(0.5)).x) < 1e-11);
    // Right side of the eta-quotient is positive.
    const double q = 0.3;
    const double rhs = std::pow(f_minus_q(Nome(q)), 6.0) /
                       (q * std::pow(f_minus_q(Nome(std::pow(q, 5.0))), 6.0));
    CHECK(rhs > 0.0);
}

TEST_CASE("rr monotone in q") {
    // Strictly increasing while the gap to the supremum is representable;
    // beyond q ~ 0.75 the true value sits closer to rr_sup() than one ulp.
    double prev = 0.0;
    for (double q = 0.02; q < 0.73; q += 0.02) {
        const double v = rr(Nome(q)).x;
        CHECK(v > prev);
        prev = v;
    }
    for (double q = 0.74; q < 0.99; q += 0.04) {
        const double v = rr(Nome(q)).x;
        CHECK(v >= prev - 1e-12); // continued-fraction noise floor
        CHECK(v < rr_sup());
        prev = v;
    }
}

TEST_CASE("domain invariant: radicand vanishes exactly at the sup") {
    CHECK(std::abs(std::pow(rr_sup(), 5.0) - 0.5 * (5.0 * std::sqrt(5.0) - 11.0)) <
          1e-15);
    CHECK(std::abs(rr_radicand(rr_sup())) < 1e-12);
    CHECK(rr_radicand(0.3) > 0.0);
}

TEST_CASE("rr_derivative matches central differences") {
    for (double q : {0.1, 0.4}) {
        const double fd = derivative_central(
            [](double qq) { return rr_cf_direct(Nome(qq)).x; }, q, 1e-6);
        const double an = rr_derivative(Nome(q));
        CHECK(std::abs(fd - an) / an < 1e-6);
        CHECK(an > 0.0);
    }
}

TEST_CASE("log-derivative identity EQ61") {
    for (double q : {0.2, 0.5}) {
        const auto rep = rr_log_derivative_check(Nome(q));
        CHECK(rep.pass);
        CHECK(rep.rel_resid < 1e-9);
    }
    // Leading order: both sides ~ (1/5) q^{-1} * q^{1/5}-scaled consistently.
    const auto rep = rr_log_derivative_check(Nome(1e-6));
    CHECK(rep.rel_resid < 1e-8);
}
