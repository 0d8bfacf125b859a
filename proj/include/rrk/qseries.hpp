#ifndef RRK_QSERIES_HPP
#define RRK_QSERIES_HPP

#include <cmath>

#include "rrk/errors.hpp"
#include "rrk/numerics.hpp"
#include "rrk/report.hpp"

namespace rrk {

/// Nome q of the q-expansions, restricted to (0,1).
struct Nome {
    double q;
    explicit Nome(double q_) : q(q_) {
        if (!(q > 0.0 && q < 1.0)) throw DomainError("Nome: q must lie in (0,1)");
    }
};

/// Parameter r > 0 with induced nome q = exp(-pi sqrt(r)).
struct RParam {
    double r;
    explicit RParam(double r_) : r(r_) {
        if (!(r > 0.0)) throw DomainError("RParam: r must be positive");
    }
    Nome nome() const { return Nome(std::exp(-M_PI * std::sqrt(r))); }
};

/// Supremum of the Rogers-Ramanujan continued fraction on (0,1):
/// ((-11+5*sqrt(5))/2)^(1/5) = (sqrt(5)-1)/2.
double rr_sup();

/// A value of the continued fraction; lives in (0, rr_sup()).
struct RRValue {
    double x;
    explicit RRValue(double x_) : x(x_) {
        if (!(x > 0.0 && x < rr_sup()))
            throw DomainError("RRValue: x outside (0, (sqrt(5)-1)/2)");
    }
};

/// x^{-5} - 11 - x^5, positive exactly on (0, rr_sup()).
double rr_radicand(double x);

/// (x^{-5} - 11 - x^5)^{1/6}.
double rr_rad(double x);

/// Euler product f(-q) = prod (1-q^n), summed by the pentagonal-number
/// theorem. Switches to the eta modular transform for q near 1.
double f_minus_q(Nome q, const SeriesConfig& cfg = {});

/// eta(i t / 2) for t > 0; internal nome is exp(-pi t).
double dedekind_eta_axis(double t, const SeriesConfig& cfg = {});

/// Continued fraction by backward recurrence, depth doubled until two
/// successive truncations differ by < 1e-13.
RRValue rr_cf_direct(Nome q, int depth_cap = 1 << 20);

/// R(q) recovered from the eta-quotient identity
/// R^{-5} - 11 - R^5 = f(-q)^6 / (q f(-q^5)^6).
RRValue rr_from_eta(Nome q);

/// Preferred evaluator: continued fraction for moderate q, eta route near 1.
RRValue rr(Nome q);

/// R'(q) = 5^{-1} q^{-5/6} f(-q)^4 R(q) (R^{-5}-11-R^5)^{1/6}.
double rr_derivative(Nome q);

/// Residual of R'/R = f(-q)^5 / (5 q f(-q^5)).
IdentityReport rr_log_derivative_check(Nome q, double tol = 1e-9);

} // namespace rrk

#endif
