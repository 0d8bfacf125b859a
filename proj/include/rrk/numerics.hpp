#ifndef RRK_NUMERICS_HPP
#define RRK_NUMERICS_HPP

#include <functional>

#include "rrk/errors.hpp"

namespace rrk {

using RealFn = std::function<double(double)>;

/// Tolerances shared by every integral in the library. tail_eps is the
/// error budget for discarded tails of semi-infinite integrals.
struct QuadratureConfig {
    double abs_tol = 1e-11;
    double rel_tol = 1e-11;
    int max_refinements = 4000;
    double tail_eps = 1e-12;

    void validate() const; // throws DomainError on bad invariants
};

struct Bracket {
    double lo;
    double hi;
};

struct SeriesConfig {
    double term_tol = 1e-16;
    int max_terms = 4000;
};

/// Adaptive Gauss-Kronrod (G7/K15) on [a,b]. Endpoint singularities must be
/// milder than x^{-1}; callers regularize anything stronger first.
double integrate_finite(const RealFn& f, double a, double b,
                        const QuadratureConfig& cfg = {});

/// Integrates f on [a,inf). tail_bound(T) must bound |int_T^inf f| and
/// decrease to 0; the tail beyond the chosen truncation point is discarded
/// against cfg.tail_eps.
double integrate_decaying(const RealFn& f, double a, const RealFn& tail_bound,
                          const QuadratureConfig& cfg = {});

/// Root of f(x)=target for f strictly monotone on the bracket (Brent).
double invert_monotone(const RealFn& f, double target, Bracket b,
                       double tol = 1e-12);

inline double derivative_central(const RealFn& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

} // namespace rrk

#endif
