#ifndef RRK_SOLVER_HPP
#define RRK_SOLVER_HPP

#include <string>
#include <vector>

#include "rrk/modular.hpp"
#include "rrk/transform.hpp"

namespace rrk {

/// An invertible map f with derivative, the raw material of the inversion
/// pipeline. f(0) = 0 and df > 0 on (0, radicand_root()) are assumed; the
/// derivative is spot-checked against finite differences when a weight is
/// built from the map.
struct SmoothMap {
    RealFn f;
    RealFn df;
    bool monotone_flag = true;
    std::string label;
};

/// G(x) = x f'(x) rad(x) / 5.
WeightG weight_from_f(const SmoothMap& m);

/// Root of f(x) = a inside (0, radicand_root()), computed as
/// R(e^{-pi sqrt(m_forward(a))}) under the weight built from f.
double solve_via_rr(const SmoothMap& m, double a,
                    const QuadratureConfig& quad = {});

/// Closed-integral solve of y(x) = target for Theorem-1's y under the given
/// weight: first the fundamental equation R(e^{-pi sqrt(m0)}) = target, then
/// x0 = m_inv(m0).
double solve_by_fundamental(double mzero_target, const WeightG& g0,
                            const QuadratureConfig& quad = {});

/// int_0^x f(-q)^5 R(q) g'(R(q)) / f(-q^5) dq = 5 g(R(x)), for g(0)=0.
IdentityReport eq60_check(Nome x, const RealFn& g, const RealFn& dg,
                          double tol = 1e-8);

/// The Bring-radical showcase chain: solve Omega_n(x^5+x) = target, then
/// compare BR(n^2 w_n) with sn(H_o(b at Q_{n^2}), k=1/2). The auxiliary
/// equation is unsolvable for target >= rr_sup() (Omega_n maps into
/// (0, rr_sup())) and the Q_{n^2} chain leaves the quintic range for n > 1;
/// both conditions are recorded in the report instead of thrown.
IdentityReport example12_check(ModularIndex n, double target = 2.0,
                               double tol = 1e-6);

/// Maps shipped for the method-vs-oracle equivalence suite.
std::vector<SmoothMap> solver_registry();

} // namespace rrk

#endif
