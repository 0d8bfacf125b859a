#ifndef RRK_MODULAR_HPP
#define RRK_MODULAR_HPP

#include "rrk/elliptic.hpp"
#include "rrk/errors.hpp"
#include "rrk/qseries.hpp"
#include "rrk/report.hpp"
#include "rrk/transform.hpp"

namespace rrk {

/// Degree of a modular map; positive reals are allowed (n = 1/m gives the
/// inverse map).
struct ModularIndex {
    double n;
    explicit ModularIndex(double n_) : n(n_) {
        if (!(n > 0.0)) throw DomainError("ModularIndex: n must be positive");
    }
};

/// The unique q in (0,1) with R(q) = x.
Nome rr_inverse(RRValue x);

/// The r with x = R(e^{-pi sqrt(r)}), i.e. (-log q / pi)^2.
RParam m_R(RRValue x);

/// Omega_n: R(q) -> R(q^n), computed transcendentally through the nome.
RRValue omega_n(RRValue x, ModularIndex n);

/// Q_n(A) = m_forward(n * m_inv(A)): the modular map of the inverse pair.
/// A plays the role of an r-argument of m_inv here, matching how the maps
/// compose with m_forward outputs.
double q_n(const MGContext& ctx, double A, ModularIndex n);

/// Q*_n(A) = m_inv(n * m_forward(A)).
double q_star(const MGContext& ctx, double A, ModularIndex n);

/// k_i(A) = K(sqrt(1-A^2))^2 / K(A)^2, the inverse of r -> k_r.
double k_i_of(double A);

/// n^2 m_forward(x) against b_inv(F1_inv(Omega_n(y(x)))).
IdentityReport theorem6_check(const MGContext& ctx, double x, ModularIndex n,
                              double tol = 1e-6);

/// y(n^2 x) against F1 . b . Q_{n^2} . b^{-1} . F1^{-1} . y(x); the notes
/// carry the residual of the H_n = Omega_{1/n} . F1 . b variant of the same
/// chain.
IdentityReport theorem11_check(const MGContext& ctx, double x, ModularIndex n,
                               double tol = 1e-6);

/// Singular-modulus chain k_{n^2 A} = F1 . b . Q_{n^2} . b^{-1} . F1^{-1}(k_A)
/// under the analytic singular-modulus context. Needs k_A < rr_sup(), i.e.
/// A large enough (roughly A > 1.4).
IdentityReport eq77_check(double A, ModularIndex n, double tol = 1e-6);

/// Derivative of k_i against the closed form
///   k_i'(A) = -pi sqrt(k_i(A)) / (A (1-A^2) K(A)^2).
/// The printed source form divides by k_A where only A makes the dimensions
/// work; this is the reading the finite differences select.
IdentityReport eq79_check(double A, double tol = 1e-4);

/// Omega_n via the singular-modulus detour
///   Omega_n(x) = F1 . b . (n^2 k_i) . k . b^{-1} . F1^{-1}(x),
/// a type-consistent rearrangement of the printed chain, compared against
/// omega_n directly.
IdentityReport eq80_check(RRValue x, ModularIndex n, double tol = 1e-6);

} // namespace rrk

#endif
