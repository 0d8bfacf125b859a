#ifndef RRK_TRANSFORM_HPP
#define RRK_TRANSFORM_HPP

#include <string>

#include "rrk/elliptic.hpp"
#include "rrk/errors.hpp"
#include "rrk/numerics.hpp"
#include "rrk/qseries.hpp"
#include "rrk/report.hpp"

namespace rrk {

/// Weight function G on (0, rr_sup()]. positive_flag promises G > 0 there
/// (verified by sampling when a context is built around it).
struct WeightG {
    RealFn eval;
    bool positive_flag = true;
    std::string label;
};

/// Upper endpoint of the weight domain, ((-11+5*sqrt(5))/2)^{1/5}; equals
/// rr_sup() and the equality is asserted to 1e-14 on first use.
double radicand_root();

/// Evaluation context for the inverse-integral pair built on a weight:
///   m_inv(r) = pi * int_{sqrt(r)}^inf eta(it/2)^4 G(R(e^{-pi t})) dt
/// and its functional inverse m_forward. Immutable after construction and
/// safe to share across threads; the cached quantities are computed eagerly.
class MGContext {
  public:
    explicit MGContext(WeightG g, QuadratureConfig quad = {});

    /// Replaces the quadrature route for m_inv with a closed form; used when
    /// the defining integral diverges but the inverse pair is still known.
    MGContext& with_analytic_m_inv(RealFn f);

    const WeightG& weight() const { return g_; }
    const QuadratureConfig& quad() const { return quad_; }
    bool has_analytic_m_inv() const { return static_cast<bool>(analytic_); }
    const RealFn& analytic_m_inv() const { return analytic_; }

    /// Sampled bound on |G| over (0, radicand_root()], with a 2x margin.
    double sup_weight() const { return sup_g_; }

    /// Integration below this t contributes less than quad().tail_eps to
    /// m_inv; the eta^4 factor collapses like (4/t^2) e^{-2 pi/(3t)} there.
    double small_t_cutoff() const { return t_cut_; }

    /// Supremum of m_inv over r > 0 (its limit as r -> 0), cached.
    double m_inv_sup() const;

  private:
    WeightG g_;
    QuadratureConfig quad_;
    RealFn analytic_;
    double sup_g_ = 0.0;
    double t_cut_ = 0.0;
    mutable double a_sup_ = -1.0; // lazy; m_inv needs a finished object
};

/// The eta-weighted tail integral m_G^{(-1)}(r); strictly decreasing in r
/// for positive weights.
double m_inv(const MGContext& ctx, RParam r);

/// Functional inverse of m_inv: the r with m_inv(r) = A.
RParam m_forward(const MGContext& ctx, double A);

/// y(A) = R(e^{-pi sqrt(m_forward(A))}).
RRValue y_of(const MGContext& ctx, double A);

/// phi(r) = 2 sqrt(r) / (pi eta(i sqrt(r)/2)^4 G(R(e^{-pi sqrt(r)}))).
double phi_of(const MGContext& ctx, RParam r);

/// b_r = 3 (2 k_r)^{1/3} 2F1[1/6, 1/3; 7/6; k_r^2].
double b_of_r(RParam r);

/// Inverse of b_of_r (strictly decreasing in r).
RParam b_inv(double b);

/// F1_inv(y) = 5 int_0^y dt / (t (t^{-5}-11-t^5)^{1/6}); F1_of inverts it.
double F1_inv(RRValue y);
RRValue F1_of(double x);

/// h_inv(A) = 5 int_0^{y(A)} dt/(t rad(t)) = F1_inv(y_of(A)); h_of inverts
/// it through the closed chain A = m_inv((-log q / pi)^2), R(q) = F1_of(x).
double h_inv(const MGContext& ctx, double A);
double h_of(const MGContext& ctx, double x);

/// H_o_inv(x,k) = 5 int_0^x dn(u) cn(u) / (sn(u) rad(sn(u))) du with modulus
/// k; H_o_of inverts it.
double H_o_inv(double x, Modulus k, const QuadratureConfig& cfg = {});
double H_o_of(double x, Modulus k, const QuadratureConfig& cfg = {});

/// dA/dk_{m_G} = 2^{1/3} G(y(A)) / (k k')^{2/3} against chained central
/// differences A -> m_forward(A) -> k_r.
IdentityReport theorem2_check(const MGContext& ctx, double A, double tol = 1e-4);

/// Registered weights.
MGContext make_quintic_context(QuadratureConfig quad = {});   // x(5x^4+1)rad/5
MGContext make_identity_context(QuadratureConfig quad = {});  // x rad(x)/5
MGContext make_linear_context(QuadratureConfig quad = {});    // G(x) = x
MGContext make_arcsine_context(QuadratureConfig quad = {});   // x rad/(5 sqrt(1-x^2))
MGContext make_jacobi_context(Modulus k, QuadratureConfig quad = {});
/// Singular-modulus chain: the defining integral for this weight diverges
/// at the lower endpoint, so the context carries the closed form
/// m_inv(A) = k_i(R(e^{-pi sqrt(A)})) instead.
MGContext make_singular_modulus_context(QuadratureConfig quad = {});

} // namespace rrk

#endif
