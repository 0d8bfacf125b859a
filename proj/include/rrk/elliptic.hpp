#ifndef RRK_ELLIPTIC_HPP
#define RRK_ELLIPTIC_HPP

#include "rrk/errors.hpp"
#include "rrk/numerics.hpp"
#include "rrk/qseries.hpp"
#include "rrk/report.hpp"

namespace rrk {

/// Elliptic modulus k in (0,1); k' = sqrt(1-k^2).
struct Modulus {
    double k;
    explicit Modulus(double k_) : k(k_) {
        if (!(k >= 0.0 && k < 1.0)) throw DomainError("Modulus: k outside [0,1)");
    }
    double complement() const { return std::sqrt((1.0 - k) * (1.0 + k)); }
};

/// Complete elliptic integral K(k) by the arithmetic-geometric mean.
double agm_K(Modulus k);

/// Complete elliptic integral of the second kind E(k), from the AGM
/// side-products.
double agm_E(Modulus k);

/// Singular modulus as a function of the nome: k = theta2(q)^2/theta3(q)^2.
double modulus_from_nome(double q);

/// k_r: the unique k in (0,1) with K(k')/K(k) = sqrt(r).
Modulus singular_modulus(RParam r);

/// Eq-(7)-type law dk/dq = 2 k k'^2 K(k)^2/(q pi^2) against central
/// differences of q -> modulus_from_nome(q). The printed sign in the source
/// identity is negative; the positive sign is what finite differences and
/// the classical q-derivative give, and is what this check asserts.
IdentityReport dk_dq_check(RParam r, double tol = 1e-6);

struct JacobiValues {
    double am, sn, cn, dn;
};

/// am/sn/cn/dn by the descending AGM (Landen) recursion.
JacobiValues jacobi_am_sn_cn_dn(double u, Modulus k);

/// Incomplete elliptic integral F(phi,k), |phi| <= pi/2, via Carlson R_F.
double incomplete_F(double phi, Modulus k);

/// Gauss hypergeometric 2F1(a,b;c;z) for z < 1.
double hyp2f1(double a, double b, double c, double z,
              const SeriesConfig& cfg = {});

/// Appell F1 double series, |x|,|y| < 1.
double appell_F1(double a, double b1, double b2, double c, double x, double y,
                 const SeriesConfig& cfg = {});

/// Gamma function (library-backed), poles rejected.
double gamma_fn(double x);

/// Incomplete beta B(x,a,b) = int_0^x t^{a-1}(1-t)^{b-1} dt by direct
/// quadrature; b <= 0 allowed for x < 1.
double incomplete_beta(double x, double a, double b,
                       const QuadratureConfig& cfg = {});

/// Unique real solution of x^5 + x = a.
double bring_radical(double a);

} // namespace rrk

#endif
