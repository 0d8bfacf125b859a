// Acceptance gate: one printed pass/fail line per criterion; exit status is
// the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "rrk/modular.hpp"
#include "rrk/registry.hpp"
#include "rrk/series.hpp"
#include "rrk/solver.hpp"

using namespace rrk;

namespace {

int failures = 0;

void line(int idx, const std::string& name, bool pass, double resid,
          const std::string& extra = {}) {
    std::printf("[%s] %02d %-12s worst resid %.3e%s%s\n", pass ? "PASS" : "FAIL",
                idx, name.c_str(), resid, extra.empty() ? "" : "  ",
                extra.c_str());
    if (!pass) ++failures;
}

// Folds catalog identities into one criterion line.
void from_catalog(int idx, const std::string& name,
                  const std::vector<std::string>& ids) {
    bool pass = true;
    double worst = 0.0;
    std::string notes;
    for (const auto& id : ids) {
        const IdentityReport r = run_identity(id);
        pass = pass && r.pass;
        worst = std::max(worst, std::min(r.abs_resid, r.rel_resid));
        if (!r.pass) notes += id + " failed; ";
    }
    line(idx, name, pass, worst, notes);
}

} // namespace

int main() {
    from_catalog(1, "EQ3", {"EQ3"});
    from_catalog(2, "EQ5/EQ61", {"EQ5", "EQ61"});
    from_catalog(3, "EQ6", {"EQ6"});
    from_catalog(4, "EQ7", {"EQ7"});
    from_catalog(5, "EQ21", {"EQ21"});
    from_catalog(6, "EQ55", {"EQ55"});
    from_catalog(7, "OMEGA2-ALG", {"OMEGA2-ALG", "OMEGA-COMP"});
    from_catalog(8, "THM5/COR2", {"THM5"});

    {
        // Criterion 9: the degree chain at n in {1,2} plus the closed
        // Omega_2(x) = F1(b(4 m_R(x))) comparison.
        bool pass = true;
        double worst = 0.0;
        for (const auto& id : {"THM6"}) {
            const auto r = run_identity(id);
            pass = pass && r.pass;
            worst = std::max(worst, std::min(r.abs_resid, r.rel_resid));
        }
        const RRValue x(rr(RParam(1.0).nome()).x);
        const double lhs = omega_n(x, ModularIndex(2.0)).x;
        const double rhs = F1_of(b_of_r(RParam(4.0 * m_R(x).r))).x;
        const double resid = std::abs(lhs - rhs);
        pass = pass && resid <= 1e-6;
        worst = std::max(worst, resid);
        line(9, "THM6/COR3", pass, worst);
    }

    from_catalog(10, "THM11", {"THM11"});

    {
        // Criterion 11: the solver pipeline against trigonometric and Newton
        // oracles.
        bool pass = true;
        double worst = 0.0;
        const MGContext arc = make_arcsine_context();
        const double x0 = solve_by_fundamental(0.2, arc.weight());
        const double sin_resid = std::abs(x0 - std::asin(0.2));
        pass = pass && sin_resid <= 1e-6;
        worst = std::max(worst, sin_resid);
        const auto quintic = solver_registry()[0];
        for (double a : {0.2, 0.4, 0.6}) {
            double xn = 0.3;
            for (int i = 0; i < 100; ++i)
                xn -= (quintic.f(xn) - a) / quintic.df(xn);
            const double resid = std::abs(solve_via_rr(quintic, a) - xn);
            pass = pass && resid <= 1e-8;
            worst = std::max(worst, resid);
        }
        line(11, "SOLVER", pass, worst);
    }

    from_catalog(12, "C-VALUE/THM9", {"C-VALUE", "THM9"});
    from_catalog(13, "EQ41", {"EQ41"});

    {
        // Criterion 14: Pythagorean identities over 10^3 seeded random points
        // plus the sn composition from the catalog.
        bool pass = true;
        double worst = 0.0;
        std::mt19937 rng(20260826);
        std::uniform_real_distribution<double> du(-3.0, 3.0);
        std::uniform_real_distribution<double> dk(0.05, 0.95);
        for (int i = 0; i < 1000; ++i) {
            const double u = du(rng);
            const Modulus k(dk(rng));
            const auto j = jacobi_am_sn_cn_dn(u, k);
            const double p1 = std::abs(j.sn * j.sn + j.cn * j.cn - 1.0);
            const double p2 =
                std::abs(j.dn * j.dn + k.k * k.k * j.sn * j.sn - 1.0);
            pass = pass && p1 <= 1e-11 && p2 <= 1e-11;
            worst = std::max(worst, std::max(p1, p2));
        }
        const auto r70 = run_identity("EQ70");
        pass = pass && r70.pass;
        worst = std::max(worst, std::min(r70.abs_resid, r70.rel_resid));
        line(14, "JACOBI", pass, worst);
    }

    {
        // Criterion 15: round-trip property suite.
        bool pass = true;
        double worst = 0.0;
        auto take = [&](double resid, double tol) {
            pass = pass && resid <= tol;
            worst = std::max(worst, resid);
        };
        const MGContext qc = make_quintic_context();
        for (double r : {0.5, 1.0, 2.0})
            take(std::abs(m_forward(qc, m_inv(qc, RParam(r))).r - r), 1e-8);
        for (double y : {0.1, 0.3, 0.5})
            take(std::abs(F1_of(F1_inv(RRValue(y))).x - y), 1e-9);
        for (double q : {0.05, 0.3, 0.6})
            take(std::abs(rr_inverse(rr(Nome(q))).q - q), 1e-10);
        for (double x : {0.3, 0.9})
            take(std::abs(bring_radical(std::pow(x, 5.0) + x) - x), 1e-12);
        for (double r : {0.5, 1.0, 2.0, 5.0})
            take(std::abs(k_i_of(singular_modulus(RParam(r)).k) - r), 1e-9);
        line(15, "PROPERTY", pass, worst);
    }

    std::printf("%d of 15 criteria passed\n", 15 - failures);
    return failures;
}
