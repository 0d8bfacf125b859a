#include "rrk/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace rrk {

namespace {

// QUADPACK dqk15 abscissae/weights on [-1,1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const RealFn& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    // Integrable endpoint singularities may round onto the endpoint itself
    // once panels shrink to a few ulp; drop those measure-zero evaluations.
    auto safe = [&](double x) {
        const double v = f(x);
        return std::isfinite(v) ? v : 0.0;
    };
    double resk = 0.0, resg = 0.0;
    for (int j = 0; j < 8; ++j) {
        const double x = h * kXgk[j];
        double fv;
        if (j == 7) {
            fv = safe(c);
            resk += kWgk[j] * fv;
            resg += kWg[3] * fv;
        } else {
            const double f1 = safe(c - x);
            const double f2 = safe(c + x);
            fv = f1 + f2;
            resk += kWgk[j] * fv;
            if (j % 2 == 1) resg += kWg[j / 2] * fv;
        }
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = resk * h;
    p.error = std::abs((resk - resg) * h);
    return p;
}

} // namespace

void QuadratureConfig::validate() const {
    const double eps = std::numeric_limits<double>::epsilon();
    if (!(abs_tol >= 0.0)) throw DomainError("QuadratureConfig: abs_tol < 0");
    if (!(rel_tol >= 16.0 * eps))
        throw DomainError("QuadratureConfig: rel_tol below 16*machine-eps");
    if (max_refinements < 1)
        throw DomainError("QuadratureConfig: max_refinements < 1");
    if (!(tail_eps > 0.0) || tail_eps > std::max(abs_tol, 16.0 * eps))
        throw DomainError("QuadratureConfig: tail_eps must be in (0, abs_tol]");
}

double integrate_finite(const RealFn& f, double a, double b,
                        const QuadratureConfig& cfg) {
    cfg.validate();
    if (a == b) return 0.0;
    double sign = 1.0;
    if (b < a) {
        std::swap(a, b);
        sign = -1.0;
    }
    std::priority_queue<Panel> panels;
    panels.push(gk15(f, a, b));
    double total = panels.top().value;
    double err = panels.top().error;
    double floor_err = 0.0; // error stuck on unsplittable panels
    const double min_width =
        std::numeric_limits<double>::epsilon() * std::max({std::abs(a), std::abs(b), 1.0});

    int splits = 0;
    while (err + floor_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
        if (panels.empty()) break;
        Panel worst = panels.top();
        panels.pop();
        if (worst.b - worst.a <= min_width) {
            floor_err += worst.error;
            err -= worst.error;
            continue;
        }
        if (++splits > cfg.max_refinements)
            throw NonConvergence("integrate_finite: refinement limit reached");
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }
    return sign * total;
}

double integrate_decaying(const RealFn& f, double a, const RealFn& tail_bound,
                          const QuadratureConfig& cfg) {
    cfg.validate();
    const double t_cap = 500.0;
    double T = std::max(a + 1.0, 1.0);
    while (tail_bound(T) > cfg.tail_eps) {
        T *= 1.5;
        if (T > t_cap)
            throw TailBoundViolated(
                "integrate_decaying: tail bound never meets tail_eps");
    }
    return integrate_finite(f, a, T, cfg);
}

double invert_monotone(const RealFn& f, double target, Bracket br, double tol) {
    if (!(br.lo < br.hi)) throw BadBracket("invert_monotone: lo >= hi");
    double a = br.lo, b = br.hi;
    double fa = f(a) - target;
    double fb = f(b) - target;
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0)
        throw BadBracket("invert_monotone: target not enclosed by bracket");

    // Brent's method.
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < 200; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 =
            2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol1 ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b) - target;
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    return b;
}

} // namespace rrk
