#ifndef RRK_REPORT_HPP
#define RRK_REPORT_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace rrk {

/// Outcome of one numeric identity check: both sides, residuals, verdict.
struct IdentityReport {
    std::string id;
    std::vector<std::pair<std::string, double>> inputs;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_resid = 0.0;
    double rel_resid = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string notes;
};

inline IdentityReport make_report(std::string id,
                                  std::vector<std::pair<std::string, double>> inputs,
                                  double lhs, double rhs, double tol,
                                  std::string notes = {}) {
    IdentityReport rep;
    rep.id = std::move(id);
    rep.inputs = std::move(inputs);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.abs_resid = std::abs(lhs - rhs);
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    rep.rel_resid = scale > 0.0 ? rep.abs_resid / scale : rep.abs_resid;
    rep.tol = tol;
    rep.pass = std::min(rep.abs_resid, rep.rel_resid) <= tol;
    rep.notes = std::move(notes);
    return rep;
}

} // namespace rrk

#endif
