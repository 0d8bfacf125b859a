#ifndef RRK_REGISTRY_HPP
#define RRK_REGISTRY_HPP

#include <string>
#include <utility>
#include <vector>

#include "rrk/numerics.hpp"
#include "rrk/report.hpp"

namespace rrk {

inline const char* library_version() { return "1.0.0"; }

/// One entry of the identity regression catalog. The runner evaluates the
/// check over its default grid and reports the worst grid point.
struct IdentityCatalogEntry {
    std::string id;
    std::string equation_ref;
    std::vector<std::pair<std::string, double>> default_inputs;
    double default_tol = 0.0;
};

/// Aggregated outcome of a catalog run.
struct RunReport {
    std::string version;
    std::vector<std::pair<std::string, double>> config;
    std::vector<IdentityReport> results;
    std::vector<double> wall_ms; // parallel to results
    int passed = 0;
    int failed = 0;
};

/// The catalog, sorted by id; ids are unique.
const std::vector<IdentityCatalogEntry>& identity_catalog();

/// Runs one catalog identity. tol_override < 0 keeps the default tolerance.
IdentityReport run_identity(const std::string& id,
                            const QuadratureConfig& quad = {},
                            double tol_override = -1.0);

/// Runs several (or, for ids == {"all"}, every) catalog identities in id
/// order and assembles the report.
RunReport run_identities(std::vector<std::string> ids,
                         const QuadratureConfig& quad = {},
                         double tol_override = -1.0);

/// Convention probe: the inverse integral at r=4 under the Jacobi-amplitude
/// weight against F[(sqrt(2(5+sqrt 5)) - 1 - sqrt 5)/2, 1/2], once with the
/// 1/2 read as the modulus k and once as the parameter m = k^2. The passing
/// reading is recorded in the notes.
IdentityReport eq41_check(double tol = 1e-7,
                          const QuadratureConfig& quad = {});

std::string report_to_json(const RunReport& rep);
std::string report_to_csv(const RunReport& rep);

} // namespace rrk

#endif
