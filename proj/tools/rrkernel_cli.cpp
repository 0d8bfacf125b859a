#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rrk/modular.hpp"
#include "rrk/registry.hpp"
#include "rrk/series.hpp"
#include "rrk/solver.hpp"

namespace {

using nlohmann::json;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw rrk::DomainError("cannot open output file: " + out_path);
    os << text;
}

std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> grid;
    if (spec.empty()) return grid;
    if (spec.find(':') != std::string::npos) {
        double start = 0.0, stop = 0.0, step = 0.0;
        char c1 = 0, c2 = 0;
        std::istringstream is(spec);
        if (!(is >> start >> c1 >> stop >> c2 >> step) || c1 != ':' ||
            c2 != ':' || step <= 0.0)
            throw rrk::DomainError("bad grid spec (want start:stop:step): " + spec);
        for (double x = start; x <= stop + 1e-12 * std::abs(step); x += step)
            grid.push_back(x);
        return grid;
    }
    std::istringstream is(spec);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        grid.push_back(std::stod(tok));
    }
    return grid;
}

int cmd_eval(const std::string& name,
             const std::map<std::string, double>& args,
             const rrk::QuadratureConfig& quad, const std::string& out) {
    auto need = [&](const char* key) {
        auto it = args.find(key);
        if (it == args.end())
            throw rrk::DomainError(std::string("eval ") + name +
                                   " needs --" + key);
        return it->second;
    };
    double value = 0.0;
    double est_error = 1e-13;
    if (name == "rr") {
        value = rrk::rr(rrk::Nome(need("q"))).x;
    } else if (name == "eta") {
        value = rrk::dedekind_eta_axis(need("t"));
    } else if (name == "f_minus_q") {
        value = rrk::f_minus_q(rrk::Nome(need("q")));
    } else if (name == "K") {
        value = rrk::agm_K(rrk::Modulus(need("k")));
    } else if (name == "E") {
        value = rrk::agm_E(rrk::Modulus(need("k")));
    } else if (name == "k_r") {
        value = rrk::singular_modulus(rrk::RParam(need("r"))).k;
        est_error = 1e-12;
    } else if (name == "b_r") {
        value = rrk::b_of_r(rrk::RParam(need("r")));
        est_error = 1e-12;
    } else if (name == "F1") {
        value = rrk::F1_of(need("x")).x;
        est_error = quad.abs_tol;
    } else if (name == "C") {
        value = rrk::C_closed(need("nu"));
        est_error = 1e-12;
    } else if (name == "sn") {
        value = rrk::jacobi_am_sn_cn_dn(need("u"), rrk::Modulus(need("k"))).sn;
    } else if (name == "BR") {
        value = rrk::bring_radical(need("a"));
    } else {
        std::cerr << "unknown function: " << name
                  << " (try rr, eta, f_minus_q, K, E, k_r, b_r, F1, C, sn, BR)\n";
        return 2;
    }
    json j;
    j["function"] = name;
    json in = json::object();
    for (const auto& [k, v] : args) in[k] = v;
    j["inputs"] = in;
    j["value"] = value;
    j["est_error"] = est_error;
    emit(j.dump(2) + "\n", out);
    return 0;
}

int cmd_verify(std::vector<std::string> ids, double tol_override,
               const rrk::QuadratureConfig& quad, const std::string& out,
               const std::string& csv_out) {
    if (ids.empty()) ids = {"all"};
    if (!(ids.size() == 1 && ids.front() == "all")) {
        for (const auto& id : ids) {
            bool known = false;
            for (const auto& e : rrk::identity_catalog())
                known = known || e.id == id;
            if (!known) throw rrk::DomainError("unknown identity: " + id);
        }
    }
    const rrk::RunReport rep = rrk::run_identities(ids, quad, tol_override);
    emit(rrk::report_to_json(rep), out);
    if (!csv_out.empty()) emit(rrk::report_to_csv(rep), csv_out);
    return rep.failed > 0 ? 1 : 0;
}

int cmd_solve(const std::string& kind, double a,
              const rrk::QuadratureConfig& quad, const std::string& out) {
    json j;
    j["kind"] = kind;
    j["a"] = a;
    if (kind == "sin") {
        const rrk::MGContext arc = rrk::make_arcsine_context(quad);
        const double m0 = rrk::m_R(rrk::RRValue(a)).r;
        const double root = rrk::solve_by_fundamental(a, arc.weight(), quad);
        j["root"] = root;
        j["residual"] = std::sin(root) - a;
        j["trace"] = {{"m0", m0}, {"method", "fundamental-equation"}};
    } else {
        const auto maps = rrk::solver_registry();
        const rrk::SmoothMap* map = nullptr;
        for (const auto& m : maps)
            if (m.label == kind) map = &m;
        if (map == nullptr) {
            std::cerr << "unknown solve kind: " << kind
                      << " (try quintic, sin, identity, cubic)\n";
            return 2;
        }
        const double root = rrk::solve_via_rr(*map, a, quad);
        const rrk::MGContext ctx(rrk::weight_from_f(*map), quad);
        j["root"] = root;
        j["residual"] = map->f(root) - a;
        j["trace"] = {{"m_G(a)", rrk::m_forward(ctx, a).r},
                      {"method", "inverse-integral"}};
    }
    emit(j.dump(2) + "\n", out);
    return 0;
}

int cmd_table(const std::string& what, const std::string& grid_spec, double n,
              const rrk::QuadratureConfig& quad, const std::string& out) {
    const std::vector<double> grid = parse_grid(grid_spec);
    std::ostringstream os;
    os.precision(15);
    if (what == "kr") {
        os << "r,k_r\n";
        for (double r : grid)
            os << r << "," << rrk::singular_modulus(rrk::RParam(r)).k << "\n";
    } else if (what == "br") {
        os << "r,b_r\n";
        for (double r : grid)
            os << r << "," << rrk::b_of_r(rrk::RParam(r)) << "\n";
    } else if (what == "omega") {
        os << "x,omega_" << n << "\n";
        for (double x : grid)
            os << x << ","
               << rrk::omega_n(rrk::RRValue(x), rrk::ModularIndex(n)).x << "\n";
    } else if (what == "qn") {
        const rrk::MGContext ctx = rrk::make_quintic_context(quad);
        os << "A,Q_" << n << "\n";
        for (double A : grid)
            os << A << "," << rrk::q_n(ctx, A, rrk::ModularIndex(n)) << "\n";
    } else {
        std::cerr << "unknown table: " << what
                  << " (try omega, qn, br, kr)\n";
        return 2;
    }
    emit(os.str(), out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized integrals of the Rogers-Ramanujan kernel"};
    app.require_subcommand(1);

    rrk::QuadratureConfig quad;
    std::string out;
    app.add_option("--rel-tol", quad.rel_tol, "relative quadrature tolerance")
        ->envname("RRKERNEL_REL_TOL");
    app.add_option("--abs-tol", quad.abs_tol, "absolute quadrature tolerance")
        ->envname("RRKERNEL_ABS_TOL");
    app.add_option("--max-refinements", quad.max_refinements,
                   "adaptive refinement cap")
        ->envname("RRKERNEL_MAX_REFINEMENTS");
    app.add_option("--tail-eps", quad.tail_eps,
                   "error budget for discarded integral tails")
        ->envname("RRKERNEL_TAIL_EPS");
    app.add_option("--out", out, "write output to this file instead of stdout")
        ->envname("RRKERNEL_OUT");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a registered function");
    std::string eval_name;
    eval->add_option("name", eval_name, "function name")->required();
    std::map<std::string, double> eval_args;
    for (const char* key : {"q", "t", "k", "r", "x", "nu", "u", "a"}) {
        eval->add_option_function<double>(
            std::string("--") + key,
            [&eval_args, key](double v) { eval_args[key] = v; });
    }

    // verify
    auto* verify =
        app.add_subcommand("verify", "run identity checks from the catalog");
    std::vector<std::string> verify_ids;
    double tol_override = -1.0;
    std::string csv_out;
    verify->add_option("ids", verify_ids, "identity ids, or 'all'");
    verify->add_option("--tol", tol_override, "tolerance override");
    verify->add_option("--csv", csv_out, "also write a CSV report here");

    // solve
    auto* solve = app.add_subcommand("solve", "solve f(x) = a through R(q)");
    std::string solve_kind;
    double solve_a = 0.0;
    solve->add_option("kind", solve_kind, "quintic | sin | identity | cubic")
        ->required();
    solve->add_option("--a", solve_a, "right-hand side")->required();

    // table
    auto* table = app.add_subcommand("table", "tabulate a map over a grid");
    std::string table_what, table_grid;
    double table_n = 2.0;
    table->add_option("what", table_what, "omega | qn | br | kr")->required();
    table->add_option("--grid", table_grid, "comma list or start:stop:step");
    table->add_option("--n", table_n, "modular index for omega/qn");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        quad.validate();
        if (eval->parsed()) return cmd_eval(eval_name, eval_args, quad, out);
        if (verify->parsed())
            return cmd_verify(verify_ids, tol_override, quad, out, csv_out);
        if (solve->parsed()) return cmd_solve(solve_kind, solve_a, quad, out);
        if (table->parsed())
            return cmd_table(table_what, table_grid, table_n, quad, out);
    } catch (const rrk::NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
