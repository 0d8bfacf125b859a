#include <set>

#include "doctest.h"
#include "rrk/registry.hpp"

using namespace rrk;

TEST_CASE("identity_catalog: sorted, unique, populated") {
    const auto& cat = identity_catalog();
    CHECK(cat.size() >= 20);
    std::set<std::string> ids;
    for (std::size_t i = 0; i < cat.size(); ++i) {
        ids.insert(cat[i].id);
        CHECK(cat[i].default_tol > 0.0);
        CHECK(!cat[i].equation_ref.empty());
        if (i > 0) CHECK(cat[i - 1].id < cat[i].id);
    }
    CHECK(ids.size() == cat.size());
    for (const char* id : {"EQ3", "EQ21", "EQ55", "OMEGA2-ALG", "THM9", "C-VALUE"})
        CHECK(ids.count(id) == 1);
}

TEST_CASE("run_identity: spot checks and unknown id") {
    CHECK(run_identity("EQ21").pass);
    CHECK(run_identity("OMEGA2-ALG").pass);
    const auto c = run_identity("C-VALUE");
    CHECK(c.pass);
    CHECK_THROWS_AS(run_identity("NOPE"), DomainError);
    // Tolerance override propagates.
    CHECK_FALSE(run_identity("EQ21", {}, 1e-18).pass);
}

TEST_CASE("eq41_check records the passing reading") {
    const auto rep = eq41_check();
    CHECK(rep.pass);
    CHECK(rep.notes.find("reading") != std::string::npos);
    CHECK(rep.notes.find("probe summary") != std::string::npos);
}

TEST_CASE("run_identities: counts, determinism, writers") {
    const auto rep = run_identities({"EQ21", "OMEGA-COMP", "EQ21"});
    CHECK(rep.results.size() == 2); // duplicates collapsed
    CHECK(rep.passed + rep.failed == 2);
    CHECK(rep.results[0].id == "EQ21"); // id-sorted order
    CHECK(rep.wall_ms.size() == 2);
    const std::string json = report_to_json(rep);
    CHECK(json.find("\"schema_version\": 1") != std::string::npos);
    CHECK(json.find("\"passed\": 2") != std::string::npos);
    const std::string csv = report_to_csv(rep);
    CHECK(csv.rfind("id,inputs,lhs,rhs", 0) == 0);
    // Same inputs give an identical identity payload (timings aside).
    const auto rep2 = run_identities({"EQ21", "OMEGA-COMP"});
    CHECK(rep2.results[0].lhs == rep.results[0].lhs);
    CHECK(rep2.results[1].rhs == rep.results[1].rhs);
}
