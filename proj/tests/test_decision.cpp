#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fdpgov/decision.hpp"
#include "support/generators.hpp"

using namespace fdpgov;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

const FederationModel& pharma() {
    static FederationModel m = load_model(fixture("pharma.model.json"));
    return m;
}

}  // namespace

TEST_CASE("purpose limitation over the fixture") {
    const auto& m = pharma();
    CHECK(purpose_limited(m, "EpidemiologyAnalyst", "aggregate_stats", "demand_assessment"));
    CHECK_FALSE(purpose_limited(m, "EpidemiologyAnalyst", "aggregate_stats", "pkpd_modelling"));
    // (r, o) in PA but absent from pi: empty permitted set
    auto tiny = validate_model(json::parse(R"({
        "roles": ["r"], "objects": ["o"], "purposes": ["p"],
        "pa": [["r", "o"]],
        "tau": [{"role": "r", "object": "o", "start": 0, "end": 1}]
    })"));
    CHECK_FALSE(purpose_limited(tiny, "r", "o", "p"));
}

TEST_CASE("data minimisation set semantics") {
    const auto& m = pharma();
    CHECK(min_data(m, {}, "compliance_audit"));  // vacuous subset
    CHECK(min_data(m, {"access_logs", "consent_records"}, "compliance_audit"));
    // one object outside the minimal set poisons the whole request
    CHECK_FALSE(min_data(m, {"access_logs", "ehr_full"}, "compliance_audit"));
}

TEST_CASE("authorize: pair outside PA fails assignment and temporal") {
    const auto& m = pharma();
    auto d = authorize(m, {"EpidemiologyAnalyst", "ehr_full", "demand_assessment", 5});
    CHECK_FALSE(d.allow);
    CHECK_FALSE(d.conjuncts.assignment);
    CHECK_FALSE(d.conjuncts.temporal);
    REQUIRE(d.failed.size() >= 2);
    CHECK(d.failed[0] == "assignment");
    CHECK(d.failed[1] == "temporal");
    bool found = false;
    for (const auto& e : d.explanation) {
        if (e.find("no assignment") != std::string::npos) found = true;
    }
    CHECK(found);
}

TEST_CASE("authorize: fully granted fixture request") {
    auto d = authorize(pharma(),
                       {"ClinicalResearcher", "ehr_pseudonymized", "pkpd_modelling", 7});
    CHECK(d.allow);
    CHECK(d.failed.empty());
}

TEST_CASE("authorize: after the interval end only the temporal conjunct fails") {
    auto d = authorize(pharma(),
                       {"ClinicalResearcher", "ehr_pseudonymized", "pkpd_modelling", 13});
    CHECK_FALSE(d.allow);
    CHECK(d.failed == std::vector<std::string>{"temporal"});
}

TEST_CASE("authorize rejects unresolvable tokens") {
    CHECK_THROWS_MATCHES(authorize(pharma(), {"ghost", "access_logs", "compliance_audit", 0}),
                         Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::UnknownToken;
                         }));
}

TEST_CASE("allow always equals the conjunction of the reported conjuncts") {
    std::mt19937 rng(42);
    for (int i = 0; i < 50; ++i) {
        auto m = testsupport::random_model(rng);
        for (int k = 0; k < 40; ++k) {
            auto req = testsupport::random_request(rng, m);
            auto d = authorize(m, req);
            CHECK(d.allow == d.conjuncts.all());
            CHECK((d.failed.empty() == d.allow));
            CHECK(d.failed.size() == d.explanation.size());
        }
    }
}

TEST_CASE("oracle equivalence on random models") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 25; ++i) {
        auto m = testsupport::random_model(rng);
        for (const auto& r : m.roles) {
            for (const auto& o : m.objects) {
                for (const auto& p : m.purposes) {
                    for (Tick t = 0; t < 20; t += 3) {
                        AccessRequest req{r, o, p, t};
                        CHECK(authorize(m, req) == brute_force_authorize(m, req));
                    }
                }
            }
        }
    }
}

TEST_CASE("oracle on the empty model and on boundary ticks") {
    auto empty = validate_model(
        json::parse(R"({"roles": ["r"], "objects": ["o"], "purposes": ["p"]})"));
    auto d = brute_force_authorize(empty, {"r", "o", "p", 0});
    CHECK_FALSE(d.allow);

    const auto& m = pharma();
    for (Tick t : {Tick(2), Tick(12)}) {  // closed-interval boundaries
        AccessRequest req{"ClinicalResearcher", "ehr_pseudonymized", "pkpd_modelling", t};
        CHECK(authorize(m, req) == brute_force_authorize(m, req));
        CHECK(authorize(m, req).conjuncts.temporal);
    }
}

TEST_CASE("authorize_set: singleton reduces to the single-object verdict") {
    const auto& m = pharma();
    AccessRequest single{"ClinicalResearcher", "ehr_pseudonymized", "pkpd_modelling", 7};
    auto d1 = authorize(m, single);
    auto d2 = authorize_set(m, {single.role, {single.object}, single.purpose, single.at});
    CHECK(d1.allow == d2.allow);
    CHECK(d1.conjuncts == d2.conjuncts);
}

TEST_CASE("authorize_set: one object outside delta denies the whole set") {
    const auto& m = pharma();
    // both objects assigned to EthicsOfficer, but ehr_full is outside
    // delta(compliance_audit)
    auto d = authorize_set(m, {"EthicsOfficer", {"access_logs", "consent_records"},
                               "compliance_audit", 7});
    CHECK(d.allow);
    auto d2 = authorize_set(m, {"EthicsOfficer", {"access_logs", "ehr_full"},
                                "compliance_audit", 7});
    CHECK_FALSE(d2.allow);
    CHECK_FALSE(d2.conjuncts.minimisation);
}

TEST_CASE("authorize_set rejects the empty object set") {
    CHECK_THROWS_MATCHES(authorize_set(pharma(), {"EthicsOfficer", {}, "compliance_audit", 7}),
                         Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::EmptyRequest;
                         }));
}

TEST_CASE("audit_violations keeps only temporal-gate passes with substantive failures") {
    const auto& m = pharma();
    std::vector<AccessRequest> reqs = {
        // denied by assignment: not a violation
        {"EpidemiologyAnalyst", "ehr_full", "demand_assessment", 5},
        // valid interval but (US, EU) not in gamma: spatial violation
        {"DataManager", "ehr_full", "dataset_preparation", 7},
        // fully authorized: no record
        {"ClinicalResearcher", "ehr_pseudonymized", "pkpd_modelling", 7},
    };
    auto audit = audit_violations(m, reqs);
    REQUIRE(audit.violations.size() == 1);
    CHECK(audit.violations[0].request.role == "DataManager");
    CHECK(audit.violations[0].failed_substantive == std::vector<std::string>{"spatial"});
    CHECK(audit.errors.empty());
}

TEST_CASE("audit_violations reports unresolvable tokens per request") {
    auto audit = audit_violations(pharma(), {{"ghost", "ehr_full", "dataset_preparation", 0}});
    CHECK(audit.violations.empty());
    REQUIRE(audit.errors.size() == 1);
    CHECK(audit.errors[0].index == 0);
}

TEST_CASE("prefilter factorization against the spatio-temporal graph") {
    std::mt19937 rng(555);
    for (int i = 0; i < 20; ++i) {
        auto m = testsupport::random_model(rng);
        SpatioTemporalGraph g(m);
        for (int k = 0; k < 60; ++k) {
            auto req = testsupport::random_request(rng, m);
            bool direct = authorize(m, req).allow;
            bool factored = g.active_st(req.at).contains({req.role, req.object}) &&
                            purpose_limited(m, req.role, req.object, req.purpose) &&
                            min_data(m, {req.object}, req.purpose);
            CHECK(direct == factored);
        }
    }
}

TEST_CASE("restriction anti-monotonicity") {
    std::mt19937 rng(777);
    int checked = 0;
    while (checked < 200) {
        auto m = testsupport::random_model(rng);
        auto req = testsupport::random_request(rng, m);
        bool before = authorize(m, req).allow;

        auto restricted = m;
        int which = std::uniform_int_distribution<int>(0, 3)(rng);
        if (which == 0 && !restricted.gamma.empty()) {
            restricted.gamma.erase(restricted.gamma.begin());
        } else if (which == 1) {
            bool done = false;
            for (auto& [a, ps] : restricted.pi) {
                if (!ps.empty()) {
                    ps.erase(ps.begin());
                    done = true;
                    break;
                }
            }
            if (!done) continue;
        } else if (which == 2) {
            bool done = false;
            for (auto& [p, objs] : restricted.delta) {
                if (!objs.empty()) {
                    objs.erase(objs.begin());
                    done = true;
                    break;
                }
            }
            if (!done) continue;
        } else {
            bool done = false;
            for (auto& [a, iv] : restricted.tau) {
                if (iv.start < iv.end) {
                    ++iv.start;
                    done = true;
                    break;
                }
            }
            if (!done) continue;
        }
        bool after = authorize(restricted, req).allow;
        // restriction must never flip deny to allow
        CHECK_FALSE((!before && after));
        ++checked;
    }
}
