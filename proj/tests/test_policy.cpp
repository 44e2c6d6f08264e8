#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "fdpgov/policy.hpp"

using namespace fdpgov;

namespace {

json load_fixture(const std::string& name) {
    std::ifstream in(std::string(FIXTURES_DIR) + "/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

const RbacTable& rbac() {
    static RbacTable t = rbac_table_from_json(load_fixture("rbac.json"));
    return t;
}

}  // namespace

TEST_CASE("rbac: positive and negative lookups from the table") {
    CHECK(rbac_allow(rbac(), "ClinicalResearcher", "read", "ehr_pseudonymized"));
    CHECK(rbac_allow(rbac(), "EthicsOfficer", "audit", "consent_records"));
    CHECK_FALSE(rbac_allow(rbac(), "EpidemiologyAnalyst", "contact_patient", "aggregate_stats"));
    CHECK_FALSE(rbac_allow(rbac(), "ClinicalResearcher", "read", "ehr_full"));
}

TEST_CASE("rbac: unknown role is a default deny, not an error") {
    CHECK_FALSE(rbac_allow(rbac(), "UnknownRole", "read", "aggregate_stats"));
}

TEST_CASE("rbac: full decision cube matches literal membership semantics") {
    const auto& t = rbac();
    std::set<std::string> all_actions, all_resources;
    for (const auto& [role, e] : t.entries) {
        all_actions.insert(e.actions.begin(), e.actions.end());
        all_resources.insert(e.resources.begin(), e.resources.end());
    }
    for (const auto& [role, e] : t.entries) {
        for (const auto& action : all_actions) {
            for (const auto& resource : all_resources) {
                bool expected = e.resources.count(resource) && e.actions.count(action);
                CHECK(rbac_allow(t, role, action, resource) == expected);
            }
        }
    }
}

TEST_CASE("abac: trial recruitment rule with interval context") {
    auto rules = abac_rules_from_json(load_fixture("abac.json"));
    std::map<std::string, std::string> user = {{"role", "TrialCoordinator"},
                                               {"ethics_approved", "true"}};
    std::map<std::string, std::string> resource = {{"eligibility", "true"},
                                                   {"data_type", "identifiable"}};
    std::map<std::string, std::string> context = {{"current_date", "9"}};

    auto d = abac_evaluate(rules, user, resource, context, "contact_patient");
    CHECK(d.allow);
    CHECK(d.matched_rule == "Trial recruitment");

    // same but ethics approval withdrawn
    user["ethics_approved"] = "false";
    CHECK_FALSE(abac_evaluate(rules, user, resource, context, "contact_patient").allow);

    // outside the recruitment window
    user["ethics_approved"] = "true";
    context["current_date"] = "16";
    CHECK_FALSE(abac_evaluate(rules, user, resource, context, "contact_patient").allow);
}

TEST_CASE("abac: compliance audit rule") {
    auto rules = abac_rules_from_json(load_fixture("abac.json"));
    auto d = abac_evaluate(rules, {{"role", "EthicsOfficer"}},
                           {{"data_type", "access_logs"}, {"consent", "true"}},
                           {{"audit_period", "active"}}, "review");
    CHECK(d.allow);
    CHECK(d.matched_rule == "Compliance audit");
}

TEST_CASE("abac: empty rule list denies everything") {
    CHECK_FALSE(abac_evaluate({}, {{"role", "x"}}, {}, {}, "read").allow);
}

TEST_CASE("abac: extra request attributes never flip allow to deny") {
    auto rules = abac_rules_from_json(load_fixture("abac.json"));
    std::map<std::string, std::string> user = {{"role", "EthicsOfficer"}};
    std::map<std::string, std::string> resource = {{"data_type", "access_logs"},
                                                   {"consent", "true"}};
    std::map<std::string, std::string> context = {{"audit_period", "active"}};
    REQUIRE(abac_evaluate(rules, user, resource, context, "review").allow);
    user["department"] = "oncology";
    resource["extra"] = "1";
    context["weather"] = "sunny";
    CHECK(abac_evaluate(rules, user, resource, context, "review").allow);
}

TEST_CASE("abac: unrecognized predicate token is malformed") {
    std::vector<AbacRule> rules(1);
    rules[0].name = "bad";
    rules[0].context_attrs = {{"current_date", "before(10)"}};
    rules[0].actions = {"read"};
    CHECK_THROWS_MATCHES(abac_evaluate(rules, {}, {}, {{"current_date", "5"}}, "read"), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::MalformedPredicate;
                         }));
}

TEST_CASE("onboarding: exact membership with default deny") {
    auto policy = onboarding_policy_from_json(load_fixture("listing2.policy.json"));
    CHECK(onboarding_allow(policy, "EU"));
    CHECK(onboarding_allow(policy, "NL"));
    CHECK_FALSE(onboarding_allow(policy, "US"));
    CHECK_FALSE(onboarding_allow(policy, "eu"));  // case-sensitive exact match
}

TEST_CASE("onboarding semantic: equivalence and containment paths") {
    auto ontology = seed_ontology();
    OnboardingPolicy eu_only{{"EU"}};

    auto via_containment = onboarding_allow_semantic(eu_only, "Netherlands", ontology);
    CHECK(via_containment.allow);
    CHECK(via_containment.via == "EU (containment)");

    auto via_equiv = onboarding_allow_semantic(eu_only, "European Union", ontology);
    CHECK(via_equiv.allow);
    CHECK(via_equiv.via == "EU (equivalence)");

    // Europe is a superset of the EU, not a sub-region: deny
    CHECK_FALSE(onboarding_allow_semantic(eu_only, "Europe", ontology).allow);
    CHECK_FALSE(onboarding_allow_semantic(eu_only, "US", ontology).allow);
}

TEST_CASE("semantic matcher only widens the exact policy") {
    auto policy = onboarding_policy_from_json(load_fixture("listing2.policy.json"));
    auto ontology = seed_ontology();
    for (const auto& loc : {"EU", "NL", "BE", "DE"}) {
        REQUIRE(onboarding_allow(policy, loc));
        CHECK(onboarding_allow_semantic(policy, loc, ontology).allow);
    }
    // and even under an empty ontology exact hits stay allowed
    LocationOntology empty;
    for (const auto& loc : {"EU", "NL", "BE", "DE"}) {
        CHECK(onboarding_allow_semantic(policy, loc, empty).allow);
    }
}

TEST_CASE("ontology file validation rejects cycles") {
    json bad = json::parse(R"({"containments": [["A", "B"], ["B", "A"]]})");
    CHECK_THROWS_AS(ontology_from_json(bad), Error);
    json ok = load_fixture("ontology.json");
    auto ont = ontology_from_json(ok);
    CHECK(ont.canonical("Netherlands") == "NL");
    CHECK(ont.is_subregion("NL", "EU"));
    CHECK_FALSE(ont.is_subregion("EU", "NL"));
}
