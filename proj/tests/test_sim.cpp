#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "fdpgov/federation_sim.hpp"
#include "support/generators.hpp"

using namespace fdpgov;

namespace {

std::string slurp_fixture(const std::string& name) {
    std::ifstream in(std::string(FIXTURES_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json load_fixture(const std::string& name) { return json::parse(slurp_fixture(name)); }

const FederationModel& pharma() {
    static FederationModel m = load_model(std::string(FIXTURES_DIR) + "/pharma.model.json");
    return m;
}

const std::vector<NodeSpec>& nodes() {
    static std::vector<NodeSpec> n = nodes_from_json(load_fixture("nodes.json"));
    return n;
}

std::vector<const SimEvent*> events_for(const SimTrace& trace, const AccessRequest& req) {
    std::vector<const SimEvent*> out;
    for (const auto& e : trace) {
        if (e.request == req) out.push_back(&e);
    }
    return out;
}

}  // namespace

TEST_CASE("happy path walks issue, gate, pdp, result in order") {
    AccessRequest req{"ClinicalResearcher", "ehr_pseudonymized", "pkpd_modelling", 7};
    auto trace = run_simulation(pharma(), nodes(), {req});
    REQUIRE(trace.size() == 4);
    CHECK(trace[0].kind == SimEventKind::RequestIssued);
    CHECK(trace[0].node == "analyst-central");
    CHECK(trace[1].kind == SimEventKind::GatePass);
    CHECK(trace[1].node == kGateStage);
    CHECK(trace[2].kind == SimEventKind::PdpAllow);
    CHECK(trace[2].node == "hospital-a");
    CHECK(trace[3].kind == SimEventKind::ResultReturned);
    CHECK(trace[3].node == "analyst-central");
    for (std::size_t i = 0; i < trace.size(); ++i) CHECK(trace[i].seq == i);
    CHECK(trace_disposition(trace, req));
}

TEST_CASE("gate rejection never reaches a provider node") {
    // DataManager is pinned to US while every object sits in the EU
    AccessRequest req{"DataManager", "ehr_full", "dataset_preparation", 7};
    auto trace = run_simulation(pharma(), nodes(), {req});
    REQUIRE(trace.size() == 2);
    CHECK(trace[0].kind == SimEventKind::RequestIssued);
    CHECK(trace[1].kind == SimEventKind::GateReject);
    CHECK(trace[1].node == kGateStage);
    CHECK(trace[1].detail == std::vector<std::string>{"spatial"});
    for (const auto& e : trace) {
        CHECK(e.node != "hospital-a");
        CHECK(e.node != "hospital-b");
    }
    CHECK_FALSE(trace_disposition(trace, req));
}

TEST_CASE("pdp denial happens at the hosting provider with pdp-only conjuncts") {
    // passes assignment/temporal/spatial, fails purpose and minimisation
    AccessRequest req{"ClinicalResearcher", "ehr_pseudonymized", "demand_assessment", 7};
    auto trace = run_simulation(pharma(), nodes(), {req});
    REQUIRE(trace.size() == 3);
    CHECK(trace[1].kind == SimEventKind::GatePass);
    CHECK(trace[2].kind == SimEventKind::PdpDeny);
    CHECK(trace[2].node == "hospital-a");
    CHECK(trace[2].detail == std::vector<std::string>{"purpose", "minimisation"});
}

TEST_CASE("gate details only carry gate conjuncts; pdp details only pdp conjuncts") {
    std::mt19937 rng(31337);
    for (int i = 0; i < 30; ++i) {
        auto m = testsupport::random_model(rng);
        // one provider hosting everything, jurisdiction left empty so no
        // label constraint can fail
        std::vector<NodeSpec> ns(1);
        ns[0].id = "p0";
        ns[0].kind = NodeKind::Provider;
        ns[0].hosted_objects = m.objects;
        std::vector<AccessRequest> reqs;
        for (int k = 0; k < 20; ++k) reqs.push_back(testsupport::random_request(rng, m));
        SimTrace trace;
        try {
            trace = run_simulation(m, ns, reqs);
        } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::UnknownToken);
            continue;
        }
        for (const auto& e : trace) {
            if (e.kind == SimEventKind::GateReject) {
                for (const auto& c : e.detail) {
                    CHECK((c == "assignment" || c == "temporal" || c == "spatial"));
                }
            }
            if (e.kind == SimEventKind::PdpDeny) {
                for (const auto& c : e.detail) {
                    CHECK((c == "purpose" || c == "minimisation"));
                }
            }
        }
    }
}

TEST_CASE("trace disposition equals the direct decision for every request") {
    std::mt19937 rng(4242);
    int models_checked = 0;
    while (models_checked < 25) {
        auto m = testsupport::random_model(rng);
        if (m.objects.empty()) continue;
        std::vector<NodeSpec> ns(1);
        ns[0].id = "p0";
        ns[0].kind = NodeKind::Provider;
        ns[0].hosted_objects = m.objects;
        for (const auto& r : m.roles) {
            for (const auto& o : m.objects) {
                for (const auto& p : m.purposes) {
                    AccessRequest req{r, o, p, Tick(models_checked % 21)};
                    auto trace = run_simulation(m, ns, {req});
                    CHECK(trace_disposition(trace, req) == authorize(m, req).allow);
                }
            }
        }
        ++models_checked;
    }
}

TEST_CASE("identical inputs give byte-identical traces") {
    auto reqs_doc = load_fixture("requests.json");
    std::vector<AccessRequest> reqs;
    for (const auto& r : reqs_doc) reqs.push_back(request_from_json(r));
    auto a = trace_to_jsonl(run_simulation(pharma(), nodes(), reqs));
    auto b = trace_to_jsonl(run_simulation(pharma(), nodes(), reqs));
    CHECK(a == b);
    CHECK_FALSE(a.empty());
}

TEST_CASE("requests are processed in tick order, stable within a tick") {
    std::vector<AccessRequest> reqs = {
        {"EthicsOfficer", "access_logs", "compliance_audit", 9},
        {"ClinicalResearcher", "ehr_pseudonymized", "pkpd_modelling", 3},
        {"EthicsOfficer", "consent_records", "compliance_audit", 9},
    };
    auto trace = run_simulation(pharma(), nodes(), reqs);
    std::vector<std::string> issue_order;
    for (const auto& e : trace) {
        if (e.kind == SimEventKind::RequestIssued) issue_order.push_back(e.request.object);
    }
    CHECK(issue_order == std::vector<std::string>{"ehr_pseudonymized", "access_logs",
                                                  "consent_records"});
}

TEST_CASE("unhosted object and duplicate hosting are rejected") {
    std::vector<NodeSpec> partial = nodes();
    partial[1].hosted_objects.erase("ehr_full");
    CHECK_THROWS_MATCHES(
        run_simulation(pharma(), partial,
                       {{"DataManager", "ehr_full", "dataset_preparation", 7}}),
        Error, Catch::Matchers::Predicate<Error>(
                   [](const Error& e) { return e.kind() == ErrorKind::UnhostedObject; }));

    std::vector<NodeSpec> doubled = nodes();
    doubled[2].hosted_objects.insert("ehr_full");
    CHECK_THROWS_MATCHES(
        run_simulation(pharma(), doubled,
                       {{"DataManager", "ehr_full", "dataset_preparation", 7}}),
        Error, Catch::Matchers::Predicate<Error>(
                   [](const Error& e) { return e.kind() == ErrorKind::DuplicateHosting; }));
}

TEST_CASE("hosting node jurisdiction must be covered by the object's labels") {
    std::vector<NodeSpec> bad = nodes();
    bad[1].jurisdiction.insert("US");  // no object in rho_o carries US
    CHECK_THROWS_MATCHES(
        run_simulation(pharma(), bad,
                       {{"DataManager", "ehr_full", "dataset_preparation", 7}}),
        Error, Catch::Matchers::Predicate<Error>(
                   [](const Error& e) { return e.kind() == ErrorKind::InvalidNode; }));
}

TEST_CASE("workflow simulation schedules one level per tick") {
    auto spec = parse_workflow(slurp_fixture("listing1.yaml"), WorkflowFormat::Plain);
    auto binding = binding_from_json(load_fixture("binding_listing1.json"));
    auto trace = simulate_workflow(pharma(), nodes(), spec, binding, 5);
    REQUIRE_FALSE(trace.empty());
    // four chained steps, all bound: one request per level at ticks 5..8
    std::vector<Tick> ticks;
    for (const auto& e : trace) {
        if (e.kind == SimEventKind::RequestIssued) ticks.push_back(e.at);
    }
    CHECK(ticks == std::vector<Tick>{5, 6, 7, 8});
}

TEST_CASE("workflow simulation with an empty binding is an empty trace") {
    auto spec = parse_workflow(slurp_fixture("listing1.yaml"), WorkflowFormat::Plain);
    auto trace = simulate_workflow(pharma(), nodes(), spec, {}, 0);
    CHECK(trace.empty());
}

TEST_CASE("jsonl lines are valid json with a fixed field order") {
    AccessRequest req{"ClinicalResearcher", "ehr_pseudonymized", "pkpd_modelling", 7};
    auto text = trace_to_jsonl(run_simulation(pharma(), nodes(), {req}));
    std::istringstream lines(text);
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        auto j = json::parse(line);
        CHECK(j.contains("seq"));
        CHECK(j.contains("kind"));
        CHECK(line.rfind("{\"seq\":", 0) == 0);
        ++count;
    }
    CHECK(count == 4);
}
