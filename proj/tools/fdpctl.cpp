// fdpctl: command-line front-end for the federation governance library.
// JSON in, JSON out. Exit codes: 0 allow/valid, 1 deny/non-compliant/
// violation-found, 2 usage or parse error, 3 internal error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fdpgov/decision.hpp"
#include "fdpgov/federation_sim.hpp"
#include "fdpgov/model.hpp"
#include "fdpgov/onboarding.hpp"
#include "fdpgov/policy.hpp"
#include "fdpgov/temporal_graph.hpp"
#include "fdpgov/workflow.hpp"

namespace {

using fdpgov::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fdpgov::Error(fdpgov::ErrorKind::IoError, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json load_json(const std::string& path) {
    try {
        return json::parse(slurp(path));
    } catch (const json::parse_error& e) {
        throw fdpgov::Error(fdpgov::ErrorKind::ParseError, path + ": " + e.what());
    }
}

std::map<std::string, std::string> parse_attrs(const std::vector<std::string>& kvs,
                                               const std::string& what) {
    std::map<std::string, std::string> out;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) {
            throw CLI::ValidationError(what, "expected key=value, got '" + kv + "'");
        }
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return out;
}

fdpgov::LocationOntology load_ontology(const std::string& path) {
    if (path.empty()) return fdpgov::seed_ontology();
    return fdpgov::ontology_from_json(load_json(path));
}

void print(const json& doc) { std::cout << doc.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Federated data governance toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    // --- model -------------------------------------------------------------
    auto* model_cmd = app.add_subcommand("model", "Model file operations")->require_subcommand(1);
    {
        auto* validate = model_cmd->add_subcommand("validate", "Validate a model file");
        auto file = std::make_shared<std::string>();
        validate->add_option("file", *file, "model JSON file")->required();
        validate->callback([file, &exit_code] {
            json doc = load_json(*file);
            fdpgov::FederationModel m;
            auto issues = fdpgov::validate_model_document(doc, m);
            json report;
            report["valid"] = issues.empty();
            report["issues"] = json::array();
            for (const auto& i : issues) {
                report["issues"].push_back({{"code", to_string(i.code)}, {"message", i.message}});
            }
            print(report);
            exit_code = issues.empty() ? 0 : 1;
        });
    }

    // --- authz -------------------------------------------------------------
    auto* authz = app.add_subcommand("authz", "Authorization queries")->require_subcommand(1);
    {
        auto* eval = authz->add_subcommand("eval", "Evaluate one access request");
        struct Args {
            std::string model, role, object, purpose;
            fdpgov::Tick at = 0;
        };
        auto a = std::make_shared<Args>();
        eval->add_option("model", a->model)->required();
        eval->add_option("--role", a->role)->required();
        eval->add_option("--object", a->object)->required();
        eval->add_option("--purpose", a->purpose)->required();
        eval->add_option("--at", a->at)->required();
        eval->callback([a, &exit_code] {
            auto m = fdpgov::load_model(a->model);
            auto d = fdpgov::authorize(m, {a->role, a->object, a->purpose, a->at});
            print(fdpgov::decision_to_json(d));
            exit_code = d.allow ? 0 : 1;
        });

        auto* graph = authz->add_subcommand("graph", "Active edge set at a tick");
        struct GArgs {
            std::string model;
            fdpgov::Tick at = 0;
            bool st = false;
        };
        auto g = std::make_shared<GArgs>();
        graph->add_option("model", g->model)->required();
        graph->add_option("--at", g->at)->required();
        graph->add_flag("--spatio-temporal", g->st, "apply the region check as well");
        graph->callback([g] {
            auto m = fdpgov::load_model(g->model);
            auto es = g->st ? fdpgov::active_st_edges(m, g->at) : fdpgov::active_edges(m, g->at);
            print(fdpgov::edge_set_to_json(es));
        });

        auto* audit = authz->add_subcommand("audit", "Compliance violations over a request list");
        struct AArgs {
            std::string model, requests;
        };
        auto aa = std::make_shared<AArgs>();
        audit->add_option("model", aa->model)->required();
        audit->add_option("--requests", aa->requests)->required();
        audit->callback([aa, &exit_code] {
            auto m = fdpgov::load_model(aa->model);
            std::vector<fdpgov::AccessRequest> reqs;
            for (const auto& r : load_json(aa->requests)) reqs.push_back(fdpgov::request_from_json(r));
            auto result = fdpgov::audit_violations(m, reqs);
            print(fdpgov::violation_audit_to_json(result));
            exit_code = result.violations.empty() ? 0 : 1;
        });
    }

    // --- policy ------------------------------------------------------------
    auto* policy = app.add_subcommand("policy", "Policy engines")->require_subcommand(1);
    {
        auto* rbac = policy->add_subcommand("rbac", "RBAC table")->require_subcommand(1);
        auto* rbac_eval = rbac->add_subcommand("eval", "Evaluate an RBAC request");
        struct RArgs {
            std::string table, role, action, resource;
        };
        auto r = std::make_shared<RArgs>();
        rbac_eval->add_option("--table", r->table)->required();
        rbac_eval->add_option("--role", r->role)->required();
        rbac_eval->add_option("--action", r->action)->required();
        rbac_eval->add_option("--resource", r->resource)->required();
        rbac_eval->callback([r, &exit_code] {
            auto table = fdpgov::rbac_table_from_json(load_json(r->table));
            bool allow = fdpgov::rbac_allow(table, r->role, r->action, r->resource);
            print(json{{"allow", allow}});
            exit_code = allow ? 0 : 1;
        });

        auto* abac = policy->add_subcommand("abac", "ABAC rules")->require_subcommand(1);
        auto* abac_eval = abac->add_subcommand("eval", "Evaluate an ABAC request");
        struct BArgs {
            std::string rules, action;
            std::vector<std::string> user, resource, context;
        };
        auto b = std::make_shared<BArgs>();
        abac_eval->add_option("--rules", b->rules)->required();
        abac_eval->add_option("--action", b->action)->required();
        abac_eval->add_option("--user", b->user, "user attribute key=value");
        abac_eval->add_option("--resource", b->resource, "resource attribute key=value");
        abac_eval->add_option("--context", b->context, "context attribute key=value");
        abac_eval->callback([b, &exit_code] {
            auto rules = fdpgov::abac_rules_from_json(load_json(b->rules));
            auto d = fdpgov::abac_evaluate(rules, parse_attrs(b->user, "--user"),
                                           parse_attrs(b->resource, "--resource"),
                                           parse_attrs(b->context, "--context"), b->action);
            json out{{"allow", d.allow}};
            if (d.matched_rule) out["matched_rule"] = *d.matched_rule;
            print(out);
            exit_code = d.allow ? 0 : 1;
        });

        auto* onboard = policy->add_subcommand("onboard", "Location policy")->require_subcommand(1);
        auto* ob_eval = onboard->add_subcommand("eval", "Evaluate a location");
        struct OArgs {
            std::string policy, location, ontology;
            bool semantic = false;
        };
        auto o = std::make_shared<OArgs>();
        ob_eval->add_option("--policy", o->policy)->required();
        ob_eval->add_option("--location", o->location)->required();
        ob_eval->add_flag("--semantic", o->semantic, "use the location ontology");
        ob_eval->add_option("--ontology", o->ontology, "ontology JSON (default: seed)");
        ob_eval->callback([o, &exit_code] {
            auto pol = fdpgov::onboarding_policy_from_json(load_json(o->policy));
            json out;
            bool allow;
            if (o->semantic) {
                auto d = fdpgov::onboarding_allow_semantic(pol, o->location,
                                                           load_ontology(o->ontology));
                allow = d.allow;
                out["allow"] = d.allow;
                if (d.via) out["via"] = *d.via;
            } else {
                allow = fdpgov::onboarding_allow(pol, o->location);
                out["allow"] = allow;
            }
            print(out);
            exit_code = allow ? 0 : 1;
        });
    }

    // --- workflow ----------------------------------------------------------
    auto* workflow = app.add_subcommand("workflow", "Workflow operations")->require_subcommand(1);
    {
        auto* check = workflow->add_subcommand("check", "Compliance-check a workflow");
        struct WArgs {
            std::string spec, model, binding, format = "extended";
            fdpgov::Tick at = 0;
        };
        auto w = std::make_shared<WArgs>();
        check->add_option("spec", w->spec)->required();
        check->add_option("--model", w->model)->required();
        check->add_option("--binding", w->binding)->required();
        check->add_option("--at", w->at)->required();
        check->add_option("--format", w->format)->check(CLI::IsMember({"plain", "extended"}));
        check->callback([w, &exit_code] {
            auto m = fdpgov::load_model(w->model);
            auto spec = fdpgov::parse_workflow(slurp(w->spec),
                                               w->format == "plain"
                                                   ? fdpgov::WorkflowFormat::Plain
                                                   : fdpgov::WorkflowFormat::ComplianceExtended);
            auto binding = fdpgov::binding_from_json(load_json(w->binding));
            auto report = fdpgov::check_workflow_compliance(m, spec, binding, w->at);
            print(fdpgov::compliance_report_to_json(report));
            exit_code = report.verdict == fdpgov::Verdict::Compliant ? 0 : 1;
        });
    }

    // --- sim ---------------------------------------------------------------
    auto* sim = app.add_subcommand("sim", "Enforcement simulation")->require_subcommand(1);
    {
        auto* run = sim->add_subcommand("run", "Run a simulation, trace to stdout as JSONL");
        struct SArgs {
            std::string model, nodes, requests, workflow, binding, format = "extended";
            fdpgov::Tick start = 0;
        };
        auto s = std::make_shared<SArgs>();
        run->add_option("model", s->model)->required();
        run->add_option("--nodes", s->nodes)->required();
        auto* req_opt = run->add_option("--requests", s->requests);
        auto* wf_opt = run->add_option("--workflow", s->workflow)->excludes(req_opt);
        run->add_option("--binding", s->binding)->needs(wf_opt);
        run->add_option("--start", s->start);
        run->add_option("--format", s->format)->check(CLI::IsMember({"plain", "extended"}));
        run->callback([s] {
            auto m = fdpgov::load_model(s->model);
            auto nodes = fdpgov::nodes_from_json(load_json(s->nodes));
            fdpgov::SimTrace trace;
            if (!s->requests.empty()) {
                std::vector<fdpgov::AccessRequest> reqs;
                for (const auto& r : load_json(s->requests))
                    reqs.push_back(fdpgov::request_from_json(r));
                trace = fdpgov::run_simulation(m, nodes, std::move(reqs));
            } else if (!s->workflow.empty()) {
                auto spec = fdpgov::parse_workflow(
                    slurp(s->workflow), s->format == "plain"
                                            ? fdpgov::WorkflowFormat::Plain
                                            : fdpgov::WorkflowFormat::ComplianceExtended);
                auto binding = fdpgov::binding_from_json(load_json(s->binding));
                trace = fdpgov::simulate_workflow(m, nodes, spec, binding, s->start);
            } else {
                throw CLI::ValidationError("sim run", "need --requests or --workflow");
            }
            std::cout << fdpgov::trace_to_jsonl(trace);
        });
    }

    // --- onboard -----------------------------------------------------------
    auto* onboard = app.add_subcommand("onboard", "Onboarding store")->require_subcommand(1);
    {
        struct OnArgs {
            std::string store, project_file, project, profile, request, field, value, ontology;
            fdpgov::Tick now = 0;
            bool semantic = false, reevaluate = false;
        };
        auto o = std::make_shared<OnArgs>();

        auto* submit = onboard->add_subcommand(
            "submit", "Register a project (--project-file) or submit a join request");
        submit->add_option("--store", o->store)->required();
        submit->add_option("--project-file", o->project_file);
        submit->add_option("--project", o->project);
        submit->add_option("--profile", o->profile);
        submit->add_option("--now", o->now);
        submit->callback([o] {
            fdpgov::OnboardingStore store(o->store);
            if (!o->project_file.empty()) {
                auto id = store.create_project(load_json(o->project_file));
                print(json{{"project", id}});
            } else if (!o->project.empty() && !o->profile.empty()) {
                auto id = store.submit_join(o->project, load_json(o->profile), o->now);
                print(json{{"request", id}});
            } else {
                throw CLI::ValidationError("onboard submit",
                                           "need --project-file or --project with --profile");
            }
        });

        auto* evaluate = onboard->add_subcommand("evaluate", "Evaluate a pending join request");
        evaluate->add_option("--store", o->store)->required();
        evaluate->add_option("--request", o->request)->required();
        evaluate->add_flag("--semantic", o->semantic);
        evaluate->add_option("--ontology", o->ontology);
        evaluate->add_option("--now", o->now);
        evaluate->callback([o, &exit_code] {
            fdpgov::OnboardingStore store(o->store);
            auto r = store.evaluate_join(o->request, load_ontology(o->ontology),
                                         o->semantic ? "semantic" : "exact", o->now);
            print(fdpgov::join_request_to_json(r));
            exit_code = r.state == fdpgov::JoinState::Approved ? 0 : 1;
        });

        auto* rectify = onboard->add_subcommand("rectify", "Rectify a profile field");
        rectify->add_option("--store", o->store)->required();
        rectify->add_option("--request", o->request)->required();
        rectify->add_option("--field", o->field)->required();
        rectify->add_option("--value", o->value)->required();
        rectify->add_option("--now", o->now);
        rectify->add_flag("--reevaluate", o->reevaluate);
        rectify->add_option("--ontology", o->ontology);
        rectify->callback([o] {
            fdpgov::OnboardingStore store(o->store);
            auto c = store.rectify_field(o->request, o->field, o->value, o->now, o->reevaluate,
                                         load_ontology(o->ontology));
            print(fdpgov::change_record_to_json(c));
        });

        auto* agreement = onboard->add_subcommand("agreement", "Render the data use agreement");
        agreement->add_option("--store", o->store)->required();
        agreement->add_option("--request", o->request)->required();
        agreement->add_option("--ontology", o->ontology);
        agreement->callback([o] {
            fdpgov::OnboardingStore store(o->store);
            auto res = store.generate_agreement(o->request, load_ontology(o->ontology));
            if (res.used_default) {
                std::cerr << "warning: no clause block for region, using default\n";
            }
            print(json{{"region", res.region}, {"used_default", res.used_default},
                       {"text", res.text}});
        });

        auto* verify = onboard->add_subcommand("audit-verify", "Verify the audit hash chain");
        verify->add_option("--store", o->store)->required();
        verify->callback([o, &exit_code] {
            fdpgov::OnboardingStore store(o->store);
            auto check = store.verify_audit();
            json out{{"ok", check.ok}};
            if (!check.ok) out["first_bad_index"] = check.first_bad_index;
            print(out);
            exit_code = check.ok ? 0 : 1;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const fdpgov::ModelValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const fdpgov::Error& e) {
        std::cerr << e.what() << "\n";
        switch (e.kind()) {
            case fdpgov::ErrorKind::IoError:
            case fdpgov::ErrorKind::ParseError:
            case fdpgov::ErrorKind::UnknownKey:
            case fdpgov::ErrorKind::UnknownField:
                return 2;
            default:
                return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
