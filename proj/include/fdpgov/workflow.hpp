#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "fdpgov/decision.hpp"

namespace fdpgov {

enum class WorkflowFormat { Plain, ComplianceExtended };

struct ComplianceRule {
    std::string id;
    std::string description;
    std::string requirement;   // confidentiality, data_minimization, consent, anonymization, ...
    std::string verified_by;   // system-policy | static-analysis | opa:<policy>/<rule>
    std::string evidence;
    bool enforcement = false;  // default advisory

    bool operator==(const ComplianceRule&) const = default;
};

struct PortDecl {
    std::string type;
    std::string description;

    bool operator==(const PortDecl&) const = default;
};

struct OnError {
    std::string action;  // only "fail"
    std::string message;

    bool operator==(const OnError&) const = default;
};

struct Step {
    std::string id;
    std::string name;
    std::string description;
    std::string image;
    std::vector<std::string> command;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::map<std::string, PortDecl> typed_outputs;  // outputs declared as records
    std::optional<OnError> on_error;
    std::vector<ComplianceRule> compliance;
    bool is_handler = false;  // declarative error handler, no data edges

    bool operator==(const Step&) const = default;
};

struct PolicyRef {
    std::string id;
    std::string source;

    bool operator==(const PolicyRef&) const = default;
};

struct PolicyBinding {
    std::string engine;
    std::vector<PolicyRef> policy_refs;

    bool operator==(const PolicyBinding&) const = default;
};

struct WorkflowSpec {
    WorkflowFormat format = WorkflowFormat::Plain;
    std::string name;
    std::string version;
    std::string description;
    std::map<std::string, PortDecl> inputs;
    std::vector<Step> steps;
    std::map<std::string, PortDecl> outputs;
    std::optional<PolicyBinding> policy;

    bool operator==(const WorkflowSpec&) const = default;

    const Step* find_step(const std::string& id) const {
        for (const auto& s : steps)
            if (s.id == id) return &s;
        return nullptr;
    }
};

/// Role/objects/purpose attached to a step, bridging workflow steps to
/// access requests against the federation model.
struct StepBindingEntry {
    std::string role;
    std::set<std::string> objects;
    std::string purpose;
};

using StepBinding = std::map<std::string, StepBindingEntry>;

namespace detail {

inline std::string scalar(const YAML::Node& n) { return n.as<std::string>(); }

inline void check_keys(const YAML::Node& node, const std::set<std::string>& allowed,
                       bool allow_extensions, const std::string& where) {
    for (const auto& kv : node) {
        std::string key = kv.first.as<std::string>();
        if (key.rfind("x-", 0) == 0) {
            if (!allow_extensions) {
                throw Error(ErrorKind::UnknownKey,
                            where + ": extension key '" + key + "' not allowed in plain format");
            }
            continue;
        }
        if (!allowed.count(key)) {
            throw Error(ErrorKind::UnknownKey, where + ": unknown key '" + key + "'");
        }
    }
}

inline std::map<std::string, PortDecl> parse_ports(const YAML::Node& node,
                                                   const std::string& where) {
    std::map<std::string, PortDecl> out;
    if (!node) return out;
    for (const auto& kv : node) {
        std::string name = kv.first.as<std::string>();
        check_keys(kv.second, {"type", "description"}, false, where + "." + name);
        PortDecl d;
        if (kv.second["type"]) d.type = scalar(kv.second["type"]);
        if (kv.second["description"]) d.description = scalar(kv.second["description"]);
        out[name] = d;
    }
    return out;
}

inline std::vector<ComplianceRule> parse_compliance(const YAML::Node& node,
                                                    const std::string& where) {
    std::vector<ComplianceRule> rules;
    if (!node || !node["rules"]) return rules;
    for (const auto& rn : node["rules"]) {
        check_keys(rn, {"id", "description", "requirement", "verifiedBy", "evidence",
                        "enforcement"},
                   false, where);
        ComplianceRule r;
        if (rn["id"]) r.id = scalar(rn["id"]);
        if (rn["description"]) r.description = scalar(rn["description"]);
        if (rn["requirement"]) r.requirement = scalar(rn["requirement"]);
        if (rn["verifiedBy"]) r.verified_by = scalar(rn["verifiedBy"]);
        if (rn["evidence"]) r.evidence = scalar(rn["evidence"]);
        if (rn["enforcement"]) r.enforcement = rn["enforcement"].as<bool>();
        if (r.id.empty() || r.requirement.empty()) {
            throw Error(ErrorKind::ParseError, where + ": compliance rule needs id and requirement");
        }
        rules.push_back(std::move(r));
    }
    return rules;
}

inline Step parse_step_common(const YAML::Node& sn, bool extended) {
    check_keys(sn, {"id", "name", "description", "image", "command", "inputs", "outputs",
                    "onError"},
               extended, "step");
    Step s;
    if (sn["id"]) s.id = scalar(sn["id"]);
    if (s.id.empty()) throw Error(ErrorKind::ParseError, "step without id");
    if (sn["name"]) s.name = scalar(sn["name"]);
    if (sn["description"]) s.description = scalar(sn["description"]);
    if (sn["image"]) s.image = scalar(sn["image"]);
    if (sn["command"]) {
        for (const auto& c : sn["command"]) s.command.push_back(scalar(c));
    }
    if (sn["inputs"]) {
        for (const auto& i : sn["inputs"]) s.inputs.push_back(scalar(i));
    }
    if (sn["outputs"]) {
        for (const auto& o : sn["outputs"]) {
            if (o.IsScalar()) {
                s.outputs.push_back(scalar(o));
            } else {
                check_keys(o, {"name", "type", "description"}, false, "step " + s.id + " output");
                std::string name = scalar(o["name"]);
                PortDecl d;
                if (o["type"]) d.type = scalar(o["type"]);
                if (o["description"]) d.description = scalar(o["description"]);
                s.outputs.push_back(name);
                s.typed_outputs[name] = d;
            }
        }
    }
    if (sn["onError"]) {
        check_keys(sn["onError"], {"action", "message"}, false, "step " + s.id + " onError");
        OnError oe;
        oe.action = sn["onError"]["action"] ? scalar(sn["onError"]["action"]) : "";
        if (sn["onError"]["message"]) oe.message = scalar(sn["onError"]["message"]);
        if (oe.action != "fail") {
            throw Error(ErrorKind::ParseError, "step " + s.id + ": onError.action must be 'fail'");
        }
        s.on_error = oe;
    }
    if (extended) s.compliance = parse_compliance(sn["x-compliance"], "step " + s.id);
    return s;
}

/// Data-edge validation: step ids unique, every input resolves to a workflow
/// input or a prior step's output. The prior-step rule makes the graph
/// acyclic by construction.
inline void validate_data_edges(const WorkflowSpec& spec) {
    std::set<std::string> step_ids;
    std::set<std::string> available;
    for (const auto& [name, decl] : spec.inputs) available.insert(name);
    for (const auto& s : spec.steps) {
        if (!step_ids.insert(s.id).second) {
            throw Error(ErrorKind::DuplicateStepId, "step id '" + s.id + "'");
        }
        if (s.is_handler) continue;
        for (const auto& i : s.inputs) {
            if (!available.count(i)) {
                throw Error(ErrorKind::DanglingDataRef,
                            "step '" + s.id + "' consumes undeclared '" + i + "'");
            }
        }
        for (const auto& o : s.outputs) available.insert(o);
    }
    for (const auto& [name, decl] : spec.outputs) {
        if (!available.count(name)) {
            throw Error(ErrorKind::DanglingDataRef, "workflow output '" + name + "' unproduced");
        }
    }
}

/// True when the extended format carries explicit data edges; otherwise the
/// steps are treated as a linear chain in declaration order.
inline bool has_data_edges(const WorkflowSpec& spec) {
    for (const auto& s : spec.steps) {
        if (!s.inputs.empty() || !s.outputs.empty()) return true;
    }
    return false;
}

}  // namespace detail

inline WorkflowSpec parse_workflow(const std::string& document, WorkflowFormat format) {
    YAML::Node root;
    try {
        root = YAML::Load(document);
    } catch (const YAML::Exception& e) {
        throw Error(ErrorKind::ParseError, std::string("line ") + std::to_string(e.mark.line + 1) +
                                               ", col " + std::to_string(e.mark.column + 1) + ": " +
                                               e.msg);
    }
    WorkflowSpec spec;
    spec.format = format;

    if (format == WorkflowFormat::Plain) {
        detail::check_keys(root, {"name", "version", "description", "inputs", "steps", "outputs"},
                           false, "workflow");
        if (root["name"]) spec.name = detail::scalar(root["name"]);
        if (root["version"]) spec.version = detail::scalar(root["version"]);
        if (root["description"]) spec.description = detail::scalar(root["description"]);
        spec.inputs = detail::parse_ports(root["inputs"], "inputs");
        spec.outputs = detail::parse_ports(root["outputs"], "outputs");
        for (const auto& sn : root["steps"]) {
            spec.steps.push_back(detail::parse_step_common(sn, false));
        }
        detail::validate_data_edges(spec);
        return spec;
    }

    detail::check_keys(root, {"arazzo", "info", "workflows"}, true, "workflow");
    if (root["info"]) {
        detail::check_keys(root["info"], {"title", "version", "description"}, true, "info");
        if (root["info"]["title"]) spec.name = detail::scalar(root["info"]["title"]);
        if (root["info"]["version"]) spec.version = detail::scalar(root["info"]["version"]);
        if (root["info"]["description"]) spec.description = detail::scalar(root["info"]["description"]);
    }
    if (root["x-policy"]) {
        detail::check_keys(root["x-policy"], {"engine", "policyRefs"}, false, "x-policy");
        PolicyBinding pb;
        if (root["x-policy"]["engine"]) pb.engine = detail::scalar(root["x-policy"]["engine"]);
        std::set<std::string> ref_ids;
        for (const auto& rn : root["x-policy"]["policyRefs"]) {
            detail::check_keys(rn, {"id", "source"}, false, "x-policy ref");
            PolicyRef ref;
            ref.id = detail::scalar(rn["id"]);
            if (rn["source"]) ref.source = detail::scalar(rn["source"]);
            if (!ref_ids.insert(ref.id).second) {
                throw Error(ErrorKind::ParseError, "duplicate policy ref '" + ref.id + "'");
            }
            pb.policy_refs.push_back(std::move(ref));
        }
        spec.policy = pb;
    }
    if (!root["workflows"] || root["workflows"].size() == 0) {
        throw Error(ErrorKind::ParseError, "extended document has no workflows");
    }
    const auto wf = root["workflows"].begin();
    detail::check_keys(wf->second, {"description", "steps"}, true, "workflows entry");
    if (spec.description.empty() && wf->second["description"]) {
        spec.description = detail::scalar(wf->second["description"]);
    }
    for (const auto& sn : wf->second["steps"]) {
        Step s = detail::parse_step_common(sn, true);
        // A step with no command, no data edges and no compliance rules is a
        // declarative error-handler node, excluded from dependency levels.
        s.is_handler = s.command.empty() && s.inputs.empty() && s.outputs.empty() &&
                       s.compliance.empty() && !s.description.empty();
        spec.steps.push_back(std::move(s));
    }
    detail::validate_data_edges(spec);
    return spec;
}

/// Direct data dependencies of each non-handler step, by step index.
/// Extended documents without explicit data edges become a linear chain in
/// declaration order.
inline std::map<std::string, std::set<std::string>> data_dependencies(const WorkflowSpec& spec) {
    std::map<std::string, std::set<std::string>> deps;
    std::map<std::string, std::string> producer;  // data name -> step id
    bool edges = detail::has_data_edges(spec);
    std::string prev;
    for (const auto& s : spec.steps) {
        if (s.is_handler) continue;
        deps[s.id];
        if (edges) {
            for (const auto& i : s.inputs) {
                auto it = producer.find(i);
                if (it != producer.end()) deps[s.id].insert(it->second);
            }
            for (const auto& o : s.outputs) producer[o] = s.id;
        } else {
            if (!prev.empty()) deps[s.id].insert(prev);
            prev = s.id;
        }
    }
    return deps;
}

/// Topological layering: level k holds steps whose every dependency sits in
/// a strictly lower level. Steps within a level are mutually independent and
/// listed in sorted order.
inline std::vector<std::vector<std::string>> dependency_levels(const WorkflowSpec& spec) {
    auto deps = data_dependencies(spec);
    std::map<std::string, int> level;
    std::vector<std::vector<std::string>> out;
    std::size_t placed = 0;
    while (placed < deps.size()) {
        std::vector<std::string> layer;
        for (const auto& [id, ds] : deps) {
            if (level.count(id)) continue;
            bool ready = true;
            for (const auto& d : ds) {
                if (!level.count(d)) ready = false;
            }
            if (ready) layer.push_back(id);
        }
        if (layer.empty()) throw Error(ErrorKind::CycleDetected, "dependency cycle");
        std::sort(layer.begin(), layer.end());
        for (const auto& id : layer) level[id] = static_cast<int>(out.size());
        placed += layer.size();
        out.push_back(std::move(layer));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Compliance checking
// ---------------------------------------------------------------------------

enum class Verdict { Compliant, NonCompliant };

struct Finding {
    std::string step_id;
    std::string rule_id;
    std::string requirement;
    std::string source;    // verifier token or policy ref
    std::string severity;  // "error" | "warning"
    std::string conjunct;  // failed conjunct or structural reason
    std::string message;
};

struct StepReport {
    std::string step_id;
    std::optional<Decision> decision;
    std::vector<Finding> findings;
};

struct ComplianceReport {
    Verdict verdict = Verdict::Compliant;
    std::vector<StepReport> steps;
    std::vector<Finding> findings;  // flattened
};

namespace detail {

enum class VerifierKind { Auth, StaticAnalysis, Unknown };

inline VerifierKind dispatch_verifier(const WorkflowSpec& spec, const std::string& token,
                                      std::string& source) {
    source = token;
    if (token == "system-policy") return VerifierKind::Auth;
    if (token == "static-analysis") return VerifierKind::StaticAnalysis;
    if (token.rfind("opa:", 0) == 0) {
        std::string ref = token.substr(4);
        auto slash = ref.find('/');
        if (slash != std::string::npos) ref = ref.substr(0, slash);
        if (spec.policy) {
            for (const auto& pr : spec.policy->policy_refs) {
                if (pr.id == ref) {
                    source = ref;
                    return VerifierKind::Auth;  // stand-in evaluation via the model
                }
            }
        }
        return VerifierKind::Unknown;
    }
    return VerifierKind::Unknown;
}

/// Structural check for static-analysis rules: no step downstream of the
/// rule-carrying step may consume data produced upstream of it, i.e. the
/// post-match pipeline sees only the schema-matched lineage (plus workflow
/// inputs).
inline bool static_lineage_check(const WorkflowSpec& spec, const std::string& rule_step) {
    auto deps = data_dependencies(spec);
    // transitive dependents of rule_step
    std::set<std::string> downstream;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [id, ds] : deps) {
            if (downstream.count(id)) continue;
            for (const auto& d : ds) {
                if (d == rule_step || downstream.count(d)) {
                    downstream.insert(id);
                    grew = true;
                    break;
                }
            }
        }
    }
    std::map<std::string, std::string> producer;
    for (const auto& s : spec.steps) {
        for (const auto& o : s.outputs) producer[o] = s.id;
    }
    for (const auto& id : downstream) {
        const Step* s = spec.find_step(id);
        for (const auto& i : s->inputs) {
            auto it = producer.find(i);
            if (it == producer.end()) continue;  // workflow input
            if (it->second != rule_step && !downstream.count(it->second)) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Evaluates every compliance rule attached to every step. An enforcement
/// rule whose verifier evaluation fails marks the workflow NON-COMPLIANT;
/// advisory rules produce warnings only. Unknown verifiers are downgraded to
/// warnings. An enforcement rule on an unbound step is an error.
inline ComplianceReport check_workflow_compliance(const FederationModel& model,
                                                  const WorkflowSpec& spec,
                                                  const StepBinding& binding, Tick at) {
    ComplianceReport report;
    for (const auto& step : spec.steps) {
        if (step.compliance.empty()) continue;
        StepReport sr;
        sr.step_id = step.id;

        const StepBindingEntry* bound = nullptr;
        auto bit = binding.find(step.id);
        if (bit != binding.end()) bound = &bit->second;

        std::optional<Decision> decision;
        auto evaluate_auth = [&]() -> const Decision& {
            if (!decision) {
                decision = authorize_set(model, {bound->role, bound->objects, bound->purpose, at});
            }
            return *decision;
        };

        for (const auto& rule : step.compliance) {
            std::string source;
            auto kind = detail::dispatch_verifier(spec, rule.verified_by, source);
            std::string severity = rule.enforcement ? "error" : "warning";

            if (kind == detail::VerifierKind::Unknown) {
                sr.findings.push_back({step.id, rule.id, rule.requirement, source, "warning",
                                       "verifier",
                                       "unknown verifier '" + rule.verified_by + "'"});
                continue;
            }
            if (kind == detail::VerifierKind::StaticAnalysis) {
                if (!detail::static_lineage_check(spec, step.id)) {
                    sr.findings.push_back({step.id, rule.id, rule.requirement, source, severity,
                                           "structure",
                                           "downstream steps consume pre-match data"});
                    if (rule.enforcement) report.verdict = Verdict::NonCompliant;
                }
                continue;
            }
            // Auth-backed verifier
            if (!bound) {
                if (rule.enforcement) {
                    throw Error(ErrorKind::UnboundStep,
                                "enforcement rule '" + rule.id + "' on unbound step '" + step.id +
                                    "'");
                }
                sr.findings.push_back({step.id, rule.id, rule.requirement, source, "warning",
                                       "binding", "step has no binding; rule not evaluated"});
                continue;
            }
            const Decision& d = evaluate_auth();
            if (!d.allow) {
                for (const auto& conj : d.failed) {
                    sr.findings.push_back({step.id, rule.id, rule.requirement, source, severity,
                                           conj, "authorization conjunct failed"});
                }
                if (rule.enforcement) report.verdict = Verdict::NonCompliant;
            }
        }
        sr.decision = decision;
        for (const auto& f : sr.findings) report.findings.push_back(f);
        report.steps.push_back(std::move(sr));
    }
    return report;
}

inline json compliance_report_to_json(const ComplianceReport& r) {
    json doc;
    doc["verdict"] = r.verdict == Verdict::Compliant ? "COMPLIANT" : "NON-COMPLIANT";
    auto finding_json = [](const Finding& f) {
        return json{{"step", f.step_id},     {"rule", f.rule_id},
                    {"requirement", f.requirement}, {"source", f.source},
                    {"severity", f.severity}, {"conjunct", f.conjunct},
                    {"message", f.message}};
    };
    doc["steps"] = json::array();
    for (const auto& s : r.steps) {
        json sj;
        sj["step"] = s.step_id;
        if (s.decision) sj["decision"] = decision_to_json(*s.decision);
        sj["findings"] = json::array();
        for (const auto& f : s.findings) sj["findings"].push_back(finding_json(f));
        doc["steps"].push_back(std::move(sj));
    }
    doc["findings"] = json::array();
    for (const auto& f : r.findings) doc["findings"].push_back(finding_json(f));
    return doc;
}

inline StepBinding binding_from_json(const json& doc) {
    StepBinding b;
    for (const auto& [step_id, e] : doc.items()) {
        StepBindingEntry entry;
        entry.role = e.at("role").get<std::string>();
        for (const auto& o : e.at("objects")) entry.objects.insert(o.get<std::string>());
        entry.purpose = e.at("purpose").get<std::string>();
        b[step_id] = std::move(entry);
    }
    return b;
}

// ---------------------------------------------------------------------------
// Serialization (plain format YAML; extended keeps the arazzo layout)
// ---------------------------------------------------------------------------

inline std::string serialize_workflow(const WorkflowSpec& spec) {
    YAML::Emitter out;
    auto emit_ports = [&](const std::map<std::string, PortDecl>& ports) {
        out << YAML::BeginMap;
        for (const auto& [name, d] : ports) {
            out << YAML::Key << name << YAML::Value << YAML::BeginMap;
            if (!d.type.empty()) out << YAML::Key << "type" << YAML::Value << d.type;
            if (!d.description.empty())
                out << YAML::Key << "description" << YAML::Value << d.description;
            out << YAML::EndMap;
        }
        out << YAML::EndMap;
    };
    auto emit_step = [&](const Step& s, bool extended) {
        out << YAML::BeginMap;
        out << YAML::Key << "id" << YAML::Value << s.id;
        if (!s.name.empty()) out << YAML::Key << "name" << YAML::Value << s.name;
        if (!s.description.empty())
            out << YAML::Key << "description" << YAML::Value << s.description;
        if (!s.image.empty()) out << YAML::Key << "image" << YAML::Value << s.image;
        if (!s.command.empty()) {
            out << YAML::Key << "command" << YAML::Value << YAML::Flow << s.command;
        }
        if (!s.inputs.empty()) {
            out << YAML::Key << "inputs" << YAML::Value << YAML::Flow << s.inputs;
        }
        if (!s.outputs.empty()) {
            out << YAML::Key << "outputs" << YAML::Value << YAML::BeginSeq;
            for (const auto& o : s.outputs) {
                auto it = s.typed_outputs.find(o);
                if (it == s.typed_outputs.end()) {
                    out << o;
                } else {
                    out << YAML::BeginMap << YAML::Key << "name" << YAML::Value << o;
                    if (!it->second.type.empty())
                        out << YAML::Key << "type" << YAML::Value << it->second.type;
                    if (!it->second.description.empty())
                        out << YAML::Key << "description" << YAML::Value << it->second.description;
                    out << YAML::EndMap;
                }
            }
            out << YAML::EndSeq;
        }
        if (s.on_error) {
            out << YAML::Key << "onError" << YAML::Value << YAML::BeginMap;
            out << YAML::Key << "action" << YAML::Value << s.on_error->action;
            out << YAML::Key << "message" << YAML::Value << s.on_error->message;
            out << YAML::EndMap;
        }
        if (extended && !s.compliance.empty()) {
            out << YAML::Key << "x-compliance" << YAML::Value << YAML::BeginMap;
            out << YAML::Key << "rules" << YAML::Value << YAML::BeginSeq;
            for (const auto& r : s.compliance) {
                out << YAML::BeginMap;
                out << YAML::Key << "id" << YAML::Value << r.id;
                if (!r.description.empty())
                    out << YAML::Key << "description" << YAML::Value << r.description;
                out << YAML::Key << "requirement" << YAML::Value << r.requirement;
                if (!r.verified_by.empty())
                    out << YAML::Key << "verifiedBy" << YAML::Value << r.verified_by;
                if (!r.evidence.empty())
                    out << YAML::Key << "evidence" << YAML::Value << r.evidence;
                if (r.enforcement) out << YAML::Key << "enforcement" << YAML::Value << true;
                out << YAML::EndMap;
            }
            out << YAML::EndSeq << YAML::EndMap;
        }
        out << YAML::EndMap;
    };

    if (spec.format == WorkflowFormat::Plain) {
        out << YAML::BeginMap;
        out << YAML::Key << "name" << YAML::Value << spec.name;
        out << YAML::Key << "version" << YAML::Value << YAML::DoubleQuoted << spec.version;
        out << YAML::Key << "description" << YAML::Value << spec.description;
        out << YAML::Key << "inputs" << YAML::Value;
        emit_ports(spec.inputs);
        out << YAML::Key << "steps" << YAML::Value << YAML::BeginSeq;
        for (const auto& s : spec.steps) emit_step(s, false);
        out << YAML::EndSeq;
        out << YAML::Key << "outputs" << YAML::Value;
        emit_ports(spec.outputs);
        out << YAML::EndMap;
    } else {
        out << YAML::BeginMap;
        out << YAML::Key << "arazzo" << YAML::Value << "1.0.0";
        out << YAML::Key << "info" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "title" << YAML::Value << spec.name;
        out << YAML::Key << "version" << YAML::Value << YAML::DoubleQuoted << spec.version;
        out << YAML::Key << "description" << YAML::Value << spec.description;
        out << YAML::EndMap;
        if (spec.policy) {
            out << YAML::Key << "x-policy" << YAML::Value << YAML::BeginMap;
            out << YAML::Key << "engine" << YAML::Value << spec.policy->engine;
            out << YAML::Key << "policyRefs" << YAML::Value << YAML::BeginSeq;
            for (const auto& pr : spec.policy->policy_refs) {
                out << YAML::BeginMap;
                out << YAML::Key << "id" << YAML::Value << pr.id;
                if (!pr.source.empty()) out << YAML::Key << "source" << YAML::Value << pr.source;
                out << YAML::EndMap;
            }
            out << YAML::EndSeq << YAML::EndMap;
        }
        out << YAML::Key << "workflows" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << spec.name << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "description" << YAML::Value << spec.description;
        out << YAML::Key << "steps" << YAML::Value << YAML::BeginSeq;
        for (const auto& s : spec.steps) emit_step(s, true);
        out << YAML::EndSeq << YAML::EndMap << YAML::EndMap << YAML::EndMap;
    }
    return std::string(out.c_str()) + "\n";
}

}  // namespace fdpgov
