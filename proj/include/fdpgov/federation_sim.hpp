#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "fdpgov/decision.hpp"
#include "fdpgov/workflow.hpp"

namespace fdpgov {

enum class NodeKind { Orchestrator, Provider };

struct NodeSpec {
    std::string id;
    NodeKind kind = NodeKind::Provider;
    std::set<std::string> jurisdiction;
    std::set<std::string> hosted_objects;  // providers only
};

enum class SimEventKind {
    RequestIssued,
    GatePass,
    GateReject,
    PdpAllow,
    PdpDeny,
    ResultReturned,
};

inline const char* to_string(SimEventKind k) {
    switch (k) {
        case SimEventKind::RequestIssued: return "request_issued";
        case SimEventKind::GatePass: return "gate_pass";
        case SimEventKind::GateReject: return "gate_reject";
        case SimEventKind::PdpAllow: return "pdp_allow";
        case SimEventKind::PdpDeny: return "pdp_deny";
        case SimEventKind::ResultReturned: return "result_returned";
    }
    return "unknown";
}

/// One trace record. Gate events carry only failures from
/// {assignment, temporal, spatial}; PDP events only from
/// {purpose, minimisation}.
struct SimEvent {
    std::uint64_t seq = 0;
    Tick at = 0;
    SimEventKind kind = SimEventKind::RequestIssued;
    AccessRequest request;
    std::string node;                 // orchestrator id, "network-gate", or provider id
    std::vector<std::string> detail;  // failed conjunct names
};

using SimTrace = std::vector<SimEvent>;

/// The gate stage is owned by neither node kind.
inline constexpr const char* kGateStage = "network-gate";

namespace detail {

struct SimTopology {
    std::string orchestrator;
    std::map<std::string, std::string> host_of;  // object -> provider id
};

inline SimTopology validate_nodes(const FederationModel& model,
                                  const std::vector<NodeSpec>& nodes) {
    SimTopology topo;
    for (const auto& n : nodes) {
        if (n.kind == NodeKind::Orchestrator) {
            if (topo.orchestrator.empty()) topo.orchestrator = n.id;
            continue;
        }
        for (const auto& o : n.hosted_objects) {
            if (!model.objects.count(o)) {
                throw Error(ErrorKind::UnknownObject, "hosted object '" + o + "'");
            }
            auto [it, inserted] = topo.host_of.insert({o, n.id});
            if (!inserted) {
                throw Error(ErrorKind::DuplicateHosting,
                            "object '" + o + "' hosted by '" + it->second + "' and '" + n.id + "'");
            }
            // hosting node's jurisdiction labels must appear in rho_O(o)
            const auto& labels = model.object_labels(o);
            for (const auto& l : n.jurisdiction) {
                if (!labels.count(l)) {
                    throw Error(ErrorKind::InvalidNode, "object '" + o + "' hosted at '" + n.id +
                                                            "' lacks jurisdiction label '" + l +
                                                            "'");
                }
            }
        }
    }
    if (topo.orchestrator.empty()) topo.orchestrator = "orchestrator";
    return topo;
}

}  // namespace detail

/// Deterministic staged enforcement: the network-layer gate applies the
/// assignment, temporal and spatial conjuncts before a request reaches the
/// hosting provider; the provider's policy decision point applies purpose
/// and minimisation. The final disposition per request always equals
/// authorize() on the same inputs.
inline SimTrace run_simulation(const FederationModel& model, const std::vector<NodeSpec>& nodes,
                               std::vector<AccessRequest> requests) {
    auto topo = detail::validate_nodes(model, nodes);
    for (const auto& r : requests) {
        if (!topo.host_of.count(r.object)) {
            throw Error(ErrorKind::UnhostedObject, "object '" + r.object + "' has no provider");
        }
    }
    std::stable_sort(requests.begin(), requests.end(),
                     [](const AccessRequest& a, const AccessRequest& b) { return a.at < b.at; });

    SimTrace trace;
    std::uint64_t seq = 0;
    auto emit = [&](Tick at, SimEventKind kind, const AccessRequest& req, const std::string& node,
                    std::vector<std::string> detail = {}) {
        trace.push_back({seq++, at, kind, req, node, std::move(detail)});
    };

    for (const auto& req : requests) {
        Decision d = authorize(model, req);
        emit(req.at, SimEventKind::RequestIssued, req, topo.orchestrator);

        std::vector<std::string> gate_failed;
        for (const char* name : {"assignment", "temporal", "spatial"}) {
            if (!d.conjuncts.get(name)) gate_failed.push_back(name);
        }
        if (!gate_failed.empty()) {
            emit(req.at, SimEventKind::GateReject, req, kGateStage, std::move(gate_failed));
            continue;  // never reaches a provider node
        }
        emit(req.at, SimEventKind::GatePass, req, kGateStage);

        const std::string& provider = topo.host_of.at(req.object);
        std::vector<std::string> pdp_failed;
        for (const char* name : {"purpose", "minimisation"}) {
            if (!d.conjuncts.get(name)) pdp_failed.push_back(name);
        }
        if (!pdp_failed.empty()) {
            emit(req.at, SimEventKind::PdpDeny, req, provider, std::move(pdp_failed));
            continue;
        }
        emit(req.at, SimEventKind::PdpAllow, req, provider);
        emit(req.at, SimEventKind::ResultReturned, req, topo.orchestrator);
    }
    return trace;
}

/// Derives one request per bound (step, object), scheduled by dependency
/// level: level k issues at tick start + k, ordered by step id then object.
inline SimTrace simulate_workflow(const FederationModel& model, const std::vector<NodeSpec>& nodes,
                                  const WorkflowSpec& spec, const StepBinding& binding,
                                  Tick start) {
    std::vector<AccessRequest> requests;
    auto levels = dependency_levels(spec);
    for (std::size_t k = 0; k < levels.size(); ++k) {
        for (const auto& step_id : levels[k]) {  // already sorted by step id
            auto it = binding.find(step_id);
            if (it == binding.end()) continue;
            for (const auto& o : it->second.objects) {
                requests.push_back({it->second.role, o, it->second.purpose,
                                    start + static_cast<Tick>(k)});
            }
        }
    }
    return run_simulation(model, nodes, std::move(requests));
}

/// Final disposition per request: allow iff the trace reached pdp_allow.
inline bool trace_disposition(const SimTrace& trace, const AccessRequest& req) {
    for (const auto& e : trace) {
        if (e.kind == SimEventKind::PdpAllow && e.request == req) return true;
    }
    return false;
}

/// JSON Lines, fields in fixed order; byte-stable for golden diffs.
inline std::string trace_to_jsonl(const SimTrace& trace) {
    std::string out;
    for (const auto& e : trace) {
        nlohmann::ordered_json j;
        j["seq"] = e.seq;
        j["at"] = e.at;
        j["kind"] = to_string(e.kind);
        j["role"] = e.request.role;
        j["object"] = e.request.object;
        j["purpose"] = e.request.purpose;
        j["node"] = e.node;
        j["detail"] = e.detail;
        out += j.dump();
        out += '\n';
    }
    return out;
}

inline std::vector<NodeSpec> nodes_from_json(const json& doc) {
    std::vector<NodeSpec> nodes;
    for (const auto& n : doc) {
        NodeSpec node;
        node.id = n.at("id").get<std::string>();
        std::string kind = n.at("kind").get<std::string>();
        if (kind == "orchestrator") {
            node.kind = NodeKind::Orchestrator;
        } else if (kind == "provider") {
            node.kind = NodeKind::Provider;
        } else {
            throw Error(ErrorKind::ParseError, "node kind must be orchestrator or provider");
        }
        if (n.contains("jurisdiction")) {
            for (const auto& l : n["jurisdiction"]) node.jurisdiction.insert(l.get<std::string>());
        }
        if (n.contains("hosted_objects")) {
            for (const auto& o : n["hosted_objects"])
                node.hosted_objects.insert(o.get<std::string>());
        }
        nodes.push_back(std::move(node));
    }
    return nodes;
}

}  // namespace fdpgov
