#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fdpgov/temporal_graph.hpp"

namespace fdpgov {

struct AccessRequest {
    std::string role;
    std::string object;
    std::string purpose;
    Tick at = 0;

    bool operator==(const AccessRequest&) const = default;
};

struct SetAccessRequest {
    std::string role;
    std::set<std::string> objects;
    std::string purpose;
    Tick at = 0;
};

/// Conjunct names and order follow the predicate's labels.
inline const std::vector<std::string>& conjunct_names() {
    static const std::vector<std::string> names = {"assignment", "temporal", "spatial",
                                                   "purpose", "minimisation"};
    return names;
}

struct Conjuncts {
    bool assignment = false;
    bool temporal = false;
    bool spatial = false;
    bool purpose = false;
    bool minimisation = false;

    bool all() const { return assignment && temporal && spatial && purpose && minimisation; }
    bool get(const std::string& name) const {
        if (name == "assignment") return assignment;
        if (name == "temporal") return temporal;
        if (name == "spatial") return spatial;
        if (name == "purpose") return purpose;
        return minimisation;
    }
    bool operator==(const Conjuncts&) const = default;
};

struct Decision {
    bool allow = false;
    Conjuncts conjuncts;
    std::vector<std::string> failed;       // failed conjunct names, predicate order
    std::vector<std::string> explanation;  // one entry per failed conjunct

    bool operator==(const Decision&) const = default;
};

struct ViolationRecord {
    AccessRequest request;
    std::vector<std::string> failed_substantive;  // subset of {spatial, purpose, minimisation}
};

struct RequestError {
    std::size_t index = 0;
    std::string message;
};

struct ViolationAudit {
    std::vector<ViolationRecord> violations;
    std::vector<RequestError> errors;
};

inline void check_tokens(const FederationModel& m, const std::string& role,
                         const std::string& object, const std::string& purpose) {
    if (!m.roles.count(role)) throw Error(ErrorKind::UnknownToken, "role '" + role + "'");
    if (!m.objects.count(object)) throw Error(ErrorKind::UnknownToken, "object '" + object + "'");
    if (!m.purposes.count(purpose))
        throw Error(ErrorKind::UnknownToken, "purpose '" + purpose + "'");
}

/// Purpose limitation: p within the purposes permitted for the (r, o) pair.
/// Missing pi entry means the empty set, hence false.
inline bool purpose_limited(const FederationModel& m, const std::string& role,
                            const std::string& object, const std::string& purpose) {
    check_tokens(m, role, object, purpose);
    return m.permitted_purposes({role, object}).count(purpose) > 0;
}

/// Data minimisation: every requested object belongs to the minimal required
/// set for the purpose. Any outside object fails the whole set; the empty
/// set passes vacuously.
inline bool min_data(const FederationModel& m, const std::set<std::string>& objects,
                     const std::string& purpose) {
    if (!m.purposes.count(purpose))
        throw Error(ErrorKind::UnknownToken, "purpose '" + purpose + "'");
    const auto& minimal = m.minimal_objects(purpose);
    for (const auto& o : objects) {
        if (!m.objects.count(o)) throw Error(ErrorKind::UnknownToken, "object '" + o + "'");
        if (!minimal.count(o)) return false;
    }
    return true;
}

namespace detail {

inline Decision finish_decision(const AccessRequest& req, Conjuncts c) {
    Decision d;
    d.conjuncts = c;
    d.allow = c.all();
    for (const auto& name : conjunct_names()) {
        if (c.get(name)) continue;
        d.failed.push_back(name);
        if (name == "assignment") {
            d.explanation.push_back("assignment: (" + req.role + ", " + req.object +
                                    ") is not in PA");
        } else if (name == "temporal") {
            d.explanation.push_back(c.assignment
                                        ? "temporal: tick " + std::to_string(req.at) +
                                              " is outside the validity interval"
                                        : "temporal: no assignment");
        } else if (name == "spatial") {
            d.explanation.push_back("spatial: no admissible cross-jurisdiction pair for (" +
                                    req.role + ", " + req.object + ")");
        } else if (name == "purpose") {
            d.explanation.push_back("purpose: '" + req.purpose +
                                    "' is not permitted for (" + req.role + ", " + req.object + ")");
        } else {
            d.explanation.push_back("minimisation: '" + req.object +
                                    "' is not in the minimal set for '" + req.purpose + "'");
        }
    }
    return d;
}

}  // namespace detail

/// Five-conjunct authorization. All conjuncts are evaluated and reported even
/// after one fails, so explanations are complete. A pair outside PA is a
/// rejection (assignment and temporal both reported false), not an error.
inline Decision authorize(const FederationModel& m, const AccessRequest& req) {
    check_tokens(m, req.role, req.object, req.purpose);
    Conjuncts c;
    Assignment a{req.role, req.object};
    c.assignment = m.pa.count(a) > 0;
    c.temporal = c.assignment && m.tau.at(a).contains(req.at);
    c.spatial = region_allowed(m, req.role, req.object);
    c.purpose = m.permitted_purposes(a).count(req.purpose) > 0;
    c.minimisation = m.minimal_objects(req.purpose).count(req.object) > 0;
    return detail::finish_decision(req, c);
}

/// Same verdict computed by literal set enumeration: linear scans over PA,
/// rho, gamma, pi and delta, no set lookups shared with the primary path.
/// This is the testing oracle; keep it independent of authorize().
inline Decision brute_force_authorize(const FederationModel& m, const AccessRequest& req) {
    check_tokens(m, req.role, req.object, req.purpose);
    Conjuncts c;

    for (const auto& a : m.pa) {
        if (a.first == req.role && a.second == req.object) c.assignment = true;
    }
    if (c.assignment) {
        for (const auto& [a, iv] : m.tau) {
            if (a.first == req.role && a.second == req.object) {
                c.temporal = iv.start <= req.at && req.at <= iv.end;
            }
        }
    }
    for (const auto& [r, rls] : m.rho_r) {
        if (r != req.role) continue;
        for (const auto& lr : rls) {
            for (const auto& [o, ols] : m.rho_o) {
                if (o != req.object) continue;
                for (const auto& lo : ols) {
                    for (const auto& g : m.gamma) {
                        if (g.first == lr && g.second == lo) c.spatial = true;
                    }
                }
            }
        }
    }
    for (const auto& [a, ps] : m.pi) {
        if (a.first != req.role || a.second != req.object) continue;
        for (const auto& p : ps) {
            if (p == req.purpose) c.purpose = true;
        }
    }
    for (const auto& [p, objs] : m.delta) {
        if (p != req.purpose) continue;
        for (const auto& o : objs) {
            if (o == req.object) c.minimisation = true;
        }
    }
    return detail::finish_decision(req, c);
}

/// Multi-object request: min_data over the whole set plus the other four
/// conjuncts per object. The explanation names the first failing object per
/// conjunct.
inline Decision authorize_set(const FederationModel& m, const SetAccessRequest& req) {
    if (req.objects.empty()) {
        throw Error(ErrorKind::EmptyRequest, "object set must be non-empty");
    }
    Decision d;
    Conjuncts c{true, true, true, true, true};
    std::map<std::string, std::string> first_fail;  // conjunct -> object

    c.minimisation = min_data(m, req.objects, req.purpose);
    if (!c.minimisation) {
        for (const auto& o : req.objects) {
            if (!m.minimal_objects(req.purpose).count(o)) {
                first_fail["minimisation"] = o;
                break;
            }
        }
    }
    for (const auto& o : req.objects) {
        Decision single = authorize(m, {req.role, o, req.purpose, req.at});
        for (const auto& name : conjunct_names()) {
            if (name == "minimisation") continue;  // set-level check above
            if (!single.conjuncts.get(name) && c.get(name)) {
                if (name == "assignment") c.assignment = false;
                else if (name == "temporal") c.temporal = false;
                else if (name == "spatial") c.spatial = false;
                else c.purpose = false;
                first_fail[name] = o;
            }
        }
    }

    d.conjuncts = c;
    d.allow = c.all();
    for (const auto& name : conjunct_names()) {
        if (c.get(name)) continue;
        d.failed.push_back(name);
        auto it = first_fail.find(name);
        d.explanation.push_back(name + ": fails for object '" +
                                (it == first_fail.end() ? std::string("?") : it->second) + "'");
    }
    return d;
}

/// Compliance violations: requests where the temporal gate passes
/// (assignment and temporal both hold) but a substantive constraint fails.
/// Unresolvable tokens become per-request error entries, not a global failure.
inline ViolationAudit audit_violations(const FederationModel& m,
                                       const std::vector<AccessRequest>& requests) {
    ViolationAudit out;
    for (std::size_t i = 0; i < requests.size(); ++i) {
        Decision d;
        try {
            d = authorize(m, requests[i]);
        } catch (const Error& e) {
            out.errors.push_back({i, e.what()});
            continue;
        }
        if (!d.conjuncts.assignment || !d.conjuncts.temporal || d.allow) continue;
        ViolationRecord rec;
        rec.request = requests[i];
        for (const char* name : {"spatial", "purpose", "minimisation"}) {
            if (!d.conjuncts.get(name)) rec.failed_substantive.push_back(name);
        }
        out.violations.push_back(std::move(rec));
    }
    return out;
}

inline json decision_to_json(const Decision& d) {
    json doc;
    doc["allow"] = d.allow;
    doc["conjuncts"] = {{"assignment", d.conjuncts.assignment},
                        {"temporal", d.conjuncts.temporal},
                        {"spatial", d.conjuncts.spatial},
                        {"purpose", d.conjuncts.purpose},
                        {"minimisation", d.conjuncts.minimisation}};
    doc["failed"] = d.failed;
    doc["explanation"] = d.explanation;
    return doc;
}

inline json violation_audit_to_json(const ViolationAudit& audit) {
    json doc;
    doc["violations"] = json::array();
    for (const auto& v : audit.violations) {
        doc["violations"].push_back({{"role", v.request.role},
                                     {"object", v.request.object},
                                     {"purpose", v.request.purpose},
                                     {"at", v.request.at},
                                     {"failed_substantive", v.failed_substantive}});
    }
    doc["errors"] = json::array();
    for (const auto& e : audit.errors) {
        doc["errors"].push_back({{"index", e.index}, {"message", e.message}});
    }
    return doc;
}

inline AccessRequest request_from_json(const json& j) {
    return {j.at("role").get<std::string>(), j.at("object").get<std::string>(),
            j.at("purpose").get<std::string>(), j.at("at").get<Tick>()};
}

}  // namespace fdpgov
