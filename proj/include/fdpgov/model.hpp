#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fdpgov/errors.hpp"

namespace fdpgov {

using json = nlohmann::json;

/// Abstract time: non-negative integer ticks, totally ordered.
using Tick = std::uint64_t;

/// Closed validity interval [start, end], start <= end.
struct ValidityInterval {
    Tick start = 0;
    Tick end = 0;

    bool contains(Tick t) const { return start <= t && t <= end; }
    auto operator<=>(const ValidityInterval&) const = default;
};

/// (role, object) assignment pair. Ordered by role then object so sorted
/// containers yield the canonical edge order used in all outputs.
using Assignment = std::pair<std::string, std::string>;

enum class IssueCode {
    DanglingReference,
    InvalidInterval,
    TauDomainMismatch,
    PiDomainViolation,
    Malformed,
};

inline const char* to_string(IssueCode c) {
    switch (c) {
        case IssueCode::DanglingReference: return "DanglingReference";
        case IssueCode::InvalidInterval: return "InvalidInterval";
        case IssueCode::TauDomainMismatch: return "TauDomainMismatch";
        case IssueCode::PiDomainViolation: return "PiDomainViolation";
        case IssueCode::Malformed: return "Malformed";
    }
    return "Unknown";
}

struct ValidationIssue {
    IssueCode code;
    std::string message;
};

class ModelValidationError : public std::runtime_error {
public:
    explicit ModelValidationError(std::vector<ValidationIssue> issues)
        : std::runtime_error(render(issues)), issues_(std::move(issues)) {}

    const std::vector<ValidationIssue>& issues() const { return issues_; }

    bool has(IssueCode code) const {
        for (const auto& i : issues_)
            if (i.code == code) return true;
        return false;
    }

private:
    static std::string render(const std::vector<ValidationIssue>& issues) {
        std::ostringstream os;
        os << "model validation failed (" << issues.size() << " issue(s))";
        for (const auto& i : issues) os << "\n  " << to_string(i.code) << ": " << i.message;
        return os.str();
    }
    std::vector<ValidationIssue> issues_;
};

/// The federation instance tuple (R, O, L, P, PA, tau, rho_R, rho_O, Gamma, Pi, Delta).
/// Immutable after validation; safe to share across concurrent readers.
struct FederationModel {
    std::set<std::string> roles;
    std::set<std::string> objects;
    std::set<std::string> labels;
    std::set<std::string> purposes;
    std::set<Assignment> pa;
    std::map<Assignment, ValidityInterval> tau;                 // domain exactly pa
    std::map<std::string, std::set<std::string>> rho_r;         // role -> labels
    std::map<std::string, std::set<std::string>> rho_o;         // object -> labels
    std::set<std::pair<std::string, std::string>> gamma;        // (l_role, l_object), asymmetric
    std::map<Assignment, std::set<std::string>> pi;             // domain subset of pa; missing = empty
    std::map<std::string, std::set<std::string>> delta;         // purpose -> objects; missing = empty

    bool operator==(const FederationModel&) const = default;

    const std::set<std::string>& role_labels(const std::string& r) const {
        static const std::set<std::string> empty;
        auto it = rho_r.find(r);
        return it == rho_r.end() ? empty : it->second;
    }
    const std::set<std::string>& object_labels(const std::string& o) const {
        static const std::set<std::string> empty;
        auto it = rho_o.find(o);
        return it == rho_o.end() ? empty : it->second;
    }
    const std::set<std::string>& permitted_purposes(const Assignment& a) const {
        static const std::set<std::string> empty;
        auto it = pi.find(a);
        return it == pi.end() ? empty : it->second;
    }
    const std::set<std::string>& minimal_objects(const std::string& p) const {
        static const std::set<std::string> empty;
        auto it = delta.find(p);
        return it == delta.end() ? empty : it->second;
    }
};

namespace detail {

inline std::vector<std::string> read_token_array(const json& doc, const std::string& key,
                                                 std::vector<ValidationIssue>& issues) {
    std::vector<std::string> out;
    if (!doc.contains(key)) return out;
    if (!doc[key].is_array()) {
        issues.push_back({IssueCode::Malformed, key + " must be an array of strings"});
        return out;
    }
    for (const auto& v : doc[key]) {
        if (!v.is_string() || v.get<std::string>().empty()) {
            issues.push_back({IssueCode::Malformed, key + " entries must be non-empty strings"});
            continue;
        }
        out.push_back(v.get<std::string>());
    }
    return out;
}

}  // namespace detail

/// Checks the tuple's side conditions. Appends issues; on success fills `out`.
/// Missing pi entry for a PA pair and missing delta entry for a purpose are
/// legal (empty-set default). Every PA pair must carry a tau interval.
inline std::vector<ValidationIssue> validate_model_document(const json& doc, FederationModel& out) {
    std::vector<ValidationIssue> issues;
    FederationModel m;

    if (!doc.is_object()) {
        issues.push_back({IssueCode::Malformed, "model document must be a JSON object"});
        return issues;
    }

    for (const auto& r : detail::read_token_array(doc, "roles", issues)) {
        if (!m.roles.insert(r).second)
            issues.push_back({IssueCode::Malformed, "duplicate role '" + r + "'"});
    }
    for (const auto& o : detail::read_token_array(doc, "objects", issues)) {
        if (!m.objects.insert(o).second)
            issues.push_back({IssueCode::Malformed, "duplicate object '" + o + "'"});
    }
    for (const auto& l : detail::read_token_array(doc, "labels", issues)) {
        if (!m.labels.insert(l).second)
            issues.push_back({IssueCode::Malformed, "duplicate label '" + l + "'"});
    }
    for (const auto& p : detail::read_token_array(doc, "purposes", issues)) {
        if (!m.purposes.insert(p).second)
            issues.push_back({IssueCode::Malformed, "duplicate purpose '" + p + "'"});
    }

    auto require_role = [&](const std::string& r, const std::string& where) {
        if (!m.roles.count(r))
            issues.push_back({IssueCode::DanglingReference, where + ": role '" + r + "' not declared"});
    };
    auto require_object = [&](const std::string& o, const std::string& where) {
        if (!m.objects.count(o))
            issues.push_back({IssueCode::DanglingReference, where + ": object '" + o + "' not declared"});
    };
    auto require_label = [&](const std::string& l, const std::string& where) {
        if (!m.labels.count(l))
            issues.push_back({IssueCode::DanglingReference, where + ": label '" + l + "' not declared"});
    };
    auto require_purpose = [&](const std::string& p, const std::string& where) {
        if (!m.purposes.count(p))
            issues.push_back({IssueCode::DanglingReference, where + ": purpose '" + p + "' not declared"});
    };

    if (doc.contains("pa")) {
        for (const auto& e : doc["pa"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
                issues.push_back({IssueCode::Malformed, "pa entries must be [role, object] pairs"});
                continue;
            }
            Assignment a{e[0].get<std::string>(), e[1].get<std::string>()};
            require_role(a.first, "pa");
            require_object(a.second, "pa");
            m.pa.insert(a);
        }
    }

    if (doc.contains("tau")) {
        for (const auto& e : doc["tau"]) {
            if (!e.is_object() || !e.contains("role") || !e.contains("object") ||
                !e.contains("start") || !e.contains("end")) {
                issues.push_back({IssueCode::Malformed, "tau entries need role/object/start/end"});
                continue;
            }
            Assignment a{e["role"].get<std::string>(), e["object"].get<std::string>()};
            if (!e["start"].is_number_unsigned() || !e["end"].is_number_unsigned()) {
                issues.push_back({IssueCode::Malformed, "tau ticks must be non-negative integers"});
                continue;
            }
            ValidityInterval iv{e["start"].get<Tick>(), e["end"].get<Tick>()};
            if (!m.pa.count(a)) {
                issues.push_back({IssueCode::TauDomainMismatch,
                                  "tau entry (" + a.first + ", " + a.second + ") not in PA"});
            }
            if (iv.start > iv.end) {
                issues.push_back({IssueCode::InvalidInterval,
                                  "tau(" + a.first + ", " + a.second + "): start > end"});
            }
            m.tau[a] = iv;
        }
    }
    for (const auto& a : m.pa) {
        if (!m.tau.count(a)) {
            issues.push_back({IssueCode::TauDomainMismatch,
                              "PA pair (" + a.first + ", " + a.second + ") has no tau entry"});
        }
    }

    auto read_label_map = [&](const char* key, auto require_key,
                              std::map<std::string, std::set<std::string>>& dst) {
        if (!doc.contains(key)) return;
        if (!doc[key].is_object()) {
            issues.push_back({IssueCode::Malformed, std::string(key) + " must be an object"});
            return;
        }
        for (const auto& [tok, arr] : doc[key].items()) {
            require_key(tok, key);
            std::set<std::string> labels;
            if (!arr.is_array()) {
                issues.push_back({IssueCode::Malformed, std::string(key) + " values must be arrays"});
                continue;
            }
            for (const auto& l : arr) {
                std::string label = l.template get<std::string>();
                require_label(label, key);
                labels.insert(std::move(label));
            }
            dst[tok] = std::move(labels);
        }
    };
    read_label_map("rho_r", require_role, m.rho_r);
    read_label_map("rho_o", require_object, m.rho_o);

    if (doc.contains("gamma")) {
        for (const auto& e : doc["gamma"]) {
            if (!e.is_array() || e.size() != 2) {
                issues.push_back({IssueCode::Malformed, "gamma entries must be [label, label] pairs"});
                continue;
            }
            std::pair<std::string, std::string> g{e[0].get<std::string>(), e[1].get<std::string>()};
            require_label(g.first, "gamma");
            require_label(g.second, "gamma");
            m.gamma.insert(g);  // no symmetric or reflexive closure
        }
    }

    if (doc.contains("pi")) {
        for (const auto& e : doc["pi"]) {
            if (!e.is_object() || !e.contains("role") || !e.contains("object") ||
                !e.contains("purposes")) {
                issues.push_back({IssueCode::Malformed, "pi entries need role/object/purposes"});
                continue;
            }
            Assignment a{e["role"].get<std::string>(), e["object"].get<std::string>()};
            if (!m.pa.count(a)) {
                issues.push_back({IssueCode::PiDomainViolation,
                                  "pi entry (" + a.first + ", " + a.second + ") not in PA"});
            }
            std::set<std::string> ps;
            for (const auto& p : e["purposes"]) {
                require_purpose(p.get<std::string>(), "pi");
                ps.insert(p.get<std::string>());
            }
            m.pi[a] = std::move(ps);
        }
    }

    if (doc.contains("delta")) {
        if (!doc["delta"].is_object()) {
            issues.push_back({IssueCode::Malformed, "delta must be an object"});
        } else {
            for (const auto& [p, arr] : doc["delta"].items()) {
                require_purpose(p, "delta");
                std::set<std::string> objs;
                for (const auto& o : arr) {
                    require_object(o.get<std::string>(), "delta");
                    objs.insert(o.get<std::string>());
                }
                m.delta[p] = std::move(objs);
            }
        }
    }

    if (issues.empty()) out = std::move(m);
    return issues;
}

inline FederationModel validate_model(const json& doc) {
    FederationModel m;
    auto issues = validate_model_document(doc, m);
    if (!issues.empty()) throw ModelValidationError(std::move(issues));
    return m;
}

/// Canonical serialized form: sorted keys, sorted arrays, 2-space indent.
inline json model_to_json(const FederationModel& m) {
    json doc;
    doc["roles"] = m.roles;
    doc["objects"] = m.objects;
    doc["labels"] = m.labels;
    doc["purposes"] = m.purposes;
    doc["pa"] = json::array();
    for (const auto& a : m.pa) doc["pa"].push_back({a.first, a.second});
    doc["tau"] = json::array();
    for (const auto& [a, iv] : m.tau) {
        doc["tau"].push_back(
            {{"role", a.first}, {"object", a.second}, {"start", iv.start}, {"end", iv.end}});
    }
    doc["rho_r"] = m.rho_r;
    doc["rho_o"] = m.rho_o;
    doc["gamma"] = json::array();
    for (const auto& g : m.gamma) doc["gamma"].push_back({g.first, g.second});
    doc["pi"] = json::array();
    for (const auto& [a, ps] : m.pi) {
        doc["pi"].push_back({{"role", a.first}, {"object", a.second}, {"purposes", ps}});
    }
    doc["delta"] = m.delta;
    return doc;
}

inline std::string save_model(const FederationModel& m) { return model_to_json(m).dump(2) + "\n"; }

inline void save_model(const FederationModel& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
    out << save_model(m);
}

inline FederationModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
    return validate_model(doc);
}

}  // namespace fdpgov
