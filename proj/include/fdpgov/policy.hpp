#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fdpgov/errors.hpp"

namespace fdpgov {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// RBAC: role -> {resources, actions}, default deny.
// ---------------------------------------------------------------------------

struct RbacTable {
    struct Entry {
        std::set<std::string> resources;
        std::set<std::string> actions;
    };
    std::map<std::string, Entry> entries;
};

inline RbacTable rbac_table_from_json(const json& doc) {
    RbacTable t;
    for (const auto& [role, e] : doc.items()) {
        RbacTable::Entry entry;
        for (const auto& r : e.at("resources")) entry.resources.insert(r.get<std::string>());
        for (const auto& a : e.at("actions")) entry.actions.insert(a.get<std::string>());
        if (entry.resources.empty() || entry.actions.empty()) {
            throw Error(ErrorKind::ParseError,
                        "rbac entry '" + role + "' needs non-empty resources and actions");
        }
        t.entries[role] = std::move(entry);
    }
    return t;
}

/// Literal membership semantics with default deny: unknown role is a legal
/// input and yields false, never an error.
inline bool rbac_allow(const RbacTable& table, const std::string& role,
                       const std::string& action, const std::string& resource) {
    auto it = table.entries.find(role);
    if (it == table.entries.end()) return false;
    return it->second.resources.count(resource) > 0 && it->second.actions.count(action) > 0;
}

// ---------------------------------------------------------------------------
// ABAC: rules are conjunctions over user/resource/context attributes.
// ---------------------------------------------------------------------------

struct AbacRule {
    std::string name;
    std::map<std::string, std::string> user_attrs;
    std::map<std::string, std::string> resource_attrs;
    std::map<std::string, std::string> context_attrs;  // value or predicate token
    std::set<std::string> actions;
};

struct AbacDecision {
    bool allow = false;
    std::optional<std::string> matched_rule;
};

namespace detail {

/// Context values may be the predicate token `in_window(start,end)`; anything
/// shaped like a call but not a known predicate is malformed.
inline bool context_value_matches(const std::string& rule_value, const std::string& supplied) {
    auto open = rule_value.find('(');
    if (open != std::string::npos && rule_value.back() == ')') {
        std::string name = rule_value.substr(0, open);
        if (name != "in_window") {
            throw Error(ErrorKind::MalformedPredicate, "unknown predicate '" + name + "'");
        }
        std::string args = rule_value.substr(open + 1, rule_value.size() - open - 2);
        auto comma = args.find(',');
        if (comma == std::string::npos) {
            throw Error(ErrorKind::MalformedPredicate, "in_window needs two arguments");
        }
        long long lo, hi, v;
        try {
            lo = std::stoll(args.substr(0, comma));
            hi = std::stoll(args.substr(comma + 1));
            v = std::stoll(supplied);
        } catch (const std::exception&) {
            throw Error(ErrorKind::MalformedPredicate, "in_window arguments must be integers");
        }
        return lo <= v && v <= hi;
    }
    return rule_value == supplied;
}

inline bool attrs_match(const std::map<std::string, std::string>& rule_attrs,
                        const std::map<std::string, std::string>& supplied, bool context) {
    for (const auto& [k, v] : rule_attrs) {
        auto it = supplied.find(k);
        if (it == supplied.end()) return false;
        if (context) {
            if (!context_value_matches(v, it->second)) return false;
        } else if (v != it->second) {
            return false;
        }
    }
    return true;
}

}  // namespace detail

/// First matching rule in declaration order wins; no match means deny.
/// Rules constrain only their own keys, so extra request attributes never
/// flip an allow to deny.
inline AbacDecision abac_evaluate(const std::vector<AbacRule>& rules,
                                  const std::map<std::string, std::string>& user,
                                  const std::map<std::string, std::string>& resource,
                                  const std::map<std::string, std::string>& context,
                                  const std::string& action) {
    for (const auto& rule : rules) {
        if (!rule.actions.count(action)) continue;
        if (!detail::attrs_match(rule.user_attrs, user, false)) continue;
        if (!detail::attrs_match(rule.resource_attrs, resource, false)) continue;
        if (!detail::attrs_match(rule.context_attrs, context, true)) continue;
        return {true, rule.name};
    }
    return {false, std::nullopt};
}

inline std::vector<AbacRule> abac_rules_from_json(const json& doc) {
    std::vector<AbacRule> rules;
    std::set<std::string> names;
    for (const auto& r : doc) {
        AbacRule rule;
        rule.name = r.at("name").get<std::string>();
        if (!names.insert(rule.name).second) {
            throw Error(ErrorKind::ParseError, "duplicate abac rule name '" + rule.name + "'");
        }
        auto read_map = [&](const char* key, std::map<std::string, std::string>& dst) {
            if (!r.contains(key)) return;
            for (const auto& [k, v] : r[key].items()) dst[k] = v.get<std::string>();
        };
        read_map("user", rule.user_attrs);
        read_map("resource", rule.resource_attrs);
        read_map("context", rule.context_attrs);
        for (const auto& a : r.at("actions")) rule.actions.insert(a.get<std::string>());
        rules.push_back(std::move(rule));
    }
    return rules;
}

// ---------------------------------------------------------------------------
// Onboarding location policy, exact and semantic paths.
// ---------------------------------------------------------------------------

struct OnboardingPolicy {
    std::vector<std::string> acceptable_locations;
};

inline OnboardingPolicy onboarding_policy_from_json(const json& doc) {
    OnboardingPolicy p;
    for (const auto& l : doc.at("acceptable_locations")) {
        p.acceptable_locations.push_back(l.get<std::string>());
    }
    if (p.acceptable_locations.empty()) {
        throw Error(ErrorKind::ParseError, "acceptable_locations must be non-empty");
    }
    return p;
}

/// Exact, case-sensitive membership test; default deny.
inline bool onboarding_allow(const OnboardingPolicy& policy, const std::string& location) {
    for (const auto& a : policy.acceptable_locations) {
        if (a == location) return true;
    }
    return false;
}

/// Deterministic location ontology: one-step equivalences to canonical
/// tokens plus an acyclic containment relation over canonical tokens.
struct LocationOntology {
    std::map<std::string, std::string> equivalences;               // token -> canonical
    std::set<std::pair<std::string, std::string>> containments;    // (child, parent)

    std::string canonical(const std::string& token) const {
        auto it = equivalences.find(token);
        return it == equivalences.end() ? token : it->second;
    }

    /// True iff `child` is a strict transitive containment-descendant of `parent`.
    bool is_subregion(const std::string& child, const std::string& parent) const {
        if (child == parent) return false;
        std::vector<std::string> frontier{child};
        std::set<std::string> seen{child};
        while (!frontier.empty()) {
            std::string cur = frontier.back();
            frontier.pop_back();
            for (const auto& [c, p] : containments) {
                if (c != cur) continue;
                if (p == parent) return true;
                if (seen.insert(p).second) frontier.push_back(p);
            }
        }
        return false;
    }
};

/// Minimal seed exercising both path kinds; extensible via file.
inline LocationOntology seed_ontology() {
    LocationOntology ont;
    ont.equivalences = {{"European Union", "EU"},
                        {"Netherlands", "NL"},
                        {"Germany", "DE"},
                        {"Belgium", "BE"}};
    // "Europe" deliberately has no edge into EU: it strictly contains the EU
    // and accepting it would over-grant.
    ont.containments = {{"NL", "EU"}, {"BE", "EU"}, {"DE", "EU"}};
    return ont;
}

inline LocationOntology ontology_from_json(const json& doc) {
    LocationOntology ont;
    if (doc.contains("equivalences")) {
        for (const auto& [k, v] : doc["equivalences"].items()) {
            ont.equivalences[k] = v.get<std::string>();
        }
    }
    if (doc.contains("containments")) {
        for (const auto& e : doc["containments"]) {
            ont.containments.insert({e[0].get<std::string>(), e[1].get<std::string>()});
        }
    }
    // equivalences must be idempotent after one application
    for (const auto& [k, v] : ont.equivalences) {
        if (k != v && ont.equivalences.count(v) && ont.equivalences.at(v) != v) {
            throw Error(ErrorKind::ParseError, "equivalence chain at '" + k + "'");
        }
    }
    // containment relation must be acyclic
    for (const auto& [c, p] : ont.containments) {
        if (c == p || ont.is_subregion(p, c)) {
            throw Error(ErrorKind::ParseError, "containment cycle through '" + c + "'");
        }
    }
    return ont;
}

struct SemanticDecision {
    bool allow = false;
    std::optional<std::string> via;  // "<matched token> (equivalence|containment)"
};

/// Allow iff canonical(location) equals, or is a transitive sub-region of,
/// the canonical form of some acceptable location. Only widens relative to
/// the exact path: acceptable tokens always match themselves.
inline SemanticDecision onboarding_allow_semantic(const OnboardingPolicy& policy,
                                                  const std::string& location,
                                                  const LocationOntology& ontology) {
    std::string loc = ontology.canonical(location);
    for (const auto& a : policy.acceptable_locations) {
        if (location == a) return {true, a + " (equivalence)"};
        std::string acc = ontology.canonical(a);
        if (loc == acc) return {true, a + " (equivalence)"};
        if (ontology.is_subregion(loc, acc)) return {true, a + " (containment)"};
    }
    return {false, std::nullopt};
}

}  // namespace fdpgov
