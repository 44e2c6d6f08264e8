#pragma once

#include <algorithm>
#include <vector>

#include "fdpgov/model.hpp"

namespace fdpgov {

enum class EdgeSetKind { TemporalOnly, SpatioTemporal };

/// Edge set of the time-indexed graph at one tick, in canonical order
/// (sorted by role id then object id).
struct EdgeSet {
    std::vector<Assignment> edges;
    Tick at = 0;
    EdgeSetKind kind = EdgeSetKind::TemporalOnly;

    bool contains(const Assignment& a) const {
        return std::binary_search(edges.begin(), edges.end(), a);
    }
};

/// Edge activation: 1 inside the closed interval [start, end], 0 outside.
/// Only defined on PA.
inline bool edge_active(const FederationModel& m, const std::string& role,
                        const std::string& object, Tick t) {
    auto it = m.tau.find({role, object});
    if (it == m.tau.end()) {
        throw Error(ErrorKind::NotAssigned,
                    "(" + role + ", " + object + ") is not in the assignment");
    }
    return it->second.contains(t);
}

/// Region compatibility: some role label may access some object label under
/// gamma. Defined on R x O independently of PA; asymmetric, no transitivity.
inline bool region_allowed(const FederationModel& m, const std::string& role,
                           const std::string& object) {
    if (!m.roles.count(role)) throw Error(ErrorKind::UnknownRole, "role '" + role + "'");
    if (!m.objects.count(object)) throw Error(ErrorKind::UnknownObject, "object '" + object + "'");
    for (const auto& lr : m.role_labels(role)) {
        for (const auto& lo : m.object_labels(object)) {
            if (m.gamma.count({lr, lo})) return true;
        }
    }
    return false;
}

/// Temporally active edges at t.
inline EdgeSet active_edges(const FederationModel& m, Tick t) {
    EdgeSet out;
    out.at = t;
    out.kind = EdgeSetKind::TemporalOnly;
    for (const auto& a : m.pa) {
        if (m.tau.at(a).contains(t)) out.edges.push_back(a);
    }
    return out;
}

/// Edges passing both the temporal and the region check at t (uncached path).
inline EdgeSet active_st_edges(const FederationModel& m, Tick t) {
    EdgeSet out;
    out.at = t;
    out.kind = EdgeSetKind::SpatioTemporal;
    for (const auto& a : m.pa) {
        if (m.tau.at(a).contains(t) && region_allowed(m, a.first, a.second)) {
            out.edges.push_back(a);
        }
    }
    return out;
}

/// Query view over one model with the region-compatibility bitmap over PA
/// precomputed. Region results are time-independent, so the bitmap is built
/// once at construction; afterwards the view is immutable and safe for
/// concurrent queries.
class SpatioTemporalGraph {
public:
    explicit SpatioTemporalGraph(const FederationModel& model) : model_(&model) {
        edges_.assign(model.pa.begin(), model.pa.end());
        region_ok_.reserve(edges_.size());
        for (const auto& a : edges_) {
            region_ok_.push_back(region_allowed(model, a.first, a.second));
        }
    }

    const FederationModel& model() const { return *model_; }

    EdgeSet active(Tick t) const {
        EdgeSet out;
        out.at = t;
        out.kind = EdgeSetKind::TemporalOnly;
        for (const auto& a : edges_) {
            if (model_->tau.at(a).contains(t)) out.edges.push_back(a);
        }
        return out;
    }

    EdgeSet active_st(Tick t) const {
        EdgeSet out;
        out.at = t;
        out.kind = EdgeSetKind::SpatioTemporal;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (region_ok_[i] && model_->tau.at(edges_[i]).contains(t)) {
                out.edges.push_back(edges_[i]);
            }
        }
        return out;
    }

private:
    const FederationModel* model_;
    std::vector<Assignment> edges_;   // canonical PA order
    std::vector<bool> region_ok_;     // parallel to edges_
};

inline json edge_set_to_json(const EdgeSet& es) {
    json doc;
    doc["at"] = es.at;
    doc["kind"] = es.kind == EdgeSetKind::SpatioTemporal ? "spatio-temporal" : "temporal-only";
    doc["edges"] = json::array();
    for (const auto& a : es.edges) doc["edges"].push_back({a.first, a.second});
    return doc;
}

}  // namespace fdpgov
