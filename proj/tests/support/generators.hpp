#pragma once

// Random federation model generation shared by the property tests and the
// acceptance sweep. Deterministic given the engine state.

#include <random>
#include <string>
#include <vector>

#include "fdpgov/decision.hpp"

namespace testsupport {

using fdpgov::FederationModel;
using fdpgov::Tick;

inline std::vector<std::string> tokens(const char* prefix, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(prefix) + std::to_string(i));
    return out;
}

/// Model within the sweep bounds: <=5 roles, <=6 objects, <=4 labels,
/// <=4 purposes, intervals within [0, 20].
inline FederationModel random_model(std::mt19937& rng) {
    auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    auto chance = [&](double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
    };

    FederationModel m;
    auto roles = tokens("r", pick(1, 5));
    auto objects = tokens("o", pick(1, 6));
    auto labels = tokens("l", pick(1, 4));
    auto purposes = tokens("p", pick(1, 4));
    m.roles.insert(roles.begin(), roles.end());
    m.objects.insert(objects.begin(), objects.end());
    m.labels.insert(labels.begin(), labels.end());
    m.purposes.insert(purposes.begin(), purposes.end());

    for (const auto& r : roles) {
        for (const auto& o : objects) {
            if (!chance(0.5)) continue;
            m.pa.insert({r, o});
            Tick a = static_cast<Tick>(pick(0, 20));
            Tick b = static_cast<Tick>(pick(0, 20));
            m.tau[{r, o}] = {std::min(a, b), std::max(a, b)};
        }
    }
    for (const auto& r : roles) {
        std::set<std::string> ls;
        for (const auto& l : labels) {
            if (chance(0.5)) ls.insert(l);
        }
        m.rho_r[r] = ls;  // may be empty: deny by empty existential
    }
    for (const auto& o : objects) {
        std::set<std::string> ls;
        for (const auto& l : labels) {
            if (chance(0.5)) ls.insert(l);
        }
        m.rho_o[o] = ls;
    }
    for (const auto& a : labels) {
        for (const auto& b : labels) {
            if (chance(0.4)) m.gamma.insert({a, b});  // asymmetric by construction
        }
    }
    for (const auto& pa : m.pa) {
        if (!chance(0.8)) continue;  // some PA pairs get no pi entry at all
        std::set<std::string> ps;
        for (const auto& p : purposes) {
            if (chance(0.5)) ps.insert(p);
        }
        m.pi[pa] = ps;
    }
    for (const auto& p : purposes) {
        if (!chance(0.8)) continue;
        std::set<std::string> objs;
        for (const auto& o : objects) {
            if (chance(0.5)) objs.insert(o);
        }
        m.delta[p] = objs;
    }
    return m;
}

inline fdpgov::AccessRequest random_request(std::mt19937& rng, const FederationModel& m,
                                            Tick max_tick = 20) {
    auto pick_from = [&](const std::set<std::string>& s) {
        auto it = s.begin();
        std::advance(it, std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng));
        return *it;
    };
    return {pick_from(m.roles), pick_from(m.objects), pick_from(m.purposes),
            std::uniform_int_distribution<Tick>(0, max_tick)(rng)};
}

}  // namespace testsupport
