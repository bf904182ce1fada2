#pragma once

#include <cmath>
#include <string>

#include "mvbern/error.hpp"
#include "mvbern/event.hpp"
#include "mvbern/schema.hpp"

namespace mvbern {

// How the Dirichlet concentration nu is spread over outcomes.
//   TrueSpace: over the admissible outcomes (one-hot constraints honored).
//   Naive2k:   over all 2^k bit patterns, reproducing the closed forms
//              nu/2, nu/4, nu/2^(k-1) regardless of one-hot structure.
enum class PriorSpace { TrueSpace, Naive2k };

inline const char* to_string(PriorSpace s) {
    return s == PriorSpace::TrueSpace ? "true" : "naive2k";
}

inline PriorSpace prior_space_from_string(const std::string& s) {
    if (s == "true") return PriorSpace::TrueSpace;
    if (s == "naive2k") return PriorSpace::Naive2k;
    throw ConfigError("unknown prior space '" + s + "' (expected 'true' or 'naive2k')");
}

struct PriorConfig {
    double nu = 0.5;
    PriorSpace space = PriorSpace::TrueSpace;

    void check() const {
        if (!(nu > 0.0) || !std::isfinite(nu))
            throw ConfigError("prior concentration nu must be positive and finite");
    }

    double outcome_space(const Schema& schema) const noexcept {
        return space == PriorSpace::TrueSpace ? schema.admissible_count()
                                              : std::ldexp(1.0, schema.k());
    }

    // Per-outcome mass delta = nu / S.
    double per_outcome_mass(const Schema& schema) const noexcept {
        return nu / outcome_space(schema);
    }

    // delta * |outcomes matching the event|. In the naive space every bit
    // pattern counts, so one-hot contradictions do not zero this term.
    double prior_mass(const Schema& schema, const Event& e) const noexcept {
        if (e.inconsistent()) return 0.0;
        const double matches = space == PriorSpace::TrueSpace
            ? schema.admissible_match_count(e)
            : std::ldexp(1.0, schema.k() - e.constrained_count());
        return per_outcome_mass(schema) * matches;
    }
};

} // namespace mvbern
