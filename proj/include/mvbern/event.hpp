#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvbern/footprint.hpp"

namespace mvbern {

class Schema;

// A conjunction of (variable index, required bit) constraints, stored as a
// mask/value pair so matching a footprint is two integer ops.
class Event {
public:
    Event() = default;

    // At most one requirement per index; a second requirement on the same
    // index must agree or the event is marked inconsistent.
    static Event of(const std::vector<std::pair<int, bool>>& constraints);

    // Conjunction; conflicting pinned bits yield an inconsistent (empty) event.
    Event operator&(const Event& other) const;

    void require(int index, bool value);

    std::uint64_t mask() const noexcept { return mask_; }
    std::uint64_t value() const noexcept { return value_; }
    int constrained_count() const noexcept;
    bool empty() const noexcept { return mask_ == 0; }

    // True when two requirements on the same bit disagreed. One-hot
    // contradictions are the schema's to detect (admissible_match_count == 0).
    bool inconsistent() const noexcept { return inconsistent_; }

    bool matches(Footprint f) const noexcept {
        return !inconsistent_ && (f.bits & mask_) == value_;
    }

    std::string describe(const Schema& schema) const;

private:
    std::uint64_t mask_ = 0;
    std::uint64_t value_ = 0;
    bool inconsistent_ = false;
};

// Parses "name", "name=0", "a&b=0&c" against schema variable names.
Event parse_event(const std::string& expr, const Schema& schema);

} // namespace mvbern
