#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvbern/footprint.hpp"

namespace mvbern {

class Event;

enum class VariableRole { Binary, GroupMember };

struct Variable {
    std::string name;
    VariableRole role = VariableRole::Binary;
    int group = -1; // index into groups() for GroupMember, -1 otherwise
};

struct OneHotGroup {
    std::string name;
    std::vector<int> members; // variable indices, ascending
};

// Ordered variable layout: which bit is which, plus the one-hot constraints
// that carve the admissible sample space out of 2^k.
class Schema {
public:
    int add_binary(const std::string& name);
    // Adds size(member_names) variables that form a one-hot block; returns the
    // group index. Groups need at least two members.
    int add_group(const std::string& group_name, const std::vector<std::string>& member_names);

    int k() const noexcept { return static_cast<int>(variables_.size()); }
    const std::vector<Variable>& variables() const noexcept { return variables_; }
    const std::vector<OneHotGroup>& groups() const noexcept { return groups_; }
    const Variable& variable(int i) const { return variables_.at(static_cast<std::size_t>(i)); }

    std::optional<int> index_of(const std::string& name) const;
    std::optional<int> group_index_of(const std::string& group_name) const;

    // Bits belonging to no one-hot group.
    std::uint64_t free_mask() const noexcept { return free_mask_; }
    std::uint64_t group_mask(int g) const { return group_masks_.at(static_cast<std::size_t>(g)); }

    bool validate(Footprint f) const noexcept;

    // Number of admissible outcomes S = 2^(free bits) * prod(group sizes).
    // Exact in double: a power of two times a small integer product.
    double admissible_count() const noexcept;

    // Admissible outcomes compatible with the event's pinned bits; 0 when the
    // event contradicts a one-hot constraint.
    double admissible_match_count(const Event& e) const noexcept;

    // FNV-1a over the canonical layout (names, roles, group structure).
    std::uint64_t hash() const noexcept;

    std::string to_json() const;
    static Schema from_json(const std::string& text);

    friend bool operator==(const Schema& a, const Schema& b) {
        return a.hash() == b.hash();
    }

private:
    std::vector<Variable> variables_;
    std::vector<OneHotGroup> groups_;
    std::vector<std::uint64_t> group_masks_;
    std::uint64_t free_mask_ = 0;

    void check_capacity(std::size_t extra) const;
    void check_name(const std::string& name) const;
};

// Enumerates the admissible outcomes of a schema as a dense index range
// [0, size). Exact-mode helper for small spaces; refuses large ones.
class AdmissibleEnumerator {
public:
    static constexpr double kMaxExact = 1 << 20;

    explicit AdmissibleEnumerator(const Schema& schema);

    std::size_t size() const noexcept { return size_; }
    Footprint at(std::size_t index) const;
    std::size_t index_of(Footprint f) const;

private:
    const Schema* schema_;
    std::vector<int> free_bits_;
    std::size_t size_ = 0;
};

} // namespace mvbern
