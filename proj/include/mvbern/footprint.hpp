#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "mvbern/bits.hpp"

namespace mvbern {

// One record's binary variables packed into a 64-bit word, bit i = variable i.
// Width (k) lives in the governing Schema; unused high bits stay zero.
struct Footprint {
    std::uint64_t bits = 0;

    bool get(int i) const noexcept { return (bits >> i) & 1ULL; }
    void set(int i, bool v) noexcept {
        if (v) bits |= (1ULL << i);
        else bits &= ~(1ULL << i);
    }

    friend bool operator==(const Footprint&, const Footprint&) = default;
};

// Lexicographic on the bit sequence b0, b1, ...; gives byte-stable table order.
inline bool lex_less(Footprint a, Footprint b) noexcept {
    return reverse_bits64(a.bits) < reverse_bits64(b.bits);
}

inline std::string to_bit_string(Footprint f, int k) {
    std::string s(static_cast<std::size_t>(k), '0');
    for (int i = 0; i < k; ++i)
        if (f.get(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

// Parses "0110..."; returns false on bad characters or length mismatch.
inline bool from_bit_string(const std::string& s, int k, Footprint& out) {
    if (static_cast<int>(s.size()) != k) return false;
    Footprint f;
    for (int i = 0; i < k; ++i) {
        if (s[static_cast<std::size_t>(i)] == '1') f.set(i, true);
        else if (s[static_cast<std::size_t>(i)] != '0') return false;
    }
    out = f;
    return true;
}

struct FootprintHash {
    std::size_t operator()(const Footprint& f) const noexcept {
        return static_cast<std::size_t>(hash_bits(f.bits));
    }
};

} // namespace mvbern
