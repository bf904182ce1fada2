#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "mvbern/bits.hpp"
#include "mvbern/error.hpp"

namespace mvbern {

// xoshiro256++ with splitmix64 seeding. Self-contained so that draws are
// bit-reproducible across standard libraries and platforms; std::*_distribution
// is implementation-defined and would break fixed-seed regression outputs.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) {
        std::uint64_t x = seed;
        for (auto& s : state_) s = (x = splitmix64(x + 0x9E3779B97F4A7C15ULL));
    }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1), 53 random bits.
    double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1); rejects exact zeros so log() is always finite.
    double uniform_pos() noexcept {
        double u;
        do { u = uniform(); } while (u == 0.0);
        return u;
    }

    // Uniform integer in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0ULL - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    bool bernoulli(double p) noexcept { return uniform() < p; }

    // Marsaglia polar method.
    double normal() noexcept {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    // Gamma(shape, scale=1) via Marsaglia-Tsang; shapes below 1 use the
    // Gamma(a) = Gamma(a+1) * U^(1/a) boost.
    double gamma(double shape) {
        if (!(shape > 0.0)) throw NumericError("gamma shape must be positive");
        if (shape < 1.0) {
            const double u = uniform_pos();
            return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform_pos();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    // Dirichlet draw written into `out`; parameters must be positive.
    void dirichlet(std::span<const double> params, std::span<double> out) {
        double sum = 0.0;
        for (std::size_t i = 0; i < params.size(); ++i) {
            out[i] = gamma(params[i]);
            sum += out[i];
        }
        if (sum <= 0.0) {
            // All gamma draws underflowed (possible with tiny shapes); caller
            // treats the zero vector as a rejected sample.
            for (auto& v : out) v = 0.0;
            return;
        }
        for (auto& v : out) v /= sum;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) noexcept {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4] = {};
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace mvbern
