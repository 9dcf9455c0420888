#pragma once

#include <cstdint>
#include <random>

#include "ore/rational.hpp"

namespace ore {

/// Seeded generator with platform-independent draws. The standard
/// distributions are implementation-defined, so draws are reduced by hand.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    bool chance(int percent) { return integer(0, 99) < percent; }

    /// Rational with |numerator| <= max_num and denominator in [1, max_den].
    Rat rational(std::int64_t max_num, std::int64_t max_den) {
        return Rat(integer(-max_num, max_num), integer(1, max_den));
    }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace ore
