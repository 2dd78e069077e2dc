#pragma once

#include <cstdint>
#include <random>

namespace chordpoly::detail {

/// Seeded random stream for the generators.  Draws go through the raw
/// mt19937_64 output so the stream is identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform value in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

    int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

private:
    std::mt19937_64 engine_;
};

}  // namespace chordpoly::detail
