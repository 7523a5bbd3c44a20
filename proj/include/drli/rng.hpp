#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace drli {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Derives an independent stream seed from (scenario seed, stream id, purpose tag).
/// Streams are keyed by id so adding nodes never perturbs existing streams.
inline std::uint64_t stream_seed(std::uint64_t scenario_seed, std::uint64_t stream_id,
                                 std::uint64_t tag) {
    std::uint64_t s = splitmix64(scenario_seed);
    s = splitmix64(s ^ splitmix64(stream_id * 2 + 1));
    return splitmix64(s ^ splitmix64(tag * 2 + 0x51ED270B));
}

/// Deterministic random stream. The mappings from raw engine output to
/// doubles/ints are hand-rolled so that sequences are identical across
/// standard library implementations.
class Rng {
public:
    Rng() : eng_(0x853C49E6748FEA9BULL) {}
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1); never returns an exact endpoint.
    double uniform_open() {
        return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Exponential with the given rate (mean 1/rate); strictly positive.
    double exponential(double rate) { return -std::log(uniform_open()) / rate; }

    bool bernoulli(double p) { return uniform() < p; }

    /// Uniform integer in [0, n). Modulo bias is ~n/2^64, irrelevant here.
    int uniform_int(int n) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }

private:
    std::mt19937_64 eng_;
};

}  // namespace drli
