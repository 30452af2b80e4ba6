#pragma once

#include <cstdint>
#include <random>

namespace wsnfire {

/// Purpose tag mixed into every derived seed so that different consumers of
/// the same (master seed, index) pair never share a stream.
enum class StreamKind : std::uint32_t {
    Layout = 1,  ///< sensor positions
    Trial = 2,   ///< one Monte Carlo trial (ignitions, then resampled sensors)
};

using Engine = std::mt19937_64;

/// Stream derivation rule: the engine for (master, index, kind) is
/// std::mt19937_64 seeded through std::seed_seq with the five 32-bit words
/// {lo(master), hi(master), lo(index), hi(index), kind}. Trial i of a run
/// uses index = i, so any trial can be replayed in isolation.
Engine make_stream(std::uint64_t master_seed, std::uint64_t index, StreamKind kind);

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform01(Engine& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace wsnfire
