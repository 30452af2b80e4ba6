#include "wsnfire/random.hpp"

namespace wsnfire {

Engine make_stream(std::uint64_t master_seed, std::uint64_t index, StreamKind kind) {
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                      static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32),
                      static_cast<std::uint32_t>(kind)};
    return Engine(seq);
}

}  // namespace wsnfire
