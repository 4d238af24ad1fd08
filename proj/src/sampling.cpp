#include "buffon/sampling.hpp"

namespace buffon {

Stream::Stream(RngConfig config)
    : config_(config),
      key_{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32)} {}

// Compile-time check against the first published Philox4x32-10 answer.
static_assert(Philox4x32::generate({0, 0, 0, 0}, {0, 0}) ==
              Philox4x32::Block{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});

} // namespace buffon
