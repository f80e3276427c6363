#pragma once

#include <cstdint>

namespace fmmc {

// SplitMix64 finaliser.
std::uint64_t mix64(std::uint64_t x);

// Seed for trial `index` of stream `stream` under a master seed. Pure
// function of its arguments, so trials can run in any order or thread.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

}  // namespace fmmc
