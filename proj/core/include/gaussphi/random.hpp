#pragma once

#include <cstdint>
#include <random>

#include "gaussphi/gint.hpp"

namespace gaussphi {

/// Uniform integer with exactly `bits` bits (top bit set) and a random sign.
Integer random_signed_bits(std::uint64_t bits, std::mt19937_64& rng);

/// Gaussian integer whose coordinates both have exactly `bits` bits; never zero.
GInt random_gint(std::uint64_t bits, std::mt19937_64& rng);

}  // namespace gaussphi
