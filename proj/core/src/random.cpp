#include "gaussphi/random.hpp"

#include <vector>

namespace gaussphi {

Integer random_signed_bits(std::uint64_t bits, std::mt19937_64& rng) {
    if (bits == 0) throw DomainError("bit count must be positive");
    const std::size_t words = (bits + 63) / 64;
    std::vector<std::uint64_t> limbs(words);
    for (auto& limb : limbs) limb = rng();

    Integer value;
    mpz_import(value.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, limbs.data());
    mpz_fdiv_r_2exp(value.get_mpz_t(), value.get_mpz_t(), bits);
    mpz_setbit(value.get_mpz_t(), bits - 1);
    if (rng() & 1) value = -value;
    return value;
}

GInt random_gint(std::uint64_t bits, std::mt19937_64& rng) {
    Integer re = random_signed_bits(bits, rng);
    Integer im = random_signed_bits(bits, rng);
    return GInt(std::move(re), std::move(im));
}

}  // namespace gaussphi
