#pragma once

#include <cstdint>

#include "gaussphi/gint.hpp"

namespace gaussphi {

/// w_m = 3 * 2^k for m = 2k, 4 * 2^k for m = 2k + 1.
Integer w(std::uint64_t m);

/// Least m with w_m >= t. Requires t >= 1.
std::uint64_t least_w_index(const Integer& t);

/// How the closed form was evaluated for a particular z.
struct PhiBreakdown {
    std::uint64_t j = 0;       ///< v2(z)
    std::uint64_t n = 0;       ///< least n with |x|/2^j, |y|/2^j <= w_n - 2
    bool l1_within = false;    ///< (|x| + |y|)/2^j <= w_{n+1} - 3
    std::uint64_t value = 0;   ///< n + 2j, plus one when !l1_within
};

PhiBreakdown phi_breakdown(const GInt& z);

/// Minimal Euclidean function of Z[i]. Throws DomainError on zero.
std::uint64_t phi(const GInt& z);

/// phi(z) <= n, decided from the linf/l1 threshold inequalities without computing phi.
bool phi_le(const GInt& z, std::uint64_t n);

/// floor(log2 |x|), the minimal Euclidean function of Z. Throws DomainError on zero.
std::uint64_t phi_int(const Integer& x);

}  // namespace gaussphi
