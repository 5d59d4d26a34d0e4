#include "gaussphi/phi.hpp"

#include <algorithm>

namespace gaussphi {

namespace {

std::uint64_t bit_length(const Integer& v) {
    return sgn(v) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

Integer pow2(std::uint64_t e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

}  // namespace

Integer w(std::uint64_t m) {
    Integer r = (m % 2 == 0) ? 3 : 4;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), m / 2);
    return r;
}

std::uint64_t least_w_index(const Integer& t) {
    if (t <= 3) return 0;
    // w takes the values 2^(b-1), 3 * 2^(b-2), 2^b inside [2^(b-1), 2^b].
    const std::uint64_t b = bit_length(t);
    if (mpz_scan1(t.get_mpz_t(), 0) == b - 1) return 2 * b - 5;
    Integer three_quarters = 3;
    mpz_mul_2exp(three_quarters.get_mpz_t(), three_quarters.get_mpz_t(), b - 2);
    if (t <= three_quarters) return 2 * b - 4;
    return 2 * b - 3;
}

PhiBreakdown phi_breakdown(const GInt& z) {
    if (z.is_zero()) throw DomainError("phi is undefined at 0");
    PhiBreakdown out;
    out.j = v2(z);

    Integer scaled_inf = linf(z);
    Integer scaled_l1 = l1(z);
    mpz_tdiv_q_2exp(scaled_inf.get_mpz_t(), scaled_inf.get_mpz_t(), out.j);
    mpz_tdiv_q_2exp(scaled_l1.get_mpz_t(), scaled_l1.get_mpz_t(), out.j);

    out.n = least_w_index(scaled_inf + 2);
    out.l1_within = scaled_l1 + 3 <= w(out.n + 1);
    out.value = out.n + 2 * out.j + (out.l1_within ? 0 : 1);
    return out;
}

std::uint64_t phi(const GInt& z) { return phi_breakdown(z).value; }

bool phi_le(const GInt& z, std::uint64_t n) {
    if (z.is_zero()) throw DomainError("phi is undefined at 0");
    const std::uint64_t j = v2(z);
    const Integer sum = l1(z);

    // Past this index w_n dwarfs every quantity involved.
    const std::uint64_t big = std::max(bit_length(sum), j + 2) + 2;
    if (n / 2 >= big) return true;

    const Integer inf_bound = w(n) - pow2(j + 1);
    const Integer sum_bound = w(n + 1) - 3 * pow2(j);
    return linf(z) <= inf_bound && sum <= sum_bound;
}

std::uint64_t phi_int(const Integer& x) {
    if (sgn(x) == 0) throw DomainError("phi_int is undefined at 0");
    return bit_length(x) - 1;
}

}  // namespace gaussphi
