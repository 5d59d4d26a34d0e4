#include "gaussphi/division.hpp"

#include "gaussphi/phi.hpp"

namespace gaussphi {

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::Gauss: return "gauss";
        case Strategy::SubtractU: return "subtract_u";
        case Strategy::SubtractIU: return "subtract_iu";
    }
    return "unknown";
}

std::string_view to_string(Condition c) {
    switch (c) {
        case Condition::Cond1: return "cond1";
        case Condition::Cond2: return "cond2";
        case Condition::Cond3: return "cond3";
        case Condition::ElseBranch: return "else_branch";
    }
    return "unknown";
}

Integer nint_ratio(const Integer& t, const Integer& d) {
    if (sgn(d) <= 0) throw DomainError("nint_ratio requires a positive denominator");
    const Integer num = 2 * t - d;
    const Integer den = 2 * d;
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

QuotientRemainder gauss_divide(const GInt& a, const GInt& b) {
    if (b.is_zero()) throw DivisionByZero();
    const Integer n = norm(b);
    const GInt scaled = a * conj(b);
    GInt q(nint_ratio(scaled.real(), n), nint_ratio(scaled.imag(), n));
    GInt r = a - q * b;
    return {std::move(q), std::move(r)};
}

namespace {

Integer pow2(std::uint64_t e) {
    Integer r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
    return r;
}

// First of the three alternate-remainder conditions that holds, else ElseBranch.
// Requires r != 0 and phi(r) >= phi(b) = n >= 1.
Condition classify(const GInt& b, const GInt& r, std::uint64_t n) {
    const GInt ub_b = canonical_unit(b) * b;
    const GInt ur_r = canonical_unit(r) * r;
    if (sgn(ub_b.imag()) * sgn(ur_r.imag()) >= 0) return Condition::Cond1;

    const Integer mb = m_min(b);
    const Integer mr = m_min(r);
    const Integer inf_r = linf(r);
    if (mr + mb <= inf_r) return Condition::Cond2;

    if (mb < inf_r && inf_r < mb + mr && linf(b) - mr > w(n - 1) - pow2(v2(b) + 1)) {
        return Condition::Cond3;
    }
    return Condition::ElseBranch;
}

}  // namespace

DivisionOutcome minimal_divide(const GInt& a, const GInt& b) {
    if (b.is_zero()) throw DivisionByZero();
    DivisionOutcome out;
    out.phi_b = phi(b);
    if (a.is_zero()) return out;

    auto [q, r] = gauss_divide(a, b);
    out.gauss_quotient = q;
    out.gauss_remainder = r;
    if (r.is_zero()) {
        out.quotient = std::move(q);
        return out;
    }
    out.gauss_phi_r = phi(r);
    if (*out.gauss_phi_r < out.phi_b) {
        out.quotient = std::move(q);
        out.remainder = std::move(r);
        out.phi_r = out.gauss_phi_r;
        return out;
    }

    const Condition cond = classify(b, r, out.phi_b);
    const Unit ub = canonical_unit(b);
    const Unit ur = canonical_unit(r);
    Unit shift;
    if (cond == Condition::ElseBranch) {
        // cond1 failed, so Im(u_r r) != 0 and s(r) is +-1.
        shift = Unit::i() * ub / (Unit::from_sign(s_sign(r)) * ur);
        out.strategy = Strategy::SubtractIU;
    } else {
        shift = ub / ur;
        out.strategy = Strategy::SubtractU;
    }
    out.condition = cond;
    out.quotient = q + GInt(shift);
    out.remainder = r - shift * b;
    if (!out.remainder.is_zero()) out.phi_r = phi(out.remainder);
    return out;
}

bool adjustment_unnecessary(const GInt& a, const GInt& b) { return v2(a) <= v2(b); }

}  // namespace gaussphi
