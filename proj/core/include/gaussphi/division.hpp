#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "gaussphi/gint.hpp"

namespace gaussphi {

enum class Strategy { Gauss, SubtractU, SubtractIU };

/// Which branch of the alternate-remainder construction fired.
enum class Condition { Cond1, Cond2, Cond3, ElseBranch };

std::string_view to_string(Strategy s);
std::string_view to_string(Condition c);

struct QuotientRemainder {
    GInt quotient;
    GInt remainder;
};

struct DivisionOutcome {
    GInt quotient;
    GInt remainder;
    Strategy strategy = Strategy::Gauss;
    std::optional<Condition> condition;
    std::uint64_t phi_b = 0;
    std::optional<std::uint64_t> phi_r;  ///< absent when remainder = 0

    // The Gauss division this outcome was derived from.
    GInt gauss_quotient;
    GInt gauss_remainder;
    std::optional<std::uint64_t> gauss_phi_r;
};

/// Nearest integer to t/d, rounding exact halves toward the floor.
/// Equals ceil((2t - d) / (2d)). Throws DomainError unless d > 0.
Integer nint_ratio(const Integer& t, const Integer& d);

/// Gauss's division: quotient is a * conj(b) / Nm(b) rounded coordinatewise with nint_ratio.
/// Throws DivisionByZero when b = 0.
QuotientRemainder gauss_divide(const GInt& a, const GInt& b);

/// Division with remainder = 0 or phi(remainder) < phi(b).
/// a = 0 yields (0, 0). Throws DivisionByZero when b = 0.
DivisionOutcome minimal_divide(const GInt& a, const GInt& b);

/// v2(a) <= v2(b), taken literally. Throws DomainError if either is zero.
bool adjustment_unnecessary(const GInt& a, const GInt& b);

}  // namespace gaussphi
