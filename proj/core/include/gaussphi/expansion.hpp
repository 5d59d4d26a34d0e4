#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaussphi/gint.hpp"

namespace gaussphi {

/// A (1+i)-ary digit: zero or one of the four units.
class Digit {
public:
    constexpr Digit() = default;
    constexpr Digit(Unit u) : unit_(u) {}

    static constexpr Digit zero() { return Digit(); }

    constexpr bool is_zero() const { return !unit_.has_value(); }
    constexpr const std::optional<Unit>& unit() const { return unit_; }

    GInt value() const { return unit_ ? GInt(*unit_) : GInt(); }

    friend constexpr bool operator==(const Digit&, const Digit&) = default;

private:
    std::optional<Unit> unit_;
};

/// Little-endian digits: position j carries weight (1+i)^j. The empty
/// expansion is 0; otherwise the last digit is nonzero.
struct Expansion {
    std::vector<Digit> digits;

    bool normalized() const { return digits.empty() || !digits.back().is_zero(); }
    /// length - 1; requires a nonempty expansion.
    std::uint64_t degree() const;

    friend bool operator==(const Expansion&, const Expansion&) = default;
};

/// Horner evaluation in base (1+i). Throws DomainError on unnormalized input.
GInt eval_expansion(const Expansion& e);

/// Degree-minimal expansion built digit by digit, each nonzero digit the first
/// unit in [1, i, -1, -i] that lowers phi of the remaining quotient by one.
Expansion minimal_expansion(const GInt& z);

/// Default operand norm cap for min_degree_bfs.
inline constexpr std::int64_t kBfsNormCap = 1'000'000'000'000;

/// Minimal expansion degree by breadth-first search over partial quotients.
/// Independent of the closed-form phi. Throws DomainError on zero or when
/// Nm(z) exceeds norm_cap.
std::uint64_t min_degree_bfs(const GInt& z, std::int64_t norm_cap = kBfsNormCap);

/// Comma-separated little-endian digits from {0, 1, -1, i, -i}, e.g. "1,1".
std::string to_string(const Expansion& e);
Expansion parse_expansion(std::string_view text);

}  // namespace gaussphi
