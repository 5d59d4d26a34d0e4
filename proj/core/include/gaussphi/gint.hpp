#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gaussphi {

using Integer = mpz_class;

/// Raised when an operation is applied outside its domain (e.g. a valuation of 0).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DivisionByZero : public DomainError {
public:
    DivisionByZero() : DomainError("division by zero") {}
};

/// Raised by the text parsers on malformed input.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// One of the four units i^k, k in {0, 1, 2, 3}.
class Unit {
public:
    enum class Tag : std::uint8_t { One = 0, I = 1, MinusOne = 2, MinusI = 3 };

    constexpr Unit() = default;
    constexpr explicit Unit(Tag tag) : exponent_(static_cast<std::uint8_t>(tag)) {}

    static constexpr Unit one() { return Unit(Tag::One); }
    static constexpr Unit i() { return Unit(Tag::I); }
    static constexpr Unit minus_one() { return Unit(Tag::MinusOne); }
    static constexpr Unit minus_i() { return Unit(Tag::MinusI); }

    /// i^k for any integer k.
    static constexpr Unit power_of_i(int k) {
        return Unit(static_cast<Tag>(((k % 4) + 4) % 4));
    }

    /// +1 or -1 as a unit; any other sign is a domain error.
    static Unit from_sign(int sign);

    /// Fixed enumeration order [1, i, -1, -i].
    static constexpr std::array<Unit, 4> all() {
        return {one(), i(), minus_one(), minus_i()};
    }

    constexpr Tag tag() const { return static_cast<Tag>(exponent_); }
    constexpr int exponent() const { return exponent_; }

    constexpr Unit inverse() const { return power_of_i(4 - exponent_); }

    friend constexpr Unit operator*(Unit a, Unit b) {
        return power_of_i(a.exponent_ + b.exponent_);
    }
    friend constexpr Unit operator/(Unit a, Unit b) { return a * b.inverse(); }
    friend constexpr bool operator==(Unit, Unit) = default;

    std::string to_string() const;

private:
    std::uint8_t exponent_ = 0;
};

/// Exact Gaussian integer x + yi.
class GInt {
public:
    GInt() = default;
    GInt(Integer re, Integer im = 0) : re_(std::move(re)), im_(std::move(im)) {}
    GInt(long re, long im = 0) : re_(re), im_(im) {}
    GInt(int re, int im = 0) : re_(re), im_(im) {}
    GInt(Unit u);

    const Integer& real() const { return re_; }
    const Integer& imag() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

    GInt operator-() const { return GInt(-re_, -im_); }
    GInt& operator+=(const GInt& o);
    GInt& operator-=(const GInt& o);
    GInt& operator*=(const GInt& o);

    friend GInt operator+(GInt a, const GInt& b) { return a += b; }
    friend GInt operator-(GInt a, const GInt& b) { return a -= b; }
    friend GInt operator*(const GInt& a, const GInt& b);
    friend bool operator==(const GInt& a, const GInt& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Multiplication by a unit is a coordinate rotation.
    friend GInt operator*(Unit u, const GInt& z);
    friend GInt operator*(const GInt& z, Unit u) { return u * z; }

    friend std::ostream& operator<<(std::ostream& os, const GInt& z);

private:
    Integer re_ = 0;
    Integer im_ = 0;
};

GInt conj(const GInt& z);

Integer norm(const GInt& z);
Integer l1(const GInt& z);
Integer linf(const GInt& z);
/// min(|x|, |y|), i.e. l1 - linf.
Integer m_min(const GInt& z);

/// 2-adic valuation of gcd(x, y). Throws DomainError on zero.
std::uint64_t v2(const GInt& z);
/// (1+i)-adic valuation. Throws DomainError on zero.
std::uint64_t v1pi(const GInt& z);

/// True when (1+i) divides z, i.e. x and y have the same parity.
bool divisible_by_one_plus_i(const GInt& z);
/// z / (1+i); requires divisible_by_one_plus_i(z).
GInt div_one_plus_i(const GInt& z);

/// The unique unit u with Re(u z) = linf(z), or u z = linf(z)(1+i) when |x| = |y|.
Unit canonical_unit(const GInt& z);
/// Sign of Im(canonical_unit(r) r).
int s_sign(const GInt& r);
/// canonical_unit(z) * z; zero maps to zero.
GInt canonical_associate(const GInt& z);

bool is_unit(const GInt& z);
/// The unit equal to z, if z is one.
std::optional<Unit> as_unit(const GInt& z);

/// a / b when b divides a exactly; nullopt otherwise. Throws DivisionByZero when b = 0.
std::optional<GInt> exact_div(const GInt& a, const GInt& b);

/// Canonical text form: "x+yi", "x-yi", "5", "-3i", "i", "0".
std::string to_string(const GInt& z);
GInt parse_gint(std::string_view text);

}  // namespace gaussphi
