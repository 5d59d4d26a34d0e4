#include "gaussphi/gint.hpp"

#include <algorithm>
#include <ostream>

namespace gaussphi {

Unit Unit::from_sign(int sign) {
    if (sign == 1) return one();
    if (sign == -1) return minus_one();
    throw DomainError("sign must be +1 or -1 to form a unit");
}

std::string Unit::to_string() const {
    switch (tag()) {
        case Tag::One: return "1";
        case Tag::I: return "i";
        case Tag::MinusOne: return "-1";
        case Tag::MinusI: return "-i";
    }
    return "?";
}

GInt::GInt(Unit u) {
    switch (u.tag()) {
        case Unit::Tag::One: re_ = 1; break;
        case Unit::Tag::I: im_ = 1; break;
        case Unit::Tag::MinusOne: re_ = -1; break;
        case Unit::Tag::MinusI: im_ = -1; break;
    }
}

GInt& GInt::operator+=(const GInt& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GInt& GInt::operator-=(const GInt& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GInt& GInt::operator*=(const GInt& o) {
    *this = *this * o;
    return *this;
}

GInt operator*(const GInt& a, const GInt& b) {
    Integer re = a.re_ * b.re_ - a.im_ * b.im_;
    Integer im = a.re_ * b.im_ + a.im_ * b.re_;
    return GInt(std::move(re), std::move(im));
}

GInt operator*(Unit u, const GInt& z) {
    switch (u.tag()) {
        case Unit::Tag::One: return z;
        case Unit::Tag::I: return GInt(-z.im_, z.re_);
        case Unit::Tag::MinusOne: return GInt(-z.re_, -z.im_);
        case Unit::Tag::MinusI: return GInt(z.im_, -z.re_);
    }
    return z;
}

std::ostream& operator<<(std::ostream& os, const GInt& z) { return os << to_string(z); }

GInt conj(const GInt& z) { return GInt(z.real(), -z.imag()); }

Integer norm(const GInt& z) { return z.real() * z.real() + z.imag() * z.imag(); }

Integer l1(const GInt& z) { return abs(z.real()) + abs(z.imag()); }

namespace {

int compare_magnitudes(const GInt& z) { return mpz_cmpabs(z.real().get_mpz_t(), z.imag().get_mpz_t()); }

}  // namespace

Integer linf(const GInt& z) {
    return compare_magnitudes(z) >= 0 ? Integer(abs(z.real())) : Integer(abs(z.imag()));
}

Integer m_min(const GInt& z) {
    return compare_magnitudes(z) <= 0 ? Integer(abs(z.real())) : Integer(abs(z.imag()));
}

namespace {

void require_nonzero(const GInt& z, const char* what) {
    if (z.is_zero()) throw DomainError(std::string(what) + " is undefined at 0");
}

// Trailing zero count of a nonzero integer; mpz_scan1 ignores the sign.
std::uint64_t trailing_zeros(const Integer& v) { return mpz_scan1(v.get_mpz_t(), 0); }

}  // namespace

std::uint64_t v2(const GInt& z) {
    require_nonzero(z, "v2");
    if (sgn(z.real()) == 0) return trailing_zeros(z.imag());
    if (sgn(z.imag()) == 0) return trailing_zeros(z.real());
    return std::min(trailing_zeros(z.real()), trailing_zeros(z.imag()));
}

std::uint64_t v1pi(const GInt& z) {
    const std::uint64_t j = v2(z);
    // After removing 2^j at least one coordinate is odd; (1+i) divides the
    // quotient exactly when both are odd.
    const bool re_odd = mpz_tstbit(z.real().get_mpz_t(), j) != 0;
    const bool im_odd = mpz_tstbit(z.imag().get_mpz_t(), j) != 0;
    return 2 * j + ((re_odd && im_odd) ? 1 : 0);
}

bool divisible_by_one_plus_i(const GInt& z) {
    return mpz_tstbit(z.real().get_mpz_t(), 0) == mpz_tstbit(z.imag().get_mpz_t(), 0);
}

GInt div_one_plus_i(const GInt& z) {
    // (x + yi)(1 - i) / 2 = ((x + y) + (y - x) i) / 2
    Integer re = z.real() + z.imag();
    Integer im = z.imag() - z.real();
    mpz_divexact_ui(re.get_mpz_t(), re.get_mpz_t(), 2);
    mpz_divexact_ui(im.get_mpz_t(), im.get_mpz_t(), 2);
    return GInt(std::move(re), std::move(im));
}

Unit canonical_unit(const GInt& z) {
    require_nonzero(z, "canonical_unit");
    const int sx = sgn(z.real());
    const int sy = sgn(z.imag());
    const int c = compare_magnitudes(z);
    if (c == 0) {
        // |x| = |y|: rotate onto the ray (1+i) R+. Quadrant I needs no rotation.
        if (sx > 0 && sy > 0) return Unit::one();
        if (sx < 0 && sy > 0) return Unit::minus_i();
        if (sx < 0 && sy < 0) return Unit::minus_one();
        return Unit::i();
    }
    if (c > 0) return sx > 0 ? Unit::one() : Unit::minus_one();
    // |y| > |x|: i * (x + yi) = -y + xi, -i * (x + yi) = y - xi
    return sy > 0 ? Unit::minus_i() : Unit::i();
}

int s_sign(const GInt& r) {
    const GInt rotated = canonical_unit(r) * r;
    return sgn(rotated.imag());
}

GInt canonical_associate(const GInt& z) {
    if (z.is_zero()) return z;
    return canonical_unit(z) * z;
}

std::optional<Unit> as_unit(const GInt& z) {
    for (Unit u : Unit::all()) {
        if (GInt(u) == z) return u;
    }
    return std::nullopt;
}

bool is_unit(const GInt& z) { return as_unit(z).has_value(); }

std::optional<GInt> exact_div(const GInt& a, const GInt& b) {
    if (b.is_zero()) throw DivisionByZero();
    const Integer n = norm(b);
    const GInt num = a * conj(b);
    if (!mpz_divisible_p(num.real().get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(num.imag().get_mpz_t(), n.get_mpz_t())) {
        return std::nullopt;
    }
    Integer re, im;
    mpz_divexact(re.get_mpz_t(), num.real().get_mpz_t(), n.get_mpz_t());
    mpz_divexact(im.get_mpz_t(), num.imag().get_mpz_t(), n.get_mpz_t());
    return GInt(std::move(re), std::move(im));
}

std::string to_string(const GInt& z) {
    const Integer& x = z.real();
    const Integer& y = z.imag();
    if (sgn(y) == 0) return x.get_str();

    std::string imag_part;
    if (y == 1) {
        imag_part = "i";
    } else if (y == -1) {
        imag_part = "-i";
    } else {
        imag_part = y.get_str() + "i";
    }
    if (sgn(x) == 0) return imag_part;
    if (sgn(y) > 0) return x.get_str() + "+" + imag_part;
    return x.get_str() + imag_part;
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::string_view digits = text;
    bool negative = false;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("malformed Gaussian integer: '" + std::string(whole) + "'");
    }
    Integer value(std::string(digits), 10);
    return negative ? Integer(-value) : value;
}

}  // namespace

GInt parse_gint(std::string_view text) {
    if (text.empty()) throw ParseError("empty Gaussian integer");
    if (text.back() != 'i') return GInt(parse_integer(text, text), 0);

    std::string_view body = text.substr(0, text.size() - 1);
    // The imaginary term starts at the last sign that is not the leading character.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    std::string_view real_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    std::string_view imag_text = split == std::string_view::npos ? body : body.substr(split);

    Integer im;
    if (imag_text.empty() || imag_text == "+") {
        im = 1;
    } else if (imag_text == "-") {
        im = -1;
    } else {
        im = parse_integer(imag_text, text);
    }
    Integer re = real_text.empty() ? Integer(0) : parse_integer(real_text, text);
    return GInt(std::move(re), std::move(im));
}

}  // namespace gaussphi
