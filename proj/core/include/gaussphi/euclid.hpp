#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gaussphi/division.hpp"
#include "gaussphi/gint.hpp"

namespace gaussphi {

/// Which remainder measure drives the Euclidean loop.
enum class Engine { Minimal, Norm };

std::string_view to_string(Engine e);

struct EuclidStep {
    GInt dividend;
    GInt divisor;
    GInt quotient;
    GInt remainder;
    Integer measure_divisor;  ///< phi(divisor) for the minimal engine, Nm(divisor) for the norm engine
    Strategy strategy = Strategy::Gauss;
};

struct EuclidTrace {
    Engine engine = Engine::Minimal;
    std::vector<EuclidStep> steps;
    GInt gcd_raw;        ///< last nonzero divisor
    GInt gcd_canonical;  ///< canonical_unit(gcd_raw) * gcd_raw
};

/// Euclidean algorithm driven by minimal_divide. Throws DomainError when a = b = 0.
EuclidTrace gcd_minimal(const GInt& a, const GInt& b);

/// Euclidean algorithm driven by gauss_divide. Throws DomainError when a = b = 0.
EuclidTrace gcd_norm(const GInt& a, const GInt& b);

EuclidTrace gcd_trace(const GInt& a, const GInt& b, Engine engine);

struct Bezout {
    GInt g;  ///< canonical gcd
    GInt s;
    GInt t;  ///< s * a + t * b = g
};

/// Extended Euclid by back-substitution over the chosen engine's quotients.
Bezout xgcd(const GInt& a, const GInt& b, Engine engine = Engine::Minimal);

}  // namespace gaussphi
