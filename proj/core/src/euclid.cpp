#include "gaussphi/euclid.hpp"

#include "gaussphi/phi.hpp"

namespace gaussphi {

std::string_view to_string(Engine e) { return e == Engine::Minimal ? "minimal" : "norm"; }

EuclidTrace gcd_trace(const GInt& a, const GInt& b, Engine engine) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    EuclidTrace trace;
    trace.engine = engine;

    GInt dividend = a;
    GInt divisor = b;
    while (!divisor.is_zero()) {
        EuclidStep step;
        if (engine == Engine::Minimal) {
            DivisionOutcome d = minimal_divide(dividend, divisor);
            step.quotient = std::move(d.quotient);
            step.remainder = std::move(d.remainder);
            step.measure_divisor = d.phi_b;
            step.strategy = d.strategy;
        } else {
            QuotientRemainder d = gauss_divide(dividend, divisor);
            step.quotient = std::move(d.quotient);
            step.remainder = std::move(d.remainder);
            step.measure_divisor = norm(divisor);
        }
        step.dividend = std::move(dividend);
        step.divisor = divisor;
        dividend = std::move(divisor);
        divisor = step.remainder;
        trace.steps.push_back(std::move(step));
    }
    trace.gcd_raw = dividend;
    trace.gcd_canonical = canonical_associate(dividend);
    return trace;
}

EuclidTrace gcd_minimal(const GInt& a, const GInt& b) { return gcd_trace(a, b, Engine::Minimal); }

EuclidTrace gcd_norm(const GInt& a, const GInt& b) { return gcd_trace(a, b, Engine::Norm); }

Bezout xgcd(const GInt& a, const GInt& b, Engine engine) {
    const EuclidTrace trace = gcd_trace(a, b, engine);

    // Invariant: s0 a + t0 b = current dividend, s1 a + t1 b = current divisor.
    GInt s0(1), t0(0), s1(0), t1(1);
    for (const EuclidStep& step : trace.steps) {
        GInt s2 = s0 - step.quotient * s1;
        GInt t2 = t0 - step.quotient * t1;
        s0 = std::move(s1);
        t0 = std::move(t1);
        s1 = std::move(s2);
        t1 = std::move(t2);
    }
    const Unit u = canonical_unit(trace.gcd_raw);
    return {trace.gcd_canonical, u * s0, u * t0};
}

}  // namespace gaussphi
