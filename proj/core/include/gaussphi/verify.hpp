#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaussphi {

/// Lattice boxes for the exhaustive suites: elements with |x|, |y| <= bound,
/// ordered pairs with every coordinate in [-pair_bound, pair_bound].
struct BoxSpec {
    std::int64_t bound = 8;
    std::int64_t pair_bound = 10;
    unsigned threads = 0;  ///< 0 picks std::thread::hardware_concurrency()
    std::size_t max_failures = 200;  ///< counterexamples kept; failure_count keeps counting past it
};

/// Largest number of cases a suite agrees to enumerate.
inline constexpr std::uint64_t kMaxSuiteCases = 100'000'000;

/// Raised when a box would exceed kMaxSuiteCases.
class GuardError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Counterexample {
    std::string check;
    std::string input;
    std::string observed;
    std::string expected;
};

/// Per-check bookkeeping. `matched` counts cases whose hypothesis held;
/// a check with matched == 0 is vacuous, not passed.
struct CheckTally {
    std::string name;
    std::uint64_t matched = 0;
    std::uint64_t failed = 0;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t cases = 0;
    std::uint64_t failure_count = 0;
    std::vector<Counterexample> failures;  ///< first BoxSpec::max_failures in scan order
    std::vector<CheckTally> checks;
    std::map<std::string, std::uint64_t> tallies;
    std::map<std::string, std::string> first_seen;  ///< earliest input per tally key, scan order
    bool reporting_only = false;  ///< failures are findings, not defects
    double seconds = 0.0;

    bool passed() const { return failure_count == 0; }
    bool vacuous() const;
    const CheckTally* check(const std::string& name) const;
};

/// phi(z) = min_degree_bfs(z) for every nonzero z in the element box.
VerifyReport check_phi_oracle(const BoxSpec& box);

/// minimal_divide reconstructs a and strictly lowers phi, for all a and all b != 0
/// in the pair box. Tallies strategy/condition frequencies.
VerifyReport check_division(const BoxSpec& box);

/// Gauss-remainder bounds and the alternate-remainder lemmas, each as a
/// hypothesis-filtered implication over nonzero pairs in the pair box.
VerifyReport check_lemma_bounds(const BoxSpec& box);

/// Tests "v2(a) <= v2(b) implies phi(r) < phi(b)" literally and reports
/// counterexamples; also checks the strict-inequality variant.
VerifyReport check_corollary4(const BoxSpec& box);

/// minimal_expansion round-trips and has degree phi(z) over the element box.
VerifyReport check_expansion(const BoxSpec& box);

/// Unit invariance and the 2z, (1+i)z shift laws of phi over the element box.
VerifyReport check_invariance(const BoxSpec& box);

struct GcdRandomSpec {
    std::uint64_t pairs = 0;
    std::uint64_t bits = 256;
    std::uint64_t seed = 1;
};

/// Both Euclidean engines agree on the canonical gcd, descend strictly, and
/// satisfy Bezout, over the pair box plus seeded random operands.
VerifyReport check_gcd_engines(const BoxSpec& box, const GcdRandomSpec& random = {});

}  // namespace gaussphi
