#include "gaussphi/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <random>
#include <thread>

#include "gaussphi/division.hpp"
#include "gaussphi/euclid.hpp"
#include "gaussphi/expansion.hpp"
#include "gaussphi/gint.hpp"
#include "gaussphi/phi.hpp"
#include "gaussphi/random.hpp"

namespace gaussphi {

bool VerifyReport::vacuous() const {
    return std::any_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.matched == 0; });
}

const CheckTally* VerifyReport::check(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

namespace {

// Per-task results; merged in task order so reports do not depend on scheduling.
class Accumulator {
public:
    Accumulator(const std::vector<std::string>& names, std::size_t max_failures) : max_failures_(max_failures) {
        for (const auto& n : names) checks_.push_back({n, 0, 0});
    }

    void count_case() { ++cases_; }

    template <class Describe>
    void check(std::size_t k, bool ok, Describe&& describe) {
        ++checks_[k].matched;
        if (ok) return;
        ++checks_[k].failed;
        ++failure_count_;
        if (failures_.size() < max_failures_) {
            Counterexample c = describe();
            c.check = checks_[k].name;
            failures_.push_back(std::move(c));
        }
    }

    void tally(const std::string& key, const std::function<std::string()>& input) {
        if (tallies_[key]++ == 0) first_seen_[key] = input();
    }

    void merge_into(VerifyReport& report) {
        report.cases += cases_;
        report.failure_count += failure_count_;
        for (auto& f : failures_) {
            if (report.failures.size() >= max_failures_) break;
            report.failures.push_back(std::move(f));
        }
        if (report.checks.empty()) {
            for (const auto& c : checks_) report.checks.push_back({c.name, 0, 0});
        }
        for (std::size_t k = 0; k < checks_.size(); ++k) {
            report.checks[k].matched += checks_[k].matched;
            report.checks[k].failed += checks_[k].failed;
        }
        for (const auto& [key, count] : tallies_) report.tallies[key] += count;
        for (auto& [key, input] : first_seen_) report.first_seen.try_emplace(key, std::move(input));
    }

private:
    std::size_t max_failures_;
    std::uint64_t cases_ = 0;
    std::uint64_t failure_count_ = 0;
    std::vector<Counterexample> failures_;
    std::vector<CheckTally> checks_;
    std::map<std::string, std::uint64_t> tallies_;
    std::map<std::string, std::string> first_seen_;
};

using TaskBody = std::function<void(std::size_t task, Accumulator& acc)>;

VerifyReport run_tasks(std::string suite, const std::vector<std::string>& checks, std::size_t tasks,
                       const BoxSpec& box, const TaskBody& body, bool reporting_only = false) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Accumulator> parts(tasks, Accumulator(checks, box.max_failures));

    const unsigned threads = box.threads;
    unsigned workers = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(tasks, 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks; t = next++) body(t, parts[t]);
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < workers; ++k) pool.emplace_back(worker);
    }

    VerifyReport report;
    report.suite = std::move(suite);
    report.reporting_only = reporting_only;
    for (const auto& n : checks) report.checks.push_back({n, 0, 0});
    for (auto& p : parts) p.merge_into(report);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::uint64_t side(std::int64_t bound) { return static_cast<std::uint64_t>(2 * bound + 1); }

void guard_elements(std::int64_t bound) {
    if (bound < 0) throw GuardError("bound must be nonnegative");
    if (bound > 100'000 || side(bound) * side(bound) > kMaxSuiteCases) {
        throw GuardError("bound " + std::to_string(bound) + " exceeds the case limit");
    }
}

void guard_pairs(std::int64_t bound) {
    if (bound < 0) throw GuardError("pair bound must be nonnegative");
    if (bound > 100 || side(bound) * side(bound) * side(bound) * side(bound) > kMaxSuiteCases) {
        throw GuardError("pair bound " + std::to_string(bound) + " exceeds the case limit");
    }
}

std::string pair_input(const GInt& a, const GInt& b) { return "a=" + to_string(a) + " b=" + to_string(b); }

Counterexample describe(std::string input, std::string observed, std::string expected) {
    return {{}, std::move(input), std::move(observed), std::move(expected)};
}

Integer pow2(std::uint64_t e) {
    Integer r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
    return r;
}

bool power_of_two_divides(std::uint64_t e, const Integer& v) {
    return sgn(v) == 0 || mpz_scan1(v.get_mpz_t(), 0) >= e;
}

// Visits all z with |x|, |y| <= bound in (x, y) order; one task per x.
template <class Visit>
TaskBody element_rows(std::int64_t bound, Visit visit) {
    return [bound, visit](std::size_t task, Accumulator& acc) {
        const std::int64_t x = static_cast<std::int64_t>(task) - bound;
        for (std::int64_t y = -bound; y <= bound; ++y) {
            if (x == 0 && y == 0) continue;
            acc.count_case();
            visit(GInt(x, y), acc);
        }
    };
}

std::vector<GInt> box_elements(std::int64_t bound, bool include_zero) {
    std::vector<GInt> out;
    for (std::int64_t x = -bound; x <= bound; ++x) {
        for (std::int64_t y = -bound; y <= bound; ++y) {
            if (!include_zero && x == 0 && y == 0) continue;
            out.emplace_back(x, y);
        }
    }
    return out;
}

// Visits ordered pairs (a, b), b != 0, in (a.x, a.y, b.x, b.y) order; one task per a.x.
template <class Visit>
TaskBody pair_rows(std::int64_t bound, bool nonzero_a, Visit visit) {
    auto divisors = std::make_shared<std::vector<GInt>>(box_elements(bound, false));
    return [bound, nonzero_a, visit, divisors](std::size_t task, Accumulator& acc) {
        const std::int64_t ax = static_cast<std::int64_t>(task) - bound;
        for (std::int64_t ay = -bound; ay <= bound; ++ay) {
            if (nonzero_a && ax == 0 && ay == 0) continue;
            const GInt a(ax, ay);
            for (std::size_t k = 0; k < divisors->size(); ++k) {
                acc.count_case();
                visit(a, (*divisors)[k], k, acc);
            }
        }
    };
}

}  // namespace

VerifyReport check_phi_oracle(const BoxSpec& box) {
    guard_elements(box.bound);
    const std::vector<std::string> checks{"phi_equals_min_degree"};
    auto body = element_rows(box.bound, [](const GInt& z, Accumulator& acc) {
        const std::uint64_t formula = phi(z);
        const std::uint64_t oracle = min_degree_bfs(z);
        acc.check(0, formula == oracle, [&] {
            return describe("z=" + to_string(z), std::to_string(formula), std::to_string(oracle));
        });
    });
    return run_tasks("phi-oracle", checks, side(box.bound), box, body);
}

VerifyReport check_division(const BoxSpec& box) {
    guard_pairs(box.pair_bound);
    enum { kReconstruct, kDescent, kUnitShift, kElseSign };
    const std::vector<std::string> checks{"reconstruction", "strict_descent", "unit_adjustment",
                                          "else_branch_sign_defined"};
    auto body = pair_rows(box.pair_bound, false,
                          [](const GInt& a, const GInt& b, std::size_t, Accumulator& acc) {
        const DivisionOutcome out = minimal_divide(a, b);
        const auto input = [&] { return pair_input(a, b); };

        const GInt rebuilt = out.quotient * b + out.remainder;
        acc.check(kReconstruct, rebuilt == a, [&] { return describe(input(), to_string(rebuilt), to_string(a)); });

        const bool descends = out.remainder.is_zero() || phi(out.remainder) < out.phi_b;
        acc.check(kDescent, descends, [&] {
            return describe(input(), "r=" + to_string(out.remainder) + " phi(r)=" + std::to_string(phi(out.remainder)),
                            "phi(r) < " + std::to_string(out.phi_b));
        });

        std::string key(to_string(out.strategy));
        if (out.condition) key += "/" + std::string(to_string(*out.condition));
        acc.tally(key, input);

        if (out.strategy != Strategy::Gauss) {
            const GInt shift = out.quotient - out.gauss_quotient;
            acc.check(kUnitShift, is_unit(shift), [&] { return describe(input(), to_string(shift), "a unit"); });
        }
        if (out.strategy == Strategy::SubtractIU) {
            const int s = s_sign(out.gauss_remainder);
            acc.check(kElseSign, s != 0, [&] { return describe(input(), std::to_string(s), "+1 or -1"); });
        }
    });
    return run_tasks("division", checks, side(box.pair_bound), box, body);
}

namespace {

// Quantities of a divisor reused across every dividend.
struct DivisorFacts {
    std::uint64_t phi = 0;
    std::uint64_t v2 = 0;
    Integer norm, l1, linf, m;
    Unit unit;
    int imag_sign = 0;  // sign of Im(u_b b)
};

std::vector<DivisorFacts> divisor_facts(std::int64_t bound) {
    std::vector<DivisorFacts> out;
    for (const GInt& b : box_elements(bound, false)) {
        DivisorFacts f;
        f.phi = phi(b);
        f.v2 = v2(b);
        f.norm = norm(b);
        f.l1 = l1(b);
        f.linf = linf(b);
        f.m = m_min(b);
        f.unit = canonical_unit(b);
        f.imag_sign = sgn((f.unit * b).imag());
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

VerifyReport check_lemma_bounds(const BoxSpec& box) {
    guard_pairs(box.pair_bound);
    enum {
        kNormHalf, kL1Bound, kLinfBound, kStrict, kScaling, kValuation, kDiffIsLess, kTwoValNmid,
        kRemainderProps, kBigDiff, kImAlign, kTwisted, kMbAtLeastLinfR, kMrMbAtMostLinfR,
        kBetweenLeq, kBetweenGt
    };
    const std::vector<std::string> checks{
        "gauss_norm_half", "l1_r_le_linf_b", "linf_r_le_half_l1_b", "strict_when_phi_not_lower",
        "scaling", "valuation_fast_path", "diff_is_less", "two_val_nmid", "remainder_properties",
        "big_diff", "im_align", "twisted", "mb_ge_linf_r", "mr_plus_mb_le_linf_r",
        "between_linf_b_minus_mr_le", "between_linf_b_minus_mr_gt"};
    const std::vector<GInt> scales{GInt(1, 1), GInt(2, 0), GInt(1, 2), GInt(-3, 1)};
    auto facts = std::make_shared<std::vector<DivisorFacts>>(divisor_facts(box.pair_bound));

    auto body = pair_rows(box.pair_bound, true,
                          [facts, scales](const GInt& a, const GInt& b, std::size_t k, Accumulator& acc) {
        const DivisorFacts& B = (*facts)[k];
        const std::uint64_t n = B.phi;
        const auto input = [&] { return pair_input(a, b); };
        auto [q, r] = gauss_divide(a, b);

        const Integer l1_r = l1(r);
        const Integer linf_r = linf(r);
        const Integer m_r = m_min(r);
        acc.check(kNormHalf, 2 * norm(r) <= B.norm, [&] {
            return describe(input(), "Nm(r)=" + norm(r).get_str(), "<= Nm(b)/2");
        });
        acc.check(kL1Bound, l1_r <= B.linf && B.linf < w(n), [&] {
            return describe(input(), "l1(r)=" + l1_r.get_str(), "<= linf(b) < w_n");
        });
        acc.check(kLinfBound, 2 * linf_r <= B.l1 && B.l1 < w(n + 1), [&] {
            return describe(input(), "linf(r)=" + linf_r.get_str(), "<= l1(b)/2 < w_(n-1)");
        });
        for (const GInt& z : scales) {
            auto [qz, rz] = gauss_divide(z * a, z * b);
            acc.check(kScaling, qz == q && rz == z * r, [&] {
                return describe(input() + " z=" + to_string(z), to_string(qz) + "," + to_string(rz),
                                to_string(q) + "," + to_string(z * r));
            });
        }
        if (r.is_zero()) return;

        const std::uint64_t phi_r = phi(r);
        const std::uint64_t v2_r = v2(r);
        if (v2_r <= B.v2) {
            acc.check(kValuation, phi_r < n, [&] {
                return describe(input(), "phi(r)=" + std::to_string(phi_r), "< " + std::to_string(n));
            });
        }
        if (phi_r < n || n == 0) return;

        // From here on: r != 0 and phi(r) >= phi(b) = n.
        acc.check(kStrict, 2 * linf_r < B.l1 && l1_r < B.linf, [&] {
            return describe(input(), "l1(r)=" + l1_r.get_str() + " linf(r)=" + linf_r.get_str(), "strict bounds");
        });
        acc.check(kDiffIsLess, B.linf - B.m <= w(n) - 3 * pow2(B.v2), [&] {
            return describe(input(), "linf(b)-m(b)=" + Integer(B.linf - B.m).get_str(), "<= w_n - 3*2^v2(b)");
        });

        const Integer w_prev = w(n - 1);
        const Integer w_n = w(n);
        const Integer cap_b = w_prev - pow2(B.v2 + 1);
        const Unit ur = canonical_unit(r);
        const GInt ur_r = ur * r;
        const GInt along = r - (B.unit / ur) * b;
        const auto lowers = [&](const GInt& rem) { return rem.is_zero() || phi(rem) < n; };
        const auto show = [&](const GInt& rem) {
            return to_string(rem) + (rem.is_zero() ? "" : " phi=" + std::to_string(phi(rem)));
        };

        if (!power_of_two_divides(v2_r, w_prev)) {
            acc.check(kTwoValNmid, sgn(m_r) == 0 && lowers(along), [&] {
                return describe(input(), "m(r)=" + m_r.get_str() + " r'=" + show(along), "m(r)=0, phi(r')<n");
            });
        } else {
            const Integer pr = pow2(v2_r);
            const bool divides_all = power_of_two_divides(v2_r, w_n);
            const bool at_top = linf_r == w_prev - pr;
            const bool either = at_top || l1_r >= w_n - 2 * pr;
            const bool linf_low = linf_r >= w_n - w_prev;
            const bool l1_low = l1_r >= w_prev - pr;
            const bool m_low = at_top || m_r >= w_n - w_prev;
            acc.check(kRemainderProps, divides_all && either && linf_low && l1_low && m_low, [&] {
                return describe(input(), "r=" + to_string(r), "remainder inequalities");
            });
            acc.check(kBigDiff, m_r <= cap_b && linf_r <= cap_b && B.linf - linf_r <= cap_b, [&] {
                return describe(input(), "r=" + to_string(r), "<= " + cap_b.get_str());
            });
        }

        if (B.imag_sign * sgn(ur_r.imag()) >= 0) {
            acc.check(kImAlign, lowers(along), [&] { return describe(input(), show(along), "phi < n"); });
            return;
        }

        const int s = sgn(ur_r.imag());
        const Unit twist_unit = Unit::i() * B.unit / (Unit::from_sign(s) * ur);
        const GInt twist = r - twist_unit * b;
        const GInt ub_b = B.unit * b;
        const GInt diff = ub_b - ur_r;
        const GInt turned = ub_b + Unit::from_sign(s) * (Unit::i() * ur_r);
        const bool first_form = diff.real() == B.linf - linf_r && abs(diff.imag()) == B.m + m_r;
        const bool second_form = turned.real() == B.linf - m_r && abs(turned.imag()) == abs(B.m - linf_r);
        acc.check(kTwisted, first_form && second_form, [&] {
            return describe(input(), to_string(diff) + "," + to_string(turned), "twisted forms");
        });

        if (B.m >= linf_r) {
            acc.check(kMbAtLeastLinfR, lowers(twist), [&] { return describe(input(), show(twist), "phi < n"); });
        }
        if (m_r + B.m <= linf_r) {
            acc.check(kMrMbAtMostLinfR, lowers(along), [&] { return describe(input(), show(along), "phi < n"); });
        }
        if (B.m < linf_r && linf_r < B.m + m_r) {
            if (B.linf - m_r <= cap_b) {
                acc.check(kBetweenLeq, lowers(twist), [&] { return describe(input(), show(twist), "phi < n"); });
            } else {
                acc.check(kBetweenGt, lowers(along), [&] { return describe(input(), show(along), "phi < n"); });
            }
        }
    });
    return run_tasks("lemma-bounds", checks, side(box.pair_bound), box, body);
}

VerifyReport check_corollary4(const BoxSpec& box) {
    guard_pairs(box.pair_bound);
    enum { kLiteral, kStrict };
    const std::vector<std::string> checks{"v2a_le_v2b_implies_descent", "v2a_lt_v2b_implies_descent"};
    auto body = pair_rows(box.pair_bound, true,
                          [](const GInt& a, const GInt& b, std::size_t, Accumulator& acc) {
        const std::uint64_t va = v2(a);
        const std::uint64_t vb = v2(b);
        if (va > vb) return;
        const GInt r = gauss_divide(a, b).remainder;
        const std::uint64_t pb = phi(b);
        const bool descends = r.is_zero() || phi(r) < pb;
        const auto report = [&] {
            return describe(pair_input(a, b) + " v2(a)=" + std::to_string(va) + " v2(b)=" + std::to_string(vb),
                            "r=" + to_string(r) + " phi(r)=" + std::to_string(phi(r)), "phi(r) < " + std::to_string(pb));
        };
        acc.check(kLiteral, descends, report);
        if (va < vb) acc.check(kStrict, descends, report);
    });
    return run_tasks("corollary4", checks, side(box.pair_bound), box, body, true);
}

VerifyReport check_expansion(const BoxSpec& box) {
    guard_elements(box.bound);
    enum { kRoundTrip, kNormalized, kDegreePhi, kDegreeOracle };
    const std::vector<std::string> checks{"round_trip", "normalized", "degree_equals_phi", "degree_equals_min_degree"};
    auto body = element_rows(box.bound, [](const GInt& z, Accumulator& acc) {
        const Expansion e = minimal_expansion(z);
        const auto input = [&] { return "z=" + to_string(z); };
        acc.check(kNormalized, e.normalized(), [&] { return describe(input(), to_string(e), "nonzero top digit"); });
        const GInt back = eval_expansion(e);
        acc.check(kRoundTrip, back == z, [&] { return describe(input(), to_string(back), to_string(z)); });
        const std::uint64_t p = phi(z);
        acc.check(kDegreePhi, e.degree() == p, [&] {
            return describe(input(), std::to_string(e.degree()), std::to_string(p));
        });
        const std::uint64_t oracle = min_degree_bfs(z);
        acc.check(kDegreeOracle, e.degree() == oracle, [&] {
            return describe(input(), std::to_string(e.degree()), std::to_string(oracle));
        });
    });
    return run_tasks("expansion", checks, side(box.bound), box, body);
}

VerifyReport check_invariance(const BoxSpec& box) {
    guard_elements(box.bound);
    enum { kUnits, kDouble, kOnePlusI, kConjugate };
    const std::vector<std::string> checks{"unit_invariance", "double_adds_two", "one_plus_i_adds_one",
                                          "conjugate_invariance"};
    auto body = element_rows(box.bound, [](const GInt& z, Accumulator& acc) {
        const std::uint64_t p = phi(z);
        const auto input = [&] { return "z=" + to_string(z); };
        for (Unit u : Unit::all()) {
            const std::uint64_t pu = phi(u * z);
            acc.check(kUnits, pu == p, [&] {
                return describe(input() + " u=" + u.to_string(), std::to_string(pu), std::to_string(p));
            });
        }
        const std::uint64_t p2 = phi(GInt(2) * z);
        acc.check(kDouble, p2 == p + 2, [&] { return describe(input(), std::to_string(p2), std::to_string(p + 2)); });
        const std::uint64_t p1 = phi(GInt(1, 1) * z);
        acc.check(kOnePlusI, p1 == p + 1, [&] { return describe(input(), std::to_string(p1), std::to_string(p + 1)); });
        const std::uint64_t pc = phi(conj(z));
        acc.check(kConjugate, pc == p, [&] { return describe(input(), std::to_string(pc), std::to_string(p)); });
    });
    return run_tasks("invariance", checks, side(box.bound), box, body);
}

namespace {

enum { kAgree, kMinimalDescent, kNormDescent, kStepsChain, kBezoutMinimal, kBezoutNorm, kDividesInputs };

void check_gcd_pair(const GInt& a, const GInt& b, Accumulator& acc) {
    const auto input = [&] { return pair_input(a, b); };
    const EuclidTrace tm = gcd_minimal(a, b);
    const EuclidTrace tn = gcd_norm(a, b);
    acc.check(kAgree, tm.gcd_canonical == tn.gcd_canonical, [&] {
        return describe(input(), to_string(tm.gcd_canonical), to_string(tn.gcd_canonical));
    });

    const auto descends = [](const EuclidTrace& t) {
        for (std::size_t k = 1; k < t.steps.size(); ++k) {
            if (t.steps[k].measure_divisor >= t.steps[k - 1].measure_divisor) return false;
        }
        return true;
    };
    acc.check(kMinimalDescent, descends(tm), [&] { return describe(input(), "minimal trace", "strict descent"); });
    acc.check(kNormDescent, descends(tn), [&] { return describe(input(), "norm trace", "strict descent"); });

    const auto chains = [](const EuclidTrace& t) {
        for (std::size_t k = 0; k < t.steps.size(); ++k) {
            const EuclidStep& s = t.steps[k];
            if (s.quotient * s.divisor + s.remainder != s.dividend) return false;
            if (k + 1 < t.steps.size() &&
                (t.steps[k + 1].dividend != s.divisor || t.steps[k + 1].divisor != s.remainder)) {
                return false;
            }
        }
        return t.steps.empty() || t.steps.back().remainder.is_zero();
    };
    acc.check(kStepsChain, chains(tm) && chains(tn), [&] { return describe(input(), "trace", "chained steps"); });

    for (Engine e : {Engine::Minimal, Engine::Norm}) {
        const Bezout bz = xgcd(a, b, e);
        const GInt lhs = bz.s * a + bz.t * b;
        acc.check(e == Engine::Minimal ? kBezoutMinimal : kBezoutNorm, lhs == bz.g && bz.g == tm.gcd_canonical, [&] {
            return describe(input(), to_string(lhs), to_string(bz.g));
        });
    }

    const GInt& g = tm.gcd_canonical;
    acc.check(kDividesInputs, exact_div(a, g).has_value() && exact_div(b, g).has_value(), [&] {
        return describe(input(), to_string(g), "common divisor");
    });
}

}  // namespace

VerifyReport check_gcd_engines(const BoxSpec& box, const GcdRandomSpec& random) {
    guard_pairs(box.pair_bound);
    const std::vector<std::string> checks{"engines_agree", "minimal_descent", "norm_descent", "steps_chain",
                                          "bezout_minimal", "bezout_norm", "gcd_divides_inputs"};

    // Operands are drawn up front so the sequence depends only on the seed.
    auto randoms = std::make_shared<std::vector<std::pair<GInt, GInt>>>();
    std::mt19937_64 rng(random.seed);
    for (std::uint64_t k = 0; k < random.pairs; ++k) {
        GInt a = random_gint(random.bits, rng);
        GInt b = random_gint(random.bits, rng);
        randoms->emplace_back(std::move(a), std::move(b));
    }
    constexpr std::size_t kChunk = 16;
    const std::size_t rows = side(box.pair_bound);
    const std::size_t random_tasks = (randoms->size() + kChunk - 1) / kChunk;
    const std::int64_t bound = box.pair_bound;
    auto divisors = std::make_shared<std::vector<GInt>>(box_elements(bound, true));

    auto body = [=](std::size_t task, Accumulator& acc) {
        if (task < rows) {
            const std::int64_t ax = static_cast<std::int64_t>(task) - bound;
            for (std::int64_t ay = -bound; ay <= bound; ++ay) {
                const GInt a(ax, ay);
                for (const GInt& b : *divisors) {
                    if (a.is_zero() && b.is_zero()) continue;
                    acc.count_case();
                    check_gcd_pair(a, b, acc);
                }
            }
            return;
        }
        const std::size_t begin = (task - rows) * kChunk;
        const std::size_t end = std::min(begin + kChunk, randoms->size());
        for (std::size_t k = begin; k < end; ++k) {
            acc.count_case();
            check_gcd_pair((*randoms)[k].first, (*randoms)[k].second, acc);
        }
    };
    return run_tasks("gcd", checks, rows + random_tasks, box, body);
}

}  // namespace gaussphi
