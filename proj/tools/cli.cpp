#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "gaussphi/division.hpp"
#include "gaussphi/euclid.hpp"
#include "gaussphi/expansion.hpp"
#include "gaussphi/gint.hpp"
#include "gaussphi/phi.hpp"
#include "gaussphi/random.hpp"
#include "gaussphi/verify.hpp"

namespace gaussphi::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Response {
    json inputs = json::object();
    json result = json::object();
    json diagnostics = json::object();
    std::function<void(std::ostream&)> human;
    int exit_code = kSuccess;
};

std::string str(const GInt& z) { return to_string(z); }

json optional_u64(const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); }

// ---------------------------------------------------------------- phi

Response cmd_phi(const GInt& z) {
    const PhiBreakdown p = phi_breakdown(z);
    Response r;
    r.inputs = {{"z", str(z)}};
    r.result = {{"phi", p.value},
                {"j", p.j},
                {"n", p.n},
                {"branch", p.l1_within ? "n+2j" : "n+2j+1"}};
    r.human = [=](std::ostream& os) {
        os << "phi(" << str(z) << ") = " << p.value << "\n"
           << "  j = v2(z) = " << p.j << ", n = " << p.n << "\n"
           << "  branch: " << (p.l1_within ? "n+2j (l1/2^j <= w(n+1) - 3)" : "n+2j+1 (l1/2^j > w(n+1) - 3)")
           << "\n";
    };
    return r;
}

// ---------------------------------------------------------------- divide

Response cmd_divide(const GInt& a, const GInt& b) {
    const DivisionOutcome d = minimal_divide(a, b);
    Response r;
    r.inputs = {{"a", str(a)}, {"b", str(b)}};
    r.result = {
        {"gauss", {{"quotient", str(d.gauss_quotient)},
                   {"remainder", str(d.gauss_remainder)},
                   {"phi_r", optional_u64(d.gauss_phi_r)}}},
        {"final", {{"quotient", str(d.quotient)},
                   {"remainder", str(d.remainder)},
                   {"strategy", std::string(to_string(d.strategy))},
                   {"condition", d.condition ? json(std::string(to_string(*d.condition))) : json(nullptr)},
                   {"phi_b", d.phi_b},
                   {"phi_r", optional_u64(d.phi_r)}}}};
    r.human = [=](std::ostream& os) {
        const auto phi_text = [](const std::optional<std::uint64_t>& v) {
            return v ? std::to_string(*v) : std::string("-");
        };
        os << "a = " << str(a) << ", b = " << str(b) << ", phi(b) = " << d.phi_b << "\n"
           << "gauss:   q = " << str(d.gauss_quotient) << ", r = " << str(d.gauss_remainder)
           << ", phi(r) = " << phi_text(d.gauss_phi_r) << "\n"
           << "final:   q = " << str(d.quotient) << ", r = " << str(d.remainder)
           << ", phi(r) = " << phi_text(d.phi_r) << "\n"
           << "strategy: " << to_string(d.strategy);
        if (d.condition) os << " (" << to_string(*d.condition) << ")";
        os << "\n";
    };
    return r;
}

// ---------------------------------------------------------------- gcd

Engine parse_engine(const std::string& name) {
    if (name == "minimal") return Engine::Minimal;
    if (name == "norm") return Engine::Norm;
    throw UsageError("unknown engine '" + name + "' (expected minimal or norm)");
}

Response cmd_gcd(const GInt& a, const GInt& b, Engine engine, bool extended) {
    const EuclidTrace trace = gcd_trace(a, b, engine);
    std::optional<Bezout> bezout;
    if (extended) bezout = xgcd(a, b, engine);

    Response r;
    r.inputs = {{"a", str(a)}, {"b", str(b)}, {"engine", std::string(to_string(engine))}, {"extended", extended}};
    json steps = json::array();
    for (const EuclidStep& s : trace.steps) {
        steps.push_back({{"dividend", str(s.dividend)},
                         {"divisor", str(s.divisor)},
                         {"quotient", str(s.quotient)},
                         {"remainder", str(s.remainder)},
                         {"measure_divisor", s.measure_divisor.get_str()},
                         {"strategy", std::string(to_string(s.strategy))}});
    }
    r.result = {{"gcd", str(trace.gcd_canonical)},
                {"gcd_raw", str(trace.gcd_raw)},
                {"step_count", trace.steps.size()},
                {"steps", std::move(steps)}};
    if (bezout) r.result["bezout"] = {{"s", str(bezout->s)}, {"t", str(bezout->t)}};

    r.human = [=](std::ostream& os) {
        os << "gcd(" << str(a) << ", " << str(b) << ") = " << str(trace.gcd_canonical) << "  [engine "
           << to_string(engine) << ", " << trace.steps.size() << " steps]\n";
        const char* measure = engine == Engine::Minimal ? "phi(b)" : "Nm(b)";
        os << std::left << std::setw(6) << "step" << std::setw(18) << "a" << std::setw(18) << "b" << std::setw(18)
           << "q" << std::setw(18) << "r" << std::setw(10) << measure << "strategy\n";
        for (std::size_t k = 0; k < trace.steps.size(); ++k) {
            const EuclidStep& s = trace.steps[k];
            os << std::setw(6) << k << std::setw(18) << str(s.dividend) << std::setw(18) << str(s.divisor)
               << std::setw(18) << str(s.quotient) << std::setw(18) << str(s.remainder) << std::setw(10)
               << s.measure_divisor.get_str() << to_string(s.strategy) << "\n";
        }
        if (bezout) {
            os << "bezout: (" << str(bezout->s) << ")*(" << str(a) << ") + (" << str(bezout->t) << ")*(" << str(b)
               << ") = " << str(bezout->g) << "\n";
        }
    };
    return r;
}

// ---------------------------------------------------------------- expand

Response cmd_expand(const GInt& z) {
    const Expansion e = minimal_expansion(z);
    const GInt back = eval_expansion(e);
    const std::uint64_t p = phi(z);
    Response r;
    r.inputs = {{"z", str(z)}};
    r.result = {{"digits", to_string(e)},
                {"degree", e.degree()},
                {"phi", p},
                {"reevaluated", str(back)},
                {"round_trip", back == z}};
    r.human = [=](std::ostream& os) {
        os << "digits (little-endian): " << to_string(e) << "\n"
           << "degree: " << e.degree() << " (phi = " << p << ")\n"
           << "re-evaluated: " << str(back) << (back == z ? " (ok)" : " (MISMATCH)") << "\n";
    };
    if (back != z) r.exit_code = kVerificationFailed;
    return r;
}

// ---------------------------------------------------------------- verify

json report_json(const VerifyReport& rep) {
    json checks = json::array();
    for (const CheckTally& c : rep.checks) {
        checks.push_back({{"name", c.name}, {"matched", c.matched}, {"failed", c.failed}});
    }
    json failures = json::array();
    for (const Counterexample& f : rep.failures) {
        failures.push_back(
            {{"check", f.check}, {"input", f.input}, {"observed", f.observed}, {"expected", f.expected}});
    }
    json tallies = json::object();
    for (const auto& [k, v] : rep.tallies) tallies[k] = {{"count", v}, {"first", rep.first_seen.at(k)}};
    return {{"suite", rep.suite},
            {"cases", rep.cases},
            {"passed", rep.passed()},
            {"reporting_only", rep.reporting_only},
            {"failure_count", rep.failure_count},
            {"checks", std::move(checks)},
            {"tallies", std::move(tallies)},
            {"failures", std::move(failures)}};
}

void print_report(std::ostream& os, const VerifyReport& rep) {
    os << "suite " << rep.suite << ": " << rep.cases << " cases, " << rep.failure_count
       << (rep.reporting_only ? " findings" : " failures") << " (" << std::fixed << std::setprecision(2)
       << rep.seconds << " s)\n";
    os.unsetf(std::ios::floatfield);
    for (const CheckTally& c : rep.checks) {
        os << "  " << std::left << std::setw(34) << c.name << " matched " << std::setw(10) << c.matched << " failed "
           << c.failed << (c.matched == 0 ? "  [0 cases matched]" : "") << "\n";
    }
    for (const auto& [k, v] : rep.tallies) {
        os << "  tally " << std::left << std::setw(26) << k << " " << std::setw(10) << v << " first "
           << rep.first_seen.at(k) << "\n";
    }
    for (const Counterexample& f : rep.failures) {
        os << "  " << (rep.reporting_only ? "finding " : "FAIL ") << f.check << ": " << f.input << " observed "
           << f.observed << ", expected " << f.expected << "\n";
    }
    if (rep.failure_count > rep.failures.size()) {
        os << "  ... " << rep.failure_count - rep.failures.size() << " more not shown\n";
    }
    if (rep.reporting_only) {
        os << "REPORT\n";
    } else {
        os << (rep.passed() ? "PASS" : "FAIL") << "\n";
    }
}

struct VerifyArgs {
    std::string suite;
    BoxSpec box;
    GcdRandomSpec random;
};

Response cmd_verify(const VerifyArgs& args) {
    VerifyReport rep;
    const std::string& s = args.suite;
    if (s == "phi-oracle") {
        rep = check_phi_oracle(args.box);
    } else if (s == "division") {
        rep = check_division(args.box);
    } else if (s == "lemma-bounds") {
        rep = check_lemma_bounds(args.box);
    } else if (s == "corollary4") {
        rep = check_corollary4(args.box);
    } else if (s == "expansion") {
        rep = check_expansion(args.box);
    } else if (s == "invariance") {
        rep = check_invariance(args.box);
    } else if (s == "gcd") {
        rep = check_gcd_engines(args.box, args.random);
    } else {
        throw UsageError("unknown suite '" + s + "'");
    }

    Response r;
    r.inputs = {{"suite", s},
                {"bound", args.box.bound},
                {"pair_bound", args.box.pair_bound},
                {"random_pairs", args.random.pairs},
                {"bits", args.random.bits},
                {"seed", args.random.seed}};
    r.result = report_json(rep);
    json warnings = json::array();
    for (const CheckTally& c : rep.checks) {
        if (c.matched == 0) warnings.push_back("check " + c.name + " matched 0 cases (vacuous)");
    }
    r.diagnostics = {{"seconds", rep.seconds}, {"warnings", warnings}};
    r.human = [rep, warnings](std::ostream& os) {
        print_report(os, rep);
        for (const auto& w : warnings) os << "warning: " << w.get<std::string>() << "\n";
    };
    r.exit_code = (rep.passed() || rep.reporting_only) ? kSuccess : kVerificationFailed;
    return r;
}

// ---------------------------------------------------------------- levelset

Response cmd_levelset(std::int64_t bound, bool header, bool json_mode) {
    if (bound < 1) throw UsageError("levelset bound must be positive");
    const auto side = static_cast<std::uint64_t>(2 * bound + 1);
    if (bound > 100'000 || side * side > kMaxSuiteCases) {
        throw UsageError("levelset bound " + std::to_string(bound) + " exceeds the case limit");
    }
    // y outer, x inner, both ascending; the origin is skipped.
    const auto for_each_point = [bound](auto&& fn) {
        for (std::int64_t y = -bound; y <= bound; ++y) {
            for (std::int64_t x = -bound; x <= bound; ++x) {
                if (x == 0 && y == 0) continue;
                fn(x, y, phi(GInt(x, y)));
            }
        }
    };

    Response r;
    r.inputs = {{"bound", bound}};
    if (json_mode) {
        json rows = json::array();
        for_each_point([&](std::int64_t x, std::int64_t y, std::uint64_t p) { rows.push_back({x, y, p}); });
        r.result = {{"columns", {"x", "y", "phi"}}, {"rows", std::move(rows)}};
    } else {
        r.human = [for_each_point, header](std::ostream& os) {
            if (header) os << "x,y,phi\n";
            for_each_point([&](std::int64_t x, std::int64_t y, std::uint64_t p) {
                os << x << ',' << y << ',' << p << '\n';
            });
        };
    }
    return r;
}

// ---------------------------------------------------------------- bench

struct Summary {
    double median_us = 0;
    double p90_us = 0;
};

Summary summarize(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    const auto at = [&](double q) {
        const auto idx = static_cast<std::size_t>(q * static_cast<double>(samples.size() - 1) + 0.5);
        return samples[std::min(idx, samples.size() - 1)];
    };
    return {at(0.5), at(0.9)};
}

// FNV-1a over the hex digits of each operand, so runs can be compared for identical inputs.
class OperandDigest {
public:
    void add(const GInt& z) {
        mix(z.real().get_str(16));
        mix(z.imag().get_str(16));
    }
    std::string hex() const {
        std::ostringstream os;
        os << std::hex << std::setw(16) << std::setfill('0') << state_;
        return os.str();
    }

private:
    void mix(const std::string& s) {
        for (unsigned char c : s) {
            state_ ^= c;
            state_ *= 0x100000001b3ULL;
        }
        state_ ^= 0xff;
        state_ *= 0x100000001b3ULL;
    }
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

volatile std::uint64_t g_bench_sink = 0;

struct BenchRow {
    std::uint64_t bits = 0;
    Summary phi, gauss, minimal;
};

template <class Fn>
double time_us(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
}

BenchRow bench_size(std::uint64_t bits, std::uint64_t trials, std::mt19937_64& rng, OperandDigest& digest) {
    std::vector<double> t_phi, t_gauss, t_min;
    std::uint64_t sink = 0;
    for (std::uint64_t k = 0; k < trials; ++k) {
        const GInt a = random_gint(bits, rng);
        const GInt b = random_gint(bits, rng);
        digest.add(a);
        digest.add(b);
        t_phi.push_back(time_us([&] { sink += phi(a); }));
        t_gauss.push_back(time_us([&] { sink += gauss_divide(a, b).remainder.is_zero() ? 1 : 0; }));
        t_min.push_back(time_us([&] { sink += minimal_divide(a, b).phi_b; }));
    }
    g_bench_sink = sink;
    return {bits, summarize(std::move(t_phi)), summarize(std::move(t_gauss)), summarize(std::move(t_min))};
}

Response cmd_bench(std::uint64_t bits, std::uint64_t trials, const std::vector<std::uint64_t>& scale_bits,
                   std::uint64_t seed) {
    if (bits == 0 || trials == 0) throw UsageError("bits and trials must be positive");
    std::mt19937_64 rng(seed);
    OperandDigest digest;
    const BenchRow main_row = bench_size(bits, trials, rng, digest);
    std::vector<BenchRow> table;
    for (std::uint64_t sb : scale_bits) {
        if (sb == 0) throw UsageError("scale bit sizes must be positive");
        table.push_back(bench_size(sb, trials, rng, digest));
    }

    const auto summary_json = [](const Summary& s) { return json{{"median_us", s.median_us}, {"p90_us", s.p90_us}}; };
    const auto row_json = [&](const BenchRow& row) {
        return json{{"bits", row.bits},
                    {"phi", summary_json(row.phi)},
                    {"gauss_divide", summary_json(row.gauss)},
                    {"minimal_divide", summary_json(row.minimal)}};
    };

    Response r;
    r.inputs = {{"bits", bits}, {"trials", trials}, {"scale_bits", scale_bits}, {"seed", seed}};
    json scaling = json::array();
    for (const auto& row : table) scaling.push_back(row_json(row));
    r.result = {{"measurement", row_json(main_row)}, {"scaling", std::move(scaling)}};
    r.diagnostics = {{"operand_digest", digest.hex()}};
    r.human = [=](std::ostream& os) {
        const auto line = [&](const BenchRow& row) {
            os << std::right << std::setw(10) << row.bits << std::fixed << std::setprecision(2) << std::setw(14)
               << row.phi.median_us << std::setw(14) << row.phi.p90_us << std::setw(14) << row.gauss.median_us
               << std::setw(14) << row.gauss.p90_us << std::setw(14) << row.minimal.median_us << std::setw(14)
               << row.minimal.p90_us << "\n";
        };
        const auto head = [&] {
            os << std::right << std::setw(10) << "bits" << std::setw(14) << "phi med us" << std::setw(14)
               << "phi p90 us" << std::setw(14) << "gauss med" << std::setw(14) << "gauss p90" << std::setw(14)
               << "minimal med" << std::setw(14) << "minimal p90" << "\n";
        };
        os << "measurement (" << trials << " trials, seed " << seed << ")\n";
        head();
        line(main_row);
        os << "scaling table\n";
        head();
        for (const auto& row : table) line(row);
        os.unsetf(std::ios::floatfield);
        os << "operand digest: " << digest.hex() << "\n";
    };
    return r;
}

// ---------------------------------------------------------------- driver

GInt parse_operand(const std::string& text) {
    try {
        return parse_gint(text);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
}

void write(std::ostream& out, bool json_mode, const std::string& command, const Response& r) {
    if (json_mode) {
        json doc = {{"command", command}, {"inputs", r.inputs}, {"result", r.result}, {"diagnostics", r.diagnostics}};
        out << doc.dump(2) << "\n";
    } else if (r.human) {
        r.human(out);
    }
}

int fail(std::ostream& out, std::ostream& err, bool json_mode, const std::string& command, int code,
         const std::string& message) {
    err << "error: " << message << "\n";
    if (json_mode) {
        json doc = {{"command", command},
                    {"inputs", json::object()},
                    {"result", nullptr},
                    {"diagnostics", {{"error", message}, {"exit_code", code}}}};
        out << doc.dump(2) << "\n";
    }
    return code;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    // A bare "-i" would be read as a short flag; spell it as a coefficient.
    for (auto& a : args) {
        if (a == "-i") a = "-1i";
    }

    CLI::App app{"Minimal Euclidean function on the Gaussian integers", "gaussphi"};
    app.fallthrough();
    app.require_subcommand(1);
    bool json_mode = false;
    std::optional<std::uint64_t> seed;
    app.add_flag("--json", json_mode, "Emit a single JSON object");
    app.add_option("--seed", seed, "Seed for randomized suites and benchmarks");

    std::string z_text, a_text, b_text;

    auto* phi_cmd = app.add_subcommand("phi", "Evaluate phi(z) with the closed form");
    phi_cmd->add_option("z", z_text, "Gaussian integer, e.g. 4+i")->required();

    auto* divide_cmd = app.add_subcommand("divide", "Gauss division and the phi-decreasing division");
    divide_cmd->add_option("a", a_text)->required();
    divide_cmd->add_option("b", b_text)->required();

    std::string engine_name = "minimal";
    bool extended = false;
    auto* gcd_cmd = app.add_subcommand("gcd", "Euclidean algorithm with a full trace");
    gcd_cmd->add_option("a", a_text)->required();
    gcd_cmd->add_option("b", b_text)->required();
    gcd_cmd->add_option("--engine", engine_name, "minimal or norm");
    gcd_cmd->add_flag("--extended", extended, "Also print Bezout coefficients");

    auto* expand_cmd = app.add_subcommand("expand", "Minimal (1+i)-ary expansion");
    expand_cmd->add_option("z", z_text)->required();

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive property suite");
    verify_cmd
        ->add_option("suite", verify_args.suite,
                     "phi-oracle | division | lemma-bounds | corollary4 | expansion | invariance | gcd")
        ->required();
    verify_cmd->add_option("--bound", verify_args.box.bound, "Element box half-width");
    verify_cmd->add_option("--pair-bound", verify_args.box.pair_bound, "Pair box half-width");
    verify_cmd->add_option("--threads", verify_args.box.threads, "Worker threads (0 = all cores)");
    verify_cmd->add_option("--random-pairs", verify_args.random.pairs, "Random operand pairs (gcd suite)");
    verify_cmd->add_option("--bits", verify_args.random.bits, "Bits per random coordinate (gcd suite)");
    verify_cmd->add_option("--max-failures", verify_args.box.max_failures, "Counterexamples to list");

    std::int64_t level_bound = 8;
    bool level_header = false;
    auto* level_cmd = app.add_subcommand("levelset", "CSV rows x,y,phi over a box");
    level_cmd->add_option("--bound", level_bound, "Box half-width");
    level_cmd->add_flag("--header", level_header, "Prefix a header row");

    std::uint64_t bench_bits = 1024;
    std::uint64_t bench_trials = 100;
    std::vector<std::uint64_t> scale_bits{1024, 8192, 65536};
    auto* bench_cmd = app.add_subcommand("bench", "Time phi and the divisions on random operands");
    bench_cmd->add_option("--bits", bench_bits, "Bits per coordinate");
    bench_cmd->add_option("--trials", bench_trials, "Trials per size");
    bench_cmd->add_option("--scale-bits", scale_bits, "Bit sizes for the scaling table")->delimiter(',');

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        return fail(out, err, json_mode, "", kUsageError, e.what());
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        Response r;
        if (phi_cmd->parsed()) {
            r = cmd_phi(parse_operand(z_text));
        } else if (divide_cmd->parsed()) {
            r = cmd_divide(parse_operand(a_text), parse_operand(b_text));
        } else if (gcd_cmd->parsed()) {
            r = cmd_gcd(parse_operand(a_text), parse_operand(b_text), parse_engine(engine_name), extended);
        } else if (expand_cmd->parsed()) {
            r = cmd_expand(parse_operand(z_text));
        } else if (verify_cmd->parsed()) {
            verify_args.random.seed = seed.value_or(1);
            r = cmd_verify(verify_args);
        } else if (level_cmd->parsed()) {
            r = cmd_levelset(level_bound, level_header, json_mode);
        } else if (bench_cmd->parsed()) {
            r = cmd_bench(bench_bits, bench_trials, scale_bits, seed.value_or(1));
        }
        write(out, json_mode, command, r);
        return r.exit_code;
    } catch (const UsageError& e) {
        return fail(out, err, json_mode, command, kUsageError, e.what());
    } catch (const GuardError& e) {
        return fail(out, err, json_mode, command, kUsageError, e.what());
    } catch (const DomainError& e) {
        return fail(out, err, json_mode, command, kDomainError, e.what());
    }
}

}  // namespace gaussphi::cli
