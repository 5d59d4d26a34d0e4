#include "gaussphi/expansion.hpp"

#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "gaussphi/phi.hpp"

namespace gaussphi {

std::uint64_t Expansion::degree() const {
    if (digits.empty()) throw DomainError("the zero expansion has no degree");
    return digits.size() - 1;
}

GInt eval_expansion(const Expansion& e) {
    if (!e.normalized()) throw DomainError("expansion has a leading zero digit");
    const GInt base(1, 1);
    GInt acc;
    for (auto it = e.digits.rbegin(); it != e.digits.rend(); ++it) {
        acc = acc * base;
        if (!it->is_zero()) acc += GInt(*it->unit());
    }
    return acc;
}

Expansion minimal_expansion(const GInt& z) {
    if (z.is_zero()) throw DomainError("0 has no nonzero expansion");
    Expansion out;
    GInt current = z;
    for (;;) {
        if (auto u = as_unit(current)) {
            out.digits.emplace_back(*u);
            return out;
        }
        if (divisible_by_one_plus_i(current)) {
            out.digits.push_back(Digit::zero());
            current = div_one_plus_i(current);
            continue;
        }
        const std::uint64_t target = phi(current) - 1;
        bool advanced = false;
        for (Unit d : Unit::all()) {
            GInt next = div_one_plus_i(current - GInt(d));
            if (phi(next) == target) {
                out.digits.emplace_back(d);
                current = std::move(next);
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            throw std::logic_error("no unit digit lowers phi for " + to_string(current));
        }
    }
}

namespace {

using Point = std::pair<std::int64_t, std::int64_t>;

std::uint64_t pack(Point p) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.first)) << 32) |
           static_cast<std::uint32_t>(p.second);
}

// (x + yi) / (1 + i) for x, y of equal parity.
Point halve(std::int64_t x, std::int64_t y) { return {(x + y) / 2, (y - x) / 2}; }

constexpr Point kUnits[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

std::uint64_t min_degree_bfs(const GInt& z, std::int64_t norm_cap) {
    if (z.is_zero()) throw DomainError("0 has no nonzero expansion");
    if (norm(z) > norm_cap) throw DomainError("operand norm exceeds the search cap");

    const Point start{z.real().get_si(), z.imag().get_si()};
    std::unordered_set<std::uint64_t> seen{pack(start)};
    std::vector<Point> frontier{start};
    std::vector<Point> next;

    // Depth d means d digits consumed; reaching 0 after d digits gives degree d - 1.
    for (std::uint64_t depth = 1;; ++depth) {
        next.clear();
        for (auto [x, y] : frontier) {
            Point options[4];
            int count = 0;
            if (((x ^ y) & 1) == 0) {
                options[count++] = halve(x, y);
            } else {
                for (auto [ux, uy] : kUnits) options[count++] = halve(x - ux, y - uy);
            }
            for (int k = 0; k < count; ++k) {
                const Point p = options[k];
                if (p.first == 0 && p.second == 0) return depth - 1;
                if (seen.insert(pack(p)).second) next.push_back(p);
            }
        }
        if (next.empty()) throw std::logic_error("expansion search exhausted without reaching 0");
        std::swap(frontier, next);
    }
}

std::string to_string(const Expansion& e) {
    std::string out;
    for (std::size_t k = 0; k < e.digits.size(); ++k) {
        if (k > 0) out += ',';
        const Digit& d = e.digits[k];
        out += d.is_zero() ? std::string("0") : d.unit()->to_string();
    }
    return out;
}

Expansion parse_expansion(std::string_view text) {
    Expansion e;
    if (text.empty()) return e;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        if (tok == "0") {
            e.digits.push_back(Digit::zero());
        } else if (tok == "1") {
            e.digits.emplace_back(Unit::one());
        } else if (tok == "i") {
            e.digits.emplace_back(Unit::i());
        } else if (tok == "-1") {
            e.digits.emplace_back(Unit::minus_one());
        } else if (tok == "-i") {
            e.digits.emplace_back(Unit::minus_i());
        } else {
            throw ParseError("bad expansion digit '" + std::string(tok) + "'");
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return e;
}

}  // namespace gaussphi
