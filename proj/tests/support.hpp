#pragma once

#include <algorithm>
#include <vector>

#include "weyl/bracket.hpp"
#include "weyl/random.hpp"
#include "weyl/transform.hpp"

namespace testsupport {

using namespace weyl;

inline WeylElement mono(const char* c, std::int64_t xnum, std::int64_t level, std::int64_t y, bool comm = false) {
    return WeylElement::monomial(parse_rational(c), xnum, level, y, comm);
}

// Oracle: brute-force max-weight restriction, built term by term.
inline WeylElement oracle_leading(const WeylElement& p, const Direction& d) {
    Rational best;
    bool first = true;
    for (const auto& pt : p.support()) {
        Rational v = Rational(d.rho) * pt.x() + Rational(d.sigma * pt.y);
        if (first || v > best) best = v;
        first = false;
    }
    WeylElement out(p.level(), true);
    for (const auto& pt : p.support())
        if (Rational(d.rho) * pt.x() + Rational(d.sigma * pt.y) == best) out.add_term(pt.xnum, pt.y, p.coeff(pt));
    return out;
}

// Oracle: Val by scanning every pair of support points.
inline std::vector<Direction> oracle_val(const WeylElement& p) {
    std::vector<Direction> out;
    auto s = p.support();
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            Rational dx = s[j].x() - s[i].x(), dy = Rational(s[j].y - s[i].y);
            if (dx == dy) continue;
            Direction d = val_of_point(dx, dy);
            if (oracle_leading(p, d).size() > 1 && std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
        }
    std::sort(out.begin(), out.end(), [](const Direction& a, const Direction& b) { return a < b; });
    return out;
}

inline WeylElement oracle_commutator(const WeylElement& p, const WeylElement& q) {
    return multiply_oracle(p, q) - multiply_oracle(q, p);
}

}  // namespace testsupport

namespace testsupport {

// st/en straight from the definitions on the oracle leading part.
inline SupportPoint oracle_st(const WeylElement& p, const Direction& d) {
    auto lp = oracle_leading(p, d).support();
    SupportPoint best = lp.front();
    for (const auto& q : lp) {
        Rational kq = q.x() - q.y, kb = best.x() - best.y;
        if (kq > kb || (kq == kb && q.x() > best.x())) best = q;
    }
    return best;
}

inline SupportPoint oracle_en(const WeylElement& p, const Direction& d) {
    auto lp = oracle_leading(p, d).support();
    SupportPoint best = lp.front();
    for (const auto& q : lp) {
        Rational kq = Rational(q.y) - q.x(), kb = Rational(best.y) - best.x();
        if (kq > kb || (kq == kb && q.y > best.y)) best = q;
    }
    return best;
}

inline Direction random_any_direction(Rng& rng, std::int64_t bound = 6) {
    for (;;) {
        std::int64_t r = uniform(rng, -bound, bound), s = uniform(rng, -bound, bound);
        if (r + s >= 0 && gcd64(r, s) == 1) return Direction(r, s);
    }
}

}  // namespace testsupport

namespace testsupport {

inline WeylElement term(const Rational& c, const Rational& x, std::int64_t y, bool comm = false) {
    auto r = point_from(x, y).reduced();
    return WeylElement::monomial(c, r.xnum, r.level, r.y, comm);
}

inline std::int64_t binom(int n, int k) {
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace testsupport

namespace testsupport {

// phi by direct substitution Y -> Y + lambda X^{sigma/rho}, products through the rewriting oracle.
inline WeylElement oracle_phi(const WeylElement& p, const Rational& lambda, const Direction& d) {
    bool comm = p.commutative();
    Rational t(d.sigma, d.rho);
    t.canonicalize();
    WeylElement yphi = WeylElement::Y().with_flag(comm) + term(lambda, t, 0, comm);
    WeylElement out(1, comm);
    for (const auto& pt : p.support()) {
        WeylElement acc = term(p.coeff(pt), pt.x(), 0, comm);
        for (std::int64_t j = 0; j < pt.y; ++j) acc = multiply_oracle(acc, yphi);
        out = out + acc;
    }
    return out;
}

// x^a y^s times a root product, plus random terms of lower d-degree.
inline WeylElement cut_input(Rng& rng, Direction& d) {
    d = random_cut_direction(rng, 4);
    std::vector<std::pair<Rational, int>> roots;
    for (int k = 0, n = static_cast<int>(uniform(rng, 1, 3)); k < n; ++k)
        roots.push_back({random_rational(rng, 3, 2, false), static_cast<int>(uniform(rng, 1, 3))});
    WeylElement lead = root_product(d, Rational(uniform(rng, -4, 6), uniform(rng, 1, 2)), roots);
    lead = lead * WeylElement::Y(uniform(rng, 0, 2));
    if (lead.size() < 2) lead = lead + root_product(d, degree(lead, d) / d.rho, {{Rational(1), 1}});
    Rational top = degree(lead, d);
    WeylElement out = lead;
    auto extra = random_element(rng, {{1, 2}, 4, 8, 4, false});
    for (const auto& pt : extra.support())
        if (d.weight(pt) < top) out = out + term(extra.coeff(pt), pt.x(), pt.y);
    return out;
}

}  // namespace testsupport
