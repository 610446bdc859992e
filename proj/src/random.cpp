#include "weyl/random.hpp"

namespace weyl {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Rational random_rational(Rng& rng, std::int64_t max_num, std::int64_t max_den, bool nonzero) {
    for (;;) {
        std::int64_t n = uniform(rng, -max_num, max_num);
        if (nonzero && n == 0) continue;
        return make_rational(n, uniform(rng, 1, max_den));
    }
}

WeylElement random_element(Rng& rng, const ElementShape& s) {
    std::int64_t level = s.levels[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(s.levels.size()) - 1))];
    for (;;) {
        WeylElement e(level, s.commutative);
        int terms = static_cast<int>(uniform(rng, 1, s.max_terms));
        for (int i = 0; i < terms; ++i)
            e.add_term(uniform(rng, -s.max_abs_xnum, s.max_abs_xnum), uniform(rng, 0, s.max_y), random_rational(rng));
        if (!e.is_zero()) return e;
    }
}

Direction random_cut_direction(Rng& rng, std::int64_t max_rho) {
    for (;;) {
        std::int64_t r = uniform(rng, 1, max_rho), s = uniform(rng, -r + 1, 0);
        if (gcd64(r, s) == 1) return Direction(r, s);
    }
}

Direction random_interior_direction(Rng& rng, std::int64_t bound) {
    for (;;) {
        std::int64_t r = uniform(rng, -bound, bound), s = uniform(rng, -bound, bound);
        if (r + s > 0 && gcd64(r, s) == 1) return Direction(r, s);
    }
}

WeylElement random_homogeneous(Rng& rng, const Direction& d, std::int64_t base_level, int max_k, bool commutative,
                               std::int64_t max_abs_x, std::int64_t max_y0) {
    std::int64_t L = lcm64(base_level, d.rho);
    std::int64_t x0 = uniform(rng, -max_abs_x * L, max_abs_x * L);
    std::int64_t y0 = uniform(rng, 0, max_y0);
    int k = static_cast<int>(uniform(rng, 0, max_k));
    std::int64_t step = -d.sigma * (L / d.rho);
    WeylElement e(L, commutative);
    for (int i = 0; i <= k; ++i) {
        bool end = i == 0 || i == k;
        if (!end && uniform(rng, 0, 3) == 0) continue;
        e.add_term(x0 + i * step, y0 + i, random_rational(rng));
    }
    return e;
}

namespace {

WeylElement term_at(const Rational& c, const Rational& x, std::int64_t y) {
    auto r = point_from(x, y).reduced();
    return WeylElement::monomial(c, r.xnum, r.level, r.y);
}

}  // namespace

WeylElement root_product(const Direction& d, const Rational& alpha, const std::vector<std::pair<Rational, int>>& roots) {
    UniPoly h = UniPoly::constant(1);
    for (const auto& [lam, e] : roots) h = h * pow(UniPoly({-lam, 1}), static_cast<unsigned>(e));
    Rational t(-d.sigma, d.rho);
    t.canonicalize();
    WeylElement out(1);
    for (int i = 0; i <= h.degree(); ++i)
        if (h[i] != 0) out = out + term_at(h[i], alpha + t * i, i);
    return out;
}

// Writing l(C) = x^alpha h(u) and F = x^beta g(u) with beta = (rho+sigma)/rho, the bracket is
// x^alpha (beta h' g - alpha h g'). One root: g = (u - lambda)/(e beta - alpha). Two roots with
// e1 != e2: alpha = beta (e1+e2)/2 and g = (u - l1)(u - l2) / ((beta e1 - alpha)(l1 - l2)).
FixedPointCase construct_fixed_point(Rng& rng, std::int64_t max_rho) {
    FixedPointCase k;
    k.d = random_cut_direction(rng, max_rho);
    const Direction& d = k.d;
    Rational beta(d.rho + d.sigma, d.rho);
    beta.canonicalize();
    auto nz = [&] { return random_rational(rng, 4, 3, true); };
    if (uniform(rng, 0, 1) == 0) {
        int e = static_cast<int>(uniform(rng, 1, 3));
        Rational alpha;
        do {
            alpha = Rational(uniform(rng, 1, 12), uniform(rng, 1, 3));
            alpha.canonicalize();
        } while (alpha == e * beta);
        Rational lam = nz();
        k.C = root_product(d, alpha, {{lam, e}});
        k.F_C = Rational(1 / (e * beta - alpha)) * root_product(d, beta, {{lam, 1}});
    } else {
        int e1 = static_cast<int>(uniform(rng, 1, 3)), e2;
        do e2 = static_cast<int>(uniform(rng, 1, 3));
        while (e2 == e1);
        Rational l1 = nz(), l2;
        do l2 = nz();
        while (l2 == l1);
        Rational alpha = beta * (e1 + e2) / 2;
        Rational kappa = 1 / ((beta * e1 - alpha) * (l1 - l2));
        k.C = root_product(d, alpha, {{l1, e1}, {l2, e2}});
        k.F_C = kappa * root_product(d, beta, {{l1, 1}, {l2, 1}});
    }
    k.m = static_cast<int>(uniform(rng, 1, 3));
    k.P = power(k.C, static_cast<unsigned>(k.m));
    k.F_P = Rational(1, k.m) * k.F_C;
    return k;
}

}  // namespace weyl
