#pragma once

#include <random>
#include <vector>

#include "weyl/valuation.hpp"

namespace weyl {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);  // inclusive
Rational random_rational(Rng& rng, std::int64_t max_num = 9, std::int64_t max_den = 5, bool nonzero = true);

struct ElementShape {
    std::vector<std::int64_t> levels{1, 2, 3, 6};
    int max_terms = 6;
    std::int64_t max_abs_xnum = 12;
    std::int64_t max_y = 8;
    bool commutative = false;
};
// Nonzero.
WeylElement random_element(Rng& rng, const ElementShape& shape = {});

// Primitive (rho, sigma) with rho+sigma > 0, -rho < sigma <= 0, rho <= max_rho.
Direction random_cut_direction(Rng& rng, std::int64_t max_rho = 6);
// Any interior direction with |components| <= bound.
Direction random_interior_direction(Rng& rng, std::int64_t bound = 6);

// (rho,sigma)-homogeneous: coefficients at st + i(-sigma/rho, 1), i = 0..k, nonzero at both ends.
// level is a multiple of lcm(base_level, rho).
WeylElement random_homogeneous(Rng& rng, const Direction& d, std::int64_t base_level, int max_k, bool commutative,
                               std::int64_t max_abs_x = 8, std::int64_t max_y0 = 4);


// x^alpha * prod (u - lambda_k)^{e_k} with u = x^{-sigma/rho} y, as a (rho,sigma)-homogeneous W element.
WeylElement root_product(const Direction& d, const Rational& alpha, const std::vector<std::pair<Rational, int>>& roots);

// C non-monomial with [C, F_C]_d = l_d(C) by construction; P = C^m and F_P = F_C/m.
struct FixedPointCase {
    Direction d;
    WeylElement C, F_C, P, F_P;
    int m = 1;
};
FixedPointCase construct_fixed_point(Rng& rng, std::int64_t max_rho = 4);

}  // namespace weyl
