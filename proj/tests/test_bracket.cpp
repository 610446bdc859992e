#include <doctest.h>

#include "support.hpp"

using namespace weyl;
using namespace testsupport;

namespace {

std::pair<WeylElement, WeylElement> homogeneous_pair(Rng& rng, Direction& d) {
    d = random_cut_direction(rng, 5);
    return {random_homogeneous(rng, d, 1, 3, false), random_homogeneous(rng, d, 1, 3, false)};
}

}  // namespace

TEST_SUITE("bracket") {

TEST_CASE("bracket examples") {
    auto X = WeylElement::X(), Y = WeylElement::Y();
    auto b = bracket_rs(Y, X, Direction(1, 0));
    CHECK(!b.proportional);
    CHECK(b.value == WeylElement::constant(1).with_flag(true));
    CHECK(b.degree_witness == 0);
    // [X, XY] = -X has degree 1 = 1 + 1 - 1 at (1,0), so the pair is not proportional
    auto b2 = bracket_rs(X, X * Y, Direction(1, 0));
    CHECK(!b2.proportional);
    CHECK(b2.value == mono("-1", 1, 1, 0, true));
    auto b3 = bracket_rs(X, X * X, Direction(1, 0));
    CHECK(b3.proportional);
    CHECK(b3.value.is_zero());
    auto b4 = bracket_rs(X * Y, X * X * Y * Y, Direction(1, 0));
    CHECK(b4.proportional);
    CHECK_THROWS_AS(bracket_rs(X, Y, Direction(1, 1)), PreconditionError);
    CHECK_THROWS_AS(bracket_rs(X, WeylElement(1), Direction(1, 0)), PreconditionError);
}

TEST_CASE("bracket equals leading part of the oracle commutator") {
    Rng rng(31);
    int nonprop = 0;
    while (nonprop < 200) {
        Direction d;
        auto [p, q] = homogeneous_pair(rng, d);
        auto br = bracket_rs(p, q, d);
        auto comm = oracle_commutator(p, q);
        bool prop = comm.is_zero() || degree(comm, d) < degree(p, d) + degree(q, d) - Rational(d.rho + d.sigma);
        CHECK(br.proportional == prop);
        if (prop) continue;
        ++nonprop;
        CHECK(br.value == oracle_leading(comm, d));
    }
}

TEST_CASE("bracket depends only on leading parts") {
    Rng rng(32);
    for (int i = 0; i < 100; ++i) {
        auto d = random_cut_direction(rng, 5);
        auto p = random_element(rng), q = random_element(rng);
        auto lp = symbol_map_inverse(leading_part(p, d)), lq = symbol_map_inverse(leading_part(q, d));
        CHECK(bracket_rs(p, q, d).value == bracket_rs(lp, lq, d).value);
    }
}

TEST_CASE("aligned corners when proportional") {
    Rng rng(33);
    int seen = 0;
    for (int i = 0; i < 400; ++i) {
        auto d = random_cut_direction(rng, 4);
        auto r = random_homogeneous(rng, d, 1, 2, false, 4, 2);
        int m = static_cast<int>(uniform(rng, 1, 3)), n = static_cast<int>(uniform(rng, 1, 3));
        auto p = power(r, static_cast<unsigned>(m)), q = power(r, static_cast<unsigned>(n));
        auto br = bracket_rs(p, q, d);
        if (!br.proportional) continue;
        ++seen;
        CHECK(aligned(st(p, d), st(q, d)));
        CHECK(aligned(en(p, d), en(q, d)));
    }
    CHECK(seen > 100);
}

TEST_CASE("nonaligned starts give the start of the bracket") {
    Rng rng(34);
    int seen = 0;
    for (int i = 0; i < 300; ++i) {
        Direction d;
        auto [p, q] = homogeneous_pair(rng, d);
        if (aligned(st(p, d), st(q, d))) continue;
        auto br = bracket_rs(p, q, d);
        REQUIRE(!br.proportional);
        ++seen;
        CHECK(st(br.value, d) == st(p, d) + st(q, d) - point_from(1, 1));
        if (!aligned(en(p, d), en(q, d))) CHECK(en(br.value, d) == en(p, d) + en(q, d) - point_from(1, 1));
    }
    CHECK(seen > 50);
}

TEST_CASE("bracket of a power") {
    Rng rng(35);
    ElementShape small{{1, 2}, 3, 6, 3, false};
    for (int i = 0; i < 60; ++i) {
        auto c = random_element(rng, small), e = random_element(rng, small);
        auto ce = commutator(c, e);
        if (ce.is_zero()) continue;
        auto d = random_interior_direction(rng);
        unsigned m = static_cast<unsigned>(uniform(rng, 1, 4));
        auto lhs = leading_part(commutator(power(c, m), e), d);
        auto rhs = Rational(m) * power(leading_part(c, d), m - 1) * leading_part(ce, d);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("ode identity") {
    auto cert = ode_identity(WeylElement::X(), WeylElement::Y(), Direction(1, 0));
    CHECK(cert.h == 0);
    CHECK(cert.c == -1);
    CHECK(cert.a == 0);
    CHECK(cert.b == 1);
    CHECK(cert.holds);
    CHECK_THROWS_AS(ode_identity(WeylElement::X(), WeylElement::X(2, 1), Direction(1, 0)), PreconditionError);

    Rng rng(36);
    int n = 0;
    while (n < 200) {
        Direction d;
        auto [p, q] = homogeneous_pair(rng, d);
        if (bracket_rs(p, q, d).proportional) continue;
        ++n;
        auto c = ode_identity(p, q, d);
        CHECK(c.holds);
        CHECK(c.a == degree(q, d) / d.rho);
        CHECK(c.b == degree(p, d) / d.rho);
    }
    for (int i = 0; i < 100; ++i) {
        auto d = random_cut_direction(rng, 4);
        auto p = random_element(rng), q = random_element(rng);
        if (bracket_rs(p, q, d).proportional) continue;
        CHECK(ode_identity(p, q, d).holds);
    }
}

TEST_CASE("ode constant vanishes on proportional pairs with positive degrees") {
    Rng rng(37);
    int n = 0;
    while (n < 100) {
        auto d = random_cut_direction(rng, 4);
        auto r = random_homogeneous(rng, d, 1, 2, false, 4, 3);
        if (degree(r, d) <= 0) continue;
        auto p = power(r, static_cast<unsigned>(uniform(rng, 1, 3))), q = power(r, static_cast<unsigned>(uniform(rng, 1, 3)));
        if (!bracket_rs(p, q, d).proportional) continue;
        ++n;
        CHECK(ode_constant(p, q, d) == 0);
    }
}

TEST_CASE("common root") {
    auto p = mono("1", 4, 1, 2), q = mono("1", 6, 1, 3);
    auto r = extract_common_root(p, q, Direction(1, 0));
    CHECK(r.m == 2);
    CHECK(r.n == 3);
    CHECK(r.R == mono("1", 2, 1, 1, true));
    CHECK_THROWS_AS(extract_common_root(WeylElement::X(), WeylElement::Y(), Direction(1, 0)), PreconditionError);

    Rng rng(38);
    const std::pair<int, int> mn[] = {{2, 3}, {3, 4}, {2, 5}};
    for (int i = 0; i < 60; ++i) {
        auto d = random_cut_direction(rng, 4);
        auto R = random_homogeneous(rng, d, 1, 2, true, 4, 2);
        if (R.size() < 2 || degree(R, d) <= 0) continue;
        auto [m, n] = mn[i % 3];
        auto P = symbol_map_inverse(power(R, static_cast<unsigned>(m))), Q = symbol_map_inverse(power(R, static_cast<unsigned>(n)));
        auto f = extract_common_root(P, Q, d);
        CHECK(f.m == m);
        CHECK(f.n == n);
        // up to scalar
        Rational s = R.coeff(w_point(R)) / f.R.coeff(w_point(f.R));
        CHECK(s * f.R == R);
        CHECK(f.lamP * power(f.R, static_cast<unsigned>(m)) == leading_part(P, d));
    }
    // R^2, R^4 -> (R^2, 1, 2)
    auto d = Direction(2, -1);
    auto R = mono("1", 3, 2, 1, true) + mono("3", 2, 1, 2, true);
    auto f = extract_common_root(symbol_map_inverse(power(R, 2)), symbol_map_inverse(power(R, 4)), d);
    CHECK(f.m == 1);
    CHECK(f.n == 2);
    CHECK(f.lamP * f.R == power(R, 2));
}

TEST_CASE("solve F") {
    auto F = solve_F(WeylElement::X(), Direction(1, 0));
    REQUIRE(F);
    CHECK(*F == mono("-1", 1, 1, 1));
    CHECK(commutator(WeylElement::X(), *F) == WeylElement::X());
    CHECK_THROWS_AS(solve_F(WeylElement::Y(), Direction(1, 0)), PreconditionError);

    Rng rng(39);
    for (int i = 0; i < 40; ++i) {
        auto k = construct_fixed_point(rng);
        REQUIRE(bracket_rs(k.C, k.F_C, k.d).value == leading_part(k.C, k.d));
        REQUIRE(bracket_rs(k.P, k.F_P, k.d).value == leading_part(k.P, k.d));
        auto sol = solve_F(k.P, k.d);
        REQUIRE(sol);
        CHECK(bracket_rs(k.P, *sol, k.d).value == leading_part(k.P, k.d));
        CHECK(degree(*sol, k.d) == k.d.rho + k.d.sigma);
        CHECK(pavadass_check(k.P, *sol, k.d).ok());
    }
}

TEST_CASE("pavadass") {
    UniPoly x1({-1, 1}), x2({-2, 1});
    auto r = pavadass_flags(x1 * x2, x1);
    CHECK(r.squarefree);
    CHECK(!r.radical_divides);
    auto r2 = pavadass_flags(pow(x1, 3), pow(x1, 2));
    CHECK(!r2.squarefree);
    CHECK(r2.radical_divides);
    // F with f_F = (x-1)^2 that does not satisfy the bracket equation
    auto d = Direction(1, 0);
    auto bad = mono("1", 1, 1, 0) + mono("-2", 1, 1, 1) + mono("1", 1, 1, 2);
    CHECK_THROWS_AS(pavadass_check(WeylElement::X(), bad, d), PreconditionError);
}

}
