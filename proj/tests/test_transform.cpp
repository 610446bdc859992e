#include <doctest.h>

#include "support.hpp"

using namespace weyl;
using namespace testsupport;

namespace {

WeylElement phi_oracle_symbol(const WeylElement& l, const Rational& lambda, const Direction& d) {
    return oracle_phi(l.with_flag(true), lambda, d);
}

}  // namespace

TEST_SUITE("transform") {

TEST_CASE("apply phi examples") {
    auto p = WeylElement::X(1, 2) * WeylElement::Y();
    auto r = apply_phi(p, 1, Direction(2, -1), 2);
    CHECK(r == p + WeylElement::constant(1));
    Rng rng(41);
    for (int i = 0; i < 20; ++i) {
        auto a = random_element(rng);
        auto d = random_cut_direction(rng, 4);
        CHECK(apply_phi(a, 0, d, lcm64(a.level(), d.rho)) == a);
    }
    CHECK_THROWS_AS(apply_phi(p, 1, Direction(3, -1), 2), PreconditionError);
    CHECK_THROWS_AS(apply_phi(p, 1, Direction(1, 1), 2), PreconditionError);
}

TEST_CASE("apply phi matches substitution and is multiplicative") {
    Rng rng(42);
    ElementShape small{{1, 2, 3}, 4, 8, 4, false};
    for (int i = 0; i < 60; ++i) {
        auto a = random_element(rng, small), b = random_element(rng, small);
        auto d = random_cut_direction(rng, 4);
        Rational lam = random_rational(rng, 4, 3);
        std::int64_t L = lcm64(lcm64(a.level(), b.level()), d.rho);
        auto pa = apply_phi(a, lam, d, L), pb = apply_phi(b, lam, d, L);
        CHECK(pa == oracle_phi(a, lam, d));
        CHECK(apply_phi(a * b, lam, d, L) == pa * pb);
    }
}

TEST_CASE("automorphism laws") {
    Rng rng(43);
    for (int i = 0; i < 200; ++i) {
        auto a = random_element(rng);
        auto d = random_cut_direction(rng, 5);
        Rational lam = random_rational(rng, 5, 4);
        auto pa = apply_phi(a, lam, d, lcm64(a.level(), d.rho));
        CHECK(leading_part(pa, d) == phi_oracle_symbol(oracle_leading(a, d), lam, d));
        CHECK(degree(pa, d) == degree(a, d));
        for (int t = 0; t < 5; ++t) {
            auto e = random_any_direction(rng, 8);
            if (!(d < e) || e == kMaxDir) continue;
            CHECK(leading_part(pa, e) == oracle_leading(a, e));
        }
    }
}

TEST_CASE("frak f and multiplicity") {
    // f = (1 + x^3)^4 at (3,-1), s = 0
    WeylElement p(1);
    for (int i = 0; i <= 4; ++i) p = p + term(binom(4, i), i, 3 * i);
    auto ff = frak_f_and_multiplicity(p, Direction(3, -1));
    CHECK(ff.m_max == 4);
    REQUIRE(ff.witness);
    CHECK(*ff.witness == -1);
    CHECK(ff.frak_f == pow(UniPoly({1, 0, 0, 1}), 4));

    auto m = mono("5", 2, 1, 3);
    auto fm = frak_f_and_multiplicity(m, Direction(1, 0));
    CHECK(fm.m_max == 3);
    REQUIRE(fm.witness);
    CHECK(*fm.witness == 0);
    CHECK(fm.frak_f == Rational(5) * UniPoly::x_power(3));

    // (x^2 + 1)^3 at (1,0): no rational witness
    auto q = WeylElement::X() * (WeylElement::constant(1) + mono("3", 0, 1, 2) + mono("3", 0, 1, 4) + mono("1", 0, 1, 6));
    auto fq = frak_f_and_multiplicity(q, Direction(1, 0));
    CHECK(fq.m_max == 3);
    CHECK(!fq.witness);
    CHECK(fq.factor == UniPoly({1, 0, 1}));
    CHECK_THROWS_AS(frak_f_and_multiplicity(q, Direction(1, 1)), PreconditionError);
}

TEST_CASE("cut step example") {
    auto p = mono("1", 1, 1, 1) + mono("1", 2, 1, 4);
    Direction d(3, -1);
    auto rep = cut_step(p, std::nullopt, d);
    REQUIRE(rep.lambda);
    CHECK(*rep.lambda == -1);
    CHECK(rep.m_lambda == 1);
    CHECK(rep.predicted_corner == point_from(1, 1));
    CHECK(rep.new_level == 3);
    REQUIRE(rep.phiP);
    CHECK(st(*rep.phiP, d) == point_from(1, 1));
    REQUIRE(rep.new_dir);
    CHECK(*rep.new_dir < d);
    for (const auto& v : rep.items) {
        if (v.label == "5" || v.label == "6" || v.label == "8" || v.label == "9") CHECK(v.status == "pass");
        if (v.label == "1" || v.label == "7" || v.label == "10") CHECK(v.status == "skipped");
    }
    CHECK(rep.hypotheses.empty());
    CHECK_THROWS_AS(cut_step(p, std::nullopt, Direction(1, 0)), PreconditionError);
    CHECK_THROWS_AS(cut_step(mono("1", 2, 1, 2), std::nullopt, Direction(1, 0)), PreconditionError);
    CHECK_THROWS_AS(cut_step(p, std::nullopt, Direction(1, 1)), PreconditionError);
}

TEST_CASE("cut step predicted corner against the oracle") {
    Rng rng(44);
    int n = 0, tries = 0;
    while (n < 100 && tries < 2000) {
        ++tries;
        Direction d;
        auto p = cut_input(rng, d);
        if (!in_val(p, d)) continue;
        auto rep = cut_step(p, std::nullopt, d);
        if (!rep.lambda) continue;
        ++n;
        auto phi = oracle_phi(p, *rep.lambda, d);
        CHECK(*rep.phiP == phi);
        CHECK(rep.predicted_corner == oracle_st(phi, d));
        REQUIRE(rep.new_dir);
        CHECK(*rep.new_dir < d);
        if (!rep.new_dir->is_max_boundary()) CHECK(en(phi, *rep.new_dir) == st(phi, d));
        bool has8 = false;
        for (const auto& v : rep.items)
            if (v.label == "8") has8 = v.status == "pass";
        CHECK(has8);
        CHECK(rep.items.size() == 11);
    }
    CHECK(n == 100);
}

TEST_CASE("relaxed fixture C^2, C^3") {
    Rng rng(45);
    int n = 0;
    while (n < 20) {
        auto k = construct_fixed_point(rng, 3);
        auto d = k.d;
        auto P = power(k.C, 2), Q = power(k.C, 3);
        if (!in_val(P, d)) continue;
        ++n;
        CHECK(bracket_rs(P, Q, d).proportional);
        auto rep = cut_step(P, Q, d);
        REQUIRE(rep.hypotheses.size() == 7);
        CHECK(rep.hypotheses[1].label == "b");
        CHECK(rep.hypotheses[1].status == "fail");
        for (const auto& v : rep.items)
            if (rep.phiP && (v.label == "5" || v.label == "6" || v.label == "9")) CHECK(v.status == "pass");
    }
}

TEST_CASE("run chain") {
    CHECK_THROWS_AS(run_chain(WeylElement::X(), WeylElement::Y(2), ChainMode::strict, 5), PreconditionError);

    auto r0 = run_chain(WeylElement::X() + WeylElement::Y(2), WeylElement::Y(), ChainMode::strict, 5);
    CHECK(r0.steps.empty());
    CHECK(!r0.hypotheses.empty());
    CHECK(!r0.stop_reason.empty());

    Rng rng(46);
    int n = 0;
    while (n < 10) {
        auto k = construct_fixed_point(rng, 3);
        auto P = power(k.C, 2), Q = power(k.C, 3);
        if (!in_val(P, k.d)) continue;
        ++n;
        auto run = run_chain(P, Q, ChainMode::relaxed, 20, k.d);
        REQUIRE(!run.steps.empty());
        CHECK(run.stop_reason != "max_steps reached");
        for (std::size_t i = 1; i < run.steps.size(); ++i) {
            CHECK(run.steps[i].v01 <= run.steps[i - 1].v01);
            CHECK(run.steps[i].d < run.steps[i - 1].d);
        }
    }
}

}
