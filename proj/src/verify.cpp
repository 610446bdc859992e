#include "weyl/verify.hpp"

#include <functional>

#include "weyl/bracket.hpp"
#include "weyl/chain.hpp"
#include "weyl/random.hpp"
#include "weyl/transform.hpp"

namespace weyl {

namespace {

// Runs body(i) for i < trials; body returns an empty string on success.
CheckResult run(const char* group, const char* name, int trials, const std::function<std::string(int)>& body) {
    CheckResult r{group, name, 0, 0, {}};
    for (int i = 0; i < trials; ++i) {
        std::string msg;
        try {
            msg = body(i);
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        ++r.trials;
        if (!msg.empty()) {
            if (r.failures++ == 0) r.first_failure = "trial " + std::to_string(i) + ": " + msg;
        }
    }
    return r;
}

std::string expect(bool ok, const std::string& what) { return ok ? std::string() : what; }

Direction any_direction(Rng& rng) {
    for (;;) {
        std::int64_t r = uniform(rng, -6, 6), s = uniform(rng, -6, 6);
        if (r + s >= 0 && gcd64(r, s) == 1) return Direction(r, s);
    }
}

}  // namespace

std::vector<CheckResult> verify_algebra(int trials) {
    std::vector<CheckResult> out;
    Rng rng(101);
    out.push_back(run("algebra", "multiply matches rewriting oracle", trials, [&](int) {
        auto p = random_element(rng), q = random_element(rng);
        return expect(multiply(p, q) == multiply_oracle(p, q), to_text(p) + " | " + to_text(q));
    }));
    out.push_back(run("algebra", "defining relations", 1, [&](int) {
        auto X = WeylElement::X(), Y = WeylElement::Y();
        bool a = commutator(Y, X) == WeylElement::constant(1);
        bool b = Y * WeylElement::X(1, 2) ==
                 WeylElement::X(1, 2) * Y + WeylElement::monomial(make_rational(1, 2), -1, 2, 0);
        bool c = WeylElement::Y(2) * X == X * WeylElement::Y(2) + WeylElement::monomial(2, 0, 1, 1);
        return expect(a && b && c, "commutation rule");
    }));
    out.push_back(run("algebra", "product laws", trials, [&](int) {
        auto p = random_element(rng), q = random_element(rng);
        auto pq = p * q;
        if (pq.is_zero()) return std::string("zero product");
        auto d = any_direction(rng);
        if (degree(pq, d) != degree(p, d) + degree(q, d)) return "degree at " + d.str();
        auto e = random_interior_direction(rng);
        if (leading_part(pq, e) != leading_part(p, e) * leading_part(q, e)) return "leading part at " + e.str();
        if (st(pq, e) != st(p, e) + st(q, e)) return "st at " + e.str();
        return expect(en(pq, e) == en(p, e) + en(q, e), "en at " + e.str());
    }));
    return out;
}

std::vector<CheckResult> verify_bracket(int trials) {
    std::vector<CheckResult> out;
    Rng rng(202);
    out.push_back(run("bracket", "closed form equals leading part of commutator", trials, [&](int) {
        auto d = random_cut_direction(rng, 5);
        auto p = random_homogeneous(rng, d, 1, 3, false), q = random_homogeneous(rng, d, 1, 3, false);
        auto comm = multiply_oracle(p, q) - multiply_oracle(q, p);
        auto br = bracket_rs(p, q, d);
        if (br.proportional) return expect(comm.is_zero() || degree(comm, d) < br.degree_witness, "proportionality");
        return expect(br.value == leading_part(comm, d), "value");
    }));
    out.push_back(run("bracket", "ode identity", trials, [&](int) {
        for (;;) {
            auto d = random_cut_direction(rng, 5);
            auto p = random_homogeneous(rng, d, 1, 3, false), q = random_homogeneous(rng, d, 1, 3, false);
            if (bracket_rs(p, q, d).proportional) continue;
            return expect(ode_identity(p, q, d).holds, to_text(p) + " | " + to_text(q));
        }
    }));
    out.push_back(run("bracket", "common root round trip", trials, [&](int i) {
        static const std::pair<int, int> mn[] = {{2, 3}, {3, 4}, {2, 5}};
        auto [m, n] = mn[i % 3];
        for (;;) {
            auto d = random_cut_direction(rng, 4);
            auto R = random_homogeneous(rng, d, 1, 2, true, 4, 2);
            if (R.size() < 2 || degree(R, d) <= 0) continue;
            auto P = symbol_map_inverse(power(R, static_cast<unsigned>(m)));
            auto Q = symbol_map_inverse(power(R, static_cast<unsigned>(n)));
            auto f = extract_common_root(P, Q, d);
            Rational s = R.coeff(w_point(R)) / f.R.coeff(w_point(f.R));
            return expect(f.m == m && f.n == n && s * f.R == R, to_text(R));
        }
    }));
    out.push_back(run("bracket", "solve_F on constructed powers", trials, [&](int) {
        auto k = construct_fixed_point(rng);
        auto F = solve_F(k.P, k.d);
        if (!F) return std::string("no F found for ") + to_text(k.P);
        if (bracket_rs(k.P, *F, k.d).value != leading_part(k.P, k.d)) return std::string("bracket");
        return expect(pavadass_check(k.P, *F, k.d).ok(), "separability flags");
    }));
    return out;
}

std::vector<CheckResult> verify_transform(int trials) {
    std::vector<CheckResult> out;
    Rng rng(303);
    out.push_back(run("transform", "automorphism laws", trials, [&](int) {
        auto p = random_element(rng);
        auto d = random_cut_direction(rng, 5);
        Rational lam = random_rational(rng, 5, 4);
        std::int64_t L = lcm64(p.level(), d.rho);
        auto fp = apply_phi(p, lam, d, L);
        if (leading_part(fp, d) != apply_phi(leading_part(p, d), lam, d, L)) return std::string("leading part");
        if (degree(fp, d) != degree(p, d)) return std::string("degree");
        for (const auto& e : ov_valuation_set(fp))
            if (d < e && e != kMaxDir && leading_part(fp, e) != leading_part(p, e)) return "above d at " + e.str();
        return std::string();
    }));
    out.push_back(run("transform", "phi is multiplicative", trials, [&](int) {
        ElementShape small{{1, 2, 3}, 4, 8, 4, false};
        auto a = random_element(rng, small), b = random_element(rng, small);
        auto d = random_cut_direction(rng, 4);
        Rational lam = random_rational(rng, 4, 3);
        std::int64_t L = lcm64(lcm64(a.level(), b.level()), d.rho);
        return expect(apply_phi(a * b, lam, d, L) == apply_phi(a, lam, d, L) * apply_phi(b, lam, d, L), "phi(ab)");
    }));
    out.push_back(run("transform", "cut step corner formula", trials, [&](int) {
        for (;;) {
            auto d = random_cut_direction(rng, 4);
            auto lead = root_product(d, Rational(uniform(rng, 1, 6)),
                                     {{random_rational(rng, 3, 2), static_cast<int>(uniform(rng, 1, 3))}});
            auto p = lead + random_homogeneous(rng, d, 1, 1, false, 1, 0) * WeylElement::X(-4);
            if (!in_val(p, d) || degree(p, d) != degree(lead, d)) continue;
            auto rep = cut_step(p, std::nullopt, d);
            if (!rep.phiP) continue;
            return expect(st(*rep.phiP, d) == rep.predicted_corner, "predicted corner");
        }
    }));
    return out;
}

std::vector<CheckResult> verify_chains() {
    std::vector<CheckResult> out;
    const auto& fams = example_families();
    out.push_back(run("chains", "example families pass", static_cast<int>(fams.size()), [&](int i) {
        const auto& c = fams[static_cast<std::size_t>(i)];
        return expect(all_pass(check_conditions(c, c.mn->first, c.mn->second)), "family " + std::to_string(i + 1));
    }));
    out.push_back(run("chains", "single-field mutations fail", static_cast<int>(fams.size()), [&](int i) {
        const auto& c = fams[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < c.nodes.size(); ++j)
            for (int f = 0; f < 5; ++f)
                for (int delta : {1, -1}) {
                    Chain x = c;
                    auto& n = x.nodes[j];
                    std::int64_t* field[] = {&n.a_xnum, &n.a_y, &n.rho, &n.sigma, &n.level};
                    *field[f] += delta;
                    if (all_pass(check_conditions(x, c.mn->first, c.mn->second)))
                        return "node " + std::to_string(j) + " field " + std::to_string(f);
                }
        return std::string();
    }));
    out.push_back(run("chains", "corner table", 1, [&](int) {
        std::vector<CornerCase> raw;
        for (auto [r, s] : corner_pairs_up_to(14))
            for (const auto& c : corner_case_enumerator(r, s)) raw.push_back(c);
        std::vector<std::pair<std::int64_t, std::int64_t>> got;
        for (const auto& c : apply_external_table(raw, false))
            if (got.empty() || got.back() != std::make_pair(c.r, c.s)) got.push_back({c.r, c.s});
        return expect(got.size() == 6, "expected six (r,s) pairs");
    }));
    return out;
}

std::vector<CheckResult> verify_group(const std::string& group, int trials) {
    if (group == "algebra") return verify_algebra(trials);
    if (group == "bracket") return verify_bracket(trials);
    if (group == "transform") return verify_transform(trials);
    if (group == "chains") return verify_chains();
    if (group == "all") {
        std::vector<CheckResult> out;
        for (const char* g : {"algebra", "bracket", "transform", "chains"}) {
            auto r = verify_group(g, trials);
            out.insert(out.end(), r.begin(), r.end());
        }
        return out;
    }
    throw PreconditionError("unknown verify group '" + group + "'");
}

}  // namespace weyl
