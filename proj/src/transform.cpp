#include "weyl/transform.hpp"

#include <algorithm>

namespace weyl {

namespace {

void require_cut_dir(const Direction& d) {
    if (!d.interior() || d.sigma > 0) throw PreconditionError("needs rho+sigma>0 and sigma<=0, got " + d.str());
}

Verdict verdict(std::string label, bool ok, std::string detail = {}) {
    return {std::move(label), ok ? "pass" : "fail", std::move(detail)};
}

Verdict skipped(std::string label, std::string why) { return {std::move(label), "skipped", std::move(why)}; }

Direction mediant(const Direction& a, const Direction& b) {
    std::int64_t r = a.rho + b.rho, s = a.sigma + b.sigma, g = gcd64(r, s);
    return Direction(r / g, s / g);
}

// l_{d''}(A) = l_{d''}(B) for every d < d'' < (-1,1); checked at every hull direction and one interior
// direction per gap, which covers the whole open interval.
bool stable_above(const WeylElement& a, const WeylElement& b, const Direction& d) {
    std::vector<Direction> cuts{d, kMaxDir};
    for (const auto& e : {a, b})
        for (const auto& v : valuation_set(e))
            if (v > d) cuts.push_back(v);
    std::sort(cuts.begin(), cuts.end(), [](const Direction& x, const Direction& y) { return x < y; });
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Direction> probes;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        probes.push_back(mediant(cuts[i], cuts[i + 1]));
        if (i > 0) probes.push_back(cuts[i]);
    }
    for (const auto& e : probes)
        if (leading_part(a, e) != leading_part(b, e)) return false;
    return true;
}

bool is_positive_integer(const Rational& q) { return is_integer(q) && q > 0; }

std::vector<Verdict> hypotheses(const WeylElement& p, const WeylElement& q, const Direction& d) {
    std::vector<Verdict> h;
    h.push_back(verdict("a", d.sigma <= 0));
    WeylElement c = commutator(q.with_flag(false), p.with_flag(false));
    h.push_back(verdict("b", c == WeylElement::constant(1), "[Q,P] = " + to_text(c)));
    h.push_back(verdict("c", in_val(p, d) && in_val(q, d)));
    Rational vp = degree(p, d), vq = degree(q, d);
    h.push_back(verdict("d", vp > 0 && vq > 0, "v(P)=" + to_string(vp) + " v(Q)=" + to_string(vq)));
    bool e_ok = d.interior() && d.sigma <= 0 && bracket_rs(p, q, d).proportional;
    h.push_back(verdict("e", e_ok));
    bool f_ok = vp != 0 && vq != 0 && !is_positive_integer(vq / vp) && !is_positive_integer(vp / vq);
    h.push_back(verdict("f", f_ok));
    bool g_ok = !d.is_max_boundary() && en(p, d).x() - en(p, d).y < 0 && en(q, d).x() - en(q, d).y < 0;
    h.push_back(verdict("g", g_ok));
    return h;
}

}  // namespace

bool CutReport::hypotheses_hold() const {
    if (hypotheses.empty()) return false;
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Verdict& v) { return v.status == "pass"; });
}

WeylElement apply_phi(const WeylElement& p, const Rational& lambda, const Direction& d, std::int64_t lprime) {
    require_cut_dir(d);
    if (lprime <= 0 || lprime % d.rho != 0 || lprime % p.level() != 0)
        throw PreconditionError("apply_phi needs rho | l' and level(P) | l'");
    bool comm = p.commutative();
    WeylElement yphi = WeylElement::monomial(1, 0, lprime, 1, comm);
    yphi.add_term(d.sigma * (lprime / d.rho), 0, lambda);
    std::vector<WeylElement> pw{WeylElement::monomial(1, 0, lprime, 0, comm)};
    WeylElement out(lprime, comm);
    auto e = embed_level(p, lprime);
    for (const auto& [k, c] : e.terms()) {
        while (static_cast<std::int64_t>(pw.size()) <= k.y) pw.push_back(multiply(pw.back(), yphi));
        out = add_scale(out, multiply(WeylElement::monomial(1, k.xnum, lprime, 0, comm), pw[static_cast<std::size_t>(k.y)]), c);
    }
    return out;
}

FrakF frak_f_and_multiplicity(const WeylElement& p, const Direction& d) {
    require_cut_dir(d);
    FrakF r;
    r.frak_f = frak_f(p, d);
    for (const auto& part : squarefree_decompose(r.frak_f))
        if (part.e > r.m_max) {
            r.m_max = part.e;
            r.factor = part.q;
        }
    if (r.m_max == 0) {
        r.witness = Rational(0);
        r.factor = UniPoly::constant(1);
        return r;
    }
    // zero only as a last resort: phi is the identity for lambda = 0
    auto roots = rational_roots(r.factor);
    auto nz = std::find_if(roots.begin(), roots.end(), [](const Rational& x) { return x != 0; });
    if (nz != roots.end())
        r.witness = *nz;
    else if (!roots.empty())
        r.witness = roots.front();
    return r;
}

CutReport cut_step(const WeylElement& p, const std::optional<WeylElement>& q, const Direction& d,
                   const CutOptions& opt) {
    require_cut_dir(d);
    if (!in_val(p, d)) throw PreconditionError("direction " + d.str() + " is not in Val(P)");
    CutReport rep;
    auto ff = frak_f_and_multiplicity(p, d);
    rep.lambda = ff.witness;
    rep.lambda_factor = ff.factor;
    rep.m_lambda = ff.m_max;
    rep.new_level = lcm64(p.level(), d.rho);
    SupportPoint s0 = st(p, d), e0 = en(p, d);
    Rational sr = Rational(d.sigma) / d.rho;
    rep.predicted_corner = point_from(s0.x() + sr * s0.y - sr * rep.m_lambda, rep.m_lambda);
    if (q) rep.hypotheses = hypotheses(p, *q, d);
    const bool hyp = rep.hypotheses_hold();
    const std::string why_q = !q ? "Q absent" : "hypotheses fail";

    if (rep.lambda) {
        rep.new_level = lcm64(rep.new_level, q ? q->level() : 1);
        rep.phiP = apply_phi(p, *rep.lambda, d, rep.new_level);
        if (q) rep.phiQ = apply_phi(*q, *rep.lambda, d, rep.new_level);
        for (const auto& v : ov_valuation_set(*rep.phiP))
            if (v < d) rep.new_dir = v;
    }
    const bool built = rep.phiP.has_value();
    auto& it = rep.items;
    auto need_phi = [&](const char* k) { it.push_back(skipped(k, "no rational witness; phi(P) not built")); };

    // (1)-(4): Q-dependent
    if (built && q && hyp) {
        const auto& P1 = *rep.phiP;
        const auto& Q1 = *rep.phiQ;
        const Direction& nd = *rep.new_dir;
        bool inv = nd.interior() && in_val(P1, nd) && in_val(Q1, nd);
        it.push_back(verdict("1", nd < d && inv, "new_dir=" + nd.str()));
        if (!nd.is_max_boundary()) {
            auto ep = en(P1, nd), eq = en(Q1, nd);
            it.push_back(verdict("2", ep.x() < ep.y && eq.x() < eq.y));
        } else {
            it.push_back(verdict("2", false, "new_dir is a boundary"));
        }
        Rational vp1 = degree(P1, nd), vq1 = degree(Q1, nd);
        it.push_back(verdict("3", vp1 > 0 && vq1 > 0));
        it.push_back(verdict("4", vq1 != 0 && vp1 / vq1 == degree(p, d) / degree(*q, d)));
    } else {
        for (const char* k : {"1", "2", "3", "4"}) built ? it.push_back(skipped(k, why_q)) : need_phi(k);
    }
    // (5) stability above d
    if (built) {
        bool ok = stable_above(p, *rep.phiP, d) && (!q || stable_above(*q, *rep.phiQ, d));
        it.push_back(verdict("5", ok));
    } else {
        need_phi("5");
    }
    // (6) corner formula and handoff
    if (built) {
        auto stp = st(*rep.phiP, d);
        auto enp = en(*rep.phiP, *rep.new_dir);
        it.push_back(verdict("6", stp == rep.predicted_corner && enp == stp,
                             "st_d(phiP)=" + stp.str() + " en_new(phiP)=" + enp.str() +
                                 " predicted=" + rep.predicted_corner.str()));
    } else {
        need_phi("6");
    }
    // (7)
    if (built && q && hyp) {
        const Direction& nd = *rep.new_dir;
        auto eq = en(*rep.phiQ, nd);
        auto ep = en(*rep.phiP, nd);
        Rational ratio = degree(p, d) / degree(*q, d);
        bool ok = eq == st(*rep.phiQ, d) && ep.x() == ratio * eq.x() && Rational(ep.y) == ratio * eq.y;
        it.push_back(verdict("7", ok));
    } else {
        built ? it.push_back(skipped("7", why_q)) : need_phi("7");
    }
    // (8) dichotomy; holds for every d in Val(P)
    {
        SupportPoint corner = built ? en(*rep.phiP, *rep.new_dir) : rep.predicted_corner;
        bool lower = corner.y < e0.y;
        bool same = corner == e0;
        bool second = !same || p.coeff(point_from(e0.x() + sr, e0.y - 1)) != 0;
        bool ok = (lower || same) && second;
        if (!ok) throw InternalError("dichotomy of item (8) violated at " + d.str());
        it.push_back(verdict("8", ok, lower ? "v01 decreased" : "corner kept, neighbour in Supp(P)"));
    }
    // (9)
    if (built) {
        bool ok = degree(*rep.phiP, d) == degree(p, d) && (!q || degree(*rep.phiQ, d) == degree(*q, d));
        it.push_back(verdict("9", ok));
    } else {
        need_phi("9");
    }
    // (10)
    if (built && q && hyp) {
        it.push_back(verdict("10", bracket_rs(*rep.phiQ, *rep.phiP, d).proportional));
    } else {
        built ? it.push_back(skipped("10", why_q)) : need_phi("10");
    }
    // (11)
    if (degree(p, d) > 0) {
        auto F = solve_F(p, d, opt.dmax);
        if (!F) {
            it.push_back(hyp ? verdict("11", false, "no F within Dmax") : skipped("11", "no F within Dmax"));
        } else {
            bool nonmono = F->size() > 1;
            bool impl = true;
            if (built && en(*F, d) == SupportPoint{1, 1, 1}) impl = st(*rep.phiP, d) == e0;
            bool ok = nonmono && impl;
            if (ok || hyp) it.push_back(verdict("11", ok, "F = " + to_text(*F)));
            else it.push_back(skipped("11", "F = " + to_text(*F) + " outside the hypotheses"));
        }
    } else {
        it.push_back(skipped("11", "v_d(P) <= 0"));
    }
    return rep;
}

ChainRun run_chain(const WeylElement& p0, const WeylElement& q0, ChainMode mode, int max_steps,
                   std::optional<Direction> start) {
    WeylElement P = p0.with_flag(false), Q = q0.with_flag(false);
    if (mode == ChainMode::strict && commutator(Q, P) != WeylElement::constant(1))
        throw PreconditionError("strict mode needs [Q,P] = 1");
    ChainRun run;
    std::optional<Direction> d = start;
    if (!d) {
        for (const auto& v : valuation_set(P))
            if (v < Direction(1, 0)) d = v;
    }
    if (!d) {
        if (mode == ChainMode::strict) run.hypotheses = hypotheses(P, Q, Direction(1, 0));
        run.stop_reason = "no direction of Val(P) below (1,0)";
        return run;
    }
    for (int step = 0;; ++step) {
        ChainStep cs{P, Q, *d, P.level(), en(P, *d).y, std::nullopt};
        if (!d->interior() || d->sigma > 0) {
            run.steps.push_back(cs);
            run.stop_reason = "direction " + d->str() + " outside the cut domain";
            return run;
        }
        if (!bracket_rs(Q, P, *d).proportional) {
            run.steps.push_back(cs);
            run.stop_reason = "terminal: [Q,P]_d != 0";
            return run;
        }
        if (mode == ChainMode::strict) {
            run.hypotheses = hypotheses(P, Q, *d);
            for (const auto& h : run.hypotheses)
                if (h.status != "pass") {
                    run.steps.push_back(cs);
                    run.stop_reason = "hypothesis (" + h.label + ") fails";
                    return run;
                }
        }
        if (!in_val(P, *d)) {
            run.steps.push_back(cs);
            run.stop_reason = "direction " + d->str() + " not in Val(P)";
            return run;
        }
        if (step >= max_steps) {
            run.steps.push_back(cs);
            run.stop_reason = "max_steps reached";
            return run;
        }
        cs.cut = cut_step(P, Q, *d);
        run.steps.push_back(cs);
        const auto& c = *cs.cut;
        if (!c.phiP) {
            run.stop_reason = "no rational witness";
            return run;
        }
        P = *c.phiP;
        Q = *c.phiQ;
        d = c.new_dir;
    }
}

}  // namespace weyl
