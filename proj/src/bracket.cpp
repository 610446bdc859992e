#include "weyl/bracket.hpp"

#include <map>

namespace weyl {

namespace {

void require_bracket_dir(const Direction& d) {
    if (!d.interior() || d.sigma > 0) throw PreconditionError("bracket needs rho+sigma>0 and sigma<=0, got " + d.str());
}

// Gaussian elimination; returns one solution with free variables set to zero.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                                                  std::size_t n) {
    std::size_t rows = a.size(), r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < n && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        Rational inv = 1 / a[r][c];
        for (std::size_t k = c; k < n; ++k) a[r][k] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[r][k];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

}  // namespace

WeylElement bracket_closed_form(const WeylElement& lp, const WeylElement& lq) {
    std::int64_t h = lcm64(lp.level(), lq.level());
    WeylElement out(h, true);
    for (const auto& p : lp.support()) {
        for (const auto& q : lq.support()) {
            Rational c = lp.coeff(p) * lq.coeff(q) * cross(q, p);
            if (c == 0) continue;
            auto t = (p + q - SupportPoint{1, 1, 1}).at_level(h);
            out.add_term(t.xnum, t.y, c);
        }
    }
    return out;
}

BracketOutcome bracket_rs(const WeylElement& p0, const WeylElement& q0, const Direction& d) {
    require_bracket_dir(d);
    if (p0.is_zero() || q0.is_zero()) throw PreconditionError("bracket of zero element");
    auto p = p0.with_flag(false), q = q0.with_flag(false);
    BracketOutcome r;
    r.degree_witness = degree(p, d) + degree(q, d) - Rational(d.rho + d.sigma);
    WeylElement comm = commutator(p, q);
    r.proportional = comm.is_zero() || degree(comm, d) < r.degree_witness;
    r.value = r.proportional ? WeylElement(comm.level(), true) : leading_part(comm, d);
    if (bracket_closed_form(leading_part(p, d), leading_part(q, d)) != r.value)
        throw InternalError("closed-form bracket disagrees with the full commutator");
    return r;
}

Rational ode_constant(const WeylElement& p, const WeylElement& q, const Direction& d) {
    require_bracket_dir(d);
    return cross(st(q, d), st(p, d));
}

OdeCertificate ode_identity(const WeylElement& p, const WeylElement& q, const Direction& d) {
    auto br = bracket_rs(p, q, d);
    if (br.proportional) throw PreconditionError("ode_identity needs a nonproportional pair");
    auto fp = f_polynomial(p, d), fq = f_polynomial(q, d), fb = f_polynomial(br.value, d);
    OdeCertificate cert;
    cert.a = degree(q, d) / d.rho;
    cert.b = degree(p, d) / d.rho;
    cert.c = ode_constant(p, q, d);
    // F(x) = sum lambda_i mu_j c_ij x^{i+j}
    Rational step = Rational(-d.sigma) / d.rho;
    std::vector<Rational> F(static_cast<std::size_t>(fp.f.degree() + fq.f.degree() + 1));
    for (int i = 0; i <= fp.f.degree(); ++i)
        for (int j = 0; j <= fq.f.degree(); ++j) {
            SupportPoint pi = point_from(fp.st.x() + step * i, fp.st.y + i);
            SupportPoint qj = point_from(fq.st.x() + step * j, fq.st.y + j);
            F[static_cast<std::size_t>(i + j)] += fp.f[i] * fq.f[j] * cross(qj, pi);
        }
    UniPoly Fp(F);
    cert.h = Fp.x_multiplicity();
    UniPoly x = UniPoly::x_power(1);
    UniPoly lhs = UniPoly::x_power(cert.h) * fb.f;
    UniPoly rhs = cert.c * fp.f * fq.f + cert.a * x * fp.f.derivative() * fq.f - cert.b * x * fq.f.derivative() * fp.f;
    Rational c_again = lhs[0] / (fp.f[0] * fq.f[0]);
    cert.holds = lhs == rhs && Fp == lhs && c_again == cert.c;
    return cert;
}

RootFactorization extract_common_root(const WeylElement& p, const WeylElement& q, const Direction& d) {
    require_bracket_dir(d);
    if (!bracket_rs(p, q, d).proportional) throw PreconditionError("extract_common_root needs [P,Q]_d = 0");
    Rational vp = degree(p, d), vq = degree(q, d);
    if (vp <= 0 || vq <= 0) throw PreconditionError("extract_common_root needs positive degrees");
    Rational ratio = vp / vq;
    RootFactorization r;
    r.m = static_cast<int>(to_int64(Int(ratio.get_num())));
    r.n = static_cast<int>(to_int64(Int(ratio.get_den())));
    auto fp = f_polynomial(p, d), fq = f_polynomial(q, d);
    UniPoly g = UniPoly::constant(1);
    if (fp.f.degree() > 0) {
        auto pd = power_decompose(fp.f);
        if (pd.m % r.m != 0) throw PreconditionError("f_P is not an m-th power");
        g = pow(pd.g, static_cast<unsigned>(pd.m / r.m));
    } else if (fq.f.degree() > 0) {
        throw PreconditionError("f_P constant but f_Q not");
    }
    r.lamP = fp.f.lc();
    r.lamQ = fq.f.lc();
    if (r.lamQ * pow(g, static_cast<unsigned>(r.n)) != fq.f) throw PreconditionError("f_Q is not lambda*g^n");
    if (fp.st.y % r.m != 0) throw InternalError("st(P) y-coordinate not divisible by m");
    std::int64_t level = lcm64(p.level(), q.level());
    Rational x0 = fp.st.x() / r.m;
    std::int64_t y0 = fp.st.y / r.m;
    Rational step = Rational(-d.sigma) / d.rho;
    r.R = WeylElement(level, true);
    for (int i = 0; i <= g.degree(); ++i) {
        if (g[i] == 0) continue;
        Rational xn = (x0 + step * i) * level;
        if (!is_integer(xn)) throw InternalError("common root leaves level " + std::to_string(level));
        r.R.add_term(to_int64(xn), y0 + i, g[i]);
    }
    if (r.lamP * power(r.R, static_cast<unsigned>(r.m)) != leading_part(p, d) ||
        r.lamQ * power(r.R, static_cast<unsigned>(r.n)) != leading_part(q, d))
        throw InternalError("common root does not reconstruct the leading parts");
    return r;
}

std::optional<WeylElement> solve_F(const WeylElement& p0, const Direction& d, std::optional<int> dmax) {
    require_bracket_dir(d);
    auto p = p0.with_flag(false);
    if (degree(p, d) <= 0) throw PreconditionError("solve_F needs v_d(P) > 0");
    WeylElement lp = leading_part(p, d);
    int D = dmax ? *dmax : static_cast<int>(en(p, d).y) + 1;
    if (D < 0) throw PreconditionError("Dmax must be nonnegative");
    std::int64_t L = lcm64(p.level(), d.rho);
    std::vector<SupportPoint> unknowns;
    for (int y = 0; y <= D; ++y)
        unknowns.push_back(point_from(Rational(d.rho + d.sigma - d.sigma * y) / d.rho, y, L));
    std::map<std::pair<Rational, std::int64_t>, std::size_t> row_of;
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> rhs;
    auto row = [&](const SupportPoint& t) {
        auto key = std::make_pair(t.x(), t.y);
        auto it = row_of.find(key);
        if (it != row_of.end()) return it->second;
        row_of.emplace(key, A.size());
        A.emplace_back(unknowns.size());
        rhs.push_back(lp.coeff(t));
        return A.size() - 1;
    };
    for (const auto& t : lp.support()) row(t);
    for (std::size_t k = 0; k < unknowns.size(); ++k)
        for (const auto& pt : lp.support()) {
            Rational c = lp.coeff(pt) * cross(unknowns[k], pt);
            if (c == 0) continue;
            A[row(pt + unknowns[k] - SupportPoint{1, 1, 1})][k] += c;
        }
    auto sol = solve_linear(A, rhs, unknowns.size());
    if (!sol) return std::nullopt;
    WeylElement F(L);
    for (std::size_t k = 0; k < unknowns.size(); ++k) F.add_term(unknowns[k].xnum, unknowns[k].y, (*sol)[k]);
    if (F.is_zero()) return std::nullopt;
    if (bracket_rs(p, F, d).value != lp) throw InternalError("solve_F solution fails the bracket check");
    try {
        F = relevel(F, p.level());
    } catch (const PreconditionError&) {
    }
    return F;
}

PavadassReport pavadass_flags(const UniPoly& fP, const UniPoly& fF) {
    PavadassReport r;
    r.squarefree = is_squarefree(fF);
    r.radical_divides = divides(radical(fP), fF);
    return r;
}

PavadassReport pavadass_check(const WeylElement& p, const WeylElement& f, const Direction& d) {
    if (!is_homogeneous(f, d)) throw PreconditionError("F is not homogeneous");
    if (bracket_rs(p, f, d).value != leading_part(p, d)) throw PreconditionError("[P,F]_d != l_d(P)");
    return pavadass_flags(f_polynomial(p, d).f, f_polynomial(f, d).f);
}

}  // namespace weyl
