#include "weyl/valuation.hpp"

#include <algorithm>
#include <cstdlib>

namespace weyl {

Direction::Direction(std::int64_t r, std::int64_t s) : rho(r), sigma(s) {
    if (gcd64(r, s) != 1) throw PreconditionError("direction not primitive: " + str());
    if (r + s < 0) throw PreconditionError("direction outside closure (rho+sigma<0): " + str());
}

Rational Direction::weight(const SupportPoint& p) const { return Rational(rho) * p.x() + Rational(sigma * p.y); }

std::string Direction::str() const { return "(" + std::to_string(rho) + "," + std::to_string(sigma) + ")"; }

bool operator==(const Direction& a, const Direction& b) { return a.rho == b.rho && a.sigma == b.sigma; }
bool operator!=(const Direction& a, const Direction& b) { return !(a == b); }

int dir_cmp(const Direction& a, const Direction& b) {
    if (a == b) return 0;
    if (a.is_min_boundary() || b.is_max_boundary()) return -1;
    if (a.is_max_boundary() || b.is_min_boundary()) return 1;
    std::int64_t c = a.rho * b.sigma - a.sigma * b.rho;
    return c > 0 ? -1 : (c < 0 ? 1 : 0);
}

bool operator<(const Direction& a, const Direction& b) { return dir_cmp(a, b) < 0; }
bool operator>(const Direction& a, const Direction& b) { return dir_cmp(a, b) > 0; }

namespace {

void require_nonzero(const WeylElement& p) {
    if (p.is_zero()) throw PreconditionError("zero element");
}

std::vector<SupportPoint> leading_support(const WeylElement& p, const Direction& d) {
    require_nonzero(p);
    Rational best;
    std::vector<SupportPoint> out;
    for (const auto& pt : p.support()) {
        Rational v = d.weight(pt);
        if (out.empty() || v > best) {
            best = v;
            out.assign(1, pt);
        } else if (v == best) {
            out.push_back(pt);
        }
    }
    return out;
}

// max of key1, then max of key2
template <class K1, class K2>
SupportPoint argmax2(const std::vector<SupportPoint>& pts, K1 k1, K2 k2) {
    SupportPoint best = pts.front();
    for (const auto& p : pts) {
        Rational a = k1(p), b = k1(best);
        if (a > b || (a == b && k2(p) > k2(best))) best = p;
    }
    return best;
}

SupportPoint w_of(const std::vector<SupportPoint>& pts) {
    return argmax2(pts, [](const SupportPoint& p) -> Rational { return p.x() - p.y; },
                   [](const SupportPoint& p) -> Rational { return p.x(); });
}

SupportPoint ovw_of(const std::vector<SupportPoint>& pts) {
    return argmax2(pts, [](const SupportPoint& p) -> Rational { return Rational(p.y) - p.x(); },
                   [](const SupportPoint& p) -> Rational { return Rational(p.y); });
}

}  // namespace

Rational degree(const WeylElement& p, const Direction& d) { return d.weight(leading_support(p, d).front()); }

WeylElement leading_part(const WeylElement& p, const Direction& d) {
    WeylElement out(p.level(), true);
    for (const auto& pt : leading_support(p, d)) out.add_term(pt.xnum, pt.y, p.coeff(pt));
    return out;
}

bool is_homogeneous(const WeylElement& p, const Direction& d) {
    return !p.is_zero() && leading_support(p, d).size() == p.size();
}

SupportPoint w_point(const WeylElement& p) { return w_of(leading_support(p, kMinDir)); }
SupportPoint ovw_point(const WeylElement& p) { return ovw_of(leading_support(p, kMaxDir)); }

SupportPoint st(const WeylElement& p, const Direction& d) {
    if (d.is_min_boundary()) throw PreconditionError("st undefined at (1,-1)");
    return w_of(leading_support(p, d));
}

SupportPoint en(const WeylElement& p, const Direction& d) {
    if (d.is_max_boundary()) throw PreconditionError("en undefined at (-1,1)");
    return ovw_of(leading_support(p, d));
}

CornerData corners(const WeylElement& p, const Direction& d) {
    CornerData c;
    c.w = w_point(p);
    c.ovw = ovw_point(p);
    c.lc = p.coeff(c.w);
    c.ovlc = p.coeff(c.ovw);
    if (!d.is_min_boundary()) c.st = st(p, d);
    if (!d.is_max_boundary()) c.en = en(p, d);
    return c;
}

bool aligned(const SupportPoint& a, const SupportPoint& b) { return cross(a, b) == 0; }
bool aligned(const WeylElement& p, const WeylElement& q) { return aligned(w_point(p), w_point(q)); }

FPoly f_polynomial(const WeylElement& p, const Direction& d) {
    if (!d.interior() || d.sigma > 0) throw PreconditionError("f_polynomial needs rho+sigma>0 and sigma<=0");
    auto pts = leading_support(p, d);
    SupportPoint s0 = w_of(pts);
    Rational step = Rational(-d.sigma) / d.rho;
    std::vector<Rational> a;
    for (const auto& pt : pts) {
        std::int64_t i = pt.y - s0.y;
        if (i < 0 || pt.x() != s0.x() + step * i)
            throw PreconditionError("leading support off the step lattice at " + pt.str());
        if (a.size() <= static_cast<std::size_t>(i)) a.resize(static_cast<std::size_t>(i) + 1);
        a[static_cast<std::size_t>(i)] = p.coeff(pt);
    }
    return {UniPoly(std::move(a)), s0};
}

UniPoly frak_f(const WeylElement& p, const Direction& d) {
    auto fp = f_polynomial(p, d);
    return UniPoly::x_power(static_cast<int>(fp.st.y)) * fp.f;
}

Direction val_of_point(const Rational& x, const Rational& y) {
    if (x == y) throw PreconditionError("val undefined on the diagonal");
    // (y, -x) when y - x > 0, else (-y, x); then clear denominators.
    Rational r = y - x > 0 ? y : Rational(-y);
    Rational s = y - x > 0 ? Rational(-x) : x;
    Int den;
    mpz_lcm(den.get_mpz_t(), r.get_den_mpz_t(), s.get_den_mpz_t());
    Int ri = Int(r * den), si = Int(s * den), g;
    mpz_gcd(g.get_mpz_t(), ri.get_mpz_t(), si.get_mpz_t());
    return Direction(to_int64(Int(ri / g)), to_int64(Int(si / g)));
}

Direction val_of_point(const SupportPoint& p) { return val_of_point(p.x(), Rational(p.y)); }

std::vector<Direction> valuation_set(const WeylElement& p) {
    require_nonzero(p);
    const std::int64_t L = p.level();
    using IP = std::pair<std::int64_t, std::int64_t>;  // (xnum, y*L)
    std::vector<IP> pts;
    for (const auto& [k, c] : p.terms()) pts.push_back({k.xnum, k.y * L});
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Direction> out;
    if (pts.size() < 2) return out;
    auto turn = [](const IP& o, const IP& a, const IP& b) {
        return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
    };
    std::vector<IP> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& q : pts) {
        while (k >= 2 && turn(hull[k - 2], hull[k - 1], q) <= 0) --k;
        hull[k++] = q;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && turn(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k);
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        std::int64_t dx = hull[i + 1].first - hull[i].first, dy = hull[i + 1].second - hull[i].second;
        if (dx == dy) continue;
        Direction d = val_of_point(Rational(dx), Rational(dy));
        SupportPoint end{hull[i].first, L, hull[i].second / L};
        if (d.weight(end) == degree(p, d) && std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
    }
    std::sort(out.begin(), out.end(), [](const Direction& a, const Direction& b) { return a < b; });
    return out;
}

std::vector<Direction> ov_valuation_set(const WeylElement& p) {
    auto v = valuation_set(p);
    v.insert(v.begin(), kMinDir);
    v.push_back(kMaxDir);
    return v;
}

bool in_val(const WeylElement& p, const Direction& d) {
    return d.interior() && leading_support(p, d).size() > 1;
}

SuccPred succ_pred(const WeylElement& p, const Direction& d) {
    if (!d.interior()) throw PreconditionError("succ_pred needs a direction with rho+sigma>0");
    SupportPoint e = en(p, d), s = st(p, d);
    SuccPred r;
    for (const auto& q : p.support()) {
        if (Rational(q.y) - q.x() > Rational(e.y) - e.x()) {
            Direction c = val_of_point(q - e);
            if (!r.succ || c < *r.succ) r.succ = c;
        }
        if (q.x() - q.y > s.x() - s.y) {
            Direction c = val_of_point(q - s);
            if (!r.pred || c > *r.pred) r.pred = c;
        }
    }
    return r;
}

Direction window_below(const SupportPoint& p, const Direction& d) {
    if (d.weight(p) <= 0) throw PreconditionError("window_below needs v_d(p) > 0");
    auto r = p.reduced();
    if (p.x() < p.y) {
        std::int64_t a = p.y * r.level, b = -r.xnum, g = gcd64(a, b);
        return Direction(a / g, b / g);
    }
    return kMinDir;
}

}  // namespace weyl
