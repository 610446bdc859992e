#include "weyl/element.hpp"

#include <sstream>

namespace weyl {

SupportPoint::SupportPoint(std::int64_t xn, std::int64_t l, std::int64_t yy) : xnum(xn), level(l), y(yy) {
    if (l <= 0) throw PreconditionError("level must be positive");
}

Rational SupportPoint::x() const { return make_rational(xnum, level); }

SupportPoint SupportPoint::reduced() const {
    std::int64_t g = gcd64(xnum, level);
    if (g == 0) g = level;
    return {xnum / g, level / g, y};
}

SupportPoint SupportPoint::at_level(std::int64_t h) const {
    auto r = reduced();
    if (h <= 0 || h % r.level != 0)
        throw PreconditionError("point " + str() + " not representable at level " + std::to_string(h));
    return {r.xnum * (h / r.level), h, y};
}

std::string SupportPoint::str() const { return "(" + to_string(x()) + "," + std::to_string(y) + ")"; }

bool operator==(const SupportPoint& a, const SupportPoint& b) {
    return a.y == b.y && a.xnum * b.level == b.xnum * a.level;
}
bool operator!=(const SupportPoint& a, const SupportPoint& b) { return !(a == b); }

SupportPoint operator+(const SupportPoint& a, const SupportPoint& b) {
    std::int64_t h = lcm64(a.level, b.level);
    return SupportPoint{a.xnum * (h / a.level) + b.xnum * (h / b.level), h, a.y + b.y}.reduced();
}

SupportPoint operator-(const SupportPoint& a, const SupportPoint& b) { return a + SupportPoint{-b.xnum, b.level, -b.y}; }

SupportPoint operator*(std::int64_t k, const SupportPoint& a) { return SupportPoint{k * a.xnum, a.level, k * a.y}.reduced(); }

SupportPoint point_from(const Rational& x, std::int64_t y, std::int64_t h) {
    Rational t = x * h;
    if (!is_integer(t))
        throw PreconditionError("x = " + to_string(x) + " not representable at level " + std::to_string(h));
    return {to_int64(t), h, y};
}

SupportPoint point_from(const Rational& x, std::int64_t y) {
    return point_from(x, y, to_int64(Int(x.get_den())));
}

Rational cross(const SupportPoint& a, const SupportPoint& b) { return a.x() * b.y - Rational(a.y) * b.x(); }

WeylElement::WeylElement(std::int64_t level, bool commutative) : level_(level), commutative_(commutative) {
    if (level <= 0) throw PreconditionError("level must be positive");
}

WeylElement WeylElement::monomial(const Rational& c, std::int64_t xnum, std::int64_t level, std::int64_t y,
                                  bool commutative) {
    WeylElement e(level, commutative);
    e.add_term(xnum, y, c);
    return e;
}

WeylElement WeylElement::constant(const Rational& c, std::int64_t level) { return monomial(c, 0, level, 0); }
WeylElement WeylElement::X(std::int64_t xnum, std::int64_t level) { return monomial(1, xnum, level, 0); }
WeylElement WeylElement::Y(std::int64_t power) { return monomial(1, 0, 1, power); }

void WeylElement::add_term(std::int64_t xnum, std::int64_t y, const Rational& c) {
    if (y < 0) throw PreconditionError("negative y-exponent");
    if (c == 0) return;
    TermKey k{xnum, y};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rational WeylElement::coeff(const SupportPoint& p) const {
    auto r = p.reduced();
    if (level_ % r.level != 0) return 0;
    auto it = terms_.find(TermKey{r.xnum * (level_ / r.level), p.y});
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<SupportPoint> WeylElement::support() const {
    std::vector<SupportPoint> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.push_back({k.xnum, level_, k.y});
    return out;
}

WeylElement WeylElement::with_flag(bool commutative) const {
    WeylElement e = *this;
    e.commutative_ = commutative;
    return e;
}

bool operator==(const WeylElement& a, const WeylElement& b) {
    if (a.commutative() != b.commutative() || a.size() != b.size()) return false;
    std::int64_t h = lcm64(a.level(), b.level());
    auto ea = embed_level(a, h), eb = embed_level(b, h);
    return ea.terms() == eb.terms();
}
bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

WeylElement embed_level(const WeylElement& p, std::int64_t h) {
    if (h <= 0 || h % p.level() != 0)
        throw PreconditionError("level " + std::to_string(h) + " is not a multiple of " + std::to_string(p.level()));
    std::int64_t f = h / p.level();
    WeylElement out(h, p.commutative());
    for (const auto& [k, c] : p.terms()) out.add_term(k.xnum * f, k.y, c);
    return out;
}

WeylElement relevel(const WeylElement& p, std::int64_t h) {
    WeylElement out(h, p.commutative());
    for (const auto& pt : p.support()) {
        auto q = pt.at_level(h);
        out.add_term(q.xnum, q.y, p.coeff(pt));
    }
    return out;
}

WeylElement add_scale(const WeylElement& p, const WeylElement& q, const Rational& c) {
    std::int64_t h = lcm64(p.level(), q.level());
    WeylElement out = embed_level(p, h);
    if (c == 0) return out;
    std::int64_t f = h / q.level();
    for (const auto& [k, v] : q.terms()) out.add_term(k.xnum * f, k.y, c * v);
    return out;
}

WeylElement operator+(const WeylElement& p, const WeylElement& q) { return add_scale(p, q, 1); }
WeylElement operator-(const WeylElement& p, const WeylElement& q) { return add_scale(p, q, -1); }
WeylElement operator*(const Rational& c, const WeylElement& p) {
    return add_scale(WeylElement(p.level(), p.commutative()), p, c);
}

namespace {

void check_flags(const WeylElement& p, const WeylElement& q) {
    if (p.commutative() != q.commutative()) throw PreconditionError("mixing W and L elements");
}

Rational binom(std::int64_t n, std::int64_t k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

}  // namespace

WeylElement multiply(const WeylElement& p0, const WeylElement& q0) {
    check_flags(p0, q0);
    std::int64_t h = lcm64(p0.level(), q0.level());
    auto p = embed_level(p0, h), q = embed_level(q0, h);
    WeylElement out(h, p.commutative());
    for (const auto& [ka, a] : p.terms()) {
        for (const auto& [kb, b] : q.terms()) {
            Rational ab = a * b;
            if (p.commutative()) {
                out.add_term(ka.xnum + kb.xnum, ka.y + kb.y, ab);
                continue;
            }
            // X^a Y^j X^b Y^j' = sum_k C(j,k) (b)_k X^{a+b-k} Y^{j+j'-k}
            Rational top = make_rational(kb.xnum, h);
            Rational falling = 1;
            for (std::int64_t k = 0; k <= ka.y; ++k) {
                if (falling == 0) break;
                out.add_term(ka.xnum + kb.xnum - k * h, ka.y + kb.y - k, ab * binom(ka.y, k) * falling);
                falling *= top - k;
            }
        }
    }
    return out;
}

WeylElement multiply_oracle(const WeylElement& p0, const WeylElement& q0) {
    check_flags(p0, q0);
    std::int64_t h = lcm64(p0.level(), q0.level());
    auto p = embed_level(p0, h), q = embed_level(q0, h);
    WeylElement out(h, p.commutative());
    if (p.commutative()) {
        for (const auto& [ka, a] : p.terms())
            for (const auto& [kb, b] : q.terms()) out.add_term(ka.xnum + kb.xnum, ka.y + kb.y, a * b);
        return out;
    }
    const Rational step = make_rational(1, h);
    // Y * Z^n with Z = X^{1/h}, one rewrite Y Z = Z Y + (1/h) Z^{1-h} at a time.
    std::map<std::int64_t, WeylElement> memo;
    auto y_times_z = [&](auto&& self, std::int64_t n) -> WeylElement {
        if (auto it = memo.find(n); it != memo.end()) return it->second;
        WeylElement r(h);
        if (n == 0) {
            r.add_term(0, 1, 1);
        } else {
            std::int64_t inner = n > 0 ? n - 1 : n + 1;
            std::int64_t shift = n > 0 ? 1 : -1;
            const WeylElement prev = self(self, inner);
            for (const auto& [k, c] : prev.terms()) r.add_term(k.xnum + shift, k.y, c);
            r.add_term(n - h, 0, n > 0 ? step : -step);
        }
        memo.emplace(n, r);
        return r;
    };
    auto left_y = [&](const WeylElement& e) {
        WeylElement r(h);
        for (const auto& [k, c] : e.terms()) {
            const WeylElement yz = y_times_z(y_times_z, k.xnum);
            for (const auto& [k2, c2] : yz.terms()) r.add_term(k2.xnum, k2.y + k.y, c * c2);
        }
        return r;
    };
    for (const auto& [ka, a] : p.terms()) {
        for (const auto& [kb, b] : q.terms()) {
            WeylElement mid = WeylElement::monomial(1, kb.xnum, h, 0);
            for (std::int64_t j = 0; j < ka.y; ++j) mid = left_y(mid);
            for (const auto& [k, c] : mid.terms()) out.add_term(k.xnum + ka.xnum, k.y + kb.y, a * b * c);
        }
    }
    return out;
}

WeylElement operator*(const WeylElement& p, const WeylElement& q) { return multiply(p, q); }

WeylElement power(const WeylElement& p, unsigned k) {
    WeylElement r = WeylElement::monomial(1, 0, p.level(), 0, p.commutative());
    for (unsigned i = 0; i < k; ++i) r = multiply(r, p);
    return r;
}

WeylElement commutator(const WeylElement& p, const WeylElement& q) { return multiply(p, q) - multiply(q, p); }

WeylElement symbol_map(const WeylElement& p) { return p.with_flag(true); }
WeylElement symbol_map_inverse(const WeylElement& p) { return p.with_flag(false); }

std::map<Rational, WeylElement> graded_split(const WeylElement& p) {
    std::map<Rational, WeylElement> out;
    for (const auto& [k, c] : p.terms()) {
        Rational deg = make_rational(k.xnum, p.level()) - k.y;
        auto it = out.try_emplace(deg, p.level(), p.commutative()).first;
        it->second.add_term(k.xnum, k.y, c);
    }
    return out;
}

std::string to_text(const WeylElement& p) {
    if (p.is_zero()) return "0";
    const char* xs = p.commutative() ? "x" : "X";
    const char* ys = p.commutative() ? "y" : "Y";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : p.terms()) {
        Rational cc = c;
        if (!first) {
            os << (cc < 0 ? " - " : " + ");
            if (cc < 0) cc = -cc;
        }
        first = false;
        Rational ex = make_rational(k.xnum, p.level());
        bool unit = (k.xnum != 0 || k.y != 0);
        if (!unit || (cc != 1 && cc != -1)) {
            os << to_string(cc);
            if (unit) os << "*";
        } else if (cc == -1) {
            os << "-";
        }
        bool wrote = false;
        if (ex != 0) {
            os << xs;
            if (ex != 1) os << "^" << (is_integer(ex) ? to_string(ex) : "(" + to_string(ex) + ")");
            wrote = true;
        }
        if (k.y != 0) {
            if (wrote) os << "*";
            os << ys;
            if (k.y != 1) os << "^" << k.y;
        }
    }
    return os.str();
}

}  // namespace weyl
