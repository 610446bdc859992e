#include "weyl/unipoly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace weyl {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::x_power(int k, const Rational& c) {
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v[static_cast<std::size_t>(k)] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(const std::vector<Rational>& roots) {
    UniPoly r = constant(1);
    for (const auto& a : roots) r = r * UniPoly({-a, 1});
    return r;
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::operator[](int i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<std::size_t>(i)];
}

Rational UniPoly::lc() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational UniPoly::eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

UniPoly UniPoly::derivative() const {
    std::vector<Rational> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * static_cast<long>(i));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return (1 / lc()) * *this;
}

int UniPoly::x_multiplicity() const {
    if (is_zero()) throw PreconditionError("x-multiplicity of zero polynomial");
    int k = 0;
    while (c_[static_cast<std::size_t>(k)] == 0) ++k;
    return k;
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = (*this)[i];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (i == 0 || a != 1) os << to_string(a) << (i ? "*" : "");
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs() == b.coeffs(); }
bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + Rational(-1) * b; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& c, const UniPoly& a) {
    std::vector<Rational> v = a.coeffs();
    for (auto& x : v) x *= c;
    return UniPoly(std::move(v));
}

UniPoly pow(const UniPoly& a, unsigned k) {
    UniPoly r = UniPoly::constant(1);
    for (unsigned i = 0; i < k; ++i) r = r * a;
    return r;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw PreconditionError("division by zero polynomial");
    std::vector<Rational> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UniPoly{}, a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
    Rational inv = 1 / b.lc();
    for (int i = a.degree(); i >= db; --i) {
        Rational t = r[static_cast<std::size_t>(i)] * inv;
        q[static_cast<std::size_t>(i - db)] = t;
        if (t == 0) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= t * b[j];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd(const UniPoly& a0, const UniPoly& b0) {
    UniPoly a = a0, b = b0;
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

bool is_squarefree(const UniPoly& f) {
    if (f.is_zero()) return false;
    return gcd(f, f.derivative()).degree() == 0;
}

UniPoly radical(const UniPoly& f) {
    if (f.is_zero()) throw PreconditionError("radical of zero polynomial");
    if (f.degree() == 0) return UniPoly::constant(1);
    return divmod(f.monic(), gcd(f, f.derivative())).first;
}

bool divides(const UniPoly& d, const UniPoly& f) { return divmod(f, d).second.is_zero(); }

std::vector<SquarefreeFactor> squarefree_decompose(const UniPoly& f0) {
    if (f0.is_zero()) throw PreconditionError("squarefree decomposition of zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (f0.degree() == 0) return out;
    UniPoly f = f0.monic();
    UniPoly fp = f.derivative();
    UniPoly a = gcd(f, fp);
    UniPoly b = divmod(f, a).first;
    UniPoly c = divmod(fp, a).first;
    UniPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        UniPoly q = gcd(b, d);
        if (q.degree() > 0) out.push_back({i, q});
        b = divmod(b, q).first;
        c = divmod(d, q).first;
        d = c - b.derivative();
    }
    return out;
}

PowerDecomposition power_decompose(const UniPoly& f) {
    if (f.degree() < 1) throw PreconditionError("power decomposition needs degree >= 1");
    auto parts = squarefree_decompose(f);
    int m = 0;
    for (const auto& p : parts) m = std::gcd(m, p.e);
    UniPoly g = UniPoly::constant(1);
    for (const auto& p : parts) g = g * pow(p.q, static_cast<unsigned>(p.e / m));
    PowerDecomposition r{g, m, f.lc()};
    if (Rational(r.lambda) * pow(g, static_cast<unsigned>(m)) != f) throw InternalError("power_decompose reconstruction");
    return r;
}

namespace {

Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long seed = 1;; ++seed) {
        Int x = 2, y = 2, d = 1;
        auto step = [&](const Int& v) { return Int((v * v + seed) % n); };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            Int diff = abs(Int(x - y));
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void factor_into(Int n, std::vector<Int>& primes) {
    for (unsigned long p = 2; p < 1000 && n > 1; ++p) {
        while (n % p == 0) {
            primes.push_back(Int(p));
            n /= p;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        primes.push_back(n);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

std::vector<Int> divisors(const Int& n0) {
    Int n = abs(n0);
    std::vector<Int> primes;
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<Int> divs{1};
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        std::size_t base = divs.size();
        Int pk = 1;
        for (std::size_t e = i; e < j; ++e) {
            pk *= primes[i];
            for (std::size_t t = 0; t < base; ++t) divs.push_back(divs[t] * pk);
        }
        i = j;
    }
    return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& f) {
    if (f.is_zero()) throw PreconditionError("roots of zero polynomial");
    std::vector<Rational> roots;
    int k = f.x_multiplicity();
    if (k > 0) roots.push_back(0);
    // integer primitive form of f / x^k
    Int den = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Int> a;
    for (int i = k; i <= f.degree(); ++i) a.push_back(Int(f[i] * den));
    if (a.size() > 1) {
        auto ps = divisors(a.front()), qs = divisors(a.back());
        std::set<Rational> found;
        for (const auto& p : ps)
            for (const auto& q : qs)
                for (int sgn : {1, -1}) {
                    Rational r(sgn * p, q);
                    r.canonicalize();
                    if (!found.count(r) && f.eval(r) == 0) found.insert(r);
                }
        roots.insert(roots.end(), found.begin(), found.end());
    }
    std::sort(roots.begin(), roots.end(), [](const Rational& x, const Rational& y) {
        if (abs(x) != abs(y)) return abs(x) < abs(y);
        return x < y;
    });
    return roots;
}

}  // namespace weyl
