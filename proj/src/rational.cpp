#include "weyl/rational.hpp"

#include <cctype>
#include <numeric>

namespace weyl {

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw PreconditionError("zero denominator");
    Rational q{Int(std::to_string(num)), Int(std::to_string(den))};
    q.canonicalize();
    return q;
}

namespace {

bool is_int_token(const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_int_token(num, true) || !is_int_token(den, false))
        throw PreconditionError("malformed rational: " + s);
    Int n(num), d(den);
    if (d == 0) throw PreconditionError("zero denominator: " + s);
    Rational q(n, d);
    q.canonicalize();
    if (q.get_num() != n || q.get_den() != d)
        throw PreconditionError("rational not in lowest terms: " + s);
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Int& z) {
    if (!z.fits_slong_p()) throw PreconditionError("integer out of 64-bit range");
    return z.get_si();
}

std::int64_t to_int64(const Rational& q) {
    if (!is_integer(q)) throw PreconditionError("expected an integer, got " + q.get_str());
    return to_int64(q.get_num());
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return std::lcm(a, b);
}

}  // namespace weyl
