#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

// (xnum/level, y). Equality and ordering use reduced coordinates.
struct SupportPoint {
    std::int64_t xnum = 0;
    std::int64_t level = 1;
    std::int64_t y = 0;

    SupportPoint() = default;
    SupportPoint(std::int64_t xn, std::int64_t l, std::int64_t yy);

    Rational x() const;
    SupportPoint reduced() const;
    SupportPoint at_level(std::int64_t h) const;
    std::string str() const;
};

bool operator==(const SupportPoint& a, const SupportPoint& b);
bool operator!=(const SupportPoint& a, const SupportPoint& b);
SupportPoint operator+(const SupportPoint& a, const SupportPoint& b);
SupportPoint operator-(const SupportPoint& a, const SupportPoint& b);
SupportPoint operator*(std::int64_t k, const SupportPoint& a);

// Exact point from rational x; throws unless x*h is an integer.
SupportPoint point_from(const Rational& x, std::int64_t y, std::int64_t h);
// Smallest level at which x is representable.
SupportPoint point_from(const Rational& x, std::int64_t y);

Rational cross(const SupportPoint& a, const SupportPoint& b);  // a1*b2 - a2*b1

// Term key at the element's level: (xnum, y).
struct TermKey {
    std::int64_t xnum;
    std::int64_t y;
};

inline bool operator==(const TermKey& a, const TermKey& b) { return a.xnum == b.xnum && a.y == b.y; }

// (y, x) descending.
struct TermOrder {
    bool operator()(const TermKey& a, const TermKey& b) const {
        if (a.y != b.y) return a.y > b.y;
        return a.xnum > b.xnum;
    }
};

class WeylElement {
public:
    using Terms = std::map<TermKey, Rational, TermOrder>;

    explicit WeylElement(std::int64_t level = 1, bool commutative = false);

    static WeylElement monomial(const Rational& c, std::int64_t xnum, std::int64_t level,
                                std::int64_t y, bool commutative = false);
    static WeylElement constant(const Rational& c, std::int64_t level = 1);
    static WeylElement X(std::int64_t xnum = 1, std::int64_t level = 1);
    static WeylElement Y(std::int64_t power = 1);

    std::int64_t level() const { return level_; }
    bool commutative() const { return commutative_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // Adds c to the coefficient at (xnum/level, y); prunes zeros.
    void add_term(std::int64_t xnum, std::int64_t y, const Rational& c);
    Rational coeff(const SupportPoint& p) const;
    std::vector<SupportPoint> support() const;

    WeylElement with_flag(bool commutative) const;

private:
    std::int64_t level_;
    bool commutative_;
    Terms terms_;
};

// Level-independent equality of value and flag.
bool operator==(const WeylElement& a, const WeylElement& b);
bool operator!=(const WeylElement& a, const WeylElement& b);

WeylElement embed_level(const WeylElement& p, std::int64_t h);
WeylElement add_scale(const WeylElement& p, const WeylElement& q, const Rational& c);
WeylElement operator+(const WeylElement& p, const WeylElement& q);
WeylElement operator-(const WeylElement& p, const WeylElement& q);
WeylElement operator*(const Rational& c, const WeylElement& p);

WeylElement multiply(const WeylElement& p, const WeylElement& q);
WeylElement multiply_oracle(const WeylElement& p, const WeylElement& q);
WeylElement operator*(const WeylElement& p, const WeylElement& q);
WeylElement power(const WeylElement& p, unsigned k);
WeylElement commutator(const WeylElement& p, const WeylElement& q);

WeylElement symbol_map(const WeylElement& p);
WeylElement symbol_map_inverse(const WeylElement& p);

// Keys are v_{1,-1} degrees.
std::map<Rational, WeylElement> graded_split(const WeylElement& p);

// Re-expresses p at level h when every exponent fits; throws otherwise.
WeylElement relevel(const WeylElement& p, std::int64_t h);

std::string to_text(const WeylElement& p);

}  // namespace weyl
