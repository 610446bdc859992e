#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational& c);
    static UniPoly x_power(int k, const Rational& c = 1);
    static UniPoly from_roots(const std::vector<Rational>& roots);

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rational operator[](int i) const;
    Rational lc() const;
    Rational eval(const Rational& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    int x_multiplicity() const;  // largest k with x^k | f; f != 0
    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

bool operator==(const UniPoly& a, const UniPoly& b);
bool operator!=(const UniPoly& a, const UniPoly& b);
UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const Rational& c, const UniPoly& a);
UniPoly pow(const UniPoly& a, unsigned k);
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic, gcd(0,0) = 0

bool is_squarefree(const UniPoly& f);
UniPoly radical(const UniPoly& f);
bool divides(const UniPoly& d, const UniPoly& f);

struct SquarefreeFactor {
    int e;
    UniPoly q;
};
// f = lc * prod q_e^e, q_e monic, squarefree, pairwise coprime; only nonconstant q_e listed.
std::vector<SquarefreeFactor> squarefree_decompose(const UniPoly& f);

struct PowerDecomposition {
    UniPoly g;
    int m;
    Rational lambda;
};
PowerDecomposition power_decompose(const UniPoly& f);

// Rational roots ascending by |r|, negative before positive on ties.
std::vector<Rational> rational_roots(const UniPoly& f);

}  // namespace weyl
