#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "weyl/element.hpp"
#include "weyl/unipoly.hpp"

namespace weyl {

struct Direction {
    std::int64_t rho = 1;
    std::int64_t sigma = 0;

    Direction() = default;
    // Validates primitivity and rho + sigma >= 0.
    Direction(std::int64_t r, std::int64_t s);

    bool interior() const { return rho + sigma > 0; }  // member of the open set
    bool is_min_boundary() const { return rho == 1 && sigma == -1; }
    bool is_max_boundary() const { return rho == -1 && sigma == 1; }
    Rational weight(const SupportPoint& p) const;
    std::string str() const;
};

bool operator==(const Direction& a, const Direction& b);
bool operator!=(const Direction& a, const Direction& b);
// -1, 0, 1
int dir_cmp(const Direction& a, const Direction& b);
bool operator<(const Direction& a, const Direction& b);
bool operator>(const Direction& a, const Direction& b);

inline const Direction kMinDir{1, -1};
inline const Direction kMaxDir{-1, 1};

Rational degree(const WeylElement& p, const Direction& d);
WeylElement leading_part(const WeylElement& p, const Direction& d);
bool is_homogeneous(const WeylElement& p, const Direction& d);

// Point of the (1,-1)-leading support with largest x.
SupportPoint w_point(const WeylElement& p);
// Point of the (-1,1)-leading support with largest y.
SupportPoint ovw_point(const WeylElement& p);

SupportPoint st(const WeylElement& p, const Direction& d);
SupportPoint en(const WeylElement& p, const Direction& d);

struct CornerData {
    std::optional<SupportPoint> st;
    std::optional<SupportPoint> en;
    SupportPoint w;
    SupportPoint ovw;
    Rational lc;
    Rational ovlc;
};
CornerData corners(const WeylElement& p, const Direction& d);

bool aligned(const SupportPoint& a, const SupportPoint& b);
bool aligned(const WeylElement& p, const WeylElement& q);

struct FPoly {
    UniPoly f;
    SupportPoint st;
};
FPoly f_polynomial(const WeylElement& p, const Direction& d);
// x^s f, with st = (r/l, s).
UniPoly frak_f(const WeylElement& p, const Direction& d);

Direction val_of_point(const SupportPoint& p);
Direction val_of_point(const Rational& x, const Rational& y);

std::vector<Direction> valuation_set(const WeylElement& p);
std::vector<Direction> ov_valuation_set(const WeylElement& p);
bool in_val(const WeylElement& p, const Direction& d);

struct SuccPred {
    std::optional<Direction> succ;
    std::optional<Direction> pred;
};
SuccPred succ_pred(const WeylElement& p, const Direction& d);

Direction window_below(const SupportPoint& p, const Direction& d);

}  // namespace weyl
