#pragma once

#include <optional>

#include "weyl/valuation.hpp"

namespace weyl {

struct BracketOutcome {
    WeylElement value;  // symbol side; zero iff proportional
    bool proportional = false;
    Rational degree_witness;  // v(P) + v(Q) - (rho + sigma)
};

// Sum over leading supports of lambda_p mu_q (q x p) x^{p+q-(1,1)}.
WeylElement bracket_closed_form(const WeylElement& lp, const WeylElement& lq);

BracketOutcome bracket_rs(const WeylElement& p, const WeylElement& q, const Direction& d);

struct OdeCertificate {
    int h = 0;
    Rational c, a, b;
    bool holds = false;
};
// c = st(Q) x st(P); defined for any pair, zero for proportional pairs with a,b > 0.
Rational ode_constant(const WeylElement& p, const WeylElement& q, const Direction& d);
OdeCertificate ode_identity(const WeylElement& p, const WeylElement& q, const Direction& d);

struct RootFactorization {
    WeylElement R;
    int m = 1, n = 1;
    Rational lamP, lamQ;
};
RootFactorization extract_common_root(const WeylElement& p, const WeylElement& q, const Direction& d);

// F on the line v_d = rho + sigma, y in [0, dmax], with [P,F]_d = l_d(P).
std::optional<WeylElement> solve_F(const WeylElement& p, const Direction& d, std::optional<int> dmax = {});

struct PavadassReport {
    bool squarefree = false;
    bool radical_divides = false;
    bool ok() const { return squarefree && radical_divides; }
};
PavadassReport pavadass_flags(const UniPoly& fP, const UniPoly& fF);
PavadassReport pavadass_check(const WeylElement& p, const WeylElement& f, const Direction& d);

}  // namespace weyl
