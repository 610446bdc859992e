#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weyl/bracket.hpp"

namespace weyl {

WeylElement apply_phi(const WeylElement& p, const Rational& lambda, const Direction& d, std::int64_t lprime);

struct FrakF {
    UniPoly frak_f;
    int m_max = 0;
    std::optional<Rational> witness;  // rational root of maximal multiplicity
    UniPoly factor;                   // the squarefree factor carrying m_max
};
FrakF frak_f_and_multiplicity(const WeylElement& p, const Direction& d);

struct Verdict {
    std::string label;   // item number or hypothesis letter
    std::string status;  // pass | fail | skipped
    std::string detail;
};

struct CutReport {
    std::optional<Rational> lambda;
    UniPoly lambda_factor;
    int m_lambda = 0;
    std::int64_t new_level = 1;
    std::optional<WeylElement> phiP, phiQ;
    std::optional<Direction> new_dir;
    SupportPoint predicted_corner;
    std::vector<Verdict> hypotheses;  // (a)-(g), only with Q
    std::vector<Verdict> items;       // (1)-(11)
    bool hypotheses_hold() const;
};

struct CutOptions {
    std::optional<int> dmax;
};

CutReport cut_step(const WeylElement& p, const std::optional<WeylElement>& q, const Direction& d,
                   const CutOptions& opt = {});

enum class ChainMode { strict, relaxed };

struct ChainStep {
    WeylElement P, Q;
    Direction d;
    std::int64_t level = 1;
    std::int64_t v01 = 0;  // y of en_d(P)
    std::optional<CutReport> cut;
};

struct ChainRun {
    std::vector<ChainStep> steps;
    std::vector<Verdict> hypotheses;  // last evaluation (strict mode)
    std::string stop_reason;
};

ChainRun run_chain(const WeylElement& p, const WeylElement& q, ChainMode mode, int max_steps,
                   std::optional<Direction> start = {});

}  // namespace weyl
