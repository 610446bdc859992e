#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weyl/valuation.hpp"

namespace weyl {

// S = (A, (rho, sigma), level) with A = (a_xnum/level, a_y). Raw integers so that malformed
// chains can be represented and reported on.
struct ChainNode {
    std::int64_t a_xnum = 0;
    std::int64_t a_y = 0;
    std::int64_t rho = 1;
    std::int64_t sigma = 0;
    std::int64_t level = 1;

    Rational ax() const { return make_rational(a_xnum, level); }
    bool same_A(const ChainNode& o) const { return a_y == o.a_y && a_xnum * o.level == o.a_xnum * level; }
    // rho*x + sigma*y
    Rational v(std::int64_t r, std::int64_t s) const { return Rational(r) * ax() + Rational(s * a_y); }
    Rational v_own() const { return v(rho, sigma); }
};

bool operator==(const ChainNode& a, const ChainNode& b);

struct Chain {
    std::vector<ChainNode> nodes;
    std::optional<std::pair<int, int>> mn;
};

bool operator==(const Chain& a, const Chain& b);

// The five worked example families, each with its first admissible (m,n).
const std::vector<Chain>& example_families();

struct ConditionResult {
    int condition;
    bool ok;
    std::string detail;
};

std::vector<ConditionResult> check_conditions(const Chain& chain, int m, int n);
bool all_pass(const std::vector<ConditionResult>& r);

// Condition (6) at one node: some A' with positive first coordinate in (1/l)Z, second in N_0, on the
// line v_dir = v_dir(A), with v_{1,-1}(A') > v_{1,-1}(A).
bool has_witness_below(const ChainNode& node);

std::vector<std::pair<int, int>> mn_candidates(const ChainNode& tail);

bool lema_general_keep(const ChainNode& node);

struct SearchBounds {
    std::int64_t max_start_v11 = 30;
    std::int64_t max_rho = 20;
    std::int64_t max_level = 20;
    std::int64_t max_len = 3;
    std::int64_t max_A_height = 30;
};

bool operator==(const SearchBounds& a, const SearchBounds& b);

std::vector<ChainNode> extend_candidates(const Chain& partial, const SearchBounds& bounds);
std::vector<ChainNode> start_nodes(const SearchBounds& bounds);

struct SearchCertificate {
    SearchBounds bounds;
    std::vector<Chain> survivors;
    std::int64_t explored_count = 0;
    std::string checkpoint_digest;
    std::optional<std::int64_t> min_v11() const;
};

struct SearchOptions {
    unsigned workers = 1;
    std::optional<std::string> checkpoint_path;  // append-only JSON lines
    std::optional<std::size_t> stop_after;       // process at most this many new start nodes
};

SearchCertificate search_min_chain(const SearchBounds& bounds, const SearchOptions& opt = {});

std::string bounds_digest(const SearchBounds& b);

// Corner-case arithmetic for (r, s) = en(R), 0 < r < s.
struct CornerCase {
    std::int64_t r = 0, s = 0;
    Rational mu;
    std::int64_t rp = 0, sp = 0;
    Direction dir;
    std::vector<std::pair<std::int64_t, std::int64_t>> st_candidates;
};

std::vector<CornerCase> corner_case_enumerator(std::int64_t r, std::int64_t s);
std::vector<std::pair<std::int64_t, std::int64_t>> corner_pairs_up_to(std::int64_t max_sum);

// Constraints imported from outside this library (data only): which (r,s), which (r',s') per (r,s) and
// which st candidates survive. Applying it to the raw enumeration gives the filtered case table.
struct ExternalCornerRule {
    std::pair<std::int64_t, std::int64_t> rs;
    std::pair<std::int64_t, std::int64_t> rsp;
    std::vector<std::pair<std::int64_t, std::int64_t>> surviving_st;
};
const std::vector<ExternalCornerRule>& external_corner_table();
// filter_st = false keeps the raw st candidates of admitted cases.
std::vector<CornerCase> apply_external_table(const std::vector<CornerCase>& raw, bool filter_st);

}  // namespace weyl
