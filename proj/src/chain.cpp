#include "weyl/chain.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "weyl/json_io.hpp"

namespace weyl {

bool operator==(const ChainNode& a, const ChainNode& b) {
    return a.same_A(b) && a.rho == b.rho && a.sigma == b.sigma && a.level == b.level;
}

bool operator==(const Chain& a, const Chain& b) { return a.nodes == b.nodes && a.mn == b.mn; }

bool operator==(const SearchBounds& a, const SearchBounds& b) {
    return a.max_start_v11 == b.max_start_v11 && a.max_rho == b.max_rho && a.max_level == b.max_level &&
           a.max_len == b.max_len && a.max_A_height == b.max_A_height;
}

namespace {

bool valid_dir(std::int64_t r, std::int64_t s) { return r + s > 0 && std::gcd(r, s) == 1; }

// d1 < d2 for interior directions
bool dir_less(std::int64_t r1, std::int64_t s1, std::int64_t r2, std::int64_t s2) { return r1 * s2 - s1 * r2 > 0; }

// rho*a_xnum + sigma*a_y*level, i.e. level * v_dir(A)
std::int64_t vnum(const ChainNode& n, std::int64_t r, std::int64_t s) { return r * n.a_xnum + s * n.a_y * n.level; }

// (rho+sigma)/v(A) * A in (1/l)Z x Z
bool scaled_in_lattice(const ChainNode& n) {
    std::int64_t V = vnum(n, n.rho, n.sigma), k = n.rho + n.sigma;
    if (V <= 0) return false;
    return (k * n.a_xnum * n.level) % V == 0 && (k * n.level * n.a_y) % V == 0;
}

}  // namespace

bool has_witness_below(const ChainNode& n) {
    const std::int64_t r = n.rho, s = n.sigma, l = n.level;
    const std::int64_t V = vnum(n, r, s);
    const std::int64_t base = n.a_xnum - n.a_y * l;  // l * v_{1,-1}(A)
    if (r == 0) {
        if (s == 0 || V % (s * l) != 0) return false;
        return V / (s * l) >= 0;  // any large enough first coordinate works
    }
    const std::int64_t top = n.a_y + 2 * std::abs(r) * l + std::abs(V) + 2;
    for (std::int64_t b = 0; b <= top; ++b) {
        std::int64_t num = V - s * b * l;  // = r * (l * a')
        if (num % r != 0) continue;
        std::int64_t al = num / r;
        if (al > 0 && al - b * l > base) return true;
    }
    return false;
}

bool lema_general_keep(const ChainNode& n) { return !(n.a_y >= 2 && n.a_xnum == n.a_y * n.level - 1); }

std::vector<std::pair<int, int>> mn_candidates(const ChainNode& tail) {
    std::vector<std::pair<int, int>> out;
    Rational v = tail.v_own();
    if (v <= 0) return out;
    Rational q = Rational(tail.rho + tail.sigma) / v;
    if (!is_integer(q) || q < 5) return out;
    int sum = static_cast<int>(to_int64(q));
    for (int m = 2; m <= sum - 2; ++m)
        if (std::gcd(m, sum - m) == 1) out.push_back({m, sum - m});
    return out;
}

std::vector<ConditionResult> check_conditions(const Chain& chain, int m, int n) {
    if (m <= 1 || n <= 1 || std::gcd(m, n) != 1) throw PreconditionError("need m,n > 1 coprime");
    if (chain.nodes.empty()) throw PreconditionError("empty chain");
    const auto& N = chain.nodes;
    const std::size_t nu = N.size() - 1;
    std::vector<ConditionResult> out;
    auto at = [](std::size_t j) { return "S_" + std::to_string(j) + ": "; };
    auto result = [&](int c, std::string fail) { out.push_back({c, fail.empty(), fail}); };

    std::string f;
    for (std::size_t j = 0; j <= nu; ++j)
        if (N[j].level <= 0) f += at(j) + "level not positive; ";
    if (!f.empty()) {
        result(1, f);
        for (int c = 2; c <= 8; ++c) result(c, "undefined: nonpositive level");
        return out;
    }
    if (N[0].level != 1) f += at(0) + "l_0 != 1; ";
    for (std::size_t j = 1; j <= nu; ++j)
        if (N[j].level != lcm64(N[j - 1].rho, N[j - 1].level)) f += at(j) + "level != lcm(rho, l) of previous; ";
    result(1, f);

    f.clear();
    for (std::size_t j = 0; j <= nu; ++j)
        if (N[j].a_xnum <= 0 || N[j].a_y <= 0) f += at(j) + "A not in (1/l)N x N; ";
    result(2, f);

    f.clear();
    for (std::size_t j = 0; j <= nu; ++j) {
        if (!(N[j].ax() < N[j].a_y)) f += at(j) + "v_{1,-1}(A) >= 0; ";
        if (!(N[j].v_own() > 0)) f += at(j) + "v_dir(A) <= 0; ";
    }
    result(3, f);

    f.clear();
    for (std::size_t j = 0; j <= nu; ++j)
        if (!valid_dir(N[j].rho, N[j].sigma)) f += at(j) + "direction not primitive with rho+sigma>0; ";
    if (f.empty()) {
        if (!dir_less(N[0].rho, N[0].sigma, 1, 0)) f += at(0) + "direction not below (1,0); ";
        for (std::size_t j = 1; j <= nu; ++j)
            if (!dir_less(N[j].rho, N[j].sigma, N[j - 1].rho, N[j - 1].sigma)) f += at(j) + "direction not decreasing; ";
    }
    result(4, f);

    f.clear();
    for (std::size_t j = 1; j <= nu; ++j)
        if (N[j].v(N[j - 1].rho, N[j - 1].sigma) != N[j - 1].v_own()) f += at(j) + "v_{d_{j-1}}(A_j) != v_{d_{j-1}}(A_{j-1}); ";
    result(5, f);

    f.clear();
    for (std::size_t j = 0; j <= nu; ++j)
        if (!has_witness_below(N[j])) f += at(j) + "no A' on the line with larger v_{1,-1}; ";
    result(6, f);

    f.clear();
    for (std::size_t j = 0; j < nu; ++j)
        if (!N[j].same_A(N[j + 1]) && !scaled_in_lattice(N[j])) f += at(j) + "(rho+sigma)/v(A) * A not in the lattice; ";
    result(7, f);

    f.clear();
    const auto& t = N[nu];
    if (t.v_own() != Rational(t.rho + t.sigma) / (m + n)) f = at(nu) + "v_dir(A) = " + to_string(t.v_own()) + " != (rho+sigma)/(m+n)";
    result(8, f);
    return out;
}

const std::vector<Chain>& example_families() {
    static const std::vector<Chain> fams = {
        {{{9, 21, 3, -1, 1}, {13, 7, 5, -3, 3}, {11, 1, 3, -2, 15}}, std::pair{2, 3}},
        {{{6, 30, 6, -1, 1}, {9, 3, 9, -4, 6}, {11, 1, 9, -5, 18}}, std::pair{3, 5}},
        {{{9, 36, 9, -2, 1}, {15, 3, 2, -1, 9}, {12, 1, 18, -11, 18}}, std::pair{2, 5}},
        {{{14, 42, 4, -1, 1}, {24, 10, 7, -4, 4}, {24, 1, 28, -23, 28}}, std::pair{2, 3}},
        {{{17, 85, 17, -3, 1}, {46, 4, 17, -11, 17}, {13, 1, 17, -12, 17}}, std::pair{2, 3}},
    };
    return fams;
}

bool all_pass(const std::vector<ConditionResult>& r) {
    return std::all_of(r.begin(), r.end(), [](const ConditionResult& c) { return c.ok; });
}

std::vector<ChainNode> start_nodes(const SearchBounds& b) {
    std::vector<ChainNode> out;
    if (b.max_level < 1) return out;
    for (std::int64_t v11 = 3; v11 <= b.max_start_v11; ++v11)
        for (std::int64_t a = 1; 2 * a < v11; ++a) {
            std::int64_t y = v11 - a;
            if (y > b.max_A_height) continue;
            for (std::int64_t r = 2; r <= b.max_rho; ++r)
                for (std::int64_t s = -r + 1; s < 0; ++s) {
                    if (std::gcd(r, s) != 1) continue;
                    ChainNode n{a, y, r, s, 1};
                    if (vnum(n, r, s) <= 0 || !has_witness_below(n) || !lema_general_keep(n)) continue;
                    out.push_back(n);
                }
        }
    return out;
}

std::vector<ChainNode> extend_candidates(const Chain& partial, const SearchBounds& b) {
    if (partial.nodes.empty()) throw PreconditionError("extend_candidates needs a nonempty chain");
    std::vector<ChainNode> out;
    const ChainNode& last = partial.nodes.back();
    const std::int64_t l = last.level, lp = lcm64(last.rho, l);
    if (lp > b.max_level || last.rho <= 0) return out;
    const std::int64_t V = vnum(last, last.rho, last.sigma);
    const bool scaled_ok = scaled_in_lattice(last);
    for (std::int64_t y = 1; y <= b.max_A_height; ++y) {
        // rho * (l * a') = V - sigma * y * l ; a' * lp must be an integer
        std::int64_t num = (V - last.sigma * y * l) * lp, den = last.rho * l;
        if (num % den != 0) continue;
        std::int64_t axn = num / den;
        if (axn <= 0 || axn >= y * lp) continue;
        ChainNode a{axn, y, 0, 0, lp};
        if (!a.same_A(last) && !scaled_ok) continue;
        for (std::int64_t r = 2; r <= b.max_rho; ++r)
            for (std::int64_t s = -r + 1; s < 0; ++s) {
                if (std::gcd(r, s) != 1 || !dir_less(r, s, last.rho, last.sigma)) continue;
                ChainNode n{axn, y, r, s, lp};
                if (vnum(n, r, s) <= 0 || !has_witness_below(n) || !lema_general_keep(n)) continue;
                out.push_back(n);
            }
    }
    return out;
}

std::optional<std::int64_t> SearchCertificate::min_v11() const {
    std::optional<std::int64_t> best;
    for (const auto& c : survivors) {
        std::int64_t v = c.nodes.front().a_xnum + c.nodes.front().a_y;  // level 0 is 1
        if (!best || v < *best) best = v;
    }
    return best;
}

std::string bounds_digest(const SearchBounds& b) { return fnv1a_hex(bounds_to_json(b).dump()); }

namespace {

struct StartResult {
    std::int64_t explored = 0;
    std::vector<Chain> survivors;
};

void dfs(Chain& chain, const SearchBounds& b, StartResult& res) {
    ++res.explored;
    if (chain.nodes.size() >= 2) {
        for (const auto& mn : mn_candidates(chain.nodes.back())) {
            if (all_pass(check_conditions(chain, mn.first, mn.second))) {
                Chain c = chain;
                c.mn = mn;
                res.survivors.push_back(std::move(c));
                break;
            }
        }
    }
    if (static_cast<std::int64_t>(chain.nodes.size()) >= b.max_len) return;
    for (const auto& n : extend_candidates(chain, b)) {
        chain.nodes.push_back(n);
        dfs(chain, b, res);
        chain.nodes.pop_back();
    }
}

json start_record(std::size_t idx, const StartResult& r) {
    json s = json::array();
    for (const auto& c : r.survivors) s.push_back(chain_to_json(c));
    return {{"start", idx}, {"explored", r.explored}, {"survivors", s}};
}

}  // namespace

SearchCertificate search_min_chain(const SearchBounds& b, const SearchOptions& opt) {
    if (b.max_start_v11 <= 0 || b.max_rho <= 0 || b.max_level <= 0 || b.max_len <= 0 || b.max_A_height <= 0)
        throw PreconditionError("search bounds must be positive");
    const auto starts = start_nodes(b);
    const std::string digest = bounds_digest(b);
    std::map<std::size_t, StartResult> done;

    std::ofstream log;
    if (opt.checkpoint_path) {
        bool fresh = true, needs_newline = false;
        if (std::ifstream in{*opt.checkpoint_path}) {
            std::string line;
            bool first = true;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                json j;
                try {
                    j = json::parse(line);
                } catch (const json::exception&) {
                    needs_newline = in.eof();
                    continue;  // torn final record
                }
                if (first) {
                    if (!j.contains("digest") || j.at("digest") != digest)
                        throw PreconditionError("checkpoint belongs to different bounds");
                    first = false;
                    fresh = false;
                    continue;
                }
                StartResult r;
                r.explored = j.at("explored").get<std::int64_t>();
                for (const auto& c : j.at("survivors")) r.survivors.push_back(chain_from_json(c));
                done[j.at("start").get<std::size_t>()] = std::move(r);
            }
        }
        log.open(*opt.checkpoint_path, std::ios::app);
        if (!log) throw PreconditionError("cannot write checkpoint " + *opt.checkpoint_path);
        if (needs_newline) log << "\n";
        if (fresh) log << json({{"digest", digest}, {"bounds", bounds_to_json(b)}, {"starts", starts.size()}}).dump() << "\n" << std::flush;
    }

    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < starts.size(); ++i)
        if (!done.count(i)) pending.push_back(i);
    if (opt.stop_after && pending.size() > *opt.stop_after) pending.resize(*opt.stop_after);

    std::vector<StartResult> fresh_results(pending.size());
    std::atomic<std::size_t> next{0};
    std::mutex log_mutex;
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < pending.size();) {
            Chain c;
            c.nodes.push_back(starts[pending[k]]);
            dfs(c, b, fresh_results[k]);
            if (log.is_open()) {
                std::lock_guard<std::mutex> lock(log_mutex);
                log << start_record(pending[k], fresh_results[k]).dump() << "\n" << std::flush;
            }
        }
    };
    unsigned nw = std::max(1u, opt.workers);
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < nw; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (std::size_t k = 0; k < pending.size(); ++k) done[pending[k]] = std::move(fresh_results[k]);

    SearchCertificate cert;
    cert.bounds = b;
    for (auto& [idx, r] : done) {
        cert.explored_count += r.explored;
        for (auto& c : r.survivors) cert.survivors.push_back(std::move(c));
    }
    json body = certificate_to_json(cert);
    body.erase("checkpoint_digest");
    body["complete"] = done.size() == starts.size();
    cert.checkpoint_digest = fnv1a_hex(body.dump());
    return cert;
}

std::vector<CornerCase> corner_case_enumerator(std::int64_t r, std::int64_t s) {
    if (r <= 0 || r >= s) throw PreconditionError("corner cases need 0 < r < s");
    std::vector<CornerCase> out;
    const std::int64_t g = std::gcd(r, s);
    for (std::int64_t k = 1; k < g; ++k) {
        CornerCase c;
        c.r = r;
        c.s = s;
        c.mu = make_rational(k, g);
        c.rp = k * (r / g);
        c.sp = k * (s / g);
        c.dir = val_of_point(Rational(c.rp - 1), Rational(c.sp - 1));
        for (std::int64_t gam = 1;; ++gam) {
            std::int64_t a = r + gam * c.dir.sigma, b = s - gam * c.dir.rho;
            if (a < 0 || b < 0) break;
            c.st_candidates.push_back({a, b});
        }
        out.push_back(c);
    }
    return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> corner_pairs_up_to(std::int64_t max_sum) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t sum = 3; sum <= max_sum; ++sum)
        for (std::int64_t r = 1; 2 * r < sum; ++r) out.push_back({r, sum - r});
    return out;
}

const std::vector<ExternalCornerRule>& external_corner_table() {
    static const std::vector<ExternalCornerRule> table = {
        {{3, 9}, {2, 6}, {}},
        {{4, 8}, {2, 4}, {}},
        {{4, 8}, {3, 6}, {}},
        {{6, 8}, {3, 4}, {}},
        {{4, 10}, {2, 5}, {{3, 6}}},
        {{3, 6}, {2, 4}, {{1, 0}}},
        {{4, 6}, {2, 3}, {{1, 0}}},
    };
    return table;
}

std::vector<CornerCase> apply_external_table(const std::vector<CornerCase>& raw, bool filter_st) {
    std::vector<CornerCase> out;
    for (const auto& c : raw)
        for (const auto& rule : external_corner_table()) {
            if (rule.rs != std::make_pair(c.r, c.s) || rule.rsp != std::make_pair(c.rp, c.sp)) continue;
            CornerCase k = c;
            if (filter_st) {
                k.st_candidates.clear();
                for (const auto& p : c.st_candidates)
                    if (std::find(rule.surviving_st.begin(), rule.surviving_st.end(), p) != rule.surviving_st.end())
                        k.st_candidates.push_back(p);
            }
            out.push_back(k);
        }
    return out;
}

}  // namespace weyl
