#include "weyl/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace weyl {

namespace {

std::int64_t get_int(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
        throw PreconditionError(std::string("missing or non-integer field '") + key + "'");
    return j.at(key).get<std::int64_t>();
}

json pair_json(const std::pair<std::int64_t, std::int64_t>& p) { return json::array({p.first, p.second}); }

}  // namespace

json element_to_json(const WeylElement& p) {
    json terms = json::array();
    for (const auto& [k, c] : p.terms()) terms.push_back({{"xnum", k.xnum}, {"y", k.y}, {"c", to_string(c)}});
    return {{"level", p.level()}, {"commutative", p.commutative()}, {"terms", terms}};
}

WeylElement element_from_json(const json& j) {
    std::int64_t level = get_int(j, "level");
    if (level <= 0) throw PreconditionError("level must be positive");
    if (!j.contains("commutative") || !j.at("commutative").is_boolean())
        throw PreconditionError("missing or non-boolean field 'commutative'");
    if (!j.contains("terms") || !j.at("terms").is_array()) throw PreconditionError("missing array field 'terms'");
    WeylElement out(level, j.at("commutative").get<bool>());
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (const auto& t : j.at("terms")) {
        std::int64_t xn = get_int(t, "xnum"), y = get_int(t, "y");
        if (y < 0) throw PreconditionError("negative y-exponent");
        if (!t.contains("c") || !t.at("c").is_string()) throw PreconditionError("coefficient must be a string");
        Rational c = parse_rational(t.at("c").get<std::string>());
        if (c == 0) throw PreconditionError("zero coefficient stored");
        if (!seen.insert({xn, y}).second) throw PreconditionError("duplicate term");
        out.add_term(xn, y, c);
    }
    return out;
}

std::string save_element(const WeylElement& p) { return element_to_json(p).dump(2) + "\n"; }

WeylElement load_element(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw PreconditionError(std::string("malformed JSON: ") + e.what());
    }
    return element_from_json(j);
}

WeylElement load_element_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open " + path);
    return load_element(in);
}

json point_to_json(const SupportPoint& p) { return json::array({to_string(p.x()), p.y}); }

json direction_to_json(const Direction& d) { return json::array({d.rho, d.sigma}); }

Direction direction_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw PreconditionError("direction must be [rho, sigma]");
    return Direction(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
}

json poly_to_json(const UniPoly& f) {
    json a = json::array();
    for (const auto& c : f.coeffs()) a.push_back(to_string(c));
    return a;
}

json node_to_json(const ChainNode& n) {
    return {{"A_xnum", n.a_xnum}, {"A_y", n.a_y}, {"rho", n.rho}, {"sigma", n.sigma}, {"level", n.level}};
}

ChainNode node_from_json(const json& j) {
    ChainNode n{get_int(j, "A_xnum"), get_int(j, "A_y"), get_int(j, "rho"), get_int(j, "sigma"), get_int(j, "level")};
    if (n.level <= 0) throw PreconditionError("node level must be positive");
    return n;
}

json chain_to_json(const Chain& c) {
    json nodes = json::array();
    for (const auto& n : c.nodes) nodes.push_back(node_to_json(n));
    json j;
    j["m"] = c.mn ? json(c.mn->first) : json(nullptr);
    j["n"] = c.mn ? json(c.mn->second) : json(nullptr);
    j["nodes"] = nodes;
    return j;
}

Chain chain_from_json(const json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j.at("nodes").is_array() || j.at("nodes").empty())
        throw PreconditionError("chain needs a nonempty 'nodes' array");
    Chain c;
    for (const auto& n : j.at("nodes")) c.nodes.push_back(node_from_json(n));
    bool hm = j.contains("m") && !j.at("m").is_null(), hn = j.contains("n") && !j.at("n").is_null();
    if (hm != hn) throw PreconditionError("m and n must both be given or both be null");
    if (hm) c.mn = std::make_pair(static_cast<int>(get_int(j, "m")), static_cast<int>(get_int(j, "n")));
    return c;
}

Chain load_chain_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open " + path);
    try {
        return chain_from_json(json::parse(in));
    } catch (const json::exception& e) {
        throw PreconditionError(std::string("malformed JSON: ") + e.what());
    }
}

json bounds_to_json(const SearchBounds& b) {
    return {{"max_start_v11", b.max_start_v11}, {"max_rho", b.max_rho},     {"max_level", b.max_level},
            {"max_len", b.max_len},             {"max_A_height", b.max_A_height}};
}

SearchBounds bounds_from_json(const json& j) {
    return {get_int(j, "max_start_v11"), get_int(j, "max_rho"), get_int(j, "max_level"), get_int(j, "max_len"),
            get_int(j, "max_A_height")};
}

json certificate_to_json(const SearchCertificate& c) {
    json surv = json::array();
    for (const auto& s : c.survivors) surv.push_back(chain_to_json(s));
    json j;
    j["bounds"] = bounds_to_json(c.bounds);
    j["survivors"] = surv;
    j["explored_count"] = c.explored_count;
    auto mv = c.min_v11();
    j["min_v11"] = mv ? json(*mv) : json(nullptr);
    j["checkpoint_digest"] = c.checkpoint_digest;
    return j;
}

SearchCertificate certificate_from_json(const json& j) {
    SearchCertificate c;
    c.bounds = bounds_from_json(j.at("bounds"));
    for (const auto& s : j.at("survivors")) c.survivors.push_back(chain_from_json(s));
    c.explored_count = j.at("explored_count").get<std::int64_t>();
    c.checkpoint_digest = j.at("checkpoint_digest").get<std::string>();
    return c;
}

json bracket_to_json(const BracketOutcome& b) {
    return {{"proportional", b.proportional},
            {"degree_witness", to_string(b.degree_witness)},
            {"text", to_text(b.value)},
            {"value", element_to_json(b.value)}};
}

json ode_to_json(const OdeCertificate& c) {
    return {{"h", c.h}, {"c", to_string(c.c)}, {"a", to_string(c.a)}, {"b", to_string(c.b)}, {"holds", c.holds}};
}

json root_to_json(const RootFactorization& r) {
    return {{"R", element_to_json(r.R)}, {"m", r.m}, {"n", r.n}, {"lamP", to_string(r.lamP)}, {"lamQ", to_string(r.lamQ)}};
}

json verdicts_to_json(const std::vector<Verdict>& v, const char* key) {
    json a = json::array();
    for (const auto& x : v) {
        json e;
        if (std::string(key) == "item") e[key] = std::stoi(x.label);
        else e[key] = x.label;
        e["status"] = x.status;
        e["detail"] = x.detail;
        a.push_back(e);
    }
    return a;
}

json cut_to_json(const CutReport& r) {
    json j;
    j["lambda"] = r.lambda ? json(to_string(*r.lambda)) : json(nullptr);
    j["lambda_factor"] = poly_to_json(r.lambda_factor);
    j["m_lambda"] = r.m_lambda;
    j["new_level"] = r.new_level;
    j["new_dir"] = r.new_dir ? direction_to_json(*r.new_dir) : json(nullptr);
    j["predicted_corner"] = point_to_json(r.predicted_corner);
    j["phiP"] = r.phiP ? element_to_json(*r.phiP) : json(nullptr);
    j["phiQ"] = r.phiQ ? element_to_json(*r.phiQ) : json(nullptr);
    j["hypotheses"] = verdicts_to_json(r.hypotheses, "hypothesis");
    j["items"] = verdicts_to_json(r.items, "item");
    return j;
}

json conditions_to_json(const std::vector<ConditionResult>& r) {
    json a = json::array();
    for (const auto& c : r) a.push_back({{"condition", c.condition}, {"status", c.ok ? "pass" : "fail"}, {"detail", c.detail}});
    return a;
}

json corner_case_to_json(const CornerCase& c) {
    json st = json::array();
    for (const auto& p : c.st_candidates) st.push_back(pair_json(p));
    return {{"rs", json::array({c.r, c.s})},
            {"mu", to_string(c.mu)},
            {"rs_prime", json::array({c.rp, c.sp})},
            {"direction", direction_to_json(c.dir)},
            {"st_candidates", st}};
}

std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace weyl
