#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "support.hpp"
#include "weyl/chain.hpp"
#include "weyl/json_io.hpp"

using namespace weyl;

namespace {

std::string fixture(const std::string& name) { return std::string(WEYL_FIXTURE_DIR) + "/" + name; }

struct Family {
    const char* file;
    int sum;
};
const Family kFamilies[] = {{"family1.json", 5}, {"family2.json", 8}, {"family3.json", 7},
                            {"family4.json", 5}, {"family5.json", 5}};

// 20 single-field mutations: every field of the first and last node, +1 and -1.
std::vector<Chain> mutations(const Chain& c) {
    std::vector<Chain> out;
    for (std::size_t j : {std::size_t{0}, c.nodes.size() - 1})
        for (int f = 0; f < 5; ++f)
            for (int delta : {1, -1}) {
                Chain x = c;
                auto& n = x.nodes[j];
                std::int64_t* field[] = {&n.a_xnum, &n.a_y, &n.rho, &n.sigma, &n.level};
                *field[f] += delta;
                out.push_back(x);
            }
    return out;
}

std::set<std::string> keys(const SearchCertificate& c) {
    std::set<std::string> s;
    for (const auto& ch : c.survivors) s.insert(chain_to_json(ch).dump());
    return s;
}

std::string temp_path(const std::string& tag) {
    auto p = std::filesystem::temp_directory_path() / ("weyl_test_" + tag + "_" + std::to_string(::getpid()) + ".jsonl");
    std::filesystem::remove(p);
    return p.string();
}

}  // namespace

TEST_SUITE("chain-search") {

TEST_CASE("example families pass with their m+n") {
    for (const auto& fam : kFamilies) {
        CAPTURE(fam.file);
        auto c = load_chain_file(fixture(fam.file));
        REQUIRE(c.mn);
        CHECK(c.mn->first + c.mn->second == fam.sum);
        auto r = check_conditions(c, c.mn->first, c.mn->second);
        REQUIRE(r.size() == 8);
        for (const auto& k : r) {
            CAPTURE(k.condition);
            CAPTURE(k.detail);
            CHECK(k.ok);
        }
        for (auto [m, n] : mn_candidates(c.nodes.back())) CHECK(m + n == fam.sum);
    }
}

TEST_CASE("fixture files match the built-in families") {
    REQUIRE(example_families().size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(load_chain_file(fixture(kFamilies[i].file)) == example_families()[i]);
}

TEST_CASE("family 1 values") {
    auto c = load_chain_file(fixture("family1.json"));
    CHECK(c.nodes[1].v(3, -1) == 6);
    CHECK(c.nodes[0].v(3, -1) == 6);
    CHECK(c.nodes[2].v_own() == make_rational(1, 5));
    auto m = c;
    m.nodes[1].sigma = -2;
    auto r = check_conditions(m, 2, 3);
    CHECK(!r[4].ok);
    CHECK(r[4].condition == 5);
    // S_2 is witnessed by A' = (1/15, 0)
    CHECK(has_witness_below(c.nodes[2]));
}

TEST_CASE("mutations fail") {
    for (const auto& fam : kFamilies) {
        CAPTURE(fam.file);
        auto c = load_chain_file(fixture(fam.file));
        auto muts = mutations(c);
        REQUIRE(muts.size() == 20);
        for (const auto& x : muts) CHECK(!all_pass(check_conditions(x, c.mn->first, c.mn->second)));
    }
}

TEST_CASE("check_conditions preconditions and single node") {
    Chain one{{{1, 2, 1, 0, 1}}, std::nullopt};
    CHECK_THROWS_AS(check_conditions(one, 2, 4), PreconditionError);
    CHECK_THROWS_AS(check_conditions(one, 1, 4), PreconditionError);
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {2, 5}, {3, 4}}) {
        auto r = check_conditions(one, m, n);
        CHECK(r[2].ok);
        CHECK(!r[7].ok);
    }
    CHECK(mn_candidates(one.nodes[0]).empty());
}

TEST_CASE("mn candidates") {
    auto c1 = load_chain_file(fixture("family1.json"));
    CHECK(mn_candidates(c1.nodes.back()) == std::vector<std::pair<int, int>>{{2, 3}, {3, 2}});
    auto c3 = load_chain_file(fixture("family3.json"));
    CHECK(mn_candidates(c3.nodes.back()) == std::vector<std::pair<int, int>>{{2, 5}, {3, 4}, {4, 3}, {5, 2}});
    auto c2 = load_chain_file(fixture("family2.json"));
    CHECK(mn_candidates(c2.nodes.back()) == std::vector<std::pair<int, int>>{{3, 5}, {5, 3}});
    // quotient 6 has no coprime split with both parts > 1 other than (5,1), which is excluded
    CHECK(mn_candidates(ChainNode{1, 1, 7, -1, 1}).empty());
}

TEST_CASE("lema general filter") {
    CHECK(!lema_general_keep(ChainNode{5, 2, 2, -1, 3}));
    CHECK(lema_general_keep(ChainNode{15, 3, 2, -1, 9}));
    CHECK(lema_general_keep(ChainNode{2, 1, 2, -1, 3}));
    CHECK(!lema_general_keep(ChainNode{26, 3, 2, -1, 9}));
}

TEST_CASE("extend candidates") {
    auto c1 = load_chain_file(fixture("family1.json"));
    Chain start{{c1.nodes[0]}, std::nullopt};
    SearchBounds b;
    auto cand = extend_candidates(start, b);
    CHECK(std::find(cand.begin(), cand.end(), c1.nodes[1]) != cand.end());
    CHECK(cand == extend_candidates(start, b));
    for (const auto& n : cand) {
        CHECK(n.level == 3);
        CHECK(Direction(n.rho, n.sigma) < Direction(3, -1));
        CHECK(n.v(3, -1) == 6);
        CHECK(lema_general_keep(n));
    }
    b.max_rho = 2;
    auto small = extend_candidates(start, b);
    CHECK(std::find(small.begin(), small.end(), c1.nodes[1]) == small.end());
    for (const auto& n : small) CHECK(n.rho <= 2);
}

TEST_CASE("start nodes are ordered by v11") {
    SearchBounds b{12, 6, 6, 2, 12};
    auto s = start_nodes(b);
    REQUIRE(!s.empty());
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i - 1].v(1, 1) <= s[i].v(1, 1));
    for (const auto& n : s) {
        CHECK(n.level == 1);
        CHECK(n.v(1, 1) <= 12);
        CHECK(n.ax() < n.a_y);
        CHECK(n.v_own() > 0);
    }
}

TEST_CASE("search survivors are complete chains") {
    SearchBounds b{16, 10, 10, 3, 16};
    auto cert = search_min_chain(b);
    CHECK(cert.explored_count > 0);
    for (const auto& c : cert.survivors) {
        REQUIRE(c.mn);
        CHECK(c.nodes.size() >= 2);
        CHECK(c.nodes.size() <= 3);
        CHECK(all_pass(check_conditions(c, c.mn->first, c.mn->second)));
        auto cands = mn_candidates(c.nodes.back());
        CHECK(std::find(cands.begin(), cands.end(), *c.mn) != cands.end());
    }
    if (!cert.survivors.empty()) CHECK(*cert.min_v11() == cert.survivors.front().nodes[0].v(1, 1));
}

TEST_CASE("search is deterministic across worker counts") {
    SearchBounds b{16, 10, 10, 3, 16};
    auto a = search_min_chain(b, {1, std::nullopt, std::nullopt});
    auto c = search_min_chain(b, {3, std::nullopt, std::nullopt});
    CHECK(certificate_to_json(a) == certificate_to_json(c));
    CHECK(certificate_to_json(a) == certificate_to_json(search_min_chain(b)));
}

TEST_CASE("checkpoint resume equals a fresh run") {
    SearchBounds b{16, 10, 10, 3, 16};
    auto fresh = search_min_chain(b);
    auto path = temp_path("resume");
    auto part = search_min_chain(b, {2, path, std::size_t{7}});
    CHECK(part.explored_count < fresh.explored_count);
    auto resumed = search_min_chain(b, {2, path, std::nullopt});
    CHECK(certificate_to_json(resumed)["survivors"] == certificate_to_json(fresh)["survivors"]);
    CHECK(resumed.explored_count == fresh.explored_count);
    CHECK(resumed.checkpoint_digest == fresh.checkpoint_digest);
    // a torn trailing line is ignored
    {
        std::ofstream out(path, std::ios::app);
        out << "{\"start\": 3, \"expl";
    }
    auto again = search_min_chain(b, {1, path, std::nullopt});
    CHECK(certificate_to_json(again) == certificate_to_json(fresh));
    std::filesystem::remove(path);

    // a checkpoint written for other bounds is rejected
    auto other = temp_path("other");
    search_min_chain(SearchBounds{12, 8, 8, 2, 12}, {1, other, std::size_t{2}});
    CHECK_THROWS_AS(search_min_chain(b, {1, other, std::nullopt}), PreconditionError);
    std::filesystem::remove(other);
}

TEST_CASE("search is monotone in the bounds") {
    SearchBounds base{14, 8, 8, 2, 14};
    auto k0 = keys(search_min_chain(base));
    std::vector<SearchBounds> bigger = {{16, 8, 8, 2, 16}, {14, 10, 8, 2, 14}, {14, 8, 10, 2, 14},
                                        {14, 8, 8, 3, 14}, {14, 8, 8, 2, 16}};
    for (const auto& b : bigger) {
        auto k = keys(search_min_chain(b));
        for (const auto& s : k0) CHECK(k.count(s) == 1);
    }
}

TEST_CASE("corner case enumerator") {
    auto c36 = corner_case_enumerator(3, 6);
    REQUIRE(c36.size() == 2);
    CHECK(c36[0].mu == make_rational(1, 3));
    CHECK(c36[1].mu == make_rational(2, 3));
    CHECK(c36[1].rp == 2);
    CHECK(c36[1].sp == 4);
    CHECK(c36[1].dir == Direction(3, -1));
    CHECK(c36[1].st_candidates == std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 3}, {1, 0}});
    auto c410 = corner_case_enumerator(4, 10);
    REQUIRE(c410.size() == 1);
    CHECK(c410[0].rp == 2);
    CHECK(c410[0].sp == 5);
    CHECK(c410[0].dir == Direction(4, -1));
    CHECK(c410[0].st_candidates == std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 6}, {2, 2}});
    CHECK(corner_case_enumerator(1, 2).empty());
    CHECK_THROWS_AS(corner_case_enumerator(3, 3), PreconditionError);
    CHECK_THROWS_AS(corner_case_enumerator(5, 2), PreconditionError);
    for (auto [r, s] : corner_pairs_up_to(20))
        for (const auto& c : corner_case_enumerator(r, s)) {
            CHECK(c.rp * s == c.sp * r);
            CHECK(c.dir.rho * (c.rp - 1) == -c.dir.sigma * (c.sp - 1));
            for (auto [a, b] : c.st_candidates) {
                CHECK(a >= 0);
                CHECK(b >= 0);
            }
        }
}

TEST_CASE("range mode with the external table") {
    std::vector<CornerCase> raw;
    for (auto [r, s] : corner_pairs_up_to(14))
        for (const auto& c : corner_case_enumerator(r, s)) raw.push_back(c);
    std::set<std::pair<std::int64_t, std::int64_t>> pairs;
    for (const auto& c : apply_external_table(raw, false)) pairs.insert({c.r, c.s});
    CHECK(pairs == std::set<std::pair<std::int64_t, std::int64_t>>{{3, 9}, {4, 8}, {6, 8}, {4, 10}, {3, 6}, {4, 6}});
}

TEST_CASE("json round trips") {
    auto c = load_chain_file(fixture("family3.json"));
    CHECK(chain_from_json(chain_to_json(c)) == c);
    SearchBounds b{16, 10, 10, 3, 16};
    auto cert = search_min_chain(b);
    auto back = certificate_from_json(certificate_to_json(cert));
    CHECK(certificate_to_json(back) == certificate_to_json(cert));
    CHECK_THROWS_AS(chain_from_json(json::parse(R"({"nodes": []})")), PreconditionError);
    CHECK_THROWS_AS(chain_from_json(json::parse(R"({"nodes": [{"A_xnum": 1}]})")), PreconditionError);
}

}
