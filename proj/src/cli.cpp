#include "weyl/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <ostream>

#include "weyl/bracket.hpp"
#include "weyl/chain.hpp"
#include "weyl/json_io.hpp"
#include "weyl/transform.hpp"
#include "weyl/verify.hpp"

namespace weyl {

namespace {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string md_cell(const std::string& s) {
    std::string o;
    for (char c : s) o += c == '|' ? std::string("\\|") : std::string(1, c);
    return o;
}

void emit_report(std::ostream& out, const json& j, const Table& t, const std::string& fmt) {
    if (fmt == "json") {
        out << j.dump(2) << "\n";
        return;
    }
    auto line = [&](const std::vector<std::string>& cells) {
        if (fmt == "csv") {
            for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
            out << "\n";
        } else {
            out << "|";
            for (const auto& c : cells) out << " " << md_cell(c) << " |";
            out << "\n";
        }
    };
    line(t.header);
    if (fmt == "markdown") line(std::vector<std::string>(t.header.size(), "---"));
    for (const auto& r : t.rows) line(r);
}

// Generic two-column view for results without a natural table.
Table key_value_table(const json& j) {
    Table t{{"field", "value"}, {}};
    for (const auto& [k, v] : j.items()) t.rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
    return t;
}

Table element_table(const WeylElement& p) {
    Table t{{"x", "y", "coeff"}, {}};
    for (const auto& pt : p.support()) t.rows.push_back({to_string(pt.x()), std::to_string(pt.y), to_string(p.coeff(pt))});
    if (t.rows.empty()) t.rows.push_back({"0", "0", "0"});
    return t;
}

std::string pair_text(std::int64_t a, std::int64_t b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::string node_text(const ChainNode& n) {
    return "((" + to_string(n.ax()) + "," + std::to_string(n.a_y) + ")," + pair_text(n.rho, n.sigma) + "," +
           std::to_string(n.level) + ")";
}

std::string chain_text(const Chain& c) {
    std::string s;
    for (const auto& n : c.nodes) s += (s.empty() ? "" : " -> ") + node_text(n);
    return s;
}

Direction dir_from(std::int64_t r, std::int64_t s) { return Direction(r, s); }

struct Options {
    std::string format = "json";
    std::int64_t seed = 0;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic in fractional Weyl algebras and chain search", "weylchain"};
    app.fallthrough();
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "json, csv or markdown")->check(CLI::IsMember({"json", "csv", "markdown"}));
    app.add_option("--seed", o.seed, "reserved; all computations are deterministic");

    std::int64_t rho = 1, sigma = 0;
    auto add_dir = [&](CLI::App* c) {
        c->add_option("--rho", rho)->required();
        c->add_option("--sigma", sigma)->required();
    };
    std::string f1, f2;
    int code = 0;
    std::function<void()> action;

    auto* elem = app.add_subcommand("elem", "element operations");
    elem->require_subcommand(1);
    auto* mul = elem->add_subcommand("mul", "product P*Q");
    mul->add_option("p", f1)->required();
    mul->add_option("q", f2)->required();
    mul->callback([&] {
        action = [&] {
            auto r = load_element_file(f1) * load_element_file(f2);
            emit_report(out, element_to_json(r), element_table(r), o.format);
        };
    });
    auto* br = elem->add_subcommand("bracket", "(rho,sigma)-bracket [P,Q]");
    add_dir(br);
    br->add_option("p", f1)->required();
    br->add_option("q", f2)->required();
    br->callback([&] {
        action = [&] {
            auto b = bracket_rs(load_element_file(f1), load_element_file(f2), dir_from(rho, sigma));
            json j = bracket_to_json(b);
            emit_report(out, j, key_value_table(json{{"proportional", b.proportional}, {"degree_witness", j["degree_witness"]}, {"text", j["text"]}}), o.format);
        };
    });
    auto* lead = elem->add_subcommand("leading", "leading part");
    add_dir(lead);
    lead->add_option("p", f1)->required();
    lead->callback([&] {
        action = [&] {
            auto l = leading_part(load_element_file(f1), dir_from(rho, sigma));
            emit_report(out, element_to_json(l), element_table(l), o.format);
        };
    });
    auto* cor = elem->add_subcommand("corners", "st, en, w and their coefficients");
    add_dir(cor);
    cor->add_option("p", f1)->required();
    cor->callback([&] {
        action = [&] {
            auto p = load_element_file(f1);
            auto d = dir_from(rho, sigma);
            auto c = corners(p, d);
            json j;
            j["st"] = c.st ? point_to_json(*c.st) : json(nullptr);
            j["en"] = c.en ? point_to_json(*c.en) : json(nullptr);
            j["w"] = point_to_json(c.w);
            j["ovw"] = point_to_json(c.ovw);
            j["lc"] = to_string(c.lc);
            j["ovlc"] = to_string(c.ovlc);
            j["degree"] = to_string(degree(p, d));
            json val = json::array();
            for (const auto& v : valuation_set(p)) val.push_back(direction_to_json(v));
            j["val"] = val;
            emit_report(out, j, key_value_table(j), o.format);
        };
    });
    auto* fp = elem->add_subcommand("fpoly", "associated polynomial f and frak f");
    add_dir(fp);
    fp->add_option("p", f1)->required();
    fp->callback([&] {
        action = [&] {
            auto p = load_element_file(f1);
            auto d = dir_from(rho, sigma);
            auto f = f_polynomial(p, d);
            auto ff = frak_f_and_multiplicity(p, d);
            json j{{"f", poly_to_json(f.f)},
                   {"st", point_to_json(f.st)},
                   {"frak_f", poly_to_json(ff.frak_f)},
                   {"m_max", ff.m_max},
                   {"witness", ff.witness ? json(to_string(*ff.witness)) : json(nullptr)}};
            emit_report(out, j, key_value_table(j), o.format);
        };
    });

    std::optional<int> dmax;
    auto* cut = app.add_subcommand("cut", "edge-cut step at (rho,sigma)");
    add_dir(cut);
    cut->add_option("p", f1)->required();
    cut->add_option("q", f2);
    cut->add_option("--dmax", dmax, "y bound for the F solver");
    cut->callback([&] {
        action = [&] {
            auto p = load_element_file(f1);
            std::optional<WeylElement> q;
            if (!f2.empty()) q = load_element_file(f2);
            auto rep = cut_step(p, q, dir_from(rho, sigma), CutOptions{dmax});
            Table t{{"kind", "label", "status", "detail"}, {}};
            for (const auto& h : rep.hypotheses) t.rows.push_back({"hypothesis", h.label, h.status, h.detail});
            for (const auto& v : rep.items) {
                t.rows.push_back({"item", v.label, v.status, v.detail});
                if (v.status == "fail") code = 1;
            }
            emit_report(out, cut_to_json(rep), t, o.format);
        };
    });

    auto* chain = app.add_subcommand("chain", "chain conditions and search");
    chain->require_subcommand(1);
    std::optional<int> m, n;
    auto* check = chain->add_subcommand("check", "evaluate conditions (1)-(8)");
    check->add_option("chain", f1)->required();
    check->add_option("--m", m);
    check->add_option("--n", n);
    check->callback([&] {
        action = [&] {
            Chain c = load_chain_file(f1);
            auto cands = mn_candidates(c.nodes.back());
            std::pair<int, int> mn{2, 3};
            if (m && n) mn = {*m, *n};
            else if (m || n) throw PreconditionError("--m and --n go together");
            else if (c.mn) mn = *c.mn;
            else
                for (auto pr : cands)
                    if (all_pass(check_conditions(c, pr.first, pr.second))) {
                        mn = pr;
                        break;
                    }
            if (!(m && n) && !c.mn && !cands.empty() && !all_pass(check_conditions(c, mn.first, mn.second))) mn = cands.front();
            auto res = check_conditions(c, mn.first, mn.second);
            bool ok = all_pass(res);
            json jc = json::array();
            for (auto [a, b] : cands) jc.push_back(json::array({a, b}));
            json j{{"chain", chain_to_json(c)}, {"m", mn.first}, {"n", mn.second}, {"conditions", conditions_to_json(res)},
                   {"all_pass", ok}, {"mn_candidates", jc}};
            Table t{{"condition", "status", "detail"}, {}};
            for (const auto& r : res) t.rows.push_back({std::to_string(r.condition), r.ok ? "pass" : "fail", r.detail});
            emit_report(out, j, t, o.format);
            code = ok ? 0 : 1;
        };
    });
    SearchBounds b;
    unsigned workers = 1;
    std::string checkpoint;
    std::optional<std::size_t> stop_after;
    auto* search = chain->add_subcommand("search", "bounded exhaustive search for complete chains");
    search->add_option("--max-start-v11", b.max_start_v11);
    search->add_option("--max-rho", b.max_rho);
    search->add_option("--max-level", b.max_level);
    search->add_option("--max-len", b.max_len);
    auto* height = search->add_option("--max-A-height", b.max_A_height, "defaults to --max-start-v11");
    search->add_option("--workers", workers);
    search->add_option("--checkpoint", checkpoint, "JSON-lines checkpoint; resumed when present");
    search->add_option("--stop-after", stop_after, "process at most this many new start nodes");
    search->callback([&] {
        action = [&] {
            if (height->count() == 0) b.max_A_height = b.max_start_v11;
            if (b.max_start_v11 <= 0 || b.max_rho <= 0 || b.max_level <= 0 || b.max_len <= 0 || b.max_A_height <= 0)
                throw PreconditionError("search bounds must be positive");
            SearchOptions so{std::max(1u, workers), std::nullopt, stop_after};
            if (!checkpoint.empty()) {
                so.checkpoint_path = checkpoint;
            } else if (const char* dir = std::getenv(kCheckpointDirEnv); dir && *dir) {
                std::filesystem::create_directories(dir);
                so.checkpoint_path = (std::filesystem::path(dir) / ("search-" + bounds_digest(b) + ".jsonl")).string();
            }
            auto cert = search_min_chain(b, so);
            Table t{{"index", "v11_A0", "m", "n", "chain"}, {}};
            for (std::size_t i = 0; i < cert.survivors.size(); ++i) {
                const auto& c = cert.survivors[i];
                t.rows.push_back({std::to_string(i), to_string(c.nodes[0].v(1, 1)), std::to_string(c.mn->first),
                                  std::to_string(c.mn->second), chain_text(c)});
            }
            if (t.rows.empty()) t.rows.push_back({"no survivors", "", "", "", ""});
            emit_report(out, certificate_to_json(cert), t, o.format);
        };
    });

    auto* corners_cmd = app.add_subcommand("corners", "corner-case tables");
    corners_cmd->require_subcommand(1);
    std::optional<std::int64_t> max_sum, rr, ss;
    bool raw = false;
    auto* en = corners_cmd->add_subcommand("enumerate", "enumerate (r',s'), direction and st candidates");
    en->add_option("--max-sum", max_sum);
    en->add_option("--r", rr);
    en->add_option("--s", ss);
    en->add_flag("--raw", raw, "skip the external constraint table");
    en->callback([&] {
        action = [&] {
            std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
            if (rr && ss && !max_sum) pairs.push_back({*rr, *ss});
            else if (max_sum && !rr && !ss) pairs = corner_pairs_up_to(*max_sum);
            else throw PreconditionError("give either --max-sum or both --r and --s");
            std::vector<CornerCase> cases;
            for (auto [r, s] : pairs)
                for (const auto& c : corner_case_enumerator(r, s)) cases.push_back(c);
            // stage one admits cases and keeps their st sets; stage two keeps the surviving st only
            std::vector<CornerCase> surviving;
            if (!raw) {
                surviving = apply_external_table(cases, true);
                cases = apply_external_table(cases, false);
            }
            auto st_text = [](const CornerCase& c) {
                std::string st;
                for (auto [a, bb] : c.st_candidates) st += (st.empty() ? "" : " ") + pair_text(a, bb);
                return "{" + st + "}";
            };
            json jc = json::array();
            std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::string>> rows;
            std::vector<std::pair<std::int64_t, std::int64_t>> order;
            for (std::size_t i = 0; i < cases.size(); ++i) {
                const auto& c = cases[i];
                json jcase = corner_case_to_json(c);
                if (!raw) {
                    json sv = json::array();
                    for (auto [a, bb] : surviving[i].st_candidates) sv.push_back(json::array({a, bb}));
                    jcase["st_surviving"] = sv;
                }
                jc.push_back(jcase);
                auto key = std::make_pair(c.r, c.s);
                if (!rows.count(key)) {
                    order.push_back(key);
                    rows[key] = std::vector<std::string>(raw ? 3 : 4);
                }
                auto& row = rows[key];
                for (auto& cell : row)
                    if (!cell.empty()) cell += "; ";
                row[0] += pair_text(c.rp, c.sp);
                row[1] += pair_text(c.dir.rho, c.dir.sigma);
                row[2] += st_text(c);
                if (!raw) row[3] += st_text(surviving[i]);
            }
            Table t{{"rs", "rs_prime", "direction", "st_candidates"}, {}};
            if (!raw) t.header.push_back("st_surviving");
            for (const auto& k : order) {
                std::vector<std::string> r{pair_text(k.first, k.second)};
                r.insert(r.end(), rows[k].begin(), rows[k].end());
                t.rows.push_back(r);
            }
            if (t.rows.empty()) t.rows.push_back(std::vector<std::string>(t.header.size(), ""));
            if (t.rows.size() == 1 && order.empty()) t.rows[0][0] = "no cases";
            json j{{"external_table", !raw}, {"cases", jc}};
            emit_report(out, j, t, o.format);
        };
    });

    std::string group = "all";
    int trials = 50;
    auto* ver = app.add_subcommand("verify", "run the built-in property checks");
    ver->add_option("group", group)->check(CLI::IsMember({"all", "algebra", "bracket", "transform", "chains"}));
    ver->add_option("--trials", trials)->check(CLI::PositiveNumber);
    ver->callback([&] {
        action = [&] {
            auto res = verify_group(group, trials);
            json a = json::array();
            Table t{{"group", "check", "trials", "failures", "first_failure"}, {}};
            bool ok = true;
            for (const auto& r : res) {
                a.push_back({{"group", r.group}, {"check", r.name}, {"trials", r.trials}, {"failures", r.failures},
                             {"first_failure", r.first_failure}});
                t.rows.push_back({r.group, r.name, std::to_string(r.trials), std::to_string(r.failures), r.first_failure});
                ok = ok && r.ok();
            }
            emit_report(out, json{{"group", group}, {"all_pass", ok}, {"checks", a}}, t, o.format);
            code = ok ? 0 : 1;
        };
    });

    auto error = [&](const char* kind, const std::string& msg) {
        err << json{{"error", kind}, {"message", msg}}.dump() << "\n";
    };
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        error("usage", e.what());
        return 2;
    }
    try {
        if (action) action();
    } catch (const InternalError& e) {
        error("internal", e.what());
        return 1;
    } catch (const PreconditionError& e) {
        error("input", e.what());
        return 2;
    } catch (const json::exception& e) {
        error("input", e.what());
        return 2;
    } catch (const std::exception& e) {
        error("input", e.what());
        return 2;
    }
    return code;
}

}  // namespace weyl
