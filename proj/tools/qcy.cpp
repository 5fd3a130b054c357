// command-line harness: verification suites and table emitters
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qcy/qchar.hpp"
#include "qcy/qseries.hpp"
#include "qcy/quotients.hpp"
#include "qcy/paths.hpp"
#include "qcy/report.hpp"
#include "qcy/verify.hpp"

using namespace qcy;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Tab {
    std::vector<std::string> cols;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<std::vector<std::string>> rows;
};

std::string tab_json(const Tab& t) {
    nlohmann::json j;
    j["version"] = "0.1.0";
    nlohmann::json cfg = nlohmann::json::object();
    for (const auto& [k, v] : t.config) cfg[k] = v;
    j["config"] = cfg;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows) {
        nlohmann::json jr = nlohmann::json::object();
        for (size_t i = 0; i < t.cols.size(); ++i) jr[t.cols[i]] = r[i];
        rows.push_back(std::move(jr));
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string tab_csv(const Tab& t) {
    std::string out;
    for (size_t i = 0; i < t.cols.size(); ++i) out += (i ? "," : "") + csv_field(t.cols[i]);
    out += "\n";
    for (const auto& r : t.rows) {
        for (size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + csv_field(r[i]);
        out += "\n";
    }
    return out;
}

std::string tab_table(const Tab& t) {
    std::vector<size_t> w(t.cols.size());
    for (size_t i = 0; i < t.cols.size(); ++i) w[i] = t.cols[i].size();
    for (const auto& r : t.rows)
        for (size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    std::string out;
    auto line = [&](const std::vector<std::string>& r) {
        for (size_t i = 0; i < r.size(); ++i) {
            out += r[i];
            if (i + 1 < r.size()) out += std::string(w[i] - r[i].size() + 2, ' ');
        }
        out += "\n";
    };
    line(t.cols);
    for (const auto& r : t.rows) line(r);
    return out;
}

std::string render_tab(const Tab& t, const std::string& fmt) {
    if (fmt == "json") return tab_json(t);
    if (fmt == "csv") return tab_csv(t);
    return tab_table(t);
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::fprintf(stderr, "cannot write %s\n", out_path.c_str());
        return kExitInternal;
    }
    f << text;
    return 0;
}

int report_exit(const Report& r) {
    for (const CheckResult& c : r.checks)
        if (c.check == "exception") return kExitInternal;
    return r.ok() ? 0 : kExitFail;
}

std::string render_report(const Report& r, const std::string& fmt) {
    if (fmt == "json") return render_json(r);
    if (fmt == "csv") return render_csv(r);
    return render_table(r);
}

QPoly char_poly(const std::string& space, int N, int l, int r, int dmax) {
    if (space == "W") return ch_w(N, l, dmax);
    if (space == "M") return ch_m(N, l, dmax);
    return ch_m_res(N, l, r, dmax);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification harness for the cycle space and path model library"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "0.1.0");

    std::string fmt = "table", out_path;
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--format", fmt, "output format")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    // verify
    std::vector<std::string> suite_names;
    VerifyOptions vopt;
    bool timing = false, list_suites = false;
    auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
    cmd_verify->add_option("suites", suite_names, "suite names, or 'all' (default)");
    cmd_verify->add_option("--level", vopt.level, "grid size")
        ->check(CLI::IsMember({"quick", "full"}));
    cmd_verify->add_option("--tolerance", vopt.tolerance, "numeric comparison tolerance");
    cmd_verify->add_option("--seed", vopt.seed, "seed for sampled numeric checks");
    cmd_verify->add_option("--jobs", vopt.jobs, "worker threads over suites");
    cmd_verify->add_flag("--timing", timing, "include elapsed times in the report");
    cmd_verify->add_flag("--list", list_suites, "list available suites and exit");
    add_output(cmd_verify);

    // char
    std::string space;
    int N = 0, l = 0, r = 0, max_deg = 6, order = 10, m = 0, L = 0;
    auto* cmd_char = app.add_subcommand("char", "per-degree dimensions of one graded space");
    cmd_char->add_option("space", space, "W, M or Mr")
        ->required()
        ->check(CLI::IsMember({"W", "M", "Mr"}));
    cmd_char->add_option("--N", N, "number of spectral variables")->required();
    cmd_char->add_option("--l", l, "number of skew variables");
    cmd_char->add_option("--r", r, "restriction level (Mr only)");
    cmd_char->add_option("--max-deg", max_deg, "truncation degree");
    add_output(cmd_char);

    // vir-identity
    auto* cmd_vir = app.add_subcommand("vir-identity", "check one chiral decomposition identity");
    cmd_vir->add_option("--r", r, "minimal series index")->required();
    cmd_vir->add_option("--m", m, "sector")->required();
    cmd_vir->add_option("--L", L, "level")->required();
    cmd_vir->add_option("--order", order, "q-order of the comparison");
    add_output(cmd_vir);

    // table
    std::string kind;
    auto* cmd_table = app.add_subcommand("table", "emit a polynomial or counting table");
    cmd_table->add_option("kind", kind, "table kind")
        ->required()
        ->check(CLI::IsMember({"qbinom", "kostka", "restricted-kostka", "charW", "charM",
                               "charMr", "paths", "virasoro"}));
    cmd_table->add_option("--N", N, "maximum size");
    cmd_table->add_option("--l", l, "skew variables (charW/charM/charMr)");
    cmd_table->add_option("--r", r, "restriction level");
    cmd_table->add_option("--max-deg", max_deg, "truncation degree");
    cmd_table->add_option("--order", order, "series order (virasoro)");
    add_output(cmd_table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (cmd_verify->parsed()) {
            if (list_suites) {
                Tab t;
                t.cols = {"suite", "summary"};
                for (const Suite& s : suites()) t.rows.push_back({s.name, s.summary});
                return emit(render_tab(t, fmt), out_path);
            }
            std::vector<std::string> sel = suite_names;
            if (sel.size() == 1 && sel[0] == "all") sel.clear();
            for (const std::string& s : sel)
                if (!find_suite(s)) {
                    std::fprintf(stderr, "unknown suite '%s'; try 'verify --list'\n",
                                 s.c_str());
                    return kExitUsage;
                }
            Report rep = run_verification(vopt, sel);
            rep.with_timing = timing;
            int rc = emit(render_report(rep, fmt), out_path);
            return rc ? rc : report_exit(rep);
        }

        if (cmd_char->parsed()) {
            if (space == "Mr" && r < 3) {
                std::fprintf(stderr, "char Mr requires --r >= 3\n");
                return kExitUsage;
            }
            if (N < 1 || l < 0 || l > N || max_deg < 0) {
                std::fprintf(stderr, "invalid parameters\n");
                return kExitUsage;
            }
            QPoly p = char_poly(space, N, l, r, max_deg);
            Tab t;
            t.cols = {"degree", "dim"};
            t.config = {{"space", space},
                        {"N", std::to_string(N)},
                        {"l", std::to_string(l)},
                        {"max_deg", std::to_string(max_deg)}};
            if (space == "Mr") t.config.emplace_back("r", std::to_string(r));
            for (int d = 0; d <= max_deg; ++d)
                t.rows.push_back({std::to_string(d), rat_str(p.coeff_q(d))});
            return emit(render_tab(t, fmt), out_path);
        }

        if (cmd_vir->parsed()) {
            if (r < 3 || m < 0 || m > r - 2 || L < 0 || order < 1) {
                std::fprintf(stderr, "invalid parameters: need r >= 3, 0 <= m <= r-2, L >= 0\n");
                return kExitUsage;
            }
            bool ok = verify_vir_identity(r, m, L, 2 * order);
            Report rep;
            rep.config = {{"L", std::to_string(L)},
                          {"m", std::to_string(m)},
                          {"order", std::to_string(order)},
                          {"r", std::to_string(r)}};
            CheckResult c;
            c.check = "chiralIdentity";
            c.params = {{"r", std::to_string(r)},
                        {"m", std::to_string(m)},
                        {"L", std::to_string(L)}};
            c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
            c.expected = "match to q^" + std::to_string(order);
            rep.add(std::move(c));
            int rc = emit(render_report(rep, fmt), out_path);
            return rc ? rc : report_exit(rep);
        }

        // table
        Tab t;
        t.config = {{"kind", kind}};
        auto cfg = [&](const char* k, int v) { t.config.emplace_back(k, std::to_string(v)); };
        if (kind == "qbinom") {
            if (N < 1) N = 6;
            cfg("N", N);
            t.cols = {"n", "k", "poly"};
            for (int n = 0; n <= N; ++n)
                for (int k = 0; k <= n; ++k)
                    t.rows.push_back({std::to_string(n), std::to_string(k), qbin(n, k).str()});
        } else if (kind == "kostka") {
            if (N < 1) N = 6;
            cfg("N", N);
            t.cols = {"m", "N", "poly"};
            for (int mm = 0; mm <= N; ++mm)
                for (int n = mm; n <= N; n += 2) {
                    if (n == 0) continue;
                    t.rows.push_back({std::to_string(mm), std::to_string(n),
                                      kostka_closed(mm, n).str()});
                }
        } else if (kind == "restricted-kostka") {
            if (N < 1) N = 6;
            if (r < 3) r = 4;
            cfg("N", N);
            cfg("r", r);
            t.cols = {"m", "N", "poly"};
            for (int mm = 0; mm <= r - 2; ++mm)
                for (int n = mm; n <= N; n += 2) {
                    if (n == 0) continue;
                    t.rows.push_back({std::to_string(mm), std::to_string(n),
                                      restricted_kostka(r - 2, mm, Partition(n, 1)).str()});
                }
        } else if (kind == "charW" || kind == "charM" || kind == "charMr") {
            if (N < 1) N = 4;
            if (kind == "charMr" && r < 3) r = 4;
            cfg("N", N);
            cfg("max_deg", max_deg);
            if (kind == "charMr") cfg("r", r);
            t.cols = {"N", "l", "dims"};
            for (int n = 1; n <= N; ++n)
                for (int ll = 0; kind == "charW" ? ll <= n : 2 * ll <= n; ++ll) {
                    QPoly p = kind == "charW"   ? ch_w(n, ll, max_deg)
                              : kind == "charM" ? ch_m(n, ll, max_deg)
                                                : ch_m_res(n, ll, r, max_deg);
                    std::string dims;
                    for (int d = 0; d <= max_deg; ++d)
                        dims += (d ? "," : "") + rat_str(p.coeff_q(d));
                    t.rows.push_back({std::to_string(n), std::to_string(ll), dims});
                }
        } else if (kind == "paths") {
            if (N < 1) N = 8;
            cfg("N", N);
            if (r >= 3) cfg("r", r);
            t.cols = {"N", "m", "count"};
            for (int n = 1; n <= N; ++n)
                for (int mm = n % 2; mm <= (r >= 3 ? std::min(n, r - 2) : n); mm += 2) {
                    long long cnt = r >= 3 ? count_restricted(r, n, mm)
                                           : static_cast<long long>(classical_paths(n, mm).size());
                    t.rows.push_back({std::to_string(n), std::to_string(mm),
                                      std::to_string(cnt)});
                }
        } else {  // virasoro
            if (r < 3) r = 3;
            cfg("r", r);
            cfg("order", order);
            t.cols = {"b", "a", "series"};
            for (int b = 1; b <= r - 1; ++b)
                for (int a = 1; a <= r; ++a) {
                    QSeries s = virasoro_char(r, b, a, 2 * order + 1);
                    QPoly p;
                    for (int d = 0; d <= order; ++d) {
                        Rat c = s.coeff_q(d);
                        if (c != 0) p += QPoly::q_pow(d, c);
                    }
                    t.rows.push_back({std::to_string(b), std::to_string(a), p.str()});
                }
        }
        return emit(render_tab(t, fmt), out_path);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInternal;
    }
}
