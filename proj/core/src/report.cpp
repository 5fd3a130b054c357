#include "qcy/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace qcy {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "skip";
    }
}

int Report::n_pass() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.status == CheckStatus::Pass;
    }));
}

int Report::n_fail() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.status == CheckStatus::Fail;
    }));
}

int Report::n_skip() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.status == CheckStatus::Skip;
    }));
}

namespace {

std::string param_str(const CheckResult& c) {
    std::string out;
    for (const auto& [k, v] : c.params) {
        if (!out.empty()) out += " ";
        out += k + "=" + v;
    }
    return out;
}

std::string clip(const std::string& s, size_t n) {
    if (s.size() <= n) return s;
    return s.substr(0, n - 3) + "...";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

double round_ms(double v) { return std::round(v * 1000.0) / 1000.0; }

}  // namespace

std::string render_json(const Report& rep) {
    nlohmann::json j;
    j["version"] = rep.version;
    nlohmann::json cfg = nlohmann::json::object();
    for (const auto& [k, v] : rep.config) cfg[k] = v;
    j["config"] = cfg;
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckResult& c : rep.checks) {
        nlohmann::json jc;
        jc["check"] = c.check;
        nlohmann::json p = nlohmann::json::object();
        for (const auto& [k, v] : c.params) p[k] = v;
        jc["params"] = p;
        jc["status"] = status_name(c.status);
        if (!c.expected.empty()) jc["expected"] = c.expected;
        if (!c.computed.empty()) jc["computed"] = c.computed;
        if (rep.with_timing) jc["elapsed_ms"] = round_ms(c.elapsed_ms);
        arr.push_back(std::move(jc));
    }
    j["checks"] = arr;
    nlohmann::json sum;
    sum["pass"] = rep.n_pass();
    sum["fail"] = rep.n_fail();
    sum["skipped"] = rep.n_skip();
    if (rep.with_timing) sum["wall_ms"] = round_ms(rep.wall_ms);
    j["summary"] = sum;
    return j.dump(2) + "\n";
}

std::string render_table(const Report& rep) {
    std::ostringstream out;
    size_t wc = 5, wp = 6;
    for (const CheckResult& c : rep.checks) {
        wc = std::max(wc, c.check.size());
        wp = std::max(wp, param_str(c).size());
    }
    wc = std::min<size_t>(wc, 28);
    wp = std::min<size_t>(wp, 32);
    for (const CheckResult& c : rep.checks) {
        out << status_name(c.status);
        out << (c.status == CheckStatus::Pass ? "  " : "  ");
        std::string name = clip(c.check, wc), ps = clip(param_str(c), wp);
        out << name << std::string(wc - name.size() + 2, ' ');
        out << ps << std::string(wp - ps.size() + 2, ' ');
        if (c.status == CheckStatus::Fail)
            out << "expected " << clip(c.expected, 48) << "  got " << clip(c.computed, 48);
        if (rep.with_timing) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.1f ms", c.elapsed_ms);
            out << "  " << buf;
        }
        out << "\n";
    }
    out << "pass " << rep.n_pass() << "  fail " << rep.n_fail() << "  skipped " << rep.n_skip();
    if (rep.with_timing) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "  wall %.0f ms", rep.wall_ms);
        out << buf;
    }
    out << "\n";
    return out.str();
}

std::string render_csv(const Report& rep) {
    std::ostringstream out;
    out << "check,params,status,expected,computed";
    if (rep.with_timing) out << ",elapsed_ms";
    out << "\n";
    for (const CheckResult& c : rep.checks) {
        out << csv_field(c.check) << "," << csv_field(param_str(c)) << ","
            << status_name(c.status) << "," << csv_field(c.expected) << ","
            << csv_field(c.computed);
        if (rep.with_timing) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", c.elapsed_ms);
            out << "," << buf;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace qcy
