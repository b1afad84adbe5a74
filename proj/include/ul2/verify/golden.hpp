#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "../config.hpp"
#include "../error.hpp"
#include "../families.hpp"
#include "../laplacian.hpp"
#include "report.hpp"

namespace ul2::verify {

enum class GoldenMode { Rounded, Exact };

struct GoldenEntry {
    std::string spec;
    std::string value_text; // decimal, "t", or "cyc(n)"
    double value = 0;
    GoldenMode mode = GoldenMode::Rounded;
    std::string location;
};

namespace detail {

// RFC 4180-ish: quoted fields may hold commas and doubled quotes
inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool q = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (q) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                q = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            q = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (q) throw Error(ErrorCode::Parse, "unterminated quote");
    out.push_back(cur);
    return out;
}

inline double golden_value(const std::string& s) {
    if (s == "t") return threshold();
    if (s.rfind("cyc(", 0) == 0 && s.back() == ')') {
        int n = ul2::detail::parse_int(s.substr(4, s.size() - 5), "cyc");
        return cycle_lambda2_closed_form(n);
    }
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "bad golden value '" + s + "'");
    }
    if (used != s.size()) throw Error(ErrorCode::Parse, "bad golden value '" + s + "'");
    return v;
}

} // namespace detail

inline std::vector<GoldenEntry> parse_golden(std::istream& in) {
    std::vector<GoldenEntry> out;
    std::string line;
    int lineno = 0;
    bool header = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto f = detail::split_csv_line(line);
        if (header) {
            header = false;
            if (f.size() >= 4 && f[0] == "spec") continue;
        }
        if (f.size() != 4)
            throw Error(ErrorCode::Parse, "golden line " + std::to_string(lineno) + ": expected 4 columns");
        GoldenEntry e;
        e.spec = f[0];
        e.value_text = f[1];
        e.value = detail::golden_value(f[1]);
        if (f[2] == "approx")
            e.mode = GoldenMode::Rounded;
        else if (f[2] == "exact")
            e.mode = GoldenMode::Exact;
        else
            throw Error(ErrorCode::Parse, "golden line " + std::to_string(lineno) + ": mode must be approx or exact");
        e.location = f[3];
        if (!(e.value > 0 && e.value < 2))
            throw Error(ErrorCode::Parse, "golden line " + std::to_string(lineno) + ": value outside (0,2)");
        out.push_back(std::move(e));
    }
    return out;
}

inline std::vector<GoldenEntry> load_golden(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Parse, "cannot open golden table " + path);
    return parse_golden(in);
}

inline VerifyReport reproduce_paper_values(const std::vector<GoldenEntry>& table, const RunOptions& opt) {
    const Tolerances& tol = tolerances();
    return detail::run_cases("golden", table, opt.jobs, [&tol](const GoldenEntry& e, VerifyReport& r) {
        double l = lambda2(make_family(parse_family_spec(e.spec)).graph);
        double bound = e.mode == GoldenMode::Exact ? tol.identity : tol.paper;
        r.check(std::fabs(l - e.value) <= bound,
                {e.spec + " [" + e.location + "]", e.value_text, fmt17(l), l - e.value});
    });
}

inline VerifyReport reproduce_paper_values(const RunOptions& opt) {
    return reproduce_paper_values(load_golden(opt.golden_path), opt);
}

} // namespace ul2::verify
