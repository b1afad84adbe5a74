#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "../error.hpp"
#include "golden.hpp"
#include "lemmas.hpp"
#include "oracle.hpp"
#include "report.hpp"
#include "theorems.hpp"

namespace ul2::verify {

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> s = {"lemma1", "lemma2", "lemma3",  "lemma4", "lemma5",      "lemma6",
                                               "golden", "equality", "brooms", "theorems", "enumeration"};
    return s;
}

inline int scaled(int n, const RunOptions& o) { return std::max(1, static_cast<int>(std::lround(n * o.sample_scale))); }

// Default sample sizes are the ones the acceptance run uses.
inline std::vector<VerifyReport> run_suite(const std::string& name, const RunOptions& o) {
    std::vector<VerifyReport> out;
    auto want = [&](const char* s) { return name == "all" || name == s; };
    bool known = name == "all";
    for (auto& s : suite_names()) known = known || s == name;
    if (!known) throw Error(ErrorCode::Parse, "unknown suite '" + name + "'");
    if (want("lemma1")) {
        out.push_back(verify_interlacing(scaled(1000, o), 25, o));
        out.push_back(verify_interlacing_exhaustive(o.exhaustive_n, o));
    }
    if (want("lemma2")) out.push_back(verify_lemma2(scaled(500, o), 5, 20, o));
    if (want("lemma3")) out.push_back(verify_lemma3(scaled(500, o), 5, 20, o));
    if (want("lemma4")) out.push_back(verify_lemma4(3, 50, o));
    if (want("lemma5")) {
        out.push_back(verify_lemma5(scaled(500, o), 10, 30, o));
        out.push_back(verify_lemma5_exhaustive(o.exhaustive_n, o));
    }
    if (want("lemma6")) out.push_back(verify_lemma6(scaled(200, o), o));
    if (want("golden")) out.push_back(reproduce_paper_values(o));
    if (want("equality")) out.push_back(verify_equality(o));
    if (want("brooms")) out.push_back(verify_brooms(scaled(200, o), o));
    if (want("theorems")) out.push_back(cross_validate_theorems(o.n_min, o.n_max, o));
    if (want("enumeration")) out.push_back(verify_enumeration(7, o));
    return out;
}

} // namespace ul2::verify
