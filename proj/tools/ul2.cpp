// ul2: spectra and threshold classification of unicyclic graphs
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <ul2/ul2.hpp>
#include <ul2/verify/suites.hpp>

#ifndef UL2_GOLDEN_DEFAULT
#define UL2_GOLDEN_DEFAULT "data/golden.csv"
#endif

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

struct Common {
    std::string family;
    std::string input;
    std::string format = "table";
    std::optional<unsigned long long> seed;
    double tol_eig = 1e-10;
    double tol_paper = 5e-5;
    int jobs = 1;
    int enum_bound = 12;
};

ul2::Graph load_source(const Common& c) {
    if (!c.family.empty() && !c.input.empty())
        throw ul2::Error(ul2::ErrorCode::Parse, "give either --family or --input, not both");
    if (!c.family.empty()) return ul2::make_family(ul2::parse_family_spec(c.family)).graph;
    if (c.input.empty()) throw ul2::Error(ul2::ErrorCode::Parse, "need --family or --input");
    if (c.input == "-") return ul2::read_graph(std::cin);
    std::ifstream in(c.input);
    if (!in) throw ul2::Error(ul2::ErrorCode::Parse, "cannot open " + c.input);
    return ul2::read_graph(in);
}

void require_connected(const ul2::Graph& g) {
    if (g.order() < 2 || !ul2::is_connected(g))
        throw ul2::Error(ul2::ErrorCode::Precondition, "graph must be connected with n >= 2");
}

unsigned long long resolve_seed(const Common& c) {
    if (c.seed) return *c.seed;
    if (const char* env = std::getenv("UL2_SEED")) {
        try {
            size_t used = 0;
            unsigned long long s = std::stoull(env, &used);
            if (used == std::string(env).size()) return s;
        } catch (const std::exception&) {
        }
        throw ul2::Error(ul2::ErrorCode::Parse, std::string("UL2_SEED is not an integer: ") + env);
    }
    return ul2::verify::RunOptions{}.seed;
}

const char* sign_word(double l2) {
    switch (ul2::numeric_outcome(l2)) {
    case ul2::Outcome::Above: return "ABOVE";
    case ul2::Outcome::Equal: return "EQUAL";
    case ul2::Outcome::Below: return "BELOW";
    }
    return "?";
}

int cmd_lambda2(const Common& c) {
    ul2::Graph g = load_source(c);
    require_connected(g);
    double l2 = ul2::lambda2(g), t = ul2::threshold();
    if (c.format == "json") {
        std::cout << "{\"n\":" << g.order() << ",\"lambda2\":" << ul2::fmt17(l2) << ",\"threshold\":" << ul2::fmt17(t)
                  << ",\"verdict\":\"" << sign_word(l2) << "\"}\n";
    } else if (c.format == "csv") {
        std::cout << "n,lambda2,threshold,verdict\n"
                  << g.order() << ',' << ul2::fmt17(l2) << ',' << ul2::fmt17(t) << ',' << sign_word(l2) << '\n';
    } else {
        std::cout << "n          " << g.order() << "\nlambda2    " << ul2::fmt17(l2) << "\nthreshold  " << ul2::fmt17(t)
                  << "\nverdict    " << sign_word(l2) << '\n';
    }
    return kOk;
}

int cmd_spectrum(const Common& c) {
    ul2::Graph g = load_source(c);
    require_connected(g);
    ul2::Spectrum s = ul2::laplacian_spectrum(g);
    if (c.format == "json") {
        std::cout << "{\"n\":" << g.order() << ",\"spectrum\":[";
        for (size_t i = 0; i < s.size(); ++i) std::cout << (i ? "," : "") << ul2::fmt17(s[i]);
        std::cout << "],\"residual\":" << ul2::fmt17(s.residual) << "}\n";
    } else if (c.format == "csv") {
        ul2::write_spectrum_csv(std::cout, s);
    } else {
        for (size_t i = 0; i < s.size(); ++i) std::cout << "lambda_" << i + 1 << "  " << ul2::fmt17(s[i]) << '\n';
    }
    return kOk;
}

int cmd_classify(const Common& c) {
    ul2::Graph g = load_source(c);
    ul2::Verdict v = ul2::classify(g);
    if (c.format == "json") {
        std::cout << ul2::to_json(v) << '\n';
        return kOk;
    }
    std::string fam = v.family ? ul2::format_family_spec(*v.family, v.params) : "-";
    if (c.format == "csv") {
        std::cout << "outcome,family,lambda2,threshold,agreement,reason\n"
                  << ul2::to_string(v.outcome) << ",\"" << fam << "\"," << ul2::fmt17(v.lambda2) << ','
                  << ul2::fmt17(v.threshold) << ',' << (v.agreement ? "true" : "false") << ",\"" << v.reason << "\"\n";
        return kOk;
    }
    std::cout << "outcome     " << ul2::to_string(v.outcome) << "\nfamily      " << fam << "\nlambda2     "
              << ul2::fmt17(v.lambda2) << "\nthreshold   " << ul2::fmt17(v.threshold) << "\nstructural  "
              << ul2::to_string(v.structural) << "\nnumeric     " << ul2::to_string(v.numeric) << "\nagreement   "
              << (v.agreement ? "yes" : "no") << "\nreason      " << v.reason << '\n';
    if (!v.readings.empty()) std::cout << "readings    " << v.readings << '\n';
    return kOk;
}

int cmd_verify(const Common& c, const std::string& suite, bool json, bool timing, int exhaustive_n,
               const std::string& golden, int n_min, int n_max) {
    ul2::verify::RunOptions o;
    o.seed = resolve_seed(c);
    o.jobs = c.jobs;
    o.exhaustive_n = exhaustive_n;
    o.golden_path = golden;
    o.n_min = n_min;
    o.n_max = n_max;
    if (exhaustive_n > ul2::tolerances().enum_bound)
        throw ul2::Error(ul2::ErrorCode::OverBound, "--exhaustive-n exceeds the enumeration bound");
    if (n_min < 21 || n_max > 30 || n_min > n_max)
        throw ul2::Error(ul2::ErrorCode::Parse, "--n-min/--n-max must satisfy 21 <= n-min <= n-max <= 30");
    bool ok = true;
    for (const auto& r : ul2::verify::run_suite(suite, o)) {
        ok = ok && r.ok();
        if (json || c.format == "json")
            std::cout << ul2::verify::to_json(r, timing) << '\n';
        else
            ul2::verify::print_table(std::cout, r, timing);
    }
    return ok ? kOk : kVerifyFailed;
}

// accepts "15" or "n=15"
int parse_kv_int(const std::string& s, const std::string& key) {
    std::string v = s;
    if (s.rfind(key + "=", 0) == 0) v = s.substr(key.size() + 1);
    return ul2::detail::parse_int(v, key);
}

int cmd_enumerate(const Common& c, const std::vector<std::string>& args, std::optional<int> girth, bool count_only) {
    std::optional<int> n;
    for (const auto& a : args) {
        if (a.rfind("girth=", 0) == 0)
            girth = parse_kv_int(a, "girth");
        else if (!n)
            n = parse_kv_int(a, "n");
        else
            throw ul2::Error(ul2::ErrorCode::Parse, "unexpected argument '" + a + "'");
    }
    if (!n) throw ul2::Error(ul2::ErrorCode::Parse, "enumerate needs an order, e.g. n=7");
    ul2::UnicyclicEnumerator e(*n, girth);
    long count = 0;
    if (c.format == "csv" && !count_only) std::cout << "index,n,edges\n";
    while (auto g = e.next()) {
        if (!count_only) {
            if (c.format == "json") {
                std::cout << "{\"index\":" << count << ",\"n\":" << g->order() << ",\"edges\":[";
                for (size_t i = 0; i < g->edges().size(); ++i)
                    std::cout << (i ? "," : "") << '[' << g->edges()[i].first << ',' << g->edges()[i].second << ']';
                std::cout << "]}\n";
            } else if (c.format == "csv") {
                std::cout << count << ',' << g->order() << ",\"";
                for (size_t i = 0; i < g->edges().size(); ++i)
                    std::cout << (i ? " " : "") << g->edges()[i].first << '-' << g->edges()[i].second;
                std::cout << "\"\n";
            } else {
                if (count) std::cout << '\n';
                ul2::write_graph(std::cout, *g);
            }
        }
        ++count;
    }
    if (count_only) {
        if (c.format == "json")
            std::cout << "{\"n\":" << *n << ",\"count\":" << count << "}\n";
        else
            std::cout << count << '\n';
    }
    return kOk;
}

std::string slot_text(const ul2::Slot& s) {
    switch (s.kind) {
    case ul2::Slot::Broom2: return "broom(l0,l1)";
    case ul2::Slot::Broom3: return "broom(l0,l1,l2)";
    case ul2::Slot::StarVar: return "star(k)";
    case ul2::Slot::Fixed: break;
    }
    ul2::RootedTree t = ul2::tree_from_code(s.code);
    ul2::BroomSpec b;
    if (t.depth() <= 1) return "S" + std::to_string(t.order());
    ul2::as_broom(t, b);
    return "broom(" + std::to_string(b.at(0)) + "," + std::to_string(b.at(1)) + ")";
}

int cmd_families(const Common& c) {
    bool json = c.format == "json";
    if (c.format == "csv") std::cout << "name,girth,params,layout\n";
    auto emit = [&](const std::string& name, int g, const std::string& params, const std::string& layout) {
        if (json)
            std::cout << "{\"name\":\"" << name << "\",\"girth\":" << g << ",\"params\":\"" << params
                      << "\",\"layout\":\"" << layout << "\"}\n";
        else if (c.format == "csv")
            std::cout << name << ',' << g << ",\"" << params << "\",\"" << layout << "\"\n";
        else
            std::cout << name << (name.size() < 4 ? std::string(4 - name.size(), ' ') : "") << "  girth " << g
                      << "  " << layout << (params.empty() ? "" : "  [" + params + "]") << '\n';
    };
    emit("S", 0, "g,sizes", "S_g(sizes): star of order sizes[i] at cycle vertex i");
    for (const auto& d : ul2::family_catalog()) {
        std::string layout = "C" + std::to_string(d.girth) + "(";
        for (int i = 0; i < d.girth; ++i) layout += (i ? "," : "") + slot_text(d.slots[i]);
        layout += ")";
        std::string params = d.arity == 3 ? "l0,l1,l2" : d.arity == 2 ? "l0,l1" : "";
        emit(d.name, d.girth, params, layout);
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Normalized-Laplacian spectra and the lambda2 >= 1 - sqrt(6)/3 classification of unicyclic graphs"};
    app.require_subcommand(1);
    Common c;
    unsigned long long seed_value = 0;
    auto* seed_opt = app.add_option("--seed", seed_value, "RNG seed (falls back to UL2_SEED)");
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--tol-eig", c.tol_eig, "Eigenpair residual tolerance")->check(CLI::PositiveNumber);
    app.add_option("--tol-paper", c.tol_paper, "Tolerance for 5-decimal reference values")->check(CLI::PositiveNumber);
    app.add_option("--jobs", c.jobs, "Worker threads for verification")->check(CLI::Range(1, 256));
    app.add_option("--enum-bound", c.enum_bound, "Largest order for enumeration and canonical forms")
        ->check(CLI::Range(3, ul2::Tolerances::enum_bound_max));

    auto add_source = [&](CLI::App* sub) {
        sub->add_option("--family", c.family, "Family spec, e.g. S:g=4,sizes=2,2,2,17 or H42:l0=16,l1=0,l2=0");
        sub->add_option("--input", c.input, "Graph file (\"n m\" then m lines \"u v\"); - for stdin");
    };
    auto* lam = app.add_subcommand("lambda2", "Print lambda2 and compare with the threshold");
    add_source(lam);
    auto* spec = app.add_subcommand("spectrum", "Print the full normalized-Laplacian spectrum");
    add_source(spec);
    auto* cls = app.add_subcommand("classify", "Classify a unicyclic graph with n >= 21");
    add_source(cls);

    auto* ver = app.add_subcommand("verify", "Run verification suites");
    std::string suite = "all";
    bool json = false, timing = false;
    int exhaustive_n = 10, n_min = 21, n_max = 26;
    std::string golden = UL2_GOLDEN_DEFAULT;
    ver->add_option("suite", suite, "lemma1..lemma6, golden, equality, brooms, theorems, enumeration, all");
    ver->add_flag("--json", json, "Newline-delimited JSON reports");
    ver->add_flag("--timing", timing, "Include wall time in reports");
    ver->add_option("--exhaustive-n", exhaustive_n, "Largest order for exhaustive checks");
    ver->add_option("--golden", golden, "Golden table CSV");
    ver->add_option("--n-min", n_min, "Smallest order for theorem sweeps");
    ver->add_option("--n-max", n_max, "Largest order for theorem sweeps");

    auto* en = app.add_subcommand("enumerate", "List unicyclic graphs of order n up to isomorphism");
    std::vector<std::string> en_args;
    std::optional<int> girth;
    bool count_only = false;
    en->add_option("args", en_args, "n=N [girth=G]")->required();
    en->add_option("--girth", girth, "Only this girth");
    en->add_flag("--count", count_only, "Print only the number of classes");

    auto* fam = app.add_subcommand("families", "List the family catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*seed_opt) c.seed = seed_value;
        ul2::Tolerances& tol = ul2::tolerances();
        tol.eig_residual = c.tol_eig;
        tol.paper = c.tol_paper;
        tol.enum_bound = c.enum_bound;

        if (*lam) return cmd_lambda2(c);
        if (*spec) return cmd_spectrum(c);
        if (*cls) return cmd_classify(c);
        if (*ver) return cmd_verify(c, suite, json, timing, exhaustive_n, golden, n_min, n_max);
        if (*en) return cmd_enumerate(c, en_args, girth, count_only);
        if (*fam) return cmd_families(c);
    } catch (const ul2::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
