#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "../format.hpp"

namespace ul2::verify {

struct Failure {
    std::string input;
    std::string expected;
    std::string actual;
    double delta = 0;
};

struct VerifyReport {
    std::string suite;
    long cases = 0;
    long passes = 0;
    std::vector<Failure> failures;
    std::vector<std::string> notes; // documented discrepancies, not failures
    double wall_seconds = 0;

    bool ok() const { return failures.empty() && passes == cases; }

    void pass() {
        ++cases;
        ++passes;
    }
    void fail(Failure f) {
        ++cases;
        failures.push_back(std::move(f));
    }
    void check(bool good, Failure f) { good ? pass() : fail(std::move(f)); }

    void merge(const VerifyReport& o) {
        cases += o.cases;
        passes += o.passes;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
        notes.insert(notes.end(), o.notes.begin(), o.notes.end());
        wall_seconds += o.wall_seconds;
    }
};

struct RunOptions {
    unsigned long long seed = 20240521ULL;
    int jobs = 1;
    int exhaustive_n = 10;
    std::string golden_path;
    int n_min = 21, n_max = 26;
    double sample_scale = 1.0; // multiplies default sample sizes
};

// Runs body(i) for i in [0, count) on up to `jobs` threads. Each index
// writes only its own slot, so results do not depend on scheduling.
inline void parallel_for(long count, int jobs, const std::function<void(long)>& body) {
    if (jobs <= 1 || count < 2) {
        for (long i = 0; i < count; ++i) body(i);
        return;
    }
    int t = static_cast<int>(std::min<long>(jobs, count));
    std::vector<std::thread> pool;
    for (int w = 0; w < t; ++w)
        pool.emplace_back([&, w] {
            for (long i = w; i < count; i += t) body(i);
        });
    for (auto& th : pool) th.join();
}

class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

namespace detail {

// evaluate each input into its own report, then fold in input order
template <class T, class F>
VerifyReport run_cases(const std::string& suite, const std::vector<T>& inputs, int jobs, F&& fn) {
    Stopwatch sw;
    std::vector<VerifyReport> parts(inputs.size());
    parallel_for(static_cast<long>(inputs.size()), jobs, [&](long i) { fn(inputs[i], parts[i]); });
    VerifyReport r;
    r.suite = suite;
    for (auto& p : parts) r.merge(p);
    r.wall_seconds = sw.seconds();
    return r;
}

} // namespace detail

inline void print_table(std::ostream& out, const VerifyReport& r, bool timing) {
    out << r.suite << ": " << r.passes << "/" << r.cases << " passed";
    if (timing) out << " (" << fmt_fixed(r.wall_seconds, 3) << " s)";
    out << (r.ok() ? "  OK" : "  FAIL") << '\n';
    for (const auto& f : r.failures)
        out << "  FAIL " << f.input << "  expected " << f.expected << "  actual " << f.actual << "  delta "
            << fmt17(f.delta) << '\n';
    for (const auto& n : r.notes) out << "  note " << n << '\n';
}

inline std::string to_json(const VerifyReport& r, bool timing) {
    std::string s = "{\"suite\":\"" + json_escape(r.suite) + "\",\"cases\":" + std::to_string(r.cases) +
                    ",\"passes\":" + std::to_string(r.passes) + ",\"ok\":" + (r.ok() ? "true" : "false") +
                    ",\"failures\":[";
    for (size_t i = 0; i < r.failures.size(); ++i) {
        const auto& f = r.failures[i];
        s += (i ? "," : "") + std::string("{\"input\":\"") + json_escape(f.input) + "\",\"expected\":\"" +
             json_escape(f.expected) + "\",\"actual\":\"" + json_escape(f.actual) + "\",\"delta\":" +
             fmt17(f.delta) + "}";
    }
    s += "],\"notes\":[";
    for (size_t i = 0; i < r.notes.size(); ++i) s += (i ? ",\"" : "\"") + json_escape(r.notes[i]) + "\"";
    s += "]";
    if (timing) s += ",\"wall_seconds\":" + fmt17(r.wall_seconds);
    s += "}";
    return s;
}

} // namespace ul2::verify
