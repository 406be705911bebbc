// Times the sequential reference loop against the OpenMP paths for
// enumeration and classification, and checks they agree.

#include <chrono>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "shedlab/census.hpp"
#include "shedlab/graph6.hpp"

using namespace shedlab;

namespace {

template <class F>
double best_of(int reps, F&& body) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        body();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"census benchmark: sequential vs OpenMP"};
    int n = 8;
    int reps = 3;
    std::vector<int> jobs{2, 4};
    app.add_option("--n", n, "vertex count, 1..8")->check(CLI::Range(1, kMaxEnumerationOrder));
    app.add_option("--reps", reps, "repetitions; the best time is reported")->check(CLI::PositiveNumber);
    app.add_option("--jobs", jobs, "parallel worker counts to compare");
    CLI11_PARSE(app, argc, argv);

    std::cout << "n=" << n << "  threads available=" << available_threads() << "  best of " << reps << "\n\n";
    std::cout << std::left << std::setw(14) << "stage" << std::setw(8) << "jobs" << std::setw(12) << "seconds"
              << "speedup\n";

    auto row = [](const char* stage, int j, double s, double base) {
        std::cout << std::left << std::setw(14) << stage << std::setw(8) << j << std::setw(12) << std::fixed
                  << std::setprecision(4) << s << std::setprecision(2) << base / s << "x\n";
    };

    std::vector<Graph> graphs;
    const double enum_serial = best_of(reps, [&] { graphs = enumerate_connected(n, 1); });
    row("enumerate", 1, enum_serial, enum_serial);
    bool agree = true;
    for (int j : jobs) {
        std::vector<Graph> par;
        double s = best_of(reps, [&] { par = enumerate_connected(n, j); });
        agree &= par == graphs;
        row("enumerate", j, s, enum_serial);
    }

    // A fresh cache per run so every repetition does the full work.
    std::string reference;
    const double census_serial = best_of(reps, [&] {
        VDCache cache;
        VectorSource source(graphs);
        reference = render_json(census_report_serial(source, cache));
    });
    row("census", 1, census_serial, census_serial);
    for (int j : jobs) {
        std::string out;
        double s = best_of(reps, [&] {
            VDCache cache;
            VectorSource source(graphs);
            CensusOptions opts;
            opts.jobs = j;
            out = render_json(census_report(source, cache, opts));
        });
        agree &= out == reference;
        row("census", j, s, census_serial);
    }

    std::cout << "\nparallel results " << (agree ? "match" : "DIFFER FROM") << " the sequential reference\n";
    return agree ? 0 : 1;
}
