// Times the exhaustive search serially (jobs = 1, the reference
// configuration) against the OpenMP-split run on the same workloads and
// prints the speedup. Verdicts must agree; a mismatch aborts the run.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "itc/graph.hpp"
#include "itc/search.hpp"

namespace {

itc::Graph fam(itc::Family family, int n) {
    itc::FamilySpec spec;
    spec.family = family;
    spec.n = n;
    return itc::generate(spec);
}

struct Workload {
    std::string label;
    // Runs the workload with the given worker count and names the result.
    std::function<std::string(int jobs)> run;
};

double seconds(const std::function<void()>& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int jobs =
#ifdef _OPENMP
        omp_get_max_threads();
#else
        1;
#endif
    CLI::App app{"serial vs parallel search timing", "itc-bench"};
    app.add_option("--jobs", jobs, "parallel worker count")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    auto exists = [](itc::Graph g, int t) {
        return [g = std::move(g), t](int j) {
            itc::SearchConfig cfg;
            cfg.jobs = j;
            return itc::verdict_name(itc::exists_coloring(g, t, cfg).verdict);
        };
    };
    auto spectrum = [](itc::Graph g) {
        return [g = std::move(g)](int j) {
            itc::SearchConfig cfg;
            cfg.jobs = j;
            auto result = itc::compute_spectrum(g, cfg);
            std::string out;
            for (const auto& e : result.entries)
                out += (e.verdict == itc::Verdict::feasible) ? 'F' : 'i';
            return out;
        };
    };

    std::vector<Workload> workloads = {
        {"K4 spectrum", spectrum(fam(itc::Family::complete, 4))},
        {"W6 spectrum", spectrum(fam(itc::Family::wheel, 6))},
        {"W7 exists t=11", exists(fam(itc::Family::wheel, 7), 11)},
        {"W8 exists t=12", exists(fam(itc::Family::wheel, 8), 12)},
        {"K6 exists t=12", exists(fam(itc::Family::complete, 6), 12)},
    };

    std::cout << "jobs " << jobs << "\n";
    std::cout << std::left << std::setw(16) << "workload" << std::setw(12) << "result"
              << std::right << std::setw(10) << "serial_s" << std::setw(12) << "parallel_s"
              << std::setw(9) << "speedup" << "\n";
    for (const auto& w : workloads) {
        std::string serial_result, parallel_result;
        double serial_s = seconds([&] { serial_result = w.run(1); });
        double parallel_s = seconds([&] { parallel_result = w.run(jobs); });
        if (serial_result != parallel_result) {
            std::cerr << "verdict mismatch on " << w.label << ": serial " << serial_result
                      << " vs parallel " << parallel_result << "\n";
            return 1;
        }
        std::cout << std::left << std::setw(16) << w.label << std::setw(12) << serial_result
                  << std::right << std::setw(10) << std::fixed << std::setprecision(3)
                  << serial_s << std::setw(12) << parallel_s << std::setw(9)
                  << std::setprecision(2) << (parallel_s > 0 ? serial_s / parallel_s : 0.0)
                  << "\n";
    }
    return 0;
}
