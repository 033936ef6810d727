#ifndef BVSYM_SUITE_HPP
#define BVSYM_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace bvsym {

struct SuiteConfig {
    std::string suite = "all";  ///< rearrange | coarea | main-theorem | proposition |
                                ///< polya-szego | torsion-F | torsion-G | all
    std::uint64_t seed = 42;
    std::size_t count = 200;
    std::size_t grid = 10000;    ///< 1-D density resolution
    std::size_t grid2d = 256;    ///< torsion grid resolution
    double tol = 1e-6;           ///< main-theorem comparison tolerance
    std::vector<double> params;  ///< lambda (torsion-F) or m (torsion-G) values
    std::string report_path;     ///< JSON report; plot CSVs go next to it
};

struct InstanceRecord {
    std::string suite;
    std::uint64_t index = 0;
    bool pass = false;
    double margin = 0.0;  ///< worst slack of the instance's inequalities
    std::string detail;
};

struct Report {
    int schema = 1;
    SuiteConfig config;
    std::vector<InstanceRecord> instances;
    std::size_t passed = 0;
    std::size_t failed = 0;
    double worst_margin = 0.0;
    double wall_seconds = 0.0;
};

/// Runs the named suite (parallel across instances, capped by the
/// BVSYM_THREADS environment variable) and writes the report and plot
/// CSVs when config.report_path is set.
Report run_suite(const SuiteConfig& config);

/// Full report as JSON (schema field first-class; wall_seconds is the
/// only run-to-run varying field).
std::string report_to_json(const Report& report);

/// Parallelism cap: BVSYM_THREADS if set, hardware concurrency otherwise.
unsigned thread_count();

}  // namespace bvsym

#endif
