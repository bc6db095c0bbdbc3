#pragma once

// Suite configuration, validation and orchestration. Diagnostics run in dependency
// order (geometry, grids, frame, operators, localization, compactness, carleson,
// paraproduct, decomposition); a failing check marks the suite FAIL but the remaining
// diagnostics still run.

#include "czframe/grid.hpp"
#include "czframe/report.hpp"

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace czframe {

struct SuiteConfig {
    double half_width = 32.0;
    std::size_t points = 2048;
    FrameGridConfig frame;
    std::vector<std::string> operators;   // zoo labels
    std::vector<std::string> diagnostics; // subset of diagnostic_names(), run in canonical order
    std::map<std::string, std::vector<double>> radii;
    std::map<std::string, double> tolerances;
    std::uint64_t seed = 1;
    std::string output;

    [[nodiscard]] double tolerance(const std::string& key) const { return tolerances.at(key); }
    [[nodiscard]] const std::vector<double>& radii_for(const std::string& key) const { return radii.at(key); }
};

[[nodiscard]] const std::vector<std::string>& diagnostic_names();
[[nodiscard]] const std::map<std::string, double>& default_tolerances();
[[nodiscard]] const std::map<std::string, std::vector<double>>& default_radii();

// Everything at its default: all diagnostics, every zoo operator.
[[nodiscard]] SuiteConfig default_config();

// Parses a JSON document on top of the defaults. Unknown keys, unknown operator or
// diagnostic names, non-positive tolerances and radii lists that are not strictly
// increasing raise ConfigError; so does a frame lattice the grid cannot resolve.
[[nodiscard]] SuiteConfig parse_config(const nlohmann::json& doc);
[[nodiscard]] Json to_json(const SuiteConfig& c);

// Runs the selected diagnostics. Progress lines (with timings) go to `log` when given;
// nothing time-dependent enters the report.
[[nodiscard]] Report run_suite(const SuiteConfig& c, std::ostream* log = nullptr);

} // namespace czframe
