#include "CLI11.hpp"
#include "json.hpp"

#include "czframe/error.hpp"
#include "czframe/operators.hpp"
#include "czframe/suite.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Calderon-Zygmund frame diagnostics"};
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    bool list = false;
    app.add_option("--config", config_path, "suite configuration (JSON)");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--seed", seed, "override the configured seed");
    app.add_flag("--list-operators", list, "print the operator zoo and exit");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (list) {
        for (const czframe::ModelOperator& m : czframe::model_zoo())
            std::cout << m.kernel.label << "\t" << m.description << '\n';
        return 0;
    }

    czframe::SuiteConfig config;
    try {
        if (config_path.empty()) throw czframe::ConfigError("--config is required");
        std::ifstream in(config_path);
        if (!in) throw czframe::ConfigError("cannot read " + config_path);
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw czframe::ConfigError(config_path + ": " + e.what());
        }
        config = czframe::parse_config(doc);
        if (seed) config.seed = *seed;
        if (!out_dir.empty()) config.output = out_dir;
        if (config.output.empty()) throw czframe::ConfigError("no output directory (--out or \"output\")");
    } catch (const czframe::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }

    try {
        const czframe::Report report = czframe::run_suite(config, &std::cerr);
        czframe::emit(report, config.output);
        std::cout << "suite verdict: " << (report.passed() ? "PASS" : "FAIL") << '\n';
        return report.passed() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
