#pragma once

// Suite report: per-diagnostic records with checks and metadata, profile tables, and
// deterministic emission to report.json, one CSV per table, and summary.txt.

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace czframe {

using Json = nlohmann::ordered_json;

enum class Relation { LessEqual, Less, GreaterEqual, Greater };
[[nodiscard]] std::string to_string(Relation r);

struct Check {
    std::string name;
    double value = 0.0;
    Relation relation = Relation::LessEqual;
    double limit = 0.0;
    bool advisory = false; // reported, never fails the suite
    [[nodiscard]] bool passed() const;
};

struct Table {
    std::string name; // file stem
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

enum class Verdict { Pass, Fail, Info };
[[nodiscard]] std::string to_string(Verdict v);

struct Record {
    std::string diagnostic;
    std::string name;
    std::string subject;
    Json context = Json::object(); // grid, truncation box, inputs
    Json values = Json::object();
    std::vector<Check> checks;
    std::vector<std::string> tables;

    Check& check(std::string check_name, double value, Relation r, double limit, bool advisory = false);
    // Fail if any enforced check fails, Pass if at least one enforced check exists, Info otherwise.
    [[nodiscard]] Verdict verdict() const;
};

struct Report {
    std::uint64_t seed = 0;
    Json config = Json::object();
    std::vector<Record> records;
    std::vector<Table> tables;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] const Record* find(const std::string& diagnostic, const std::string& name,
                                     const std::string& subject = "") const;
    [[nodiscard]] const Table* table(const std::string& name) const;
};

// Shortest-roundtrip doubles; NaN and infinities become strings.
[[nodiscard]] Json number(double v);
[[nodiscard]] Json to_json(const Report& r);
// %.9g, with nan/inf spelled out.
[[nodiscard]] std::string format_csv_number(double v);
[[nodiscard]] std::string to_csv(const Table& t);
[[nodiscard]] std::string summary_text(const Report& r);

// Writes report.json, <table>.csv and summary.txt into dir (created if missing).
// Throws std::runtime_error naming the offending path on I/O failure.
void emit(const Report& r, const std::filesystem::path& dir);

} // namespace czframe
