#include "czframe/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace czframe {

std::string to_string(Relation r) {
    switch (r) {
    case Relation::LessEqual: return "<=";
    case Relation::Less: return "<";
    case Relation::GreaterEqual: return ">=";
    case Relation::Greater: return ">";
    }
    return "?";
}

bool Check::passed() const {
    if (std::isnan(value)) return false;
    switch (relation) {
    case Relation::LessEqual: return value <= limit;
    case Relation::Less: return value < limit;
    case Relation::GreaterEqual: return value >= limit;
    case Relation::Greater: return value > limit;
    }
    return false;
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Info: return "INFO";
    }
    return "INFO";
}

Check& Record::check(std::string check_name, double value, Relation r, double limit, bool advisory) {
    checks.push_back({std::move(check_name), value, r, limit, advisory});
    return checks.back();
}

Verdict Record::verdict() const {
    bool enforced = false;
    for (const Check& c : checks) {
        if (c.advisory) continue;
        enforced = true;
        if (!c.passed()) return Verdict::Fail;
    }
    return enforced ? Verdict::Pass : Verdict::Info;
}

bool Report::passed() const {
    for (const Record& r : records)
        if (r.verdict() == Verdict::Fail) return false;
    return true;
}

const Record* Report::find(const std::string& diagnostic, const std::string& name, const std::string& subject) const {
    for (const Record& r : records)
        if (r.diagnostic == diagnostic && r.name == name && (subject.empty() || r.subject == subject)) return &r;
    return nullptr;
}

const Table* Report::table(const std::string& name) const {
    for (const Table& t : tables)
        if (t.name == name) return &t;
    return nullptr;
}

Json number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

Json to_json(const Report& r) {
    Json out;
    out["verdict"] = r.passed() ? "PASS" : "FAIL";
    out["seed"] = r.seed;
    out["config"] = r.config;
    Json records = Json::array();
    for (const Record& rec : r.records) {
        Json j;
        j["diagnostic"] = rec.diagnostic;
        j["name"] = rec.name;
        j["subject"] = rec.subject;
        j["verdict"] = to_string(rec.verdict());
        j["context"] = rec.context;
        j["values"] = rec.values;
        Json checks = Json::array();
        for (const Check& c : rec.checks) {
            Json cj;
            cj["name"] = c.name;
            cj["value"] = number(c.value);
            cj["relation"] = to_string(c.relation);
            cj["limit"] = number(c.limit);
            cj["advisory"] = c.advisory;
            cj["passed"] = c.passed();
            checks.push_back(std::move(cj));
        }
        j["checks"] = std::move(checks);
        Json tables = Json::array();
        for (const std::string& t : rec.tables) tables.push_back(t + ".csv");
        j["tables"] = std::move(tables);
        records.push_back(std::move(j));
    }
    out["records"] = std::move(records);
    return out;
}

std::string format_csv_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string to_csv(const Table& t) {
    std::ostringstream os;
    for (std::size_t k = 0; k < t.columns.size(); ++k) os << (k ? "," : "") << t.columns[k];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << format_csv_number(row[k]);
        os << '\n';
    }
    return os.str();
}

std::string summary_text(const Report& r) {
    std::ostringstream os;
    std::size_t counts[3] = {0, 0, 0};
    for (const Record& rec : r.records) ++counts[static_cast<int>(rec.verdict())];
    os << "suite verdict: " << (r.passed() ? "PASS" : "FAIL") << '\n';
    os << "seed: " << r.seed << '\n';
    os << "records: " << r.records.size() << " (pass " << counts[0] << ", fail " << counts[1] << ", info "
       << counts[2] << ")\n";
    std::string current;
    for (const Record& rec : r.records) {
        if (rec.diagnostic != current) {
            current = rec.diagnostic;
            os << "\n[" << current << "]\n";
        }
        os << "  " << to_string(rec.verdict()) << "  " << rec.name;
        if (!rec.subject.empty()) os << " (" << rec.subject << ")";
        os << '\n';
        for (const Check& c : rec.checks) {
            os << "        " << (c.advisory ? "~ " : (c.passed() ? "ok " : "FAIL ")) << c.name << ": "
               << format_csv_number(c.value) << ' ' << to_string(c.relation) << ' ' << format_csv_number(c.limit)
               << '\n';
        }
    }
    return os.str();
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    os << content;
    os.close();
    if (!os) throw std::runtime_error("failed writing " + path.string());
}

} // namespace

void emit(const Report& r, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
    write_file(dir / "report.json", to_json(r).dump(2) + "\n");
    for (const Table& t : r.tables) write_file(dir / (t.name + ".csv"), to_csv(t));
    write_file(dir / "summary.txt", summary_text(r));
}

} // namespace czframe
