#include "doctest.h"

#include "czframe/error.hpp"
#include "czframe/suite.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace czframe;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path scratch_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("czframe_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(CZFRAME_CLI) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST_SUITE("suite") {

TEST_CASE("CSV numbers carry nine significant digits") {
    CHECK(format_csv_number(1.0 / 3.0) == "0.333333333");
    CHECK(format_csv_number(123456789012.0) == "1.23456789e+11");
    CHECK(format_csv_number(0.0) == "0");
    CHECK(format_csv_number(std::nan("")) == "nan");
    CHECK(format_csv_number(-INFINITY) == "-inf");
    const Table t{"t", {"x", "y"}, {{1.0, 2.5}, {-0.125, 1e-20}}};
    CHECK(to_csv(t) == "x,y\n1,2.5\n-0.125,1e-20\n");
}

TEST_CASE("record verdicts") {
    Record r;
    CHECK(r.verdict() == Verdict::Info);
    r.check("advisory", 2.0, Relation::Less, 1.0, true);
    CHECK(r.verdict() == Verdict::Info);
    r.check("enforced", 0.5, Relation::Less, 1.0);
    CHECK(r.verdict() == Verdict::Pass);
    r.check("nan never passes", std::nan(""), Relation::GreaterEqual, 0.0);
    CHECK(r.verdict() == Verdict::Fail);
    Check c{"edge", 1.0, Relation::LessEqual, 1.0, false};
    CHECK(c.passed());
    c.relation = Relation::Less;
    CHECK_FALSE(c.passed());
}

TEST_CASE("config parsing") {
    const SuiteConfig d = parse_config(nlohmann::json::object());
    CHECK(d.points == 2048);
    CHECK(d.operators.size() == 5);
    CHECK(d.diagnostics == diagnostic_names());
    CHECK(d.tolerance("parseval") == 0.02);

    const auto parse = [](const char* text) { return parse_config(nlohmann::json::parse(text)); };
    const SuiteConfig c = parse(R"({"diagnostics": ["carleson", "group"], "seed": 9, "tolerances": {"parseval": 0.01}})");
    CHECK(c.diagnostics == std::vector<std::string>{"group", "carleson"});
    CHECK(c.seed == 9);
    CHECK(c.tolerance("parseval") == 0.01);

    CHECK_THROWS_AS(parse(R"({"bogus": 1})"), ConfigError);
    CHECK_THROWS_AS(parse(R"({"operators": ["Riesz"]})"), ConfigError);
    CHECK_THROWS_AS(parse(R"({"diagnostics": ["everything"]})"), ConfigError);
    CHECK_THROWS_AS(parse(R"({"tolerances": {"parseval": -1}})"), ConfigError);
    CHECK_THROWS_AS(parse(R"({"tolerances": {"nonsense": 1}})"), ConfigError);
    CHECK_THROWS_AS(parse(R"({"radii": {"schur": [0, 2, 1]}})"), ConfigError);
    CHECK_THROWS_AS(parse(R"({"grid": {"points": 8}})"), ConfigError);
    CHECK_THROWS_AS(parse(R"({"frame": {"a_min": 0.001}})"), ConfigError);
    CHECK_THROWS_AS(parse(R"({"grid": {"points": "many"}})"), ConfigError);

    // the echoed configuration parses back to itself
    const Json echoed = to_json(c);
    const SuiteConfig again = parse_config(nlohmann::json::parse(echoed.dump()));
    CHECK(to_json(again) == echoed);
}

TEST_CASE("small suite emits deterministic output") {
    const SuiteConfig c =
        parse_config(nlohmann::json::parse(R"({"diagnostics": ["group", "grid"], "operators": ["Hilbert"]})"));
    const Report r = run_suite(c);
    CHECK(r.passed());
    REQUIRE(r.find("group", "group_axioms") != nullptr);
    CHECK(r.find("group", "group_axioms")->verdict() == Verdict::Pass);
    const fs::path a = scratch_dir("a"), b = scratch_dir("b");
    emit(r, a);
    emit(run_suite(c), b);
    CHECK(slurp(a / "report.json") == slurp(b / "report.json"));
    CHECK(slurp(a / "summary.txt") == slurp(b / "summary.txt"));
    CHECK(nlohmann::json::parse(slurp(a / "report.json"))["verdict"] == "PASS");
}

TEST_CASE("empty selection gives an empty passing report") {
    const SuiteConfig c = parse_config(nlohmann::json::parse(R"({"diagnostics": []})"));
    const Report r = run_suite(c);
    CHECK(r.records.empty());
    CHECK(r.passed());
    const fs::path dir = scratch_dir("empty");
    emit(r, dir);
    const auto j = nlohmann::json::parse(slurp(dir / "report.json"));
    CHECK(j["records"].empty());
    CHECK(j["verdict"] == "PASS");
    int csv = 0;
    for (const auto& e : fs::directory_iterator(dir)) csv += e.path().extension() == ".csv";
    CHECK(csv == 0);
}

TEST_CASE("one profile emits one CSV with a row per radius") {
    Report r;
    Record rec;
    rec.diagnostic = "d";
    rec.name = "n";
    rec.tables.push_back("profile");
    r.records.push_back(rec);
    r.tables.push_back(Table{"profile", {"R", "value"}, {{0.0, 1.0}, {1.0, 0.5}, {2.0, 0.25}}});
    const fs::path dir = scratch_dir("one");
    emit(r, dir);
    emit(r, dir);
    const std::string csv = slurp(dir / "profile.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    CHECK(csv.rfind("R,value\n", 0) == 0);
}

TEST_CASE("emit reports the offending path") {
    const fs::path dir = scratch_dir("blocked");
    std::ofstream(dir / "file") << "x";
    try {
        emit(Report{}, dir / "file" / "sub");
        FAIL("expected an error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("file") != std::string::npos);
    }
}

TEST_CASE("CLI exit codes") {
    const fs::path dir = scratch_dir("cli");
    {
        std::ofstream(dir / "ok.json") << R"({"diagnostics": ["group"]})";
        std::ofstream(dir / "bad.json") << R"({"diagnostics": ["group"], "grid": {"half_width": -1}})";
        std::ofstream(dir / "broken.json") << "{ not json";
        std::ofstream(dir / "strict.json") << R"({"diagnostics": ["group"], "tolerances": {"group_relative": 1e-300}})";
    }
    CHECK(run_cli("--list-operators") == 0);
    CHECK(run_cli("--config " + (dir / "ok.json").string() + " --out " + (dir / "out").string()) == 0);
    CHECK(fs::exists(dir / "out" / "report.json"));
    CHECK(fs::exists(dir / "out" / "summary.txt"));
    CHECK(run_cli("--config " + (dir / "bad.json").string() + " --out " + (dir / "o2").string()) == 2);
    CHECK(run_cli("--config " + (dir / "broken.json").string() + " --out " + (dir / "o3").string()) == 2);
    CHECK(run_cli("--config " + (dir / "missing.json").string() + " --out " + (dir / "o4").string()) == 2);
    CHECK(run_cli("--config " + (dir / "ok.json").string()) == 2);
    CHECK(run_cli("--bogus-flag") == 2);
    CHECK(run_cli("--config " + (dir / "strict.json").string() + " --out " + (dir / "o5").string() + " --seed 4") == 1);
}

}
