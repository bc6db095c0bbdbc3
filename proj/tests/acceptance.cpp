// End-to-end acceptance: one line per criterion. Criteria 1-10 run the suite's
// diagnostics in-process, timing each one, and judge the raw values against fixed
// thresholds. Criterion 11 runs the CLI on the same configuration and compares its
// output files byte for byte with an in-process emission.

#include "CLI11.hpp"

#include "czframe/suite.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace czframe;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool passed = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) passed = false;
        notes.push_back((ok ? "" : "!") + what);
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double value(const Record* r, const std::string& key) {
    if (!r || !r->values.contains(key)) return std::nan("");
    const Json& v = r->values.at(key);
    return v.is_number() ? v.get<double>() : std::nan("");
}

std::vector<double> series(const Record* r, const std::string& key) {
    if (!r || !r->values.contains(key)) return {};
    return r->values.at(key).get<std::vector<double>>();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::set<std::string> listing(const fs::path& dir) {
    std::set<std::string> out;
    if (!fs::exists(dir)) return out;
    for (const auto& e : fs::directory_iterator(dir)) out.insert(e.path().filename().string());
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance"};
    std::string cli, config_path, work;
    app.add_option("--cli", cli)->required();
    app.add_option("--config", config_path)->required();
    app.add_option("--work", work)->required();
    CLI11_PARSE(app, argc, argv);

    std::ifstream in(config_path);
    const SuiteConfig config = parse_config(nlohmann::json::parse(in));

    Report report;
    report.seed = config.seed;
    report.config = to_json(config);
    std::map<std::string, double> seconds;
    for (const std::string& d : config.diagnostics) {
        SuiteConfig one = config;
        one.diagnostics = {d};
        const auto t0 = Clock::now();
        Report part = run_suite(one);
        seconds[d] = std::chrono::duration<double>(Clock::now() - t0).count();
        std::cerr << "ran " << d << " in " << fmt(seconds[d]) << " s" << std::endl;
        for (Record& r : part.records) report.records.push_back(std::move(r));
        for (Table& t : part.tables) report.tables.push_back(std::move(t));
    }
    const auto find = [&](const char* d, const char* n, const char* s = "") { return report.find(d, n, s); };

    std::vector<std::pair<std::string, Outcome>> results;

    {
        Outcome o;
        const Record* g = find("group", "group_axioms");
        const Record* m = find("group", "metric_axioms");
        const Record* h = find("group", "haar_volume");
        o.require(value(g, "samples") >= 1e4, "samples " + fmt(value(g, "samples")));
        for (const char* k : {"associativity", "identity", "inverse"})
            o.require(value(g, k) <= 1e-12, std::string(k) + " " + fmt(value(g, k)));
        o.require(value(m, "negativity") <= 0.0 && value(m, "self_distance") <= 0.0 && value(m, "triangle_excess") <= 0.0 &&
                      value(m, "asymmetry") <= 1e-12,
                  "metric axioms");
        o.require(value(m, "left_invariance") <= 1e-12, "left invariance " + fmt(value(m, "left_invariance")));
        const double vol = std::abs(value(h, "R1") / value(h, "R1_closed_form") - 1.0);
        o.require(vol <= 0.01, "disk volume error " + fmt(vol));
        o.require(seconds["group"] < 10.0, "time " + fmt(seconds["group"]) + " s");
        results.emplace_back("group geometry", o);
    }
    {
        Outcome o;
        double p = 0.0, q = 0.0;
        int count = 0;
        for (const Record& r : report.records) {
            if (r.name != "parseval_round_trip") continue;
            ++count;
            p = std::max(p, value(&r, "parseval_error"));
            q = std::max(q, value(&r, "round_trip_error"));
        }
        o.require(count >= 4, std::to_string(count) + " test functions");
        o.require(p <= 0.02, "Parseval " + fmt(p));
        o.require(q <= 0.05, "round trip " + fmt(q));
        const Record* ref = find("frame", "refinement");
        const std::vector<double> ps = series(ref, "parseval_max"), qs = series(ref, "round_trip_max");
        o.require(ps.size() == 3 && ps[1] < ps[0] && ps[2] < ps[1], "Parseval monotone over 3 levels");
        o.require(qs.size() == 3 && qs[1] < qs[0] && qs[2] < qs[1], "round trip monotone over 3 levels");
        o.require(seconds["frame"] < 120.0, "time " + fmt(seconds["frame"]) + " s");
        results.emplace_back("frame identities", o);
    }
    {
        Outcome o;
        const Record* pv = find("operators", "pv_accuracy", "Hilbert");
        const Record* dp = find("localization", "dual_path", "Hilbert");
        o.require(value(pv, "relative_error") <= 0.02, "PV error " + fmt(value(pv, "relative_error")));
        o.require(value(pv, "window") >= 16.0, "window " + fmt(value(pv, "window")));
        o.require(value(dp, "max_relative_difference") <= 1e-4, "dual path " + fmt(value(dp, "max_relative_difference")));
        o.require(value(dp, "difference_(1,0)_(1,8)") <= 1e-6, "(1,0)-(1,8) " + fmt(value(dp, "difference_(1,0)_(1,8)")));
        // the dual-path sample is computed inside the localization diagnostic
        const double t = seconds["operators"] + seconds["localization"];
        o.require(t < 60.0, "time (operators + localization) " + fmt(t) + " s");
        results.emplace_back("principal value application", o);
    }
    {
        Outcome o;
        const Record* d = find("localization", "decay", "Hilbert");
        const double c0 = value(d, "fitted_constant"), c1 = value(d, "refined_fitted_constant");
        o.require(std::isfinite(c0) && c0 > 0.0, "C = " + fmt(c0));
        o.require(std::abs(c1 / c0 - 1.0) <= 0.2, "refined C = " + fmt(c1));
        o.require(seconds["localization"] < 300.0, "time " + fmt(seconds["localization"]) + " s");
        results.emplace_back("decay majorant conformity", o);
    }
    {
        Outcome o;
        const Record* s = find("localization", "schur", "Hilbert");
        const std::vector<double> radii = series(s, "radii"), vals = series(s, "values"), anchors = series(s, "anchor_values");
        double at1 = std::nan(""), at6 = std::nan("");
        for (std::size_t i = 0; i < radii.size(); ++i) {
            if (radii[i] == 1.0) at1 = vals[i];
            if (radii[i] == 6.0) at6 = vals[i];
        }
        o.require(!vals.empty() && std::isfinite(vals[0]), "value " + (vals.empty() ? std::string("?") : fmt(vals[0])));
        double spread = std::nan("");
        if (anchors.size() == 3)
            spread = (*std::max_element(anchors.begin(), anchors.end()) - *std::min_element(anchors.begin(), anchors.end())) /
                     anchors[0];
        o.require(spread <= 1e-10, "anchor spread " + fmt(spread));
        o.require(at1 / at6 >= 5.0, "tail(1)/tail(6) " + fmt(at1 / at6));
        o.require(seconds["localization"] < 300.0, "time " + fmt(seconds["localization"]) + " s");
        results.emplace_back("Schur localization", o);
    }
    {
        Outcome o;
        const Table* h = report.table("weak_profile_Hilbert");
        const Table* f = report.table("weak_profile_FiniteRank");
        double lo = INFINITY, hi = 0.0, last = std::nan("");
        if (h)
            for (const auto& row : h->rows)
                if (row[2] > 0) {
                    lo = std::min(lo, row[1]);
                    hi = std::max(hi, row[1]);
                }
        if (f)
            for (const auto& row : f->rows)
                if (row[2] > 0) last = row[1];
        o.require(h && (hi - lo) / hi <= 1e-8, "Hilbert spread " + fmt((hi - lo) / hi));
        o.require(f && last < 1e-4, "FiniteRank at max radius " + fmt(last));
        results.emplace_back("weak compactness dichotomy", o);
    }
    {
        Outcome o;
        const Record* fr = find("compactness", "rk_tail", "FiniteRank");
        const Record* hb = find("compactness", "rk_tail", "Hilbert");
        const Record* pd = find("compactness", "power_vs_dense");
        o.require(value(fr, "ratio") < 1e-3, "FiniteRank ratio " + fmt(value(fr, "ratio")));
        o.require(value(hb, "ratio") > 0.1, "Hilbert ratio " + fmt(value(hb, "ratio")));
        o.require(report.table("rk_witness_Hilbert") != nullptr, "Hilbert witness exported");
        o.require(value(pd, "max_relative_difference") <= 1e-3, "power vs dense " + fmt(value(pd, "max_relative_difference")));
        o.require(pd && pd->context.at("grid").at("points").get<double>() == 256, "dense comparison at N = 256");
        o.require(seconds["compactness"] < 300.0, "time " + fmt(seconds["compactness"]) + " s");
        results.emplace_back("Riesz-Kolmogorov dichotomy", o);
    }
    {
        Outcome o;
        const Record* b = find("carleson", "vanishing_profile", "bump");
        const Record* l = find("carleson", "vanishing_profile", "log");
        o.require(value(b, "ratio") < 1e-2, "bump ratio " + fmt(value(b, "ratio")));
        o.require(value(l, "ratio") > 0.2, "log ratio " + fmt(value(l, "ratio")));
        double worst = 0.0;
        int cases = 0;
        for (const Record& r : report.records)
            if (r.name == "stein_check") {
                ++cases;
                const double v = value(&r, "ratio");
                worst = std::isnan(v) ? INFINITY : std::max(worst, v);
            }
        o.require(cases >= 4 && worst <= 10.0, std::to_string(cases) + " Stein cases, max ratio " + fmt(worst));
        results.emplace_back("Carleson / CMO dichotomy", o);
    }
    {
        Outcome o;
        const Record* id = find("paraproduct", "identities", "bump");
        const Record* cb = find("paraproduct", "compactness", "bump");
        const Record* cl = find("paraproduct", "compactness", "log");
        o.require(value(id, "P1_vs_m_beta") <= 0.05, "P1 vs m beta " + fmt(value(id, "P1_vs_m_beta")));
        o.require(value(id, "sup_Pstar1") <= 1e-9, "P*1 " + fmt(value(id, "sup_Pstar1")));
        o.require(value(id, "adjointness") <= 1e-10, "adjointness " + fmt(value(id, "adjointness")));
        o.require(value(cb, "ratio") < 1e-2, "CMO symbol ratio " + fmt(value(cb, "ratio")));
        o.require(value(cl, "ratio") > 0.1, "BMO symbol ratio " + fmt(value(cl, "ratio")));
        results.emplace_back("paraproduct identities", o);
    }
    {
        Outcome o;
        double recon = 0.0;
        for (const Record& r : report.records)
            if (r.name == "decompose") recon = std::max(recon, value(&r, "reconstruction"));
        const Record* d1 = find("decomposition", "decompose", "DampedHilbert_1");
        const Record* h = find("decomposition", "decompose", "Hilbert");
        o.require(recon <= 1e-10, "reconstruction " + fmt(recon));
        o.require(value(d1, "paired_S1") <= 0.05, "paired S1 " + fmt(value(d1, "paired_S1")));
        o.require(value(h, "max_|Sf-Tf|") <= 1e-9, "Hilbert S - T " + fmt(value(h, "max_|Sf-Tf|")));
        results.emplace_back("decomposition", o);
    }
    {
        Outcome o;
        const fs::path root(work);
        fs::remove_all(root);
        const fs::path a = root / "in_process", b = root / "cli";
        emit(report, a);
        const auto t0 = Clock::now();
        const std::string cmd = cli + " --config " + config_path + " --out " + b.string() + " > " +
                                (root / "cli.log").string() + " 2>&1";
        const int status = std::system(cmd.c_str());
        const double t = std::chrono::duration<double>(Clock::now() - t0).count();
        const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        o.require(code == 0, "exit code " + std::to_string(code));
        o.require(t < 1200.0, "time " + fmt(t) + " s");
        const std::set<std::string> fa = listing(a), fb = listing(b);
        bool same = !fa.empty() && fa == fb;
        for (const std::string& f : fa)
            if (same && slurp(a / f) != slurp(b / f)) {
                same = false;
                o.notes.push_back("!differs: " + f);
            }
        o.require(same, std::to_string(fb.size()) + " files byte-identical");
        results.emplace_back("CLI contract", o);
    }

    bool all = true;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& [name, o] = results[i];
        all = all && o.passed;
        std::cout << "criterion " << (i + 1) << " [" << (o.passed ? "PASS" : "FAIL") << "] " << name << ":";
        for (std::size_t k = 0; k < o.notes.size(); ++k) std::cout << (k ? ";" : "") << ' ' << o.notes[k];
        std::cout << '\n';
    }
    return all ? 0 : 1;
}
