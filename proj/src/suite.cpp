#include "czframe/suite.hpp"

#include "czframe/carleson.hpp"
#include "czframe/compactness.hpp"
#include "czframe/error.hpp"
#include "czframe/group.hpp"
#include "czframe/localization.hpp"
#include "czframe/operators.hpp"
#include "czframe/paraproduct.hpp"
#include "czframe/summation.hpp"
#include "czframe/wavelet.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

namespace czframe {

const std::vector<std::string>& diagnostic_names() {
    static const std::vector<std::string> names{"group",        "grid",        "frame",
                                                "operators",    "localization", "compactness",
                                                "carleson",     "paraproduct",  "decomposition"};
    return names;
}

const std::map<std::string, double>& default_tolerances() {
    static const std::map<std::string, double> t{
        {"group_relative", 1e-12},   {"haar_volume", 0.01},        {"disk_sum", 0.05},
        {"lattice_refinement", 0.01}, {"quadrature", 0.01},        {"parseval", 0.02},
        {"round_trip", 0.05},        {"admissibility", 0.005},     {"covariance", 0.02},
        {"pv_hilbert", 0.02},        {"parity", 1e-10},            {"t1_cancellation", 1e-9},
        {"t1_separable", 1e-3},      {"t1_tail", 0.1},             {"adjoint", 0.01},
        {"dual_path", 1e-4},         {"self_coefficient", 1e-9},   {"decay_stability", 0.2},
        {"conjugation", 0.02},       {"schur_anchor", 1e-10},      {"schur_tail_factor", 5.0},
        {"origin_vanish", 1e-3},     {"origin_persist", 0.1},      {"weak_constant", 1e-8},
        {"weak_decay", 1e-4},        {"rk_vanish", 1e-3},          {"rk_persist", 0.1},
        {"rk_dense", 1e-3},          {"frame_energy", 0.05},       {"power_tolerance", 1e-6},
        {"carleson_constant", 1e-6}, {"carleson_cmo", 1e-2},       {"carleson_cmo_all", 0.05},
        {"carleson_bmo", 0.2},       {"carleson_mass", 0.02},      {"stein_slack", 10.0},
        {"maximal_covariance", 0.02}, {"paraproduct_one", 0.05},   {"paraproduct_adjoint_one", 1e-9},
        {"paraproduct_pairing", 1e-10}, {"paraproduct_adjointness", 1e-10}, {"paraproduct_cache", 1e-12},
        {"paraproduct_cmo", 1e-2},   {"paraproduct_bmo", 0.1},     {"reconstruction", 1e-10},
        {"degenerate", 1e-9},        {"paired_s1", 0.05},          {"annihilation", 0.05},
    };
    return t;
}

namespace {

std::vector<double> steps(double hi, double step) {
    std::vector<double> out;
    for (int k = 0; k * step <= hi + 1e-12; ++k) out.push_back(k * step);
    return out;
}

} // namespace

const std::map<std::string, std::vector<double>>& default_radii() {
    static const std::map<std::string, std::vector<double>> r{
        {"schur", steps(6.0, 1.0)},      {"origin", steps(6.0, 0.5)},     {"weak", steps(6.5, 0.5)},
        {"rk_tail", steps(6.0, 0.5)},    {"carleson", steps(7.0, 0.5)},   {"paraproduct", steps(4.0, 0.5)},
    };
    return r;
}

SuiteConfig default_config() {
    SuiteConfig c;
    for (const ModelOperator& m : model_zoo()) c.operators.push_back(m.kernel.label);
    c.diagnostics = diagnostic_names();
    c.radii = default_radii();
    c.tolerances = default_tolerances();
    return c;
}

namespace {

template <class T>
T get(const nlohmann::json& j, const char* key, const std::string& where) {
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(where + "." + key + ": " + e.what());
    }
}

void reject_unknown(const nlohmann::json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + " must be an object");
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) throw ConfigError("unknown key '" + k + "' in " + where);
}

std::vector<std::string> string_list(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array()) throw ConfigError(where + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw ConfigError(where + " must be an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

} // namespace

SuiteConfig parse_config(const nlohmann::json& doc) {
    SuiteConfig c = default_config();
    reject_unknown(doc, {"grid", "frame", "operators", "diagnostics", "radii", "tolerances", "seed", "output"}, "config");
    if (doc.contains("grid")) {
        const auto& g = doc["grid"];
        reject_unknown(g, {"half_width", "points"}, "grid");
        if (g.contains("half_width")) c.half_width = get<double>(g, "half_width", "grid");
        if (g.contains("points")) c.points = get<std::size_t>(g, "points", "grid");
    }
    if (!(c.half_width > 0.0) || !std::isfinite(c.half_width)) throw ConfigError("grid.half_width must be positive");
    if (c.points < 16) throw ConfigError("grid.points must be at least 16");
    if (doc.contains("frame")) {
        const auto& f = doc["frame"];
        reject_unknown(f, {"a_min", "a_max", "scales_per_octave", "spacing", "half_width_b"}, "frame");
        if (f.contains("a_min")) c.frame.a_min = get<double>(f, "a_min", "frame");
        if (f.contains("a_max")) c.frame.a_max = get<double>(f, "a_max", "frame");
        if (f.contains("scales_per_octave")) c.frame.scales_per_octave = get<int>(f, "scales_per_octave", "frame");
        if (f.contains("spacing")) c.frame.spacing = get<double>(f, "spacing", "frame");
        if (f.contains("half_width_b")) c.frame.half_width_b = get<double>(f, "half_width_b", "frame");
    }
    if (doc.contains("operators")) {
        c.operators = string_list(doc["operators"], "operators");
        for (const std::string& label : c.operators) {
            try {
                (void)find_model(label);
            } catch (const UnsupportedKernel& e) {
                throw ConfigError(e.what());
            }
        }
    }
    if (doc.contains("diagnostics")) {
        const std::vector<std::string> wanted = string_list(doc["diagnostics"], "diagnostics");
        for (const std::string& d : wanted)
            if (std::find(diagnostic_names().begin(), diagnostic_names().end(), d) == diagnostic_names().end())
                throw ConfigError("unknown diagnostic '" + d + "'");
        c.diagnostics.clear();
        for (const std::string& d : diagnostic_names())
            if (std::find(wanted.begin(), wanted.end(), d) != wanted.end()) c.diagnostics.push_back(d);
    }
    if (doc.contains("radii")) {
        const auto& r = doc["radii"];
        if (!r.is_object()) throw ConfigError("radii must be an object");
        for (const auto& [k, v] : r.items()) {
            if (!default_radii().count(k)) throw ConfigError("unknown radii list '" + k + "'");
            if (!v.is_array() || v.empty()) throw ConfigError("radii." + k + " must be a non-empty array");
            std::vector<double> list;
            for (const auto& e : v) {
                if (!e.is_number()) throw ConfigError("radii." + k + " must contain numbers");
                list.push_back(e.get<double>());
            }
            if (list.front() < 0.0) throw ConfigError("radii." + k + " must be non-negative");
            for (std::size_t i = 1; i < list.size(); ++i)
                if (!(list[i] > list[i - 1])) throw ConfigError("radii." + k + " must be strictly increasing");
            c.radii[k] = std::move(list);
        }
    }
    if (doc.contains("tolerances")) {
        const auto& t = doc["tolerances"];
        if (!t.is_object()) throw ConfigError("tolerances must be an object");
        for (const auto& [k, v] : t.items()) {
            if (!default_tolerances().count(k)) throw ConfigError("unknown tolerance '" + k + "'");
            if (!v.is_number() || !(v.get<double>() > 0.0)) throw ConfigError("tolerance '" + k + "' must be > 0");
            c.tolerances[k] = v.get<double>();
        }
    }
    if (doc.contains("seed")) c.seed = get<std::uint64_t>(doc, "seed", "config");
    if (doc.contains("output")) c.output = get<std::string>(doc, "output", "config");
    try {
        (void)make_frame_grid(c.frame, SpatialGrid(c.half_width, c.points));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("frame: ") + e.what());
    }
    return c;
}

Json to_json(const SuiteConfig& c) {
    Json j;
    j["grid"] = {{"half_width", c.half_width}, {"points", c.points}};
    j["frame"] = {{"a_min", c.frame.a_min},
                  {"a_max", c.frame.a_max},
                  {"scales_per_octave", c.frame.scales_per_octave},
                  {"spacing", c.frame.spacing},
                  {"half_width_b", c.frame.half_width_b}};
    j["operators"] = c.operators;
    j["diagnostics"] = c.diagnostics;
    Json r = Json::object();
    for (const auto& [k, v] : c.radii) r[k] = v;
    j["radii"] = r;
    Json t = Json::object();
    for (const auto& [k, v] : c.tolerances) t[k] = v;
    j["tolerances"] = t;
    j["seed"] = c.seed;
    return j;
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double gaussian(double x, double center, double width) {
    const double u = (x - center) / width;
    return std::exp(-0.5 * u * u);
}

bool non_increasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1]) return false;
    return true;
}

double max_abs(const SampledFunction& f) {
    double m = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f[i]));
    return m;
}

double l1_norm(const SampledFunction& f) {
    CompensatedSum s;
    for (std::size_t i = 0; i < f.size(); ++i) s.add(std::abs(f[i]));
    return s.value() * f.grid().spacing();
}

double relative_difference(const SampledFunction& f, const SampledFunction& g) {
    SampledFunction d = f;
    d -= g;
    const double scale = std::max(f.norm(), g.norm());
    return scale > 0.0 ? d.norm() / scale : d.norm();
}

Json grid_json(const SpatialGrid& g) {
    return {{"half_width", g.half_width()}, {"points", g.size()}, {"spacing", g.spacing()}};
}

struct Suite {
    const SuiteConfig& config;
    Report& report;
    std::ostream* log;
    SpatialGrid grid;
    std::shared_ptr<const FrameGrid> frame;
    std::shared_ptr<const AtomDictionary> psi;
    std::shared_ptr<const AtomDictionary> phi;
    std::map<std::string, double> t1_tail;

    Suite(const SuiteConfig& c, Report& r, std::ostream* l)
        : config(c), report(r), log(l), grid(c.half_width, c.points), frame(make_frame_grid(c.frame, grid)) {}

    const AtomDictionary& wavelets() {
        if (!psi) psi = std::make_shared<const AtomDictionary>(wavelet_dictionary(frame));
        return *psi;
    }
    const AtomDictionary& bumps() {
        if (!phi) phi = std::make_shared<const AtomDictionary>(phi_dictionary(frame));
        return *phi;
    }

    double tol(const std::string& key) const { return config.tolerance(key); }
    const std::vector<double>& radii(const std::string& key) const { return config.radii_for(key); }
    bool selected(const std::string& label) const {
        return std::find(config.operators.begin(), config.operators.end(), label) != config.operators.end();
    }
    std::uint64_t seed(std::uint64_t stream) const { return config.seed * 0x9E3779B97F4A7C15ULL + stream; }

    Json lattice_context() const {
        const FrameGridConfig& f = frame->config();
        return {{"grid", grid_json(grid)},
                {"lattice", frame->describe()},
                {"box", {{"a", {frame->scales().front(), frame->scales().back()}}, {"b_half_width", f.half_width_b}}}};
    }

    Record& add(std::string diagnostic, std::string name, std::string subject = "") {
        Record r;
        r.diagnostic = std::move(diagnostic);
        r.name = std::move(name);
        r.subject = std::move(subject);
        r.context = lattice_context();
        report.records.push_back(std::move(r));
        return report.records.back();
    }

    void table(Record& r, Table t) {
        r.tables.push_back(t.name);
        report.tables.push_back(std::move(t));
    }

    void note(const std::string& line) const {
        if (log) *log << line << std::endl;
    }

    SampledFunction random_function(std::mt19937_64& rng) const {
        std::uniform_real_distribution<double> center(-8.0, 8.0);
        std::uniform_real_distribution<double> width(0.5, 2.0);
        std::uniform_real_distribution<double> amp(-1.0, 1.0);
        double c[3], w[3], m[3];
        for (int k = 0; k < 3; ++k) {
            c[k] = center(rng);
            w[k] = width(rng);
            m[k] = amp(rng);
        }
        return SampledFunction::sample(grid, [&](double x) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += m[k] * gaussian(x, c[k], w[k]);
            return s;
        });
    }

    void run_group();
    void run_grid();
    void run_frame();
    void run_operators();
    void run_localization();
    void run_compactness();
    void run_carleson();
    void run_paraproduct();
    void run_decomposition();
};

// ---------------------------------------------------------------------------

void Suite::run_group() {
    std::mt19937_64 rng(seed(1));
    std::uniform_real_distribution<double> loga(-3.0, 3.0);
    std::uniform_real_distribution<double> ub(-10.0, 10.0);
    const auto draw = [&] { return GroupPoint(std::exp(loga(rng)), ub(rng)); };
    const auto rel = [](const GroupPoint& p, const GroupPoint& q) {
        const double da = std::abs(p.a() - q.a()) / std::max({std::abs(p.a()), std::abs(q.a()), 1.0});
        const double db = std::abs(p.b() - q.b()) / std::max({std::abs(p.b()), std::abs(q.b()), 1.0});
        return std::max(da, db);
    };
    constexpr int samples = 10000;
    double assoc = 0.0, ident = 0.0, inv = 0.0;
    double nonneg = 0.0, symm = 0.0, triangle = 0.0, self = 0.0, invariance = 0.0;
    for (int s = 0; s < samples; ++s) {
        const GroupPoint g = draw(), x = draw(), y = draw();
        assoc = std::max(assoc, rel((g * x) * y, g * (x * y)));
        ident = std::max({ident, rel(GroupPoint::identity() * g, g), rel(g * GroupPoint::identity(), g)});
        inv = std::max({inv, rel(g * g.inverse(), GroupPoint::identity()), rel(g.inverse() * g, GroupPoint::identity())});
        const double dxy = dist(x, y);
        nonneg = std::max(nonneg, -dxy);
        symm = std::max(symm, std::abs(dxy - dist(y, x)));
        triangle = std::max(triangle, dxy - (dist(x, g) + dist(g, y)) * (1.0 + 1e-14));
        self = std::max(self, dist(x, x));
        invariance = std::max(invariance, std::abs(dist(g * x, g * y) - dxy) / std::max(dxy, 1e-300));
    }
    {
        Record& r = add("group", "group_axioms");
        r.values = {{"samples", samples}, {"associativity", assoc}, {"identity", ident}, {"inverse", inv}};
        r.check("associativity", assoc, Relation::LessEqual, tol("group_relative"));
        r.check("identity", ident, Relation::LessEqual, tol("group_relative"));
        r.check("inverse", inv, Relation::LessEqual, tol("group_relative"));
    }
    {
        Record& r = add("group", "metric_axioms");
        r.values = {{"samples", samples},  {"negativity", nonneg}, {"asymmetry", symm},
                    {"triangle_excess", triangle}, {"self_distance", self}, {"left_invariance", invariance}};
        r.check("negativity", nonneg, Relation::LessEqual, 0.0);
        r.check("asymmetry", symm, Relation::LessEqual, 0.0);
        r.check("triangle_excess", triangle, Relation::LessEqual, 0.0);
        r.check("self_distance", self, Relation::LessEqual, 0.0);
        r.check("left_invariance", invariance, Relation::LessEqual, tol("group_relative"));
        const double e = std::abs(dist(GroupPoint(1, 0), GroupPoint(std::numbers::e, 0)) - 1.0);
        r.values["geodesic_error"] = e;
        r.check("d((1,0),(e,0)) - 1", e, Relation::LessEqual, tol("group_relative"));
    }
    {
        Record& r = add("group", "haar_volume");
        const QuadratureValue v1 = haar_ball_volume(1.0);
        const QuadratureValue v2 = haar_ball_volume(2.0);
        const QuadratureValue v0 = haar_ball_volume(0.01);
        const double exact = 2.0 * kPi * (std::cosh(1.0) - 1.0);
        r.values = {{"R1", v1.value}, {"R1_error_estimate", v1.error_estimate}, {"R1_closed_form", exact},
                    {"R2", v2.value}, {"small_radius_ratio", v0.value / (kPi * 1e-4)}};
        r.check("relative error at R=1", std::abs(v1.value - exact) / exact, Relation::LessEqual, tol("haar_volume"));
        r.check("volume(2) - volume(1)", v2.value - v1.value, Relation::Greater, 0.0);
        r.check("|volume(0.01)/(pi R^2) - 1|", std::abs(v0.value / (kPi * 1e-4) - 1.0), Relation::LessEqual,
                tol("haar_volume"));
    }
    {
        std::uniform_real_distribution<double> ux(-4.0, 4.0);
        std::uniform_real_distribution<double> ur(0.1, 4.0);
        int nesting = 0, duality = 0;
        for (int s = 0; s < samples; ++s) {
            const GroupPoint p = draw();
            const double x = ux(rng);
            const double r1 = ur(rng), r2 = r1 + ur(rng);
            if (in_tent(p, Tent{x, r1}) && !in_tent(p, Tent{x, r2})) ++nesting;
            if (in_cone(p, Cone{x}) != (std::abs(x - p.b()) < p.a())) ++duality;
        }
        Record& r = add("group", "tents_cones");
        r.values = {{"samples", samples}, {"nesting_violations", nesting}, {"duality_violations", duality}};
        r.check("nesting violations", nesting, Relation::LessEqual, 0.0);
        r.check("cone/ball duality violations", duality, Relation::LessEqual, 0.0);
    }
}

void Suite::run_grid() {
    Record& r = add("grid", "frame_lattice");
    double min_w = std::numeric_limits<double>::infinity();
    CompensatedSum total;
    CompensatedSum disk;
    const std::vector<double> d = identity_distances(*frame);
    for (std::size_t n = 0; n < frame->size(); ++n) {
        min_w = std::min(min_w, (*frame)[n].weight);
        total.add((*frame)[n].weight);
        if (d[n] < 1.0) disk.add((*frame)[n].weight);
    }
    const double exact = 2.0 * kPi * (std::cosh(1.0) - 1.0);
    const SpatialGrid doubled(grid.half_width(), 2 * grid.size());
    const auto fine = make_frame_grid(frame->config(), doubled);
    CompensatedSum fine_total;
    for (const FrameNode& n : fine->nodes()) fine_total.add(n.weight);
    std::vector<double> counts;
    for (double R : steps(*std::max_element(d.begin(), d.end()) + 1.0, 1.0))
        counts.push_back(static_cast<double>(tail_nodes(*frame, R).size()));
    r.values = {{"nodes", frame->size()},
                {"min_weight", min_w},
                {"total_weight", total.value()},
                {"disk_sum_R1", disk.value()},
                {"disk_closed_form", exact},
                {"max_distance", *std::max_element(d.begin(), d.end())},
                {"doubled_total_weight", fine_total.value()}};
    r.check("min weight", min_w, Relation::Greater, 0.0);
    r.check("disk sum relative error", std::abs(disk.value() - exact) / exact, Relation::LessEqual, tol("disk_sum"));
    r.check("N doubling total change", std::abs(fine_total.value() - total.value()) / total.value(), Relation::LessEqual,
            tol("lattice_refinement"));
    r.check("tail counts non-increasing", non_increasing(counts) ? 0.0 : 1.0, Relation::LessEqual, 0.0);
    r.check("tail beyond max distance", counts.back(), Relation::LessEqual, 0.0);

    // sum F dλ for F = bump(ln a) bump(b) against the product of two 1D integrals.
    Record& q = add("grid", "lattice_quadrature");
    CompensatedSum lattice;
    for (const FrameNode& n : frame->nodes()) lattice.add(smooth_bump(std::log(n.a)) * smooth_bump(n.b) * n.weight);
    const int m = 200000;
    CompensatedSum it, ib;
    for (int k = 0; k < m; ++k) {
        const double t = -1.0 + (k + 0.5) * 2.0 / m;
        it.add(smooth_bump(t) * std::exp(-t) * 2.0 / m);
        ib.add(smooth_bump(t) * 2.0 / m);
    }
    const double oracle = it.value() * ib.value();
    q.values = {{"lattice", lattice.value()}, {"oracle", oracle}};
    q.check("relative error", std::abs(lattice.value() - oracle) / oracle, Relation::LessEqual, tol("quadrature"));
}

struct TestFunction {
    std::string label;
    RealFunction f;
};

std::vector<TestFunction> frame_family() {
    const MotherWavelet& psi = make_mother_wavelet();
    return {
        {"gaussian", [](double x) { return gaussian(x, 0.0, 1.0); }},
        {"gaussian_shifted", [](double x) { return gaussian(x, 4.0, 0.5); }},
        {"bump", [](double x) { return smooth_bump(x); }},
        {"bump_shifted", [](double x) { return smooth_bump(x + 6.0); }},
        {"bump_wide", [](double x) { return smooth_bump((x - 3.0) / 4.0); }},
        {"psi(2,0)", [&psi](double x) { return psi(x / 2.0) / std::sqrt(2.0); }},
    };
}

struct FrameErrors {
    std::vector<double> parseval;
    std::vector<double> round_trip;
};

FrameErrors frame_errors(const SpatialGrid& grid, const FrameGridConfig& cfg) {
    const auto fg = make_frame_grid(cfg, grid);
    const AtomDictionary dict = wavelet_dictionary(fg);
    FrameErrors e;
    for (const TestFunction& t : frame_family()) {
        const SampledFunction f = SampledFunction::sample(grid, t.f);
        const CoefficientField c = dict.analyze(f);
        const double norm2 = f.norm() * f.norm();
        e.parseval.push_back(std::abs(c.energy() - norm2) / norm2);
        e.round_trip.push_back(relative_l2_error(dict.synthesize(c), f, grid.half_width()));
    }
    return e;
}

void Suite::run_frame() {
    const MotherWavelet& psi = make_mother_wavelet();
    {
        Record& r = add("frame", "mother_wavelet");
        const int m = 200000;
        CompensatedSum mean, l1;
        for (int k = 0; k < m; ++k) {
            const double x = -1.0 + (k + 0.5) * 2.0 / m;
            mean.add(psi(x) * 2.0 / m);
            l1.add(std::abs(psi(x)) * 2.0 / m);
        }
        r.values = {{"normalization", psi.normalization()}, {"raw_admissibility", psi.raw_admissibility()},
                    {"l2_norm", psi.l2_norm()},            {"derivative_bound", psi.derivative_bound()},
                    {"mean", mean.value()},                {"l1_norm", l1.value()}};
        r.check("|int psi| / |psi|_1", std::abs(mean.value()) / l1.value(), Relation::LessEqual, 1e-10);
        r.check("psi(+-1)", std::max(std::abs(psi(1.0)), std::abs(psi(-1.0))), Relation::LessEqual, 0.0);
        r.check("derivative bound finite", std::isfinite(psi.derivative_bound()) ? 0.0 : 1.0, Relation::LessEqual, 0.0);
    }
    const std::vector<TestFunction> family = frame_family();
    FrameGridConfig coarse = config.frame;
    coarse.scales_per_octave = std::max(1, coarse.scales_per_octave / 2);
    coarse.spacing *= 2.0;
    FrameGridConfig fine = config.frame.refined();
    fine.a_min /= 2.0;
    const SpatialGrid fine_grid(grid.half_width(), 2 * grid.size());
    const FrameErrors e0 = frame_errors(grid, coarse);
    const FrameErrors e1 = frame_errors(grid, config.frame);
    const FrameErrors e2 = frame_errors(fine_grid, fine);
    for (std::size_t k = 0; k < family.size(); ++k) {
        Record& r = add("frame", "parseval_round_trip", family[k].label);
        r.values = {{"parseval_error", e1.parseval[k]}, {"round_trip_error", e1.round_trip[k]}};
        r.check("Parseval relative error", e1.parseval[k], Relation::LessEqual, tol("parseval"));
        r.check("round-trip relative L2 error", e1.round_trip[k], Relation::LessEqual, tol("round_trip"));
    }
    {
        Record& r = add("frame", "refinement");
        const auto mx = [](const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); };
        r.context["levels"] = Json::array({
            {{"points", grid.size()}, {"scales_per_octave", coarse.scales_per_octave}, {"spacing", coarse.spacing}, {"a_min", coarse.a_min}},
            {{"points", grid.size()}, {"scales_per_octave", config.frame.scales_per_octave}, {"spacing", config.frame.spacing}, {"a_min", config.frame.a_min}},
            {{"points", fine_grid.size()}, {"scales_per_octave", fine.scales_per_octave}, {"spacing", fine.spacing}, {"a_min", fine.a_min}},
        });
        const double p0 = mx(e0.parseval), p1 = mx(e1.parseval), p2 = mx(e2.parseval);
        const double q0 = mx(e0.round_trip), q1 = mx(e1.round_trip), q2 = mx(e2.round_trip);
        r.values = {{"parseval_max", {p0, p1, p2}}, {"round_trip_max", {q0, q1, q2}}};
        r.check("Parseval level1/level0", p1 / p0, Relation::Less, 1.0);
        r.check("Parseval level2/level1", p2 / p1, Relation::Less, 1.0);
        r.check("round-trip level1/level0", q1 / q0, Relation::Less, 1.0);
        r.check("round-trip level2/level1", q2 / q1, Relation::Less, 1.0);
        Table t{"frame_refinement", {"level", "function", "parseval_error", "round_trip_error"}, {}};
        const FrameErrors* levels[3] = {&e0, &e1, &e2};
        for (int l = 0; l < 3; ++l)
            for (std::size_t k = 0; k < family.size(); ++k)
                t.rows.push_back({double(l), double(k), levels[l]->parseval[k], levels[l]->round_trip[k]});
        table(r, std::move(t));
    }
    {
        // U(2,1) f against f at the mapped nodes (a,b) -> (a/2, (b-1)/2).
        Record& r = add("frame", "covariance");
        const AtomDictionary& dict = wavelets();
        const SampledFunction f = SampledFunction::sample(grid, [](double x) { return gaussian(x, 0.0, 1.0); });
        const SampledFunction uf =
            SampledFunction::sample(grid, [](double x) { return gaussian((x - 1.0) / 2.0, 0.0, 1.0) / std::sqrt(2.0); });
        const CoefficientField cf = dict.analyze(f);
        const CoefficientField cu = dict.analyze(uf);
        CompensatedSum num, den;
        std::size_t used = 0;
        for (std::size_t n = 0; n < frame->size(); ++n) {
            const FrameNode& node = (*frame)[n];
            if (std::abs(node.b) + node.a > 0.5 * grid.half_width()) continue;
            const std::size_t m = frame->find(node.a / 2.0, (node.b - 1.0) / 2.0);
            if (m == FrameGrid::npos) continue;
            ++used;
            num.add(std::norm(cu[n] - cf[m]));
            den.add(std::norm(cu[n]));
        }
        const double err = std::sqrt(num.value() / den.value());
        r.values = {{"group_element", "(2,1)"}, {"nodes_compared", used}, {"relative_error", err}};
        r.check("covariance relative error", err, Relation::LessEqual, tol("covariance"));
    }
}

// ---------------------------------------------------------------------------

void Suite::run_operators() {
    std::mt19937_64 rng(seed(4));
    for (const std::string& label : config.operators) {
        const ModelOperator& model = find_model(label);
        const CZKernel& k = model.kernel;
        {
            Record& r = add("operators", "cz_conditions", label);
            const CZScanReport s = scan_cz_conditions(k, seed(40), 10000);
            r.values = {{"constant", k.constant}, {"delta", k.delta}, {"samples", s.samples},
                        {"size_ratio", s.size_ratio}, {"smoothness_ratio", s.smoothness_ratio},
                        {"description", model.description}};
            r.check("size ratio", s.size_ratio, Relation::LessEqual, 1.0 + 1e-12);
            r.check("smoothness ratio", s.smoothness_ratio, Relation::LessEqual, 1.0 + 1e-12);
            if (label.rfind("DampedHilbert", 0) == 0) {
                const CZScanReport s1 = scan_cz_conditions(k, seed(41), 10000, 1.0 / kPi);
                r.values["size_ratio_at_1/pi"] = s1.size_ratio;
                r.check("size ratio with C = 1/pi", s1.size_ratio, Relation::LessEqual, 1.0 + 1e-12);
            }
        }
        const DiscreteOperator T(k, grid);
        if (label == "Hilbert") {
            Record& r = add("operators", "pv_accuracy", label);
            const SampledFunction f = SampledFunction::sample(grid, [](double y) { return 1.0 / (1.0 + y * y); });
            const SampledFunction exact = SampledFunction::sample(grid, [](double x) { return x / (1.0 + x * x); });
            const SampledFunction hf = T.apply(f);
            const double err = relative_l2_error(hf, exact, 0.5 * grid.half_width());
            const SampledFunction even = SampledFunction::sample(grid, [](double y) { return gaussian(y, 0.0, 1.5); });
            const SampledFunction he = T.apply(even);
            double parity = 0.0;
            for (std::size_t i = 0; i < grid.size(); ++i)
                parity = std::max(parity, std::abs(he[i] + he[grid.size() - 1 - i]));
            r.values = {{"window", 0.5 * grid.half_width()}, {"relative_error", err}, {"parity_defect", parity}};
            r.check("H[1/(1+y^2)] vs x/(1+x^2)", err, Relation::LessEqual, tol("pv_hilbert"));
            r.check("even to odd defect", parity, Relation::LessEqual, tol("parity"));
        }
        if (label == "FiniteRank") {
            Record& r = add("operators", "separable_apply", label);
            const SampledFunction f = SampledFunction::sample(grid, [](double y) { return gaussian(y, 0.3, 0.7); });
            const SampledFunction v = SampledFunction::sample(grid, finite_rank_v);
            const SampledFunction u = SampledFunction::sample(grid, finite_rank_u);
            const Complex iv = inner_product(f, v);
            const double err = relative_difference(T.apply(f), iv * u);
            r.values = {{"relative_error", err}};
            r.check("T f vs (int v f) u", err, Relation::LessEqual, tol("t1_separable"));
        }
        {
            Record& r = add("operators", "t1", label);
            const double window = 2.0 * grid.half_width();
            r.context["window"] = window;
            try {
                const T1Result t1 = compute_T1(k, grid, window, tol("t1_tail"));
                const T1Result t1s = compute_T1star(k, grid, window, tol("t1_tail"));
                t1_tail[label] = std::max(t1.tail_bound, t1s.tail_bound);
                r.values = {{"window", window}, {"tail_bound", t1.tail_bound}, {"tail_bound_star", t1s.tail_bound},
                            {"sup_T1", max_abs(t1.values)}, {"sup_T1star", max_abs(t1s.values)}};
                r.check("tail bound", t1.tail_bound, Relation::LessEqual, tol("t1_tail"));
                if (k.exact_cancellation) {
                    r.check("sup |T1|", max_abs(t1.values), Relation::LessEqual, tol("t1_cancellation"));
                    r.check("sup |T*1|", max_abs(t1s.values), Relation::LessEqual, tol("t1_cancellation"));
                } else if (label == "FiniteRank") {
                    CompensatedSum iv;
                    for (std::size_t i = 0; i < grid.size(); ++i) iv.add(finite_rank_v(grid.node(i)) * grid.spacing());
                    const SampledFunction ref = iv.value() * SampledFunction::sample(grid, finite_rank_u);
                    r.check("T1 vs (int v) u", relative_difference(t1.values, ref), Relation::LessEqual, tol("t1_separable"));
                } else if (k.antisymmetric) {
                    double odd = 0.0;
                    for (std::size_t i = 0; i < grid.size(); ++i)
                        odd = std::max(odd, std::abs(t1.values[i] + t1.values[grid.size() - 1 - i]));
                    r.values["odd_defect"] = odd;
                    r.check("T1 odd symmetry defect", odd, Relation::LessEqual, tol("t1_cancellation"));
                }
                Table t{"t1_" + label, {"x", "T1", "T1star"}, {}};
                for (std::size_t i = 0; i < grid.size(); ++i)
                    t.rows.push_back({grid.node(i), t1.values[i].real(), t1s.values[i].real()});
                table(r, std::move(t));
            } catch (const TruncationError& e) {
                r.values["error"] = e.what();
                r.check("T1 computable", 1.0, Relation::LessEqual, 0.0);
            }
        }
        {
            Record& r = add("operators", "conjugation", label);
            std::uniform_real_distribution<double> ux(-5.0, 5.0);
            std::uniform_real_distribution<double> loga(-2.0, 2.0);
            const CZKernel same = conjugate(k, GroupPoint(1.0, 0.0));
            double identity_defect = 0.0, invariance = 0.0;
            for (int s = 0; s < 1000; ++s) {
                const double x = ux(rng), y = ux(rng);
                if (x == y) continue;
                identity_defect = std::max(identity_defect, std::abs(same(x, y) - k(x, y)));
                const CZKernel c = conjugate(k, GroupPoint(std::exp(loga(rng)), ux(rng)));
                invariance = std::max(invariance, std::abs(c(x, y) - k(x, y)) / std::max(std::abs(k(x, y)), 1e-300));
            }
            r.values = {{"identity_defect", identity_defect}, {"invariance_defect", invariance}};
            r.check("conjugate by (1,0)", identity_defect, Relation::LessEqual, 0.0);
            if (k.invariant && !k.exact_cancellation) {
            } else if (k.invariant) {
                r.check("conjugation invariance", invariance, Relation::LessEqual, 1e-12);
            }
            if (label == "DampedHilbert_1") {
                const double v = conjugate(k, GroupPoint(2.0, 0.0))(1.0, 0.0);
                const double expected = 1.0 / (kPi * std::sqrt(5.0));
                r.values["conjugated_(2,0)_at_(1,0)"] = v;
                r.check("(2,0) conjugate at (1,0) vs 1/(pi sqrt 5)", std::abs(v - expected) / expected, Relation::LessEqual,
                        1e-12);
            }
        }
        {
            Record& r = add("operators", "adjoint_consistency", label);
            const SampledFunction f = SampledFunction::sample(grid, [](double y) { return smooth_bump((y - 0.3) / 1.5); });
            const SampledFunction g = SampledFunction::sample(grid, [](double y) { return smooth_bump((y + 0.4) / 1.2); });
            const Complex lhs = inner_product(T.apply(f), g);
            const Complex rhs = inner_product(f, apply(transpose(k), g));
            const double scale = std::max(std::abs(lhs), 1e-300);
            r.values = {{"Tf_g", lhs.real()}, {"f_Ttilde_g", rhs.real()}};
            r.check("relative difference", std::abs(lhs - rhs) / scale, Relation::LessEqual, tol("adjoint"), lhs == Complex{});
        }
    }
}

// ---------------------------------------------------------------------------

void Suite::run_localization() {
    const AtomDictionary& dict = wavelets();
    std::mt19937_64 rng(seed(5));
    for (const std::string& label : config.operators) {
        const CZKernel& k = find_model(label).kernel;
        const DiscreteOperator T(k, grid);
        if (k.exact_cancellation) {
            Record& r = add("localization", "decay", label);
            const MatrixCoefficient self = matrix_coefficient(T, GroupPoint(1, 0), GroupPoint(1, 0));
            const DecayReport d0 = verify_decay(T, dict);
            r.values = {{"self_coefficient", std::abs(self.value)}, {"fitted_constant", d0.fitted_constant}};
            r.check("|<T psi, psi>|", std::abs(self.value), Relation::LessEqual, tol("self_coefficient"));
            if (label == "Zero") {
                r.check("fitted C", d0.fitted_constant, Relation::LessEqual, 0.0);
            } else {
                const FrameGrid& fg = *frame;
                r.values["argmax"] = {fg[d0.argmax].a, fg[d0.argmax].b};
                // one refinement: scales per octave and translation density doubled, N doubled
                const SpatialGrid g2(grid.half_width(), 2 * grid.size());
                FrameGridConfig c2 = config.frame.refined();
                c2.a_min /= 2.0;
                const auto fg2 = make_frame_grid(c2, g2);
                const AtomDictionary dict2 = wavelet_dictionary(fg2);
                const DecayReport d1 = verify_decay(DiscreteOperator(k, g2), dict2);
                r.values["refined_fitted_constant"] = d1.fitted_constant;
                r.values["refined_lattice"] = fg2->describe();
                r.check("fitted C finite", std::isfinite(d0.fitted_constant) ? 0.0 : 1.0, Relation::LessEqual, 0.0);
                r.check("|C_refined / C - 1|", std::abs(d1.fitted_constant / d0.fitted_constant - 1.0), Relation::LessEqual,
                        tol("decay_stability"));
                const std::size_t n8 = fg.find(8.0, 0.0);
                if (n8 != FrameGrid::npos) {
                    const DecayBound b{1, 1.0, d0.fitted_constant};
                    r.values["coefficient_(8,0)"] = d0.coefficients[n8];
                    r.check("|coeff(8,0)| / (C bound(8,0))", d0.coefficients[n8] / lemma_bound(b, 8.0, 0.0),
                            Relation::LessEqual, 1.0);
                }
                Table t{"decay_histogram_" + label, {"log10_ratio_bin_low", "count"}, {}};
                for (std::size_t b = 0; b < d0.histogram.size(); ++b)
                    t.rows.push_back({-10.0 + static_cast<double>(b), d0.histogram[b]});
                table(r, std::move(t));
            }
        }
        if (label == "Hilbert") {
            // direct double sum vs PV apply on separated node pairs
            // scales a = 2^{k/4} in [1, 4], where atoms span at least 32 cells
            Record& r = add("localization", "dual_path", label);
            std::uniform_real_distribution<double> loga(0.0, 2.0);
            std::uniform_real_distribution<double> ub(-12.0, 12.0);
            double worst = 0.0;
            int pairs = 0;
            while (pairs < 32) {
                const GroupPoint s(std::exp2(std::round(4.0 * loga(rng)) / 4.0), std::round(8.0 * ub(rng)) / 8.0);
                const GroupPoint t(std::exp2(std::round(4.0 * loga(rng)) / 4.0), std::round(8.0 * ub(rng)) / 8.0);
                if (std::abs(s.b() - t.b()) < s.a() + t.a() + 2.0 * grid.spacing()) continue;
                const Complex d = matrix_coefficient_direct(T, s, t);
                const Complex a = matrix_coefficient_apply(T, s, t);
                worst = std::max(worst, std::abs(d - a) / std::max(std::abs(d), 1e-12));
                ++pairs;
            }
            const double fixed = std::abs(matrix_coefficient_direct(T, GroupPoint(1, 0), GroupPoint(1, 8)) -
                                          matrix_coefficient_apply(T, GroupPoint(1, 0), GroupPoint(1, 8)));
            r.context["scales"] = {1.0, 4.0};
            r.values = {{"pairs", pairs}, {"max_relative_difference", worst}, {"difference_(1,0)_(1,8)", fixed}};
            r.check("max relative difference", worst, Relation::LessEqual, tol("dual_path"));
            r.check("(1,0) vs (1,8) difference", fixed, Relation::LessEqual, 1e-6);
        }
        if (!k.invariant) {
            Record& r = add("localization", "conjugation_covariance", label);
            const std::vector<std::pair<GroupPoint, GroupPoint>> pairs{
                {GroupPoint(2, 1), GroupPoint(2, 3)},     {GroupPoint(2, 1), GroupPoint(1, 1)},
                {GroupPoint(2, 1), GroupPoint(4, 0)},     {GroupPoint(0.5, -1), GroupPoint(0.5, 0)},
                {GroupPoint(0.5, -1), GroupPoint(1, -1)}, {GroupPoint(1, 2), GroupPoint(1, 0)},
            };
            double worst = 0.0;
            for (const auto& [src, dst] : pairs) {
                const Complex lhs = matrix_coefficient(T, src, dst).value;
                const DiscreteOperator Tc(conjugate(k, src), grid);
                const Complex rhs = matrix_coefficient(Tc, GroupPoint(1, 0), src.inverse() * dst).value;
                const double scale = std::max(std::abs(lhs), 1e-3 * k.constant);
                worst = std::max(worst, std::abs(lhs - rhs) / scale);
            }
            r.values = {{"pairs", pairs.size()}, {"max_relative_difference", worst}};
            r.check("<T psi_g', psi_g> vs <T_g' psi, psi_{g'^-1 g}>", worst, Relation::LessEqual, tol("conjugation"));
        }
        {
            Record& r = add("localization", "schur", label);
            const std::vector<GroupPoint> anchors = default_anchor_lattice();
            const std::vector<double>& rr = radii("schur");
            const SchurProfile p = schur_profile(k, dict, anchors, rr);
            r.context["anchors"] = anchors.size();
            r.values = {{"radii", rr}, {"values", p.values}};
            r.check("finite", std::isfinite(p.values.front()) ? 0.0 : 1.0, Relation::LessEqual, 0.0);
            r.check("non-increasing in R", non_increasing(p.values) ? 0.0 : 1.0, Relation::LessEqual, 0.0);
            if (k.invariant) {
                const double v0 = schur_value(k, dict, GroupPoint(1, 0));
                const double v1 = schur_value(k, dict, GroupPoint(2, 0));
                const double v2 = schur_value(k, dict, GroupPoint(1, 5));
                const double spread = std::max({v0, v1, v2}) - std::min({v0, v1, v2});
                r.values["anchor_values"] = {v0, v1, v2};
                if (label == "Zero") {
                    r.check("schur value", v0, Relation::LessEqual, 0.0);
                } else {
                    r.check("anchor spread / value", spread / v0, Relation::LessEqual, tol("schur_anchor"));
                    r.check("|profile(0) - value| / value", std::abs(p.values.front() - v0) / v0, Relation::LessEqual,
                            tol("schur_anchor"));
                    const auto at = [&](double R) {
                        const auto it = std::find(rr.begin(), rr.end(), R);
                        return it == rr.end() ? std::nan("") : p.values[static_cast<std::size_t>(it - rr.begin())];
                    };
                    if (!std::isnan(at(1.0)) && !std::isnan(at(6.0)))
                        r.check("tail(1) / tail(6)", at(1.0) / at(6.0), Relation::GreaterEqual, tol("schur_tail_factor"));
                    if (!std::isnan(at(1.0)) && !std::isnan(at(4.0)))
                        r.check("tail(4) - tail(1)", at(4.0) - at(1.0), Relation::Less, 0.0);
                }
            }
            Table t{"schur_" + label, {"R", "tail", "anchor_index"}, {}};
            for (std::size_t i = 0; i < rr.size(); ++i) t.rows.push_back({rr[i], p.values[i], double(p.argmax[i])});
            table(r, std::move(t));
        }
        {
            Record& r = add("localization", "origin_tail", label);
            const std::vector<double>& rr = radii("origin");
            const SchurProfile p = origin_tail_profile(T, dict, default_anchor_lattice(), rr);
            r.values = {{"radii", rr}, {"values", p.values}};
            r.check("non-increasing in R", non_increasing(p.values) ? 0.0 : 1.0, Relation::LessEqual, 0.0);
            if (label == "Hilbert")
                r.check("tail(R_max) / tail(0)", p.values.back() / p.values.front(), Relation::Greater, tol("origin_persist"));
            if (label == "FiniteRank")
                r.check("tail(R_max)", p.values.back(), Relation::Less, tol("origin_vanish"));
            if (label == "Zero") r.check("tail(0)", p.values.front(), Relation::LessEqual, 0.0);
            Table t{"origin_tail_" + label, {"R", "tail", "anchor_index"}, {}};
            for (std::size_t i = 0; i < rr.size(); ++i) t.rows.push_back({rr[i], p.values[i], double(p.argmax[i])});
            table(r, std::move(t));
        }
        {
            Record& r = add("localization", "weak_profile", label);
            const std::vector<double>& rr = radii("weak");
            const WeakProfile w = weak_compactness_profile(T, *frame, default_test_bundle(), rr, 0.5);
            r.context["bin_width"] = w.bin_width;
            r.values = {{"radii", rr}, {"values", w.values}};
            std::vector<double> populated;
            for (std::size_t i = 0; i < w.values.size(); ++i)
                if (w.counts[i] > 0) populated.push_back(w.values[i]);
            if (label == "Hilbert" && !populated.empty()) {
                const auto [lo, hi] = std::minmax_element(populated.begin(), populated.end());
                r.check("relative spread", (*hi - *lo) / *hi, Relation::LessEqual, tol("weak_constant"));
            }
            if (label == "FiniteRank" && !populated.empty())
                r.check("value at the last populated bin", populated.back(), Relation::Less, tol("weak_decay"));
            if (label == "Zero")
                r.check("max value", *std::max_element(w.values.begin(), w.values.end()), Relation::LessEqual, 0.0);
            Table t{"weak_profile_" + label, {"R", "value", "nodes"}, {}};
            for (std::size_t i = 0; i < rr.size(); ++i) t.rows.push_back({rr[i], w.values[i], double(w.counts[i])});
            table(r, std::move(t));
        }
        note("  localization " + label + " done");
    }
}

// ---------------------------------------------------------------------------

void Suite::run_compactness() {
    const AtomDictionary& dict = wavelets();
    PowerIterationOptions options;
    options.tolerance = tol("power_tolerance");
    options.seed = seed(6);
    for (const std::string& label : config.operators) {
        const CZKernel& k = find_model(label).kernel;
        const DiscreteOperator T(k, grid);
        const std::vector<double> sigma = singular_spectrum(T.matrix(), 64);
        {
            Record& r = add("compactness", "rk_tail", label);
            const std::vector<double>& rr = radii("rk_tail");
            const TailProfile p = rk_tail_profile(T, dict, rr, options, tol("rk_vanish"), tol("rk_persist"));
            r.context["power_iteration"] = {{"tolerance", options.tolerance}, {"max_iterations", options.max_iterations}};
            r.values = {{"radii", rr}, {"values", p.values}, {"ratio", p.ratio}, {"verdict", to_string(p.verdict)},
                        {"sigma_1", sigma.front()}};
            r.check("non-increasing in R", non_increasing(p.values) ? 0.0 : 1.0, Relation::LessEqual, 0.0);
            r.check("rk_tail(0) / (1.02 sigma_1^2)", p.values.front() / (1.02 * sigma.front() * sigma.front() + 1e-300),
                    Relation::LessEqual, 1.0 + tol("frame_energy"));
            if (label == "FiniteRank") r.check("ratio", p.ratio, Relation::Less, tol("rk_vanish"));
            if (label == "Hilbert") r.check("ratio", p.ratio, Relation::Greater, tol("rk_persist"));
            if (label == "Zero") r.check("rk_tail(0)", p.values.front(), Relation::LessEqual, 0.0);
            if (label.rfind("DampedHilbert", 0) == 0) r.check("ratio", p.ratio, Relation::Less, tol("rk_vanish"), true);
            Table t{"rk_tail_" + label, {"R", "value", "iterations", "converged"}, {}};
            for (std::size_t i = 0; i < rr.size(); ++i)
                t.rows.push_back({rr[i], p.values[i], double(p.iterations[i]), p.converged[i] ? 1.0 : 0.0});
            table(r, std::move(t));
            if (p.values.front() > 0.0) {
                Table w{"rk_witness_" + label, {"x", "re", "im"}, {}};
                for (std::size_t i = 0; i < grid.size(); ++i)
                    w.rows.push_back({grid.node(i), p.witness[i].real(), p.witness[i].imag()});
                table(r, std::move(w));
            }
        }
        {
            Record& r = add("compactness", "spectrum", label);
            r.values = {{"sigma_1", sigma.front()}, {"count", sigma.size()}};
            if (label == "FiniteRank") {
                const auto above = std::count_if(sigma.begin(), sigma.end(), [&](double s) { return s > 1e-10 * sigma.front(); });
                r.values["above_1e-10_sigma_1"] = above;
                r.check("singular values above 1e-10 sigma_1", double(above), Relation::LessEqual, 1.0);
                r.check("sigma_1", sigma.front(), Relation::Greater, 0.0);
            }
            if (label == "Hilbert") {
                const auto flat = std::count_if(sigma.begin(), sigma.end(), [](double s) { return s >= 0.8 && s <= 1.05; });
                r.values["fraction_in_[0.8,1.05]"] = double(flat) / double(sigma.size());
                r.check("fraction of top-64 in [0.8, 1.05]", double(flat) / double(sigma.size()), Relation::GreaterEqual, 0.5);
            }
            if (label == "Zero") r.check("sigma_1", sigma.front(), Relation::LessEqual, 0.0);
            Table t{"spectrum_" + label, {"index", "sigma"}, {}};
            for (std::size_t i = 0; i < sigma.size(); ++i) t.rows.push_back({double(i + 1), sigma[i]});
            table(r, std::move(t));
        }
        if (label == "DampedHilbert_1") {
            // same spacing, box half-width L/2, L, 2L
            Record& r = add("compactness", "spectrum_domain_sweep", label);
            std::vector<double> ratios;
            Json levels = Json::array();
            for (double scale : {0.5, 1.0, 2.0}) {
                const SpatialGrid g(grid.half_width() * scale, static_cast<std::size_t>(double(grid.size()) * scale));
                const std::vector<double> s = singular_spectrum(DiscreteOperator(k, g).matrix(), 32);
                ratios.push_back(s.back() / s.front());
                levels.push_back({{"half_width", g.half_width()}, {"points", g.size()}, {"sigma_1", s.front()},
                                  {"sigma_32", s.back()}});
            }
            r.context["levels"] = levels;
            r.values = {{"sigma32_over_sigma1", ratios}};
            r.check("sigma_32/sigma_1 at 2L", ratios.back(), Relation::Less, 0.5, true);
            r.check("ratio(2L) - ratio(L)", ratios[2] - ratios[1], Relation::Less, 0.0, true);
            r.check("ratio(L) - ratio(L/2)", ratios[1] - ratios[0], Relation::Less, 0.0, true);
        }
        note("  compactness " + label + " done");
    }
    {
        // power iteration against dense SVD on a downsampled instance
        Record& r = add("compactness", "power_vs_dense");
        const SpatialGrid small(grid.half_width() / 8.0, grid.size() / 8);
        FrameGridConfig c = config.frame;
        c.a_max = std::min(c.a_max, 2.0 * small.half_width());
        c.half_width_b = small.half_width();
        c.a_min = std::max(c.a_min, 2.0 * small.spacing());
        const auto fs = make_frame_grid(c, small);
        const AtomDictionary ds = wavelet_dictionary(fs);
        PowerIterationOptions deep = options;
        deep.max_iterations = 20000;
        r.context = {{"grid", grid_json(small)}, {"lattice", fs->describe()}};
        r.context["power_iteration"] = {{"tolerance", deep.tolerance}, {"max_iterations", deep.max_iterations}};
        Table t{"power_vs_dense", {"operator_index", "R", "power", "dense", "relative_difference", "iterations"}, {}};
        double worst = 0.0;
        for (std::size_t oi = 0; oi < config.operators.size(); ++oi) {
            const std::string& label = config.operators[oi];
            if (label == "Zero") continue;
            const DiscreteOperator T(find_model(label).kernel, small);
            for (double R : {0.0, 2.0}) {
                const TailResult p = rk_tail(T, ds, R, deep);
                const double d = rk_tail_dense(T, ds, R);
                const double rel = std::abs(p.value - d) / d;
                worst = std::max(worst, rel);
                t.rows.push_back({double(oi), R, p.value, d, rel, double(p.iterations)});
            }
        }
        r.values = {{"max_relative_difference", worst}};
        r.check("max relative difference", worst, Relation::LessEqual, tol("rk_dense"));
        table(r, std::move(t));
    }
}

// ---------------------------------------------------------------------------

void Suite::run_carleson() {
    const AtomDictionary& dict = wavelets();
    const std::vector<double>& rr = radii("carleson");
    {
        Record& r = add("carleson", "carleson_function", "constant");
        const CoefficientField c = dict.analyze(ClosedForm{"1", [](double) { return 1.0; }});
        const double v = carleson_function(CoefficientMeasure::from_coefficients(c), 0.0);
        r.values = {{"C_mu(0)", v}};
        r.check("C mu(0)", v, Relation::LessEqual, tol("carleson_constant"));
    }
    const SampledFunction psi_f = make_mother_wavelet().sampled(grid);
    const CoefficientMeasure mu_psi = CoefficientMeasure::from_coefficients(dict.analyze(psi_f));
    {
        Record& r = add("carleson", "carleson_function", "psi");
        const TentTable tt(mu_psi);
        Table t{"carleson_function_psi", {"x", "C_mu"}, {}};
        std::vector<double> outer;
        for (double x = 0.0; x <= 16.0 + 1e-12; x += 0.5) {
            const double v = tt.carleson(x);
            t.rows.push_back({x, v});
            if (x >= 4.0) outer.push_back(v);
        }
        r.values = {{"C_mu(0)", t.rows.front()[1]}, {"C_mu(4)", outer.front()}, {"C_mu(16)", outer.back()}};
        r.check("C mu(0)", t.rows.front()[1], Relation::Greater, 0.0);
        r.check("non-increasing for x >= 4", non_increasing(outer) ? 0.0 : 1.0, Relation::LessEqual, 0.0);
        r.check("C mu(16) / C mu(4)", outer.back() / outer.front(), Relation::Less, 0.5);
        table(r, std::move(t));
        // adding mass never decreases C mu
        std::vector<double> masses = mu_psi.masses();
        masses[frame->find(2.0, 4.0)] += 0.5;
        const TentTable more(CoefficientMeasure(frame, masses));
        int violations = 0;
        for (double x = -8.0; x <= 8.0; x += 0.25)
            if (more.carleson(x) < tt.carleson(x)) ++violations;
        r.values["monotonicity_violations"] = violations;
        r.check("monotone in mu", violations, Relation::LessEqual, 0.0);
    }
    {
        Record& r = add("carleson", "carleson_function", "unit_mass_(1,0)");
        const double v = carleson_function(CoefficientMeasure::point_mass(frame, frame->find(1.0, 0.0), 1.0), 0.0);
        const double lattice = 1.0 / (2.0 * std::exp2(1.0 / frame->config().scales_per_octave));
        r.values = {{"C_mu(0)", v}, {"lattice_value", lattice}, {"continuum_limit", 0.5}};
        r.check("|C mu(0) - 1/(2 a_next)|", std::abs(v - lattice), Relation::LessEqual, 1e-12);
    }
    for (const BMOExample& ex : bmo_examples(grid.spacing())) {
        Record& r = add("carleson", "vanishing_profile", ex.label);
        r.context["function"] = ex.function.label;
        r.context["expected"] = to_string(ex.expected);
        const CoefficientMeasure mu = CoefficientMeasure::from_coefficients(dict.analyze(ex.function));
        const VanishingProfile p = vanishing_profile(mu, rr);
        r.values = {{"radii", rr}, {"values", p.values}, {"ratio", p.ratio}, {"total_mass", mu.total()},
                    {"dyadic_bmo_estimate", dyadic_bmo_estimate(ex.function, 16.0, -3, 4)}};
        r.check("non-increasing in R", non_increasing(p.values) ? 0.0 : 1.0, Relation::LessEqual, 0.0);
        if (ex.label == "zero") r.check("max value", p.values.front(), Relation::LessEqual, 0.0);
        if (ex.expected == BMOClass::CMO)
            r.check("profile(R_max) / max(profile(0), 1e-12)", p.values.back() / std::max(p.values.front(), 1e-12),
                    Relation::Less, tol("carleson_cmo_all"));
        if (ex.label == "bump") r.check("ratio", p.ratio, Relation::Less, tol("carleson_cmo"));
        if (ex.expected == BMOClass::BMONotCMO) {
            r.check("ratio", p.ratio, Relation::Greater, tol("carleson_bmo"));
            const auto axis = axis_profile(mu);
            double axis_min = std::numeric_limits<double>::infinity();
            for (const auto& [a, v] : axis)
                if (a >= 1.0) axis_min = std::min(axis_min, v);
            r.values["axis_min_a>=1"] = axis_min;
            r.check("min over (a,0), a >= 1 / profile(0)", axis_min / p.values.front(), Relation::Greater, tol("carleson_bmo"));
            Table at{"carleson_axis_" + ex.label, {"a", "tent_ratio"}, {}};
            for (const auto& [a, v] : axis) at.rows.push_back({a, v});
            table(r, std::move(at));
        }
        if (ex.label == "bump" || ex.label == "gaussian") {
            const int m = 400000;
            CompensatedSum n2;
            for (int i = 0; i < m; ++i) {
                const double x = -12.0 + (i + 0.5) * 24.0 / m;
                const double v = ex.function.eval(x);
                n2.add(v * v * 24.0 / m);
            }
            r.values["norm_squared"] = n2.value();
            r.check("total mass / |f|^2", mu.total() / n2.value(), Relation::LessEqual, 1.0 + tol("carleson_mass"));
        }
        Table t{"vanishing_profile_" + ex.label, {"R", "value"}, {}};
        for (std::size_t i = 0; i < rr.size(); ++i) t.rows.push_back({rr[i], p.values[i]});
        table(r, std::move(t));
    }
    const AtomDictionary phi2 = phi_l2_dictionary(frame);
    {
        Record& r = add("carleson", "nontangential_max");
        const CoefficientField zero = phi2.analyze(SampledFunction(grid));
        const SampledFunction phi10 = dilate(bump_phi().profile(), GroupPoint(1, 0), 0.5, grid);
        const double m0 = nontangential_max(phi2.analyze(phi10), 0.0);
        const double phi_norm2 = phi10.norm() * phi10.norm();
        const SampledFunction f = SampledFunction::sample(grid, [](double x) { return gaussian(x, 0.0, 1.0); });
        const SampledFunction ft = SampledFunction::sample(grid, [](double x) { return gaussian(x, 2.0, 1.0); });
        const CoefficientField cf = phi2.analyze(f);
        const CoefficientField ct = phi2.analyze(ft);
        double worst = 0.0, peak = 0.0;
        for (double x = -8.0; x <= 8.0; x += 0.25) {
            const double a = nontangential_max(cf, x);
            const double b = nontangential_max(ct, x + 2.0);
            peak = std::max(peak, a);
            worst = std::max(worst, std::abs(a - b));
        }
        r.values = {{"M0", nontangential_max(zero, 0.0)}, {"M_phi(0)", m0}, {"phi_norm_squared", phi_norm2},
                    {"translation_defect", worst / peak}};
        r.check("M of zero", nontangential_max(zero, 0.0), Relation::LessEqual, 0.0);
        r.check("M phi(0) - |phi|^2", m0 - phi_norm2, Relation::GreaterEqual, -1e-12);
        r.check("translation covariance", worst / peak, Relation::LessEqual, tol("maximal_covariance"), true);
    }
    {
        const double slack = tol("stein_slack");
        const auto stein_record = [&](const std::string& subject, const CoefficientField& c, const CoefficientMeasure& mu,
                                      double p) {
            Record& r = add("carleson", "stein_check", subject);
            const SteinCheck s = stein_inequality_check(c, mu, p, slack);
            r.values = {{"p", p}, {"lhs", s.lhs}, {"rhs", s.rhs}, {"ratio", s.ratio}};
            r.check("inequality holds (ratio <= slack)", s.passed ? 0.0 : 1.0, Relation::LessEqual, 0.0);
            r.check("ratio", s.ratio, Relation::LessEqual, slack);
        };
        const SampledFunction g = SampledFunction::sample(grid, [](double x) { return gaussian(x, 0.0, 1.0); });
        const SampledFunction b = SampledFunction::sample(grid, [](double x) { return smooth_bump(x - 3.0); });
        const CoefficientField cg = phi2.analyze(g);
        const CoefficientField cb = phi2.analyze(b);
        stein_record("zero_measure", cg, CoefficientMeasure(frame, std::vector<double>(frame->size(), 0.0)), 2.0);
        stein_record("gaussian_vs_mu_psi_p2", cg, mu_psi, 2.0);
        stein_record("gaussian_vs_mu_psi_p1", cg, mu_psi, 1.0);
        const CoefficientMeasure single = CoefficientMeasure::point_mass(frame, frame->find(2.0, 2.0), 1.0);
        stein_record("shifted_bump_vs_node_(2,2)_p2", cb, single, 2.0);
        stein_record("shifted_bump_vs_node_(2,2)_p1", cb, single, 1.0);
    }
}

// ---------------------------------------------------------------------------

void Suite::run_paraproduct() {
    wavelets();
    bumps();
    const BumpPhi& phi_fn = bump_phi();
    {
        Record& r = add("paraproduct", "bump_phi");
        const int m = 400000;
        CompensatedSum mass;
        double plateau = 0.0, outside = 0.0, increase = 0.0, prev = 1.0;
        for (int i = 0; i < m; ++i) {
            const double x = -1.5 + (i + 0.5) * 3.0 / m;
            mass.add(phi_fn(x) * 3.0 / m);
            if (std::abs(x) <= 0.5) plateau = std::max(plateau, std::abs(phi_fn(x) - 1.0));
            if (std::abs(x) >= 1.0) outside = std::max(outside, std::abs(phi_fn(x)));
            if (x >= 0.0) {
                increase = std::max(increase, phi_fn(x) - prev);
                prev = phi_fn(x);
            }
        }
        r.values = {{"m_phi", phi_fn.mass()}, {"m_phi_quadrature", mass.value()}};
        r.check("|m_phi - quadrature|", std::abs(phi_fn.mass() - mass.value()), Relation::LessEqual, 1e-9);
        r.check("m_phi >= 1", phi_fn.mass(), Relation::GreaterEqual, 1.0);
        r.check("m_phi <= 2", phi_fn.mass(), Relation::LessEqual, 2.0);
        r.check("plateau defect", plateau, Relation::LessEqual, 0.0);
        r.check("outside support", outside, Relation::LessEqual, 0.0);
        r.check("increase in |x|", increase, Relation::LessEqual, 0.0);
    }
    const ClosedForm one{"1", [](double) { return 1.0; }};
    const ClosedForm bump{"bump", [](double x) { return smooth_bump(x); }};
    std::mt19937_64 rng(seed(8));
    {
        Record& r = add("paraproduct", "identities", "bump");
        const ParaproductSymbol sym = ParaproductSymbol::from_closed_form(bump, *psi);
        const Paraproduct P(psi, phi, sym);
        const SampledFunction beta = SampledFunction::sample(grid, bump.eval);
        const SampledFunction p1 = P.apply(one);
        const double m = phi_fn.mass();
        const double err = relative_l2_error(p1, m * beta, grid.half_width());
        const double err_rt = relative_l2_error(p1, m * psi->synthesize(sym.coefficients), grid.half_width());
        const double adj1 = max_abs(P.adjoint(one));
        double pairing = 0.0, adjointness = 0.0;
        for (int s = 0; s < 8; ++s) {
            const SampledFunction f = random_function(rng);
            const SampledFunction g = random_function(rng);
            const Complex a = inner_product(P.apply(f), g);
            const Complex b = P.pairing(f, g);
            const Complex c = inner_product(f, P.adjoint(g));
            const double scale = std::max(P.apply(f).norm() * g.norm(), 1e-300);
            pairing = std::max(pairing, std::abs(a - b) / scale);
            adjointness = std::max(adjointness, std::abs(a - c) / scale);
        }
        const CoefficientField fresh = psi->analyze(bump);
        double cache = 0.0;
        for (std::size_t n = 0; n < fresh.size(); ++n) cache = std::max(cache, std::abs(fresh[n] - sym.coefficients[n]));
        const SampledFunction f = random_function(rng);
        const ClosedForm gauss{"gaussian", [](double x) { return gaussian(x, 1.0, 2.0); }};
        ParaproductSymbol sum = ParaproductSymbol::from_closed_form(gauss, *psi);
        const Paraproduct Pg(psi, phi, sum);
        for (std::size_t n = 0; n < sum.coefficients.size(); ++n) sum.coefficients[n] += sym.coefficients[n];
        const Paraproduct Ps(psi, phi, sum);
        SampledFunction split = P.apply(f);
        split += Pg.apply(f);
        const double linearity = relative_difference(Ps.apply(f), split);
        const Paraproduct P0(psi, phi, ParaproductSymbol::zero(*psi));
        const double zero = max_abs(P0.apply(f)) + max_abs(P0.adjoint(f));
        r.values = {{"m_phi", m},           {"P1_vs_m_beta", err},      {"P1_vs_m_roundtrip", err_rt},
                    {"sup_Pstar1", adj1},   {"pairing", pairing},       {"adjointness", adjointness},
                    {"cache", cache},       {"linearity", linearity},   {"zero_symbol", zero}};
        r.check("P_beta 1 vs m_phi beta", err, Relation::LessEqual, tol("paraproduct_one"));
        r.check("sup |P*_beta 1|", adj1, Relation::LessEqual, tol("paraproduct_adjoint_one"));
        r.check("assembled vs triple-sum pairing", pairing, Relation::LessEqual, tol("paraproduct_pairing"));
        r.check("<Pf,g> vs <f,P*g>", adjointness, Relation::LessEqual, tol("paraproduct_adjointness"));
        r.check("symbol cache coherence", cache, Relation::LessEqual, tol("paraproduct_cache"));
        r.check("symbol linearity", linearity, Relation::LessEqual, 1e-12);
        r.check("zero symbol", zero, Relation::LessEqual, 0.0);
    }
    PowerIterationOptions options;
    options.tolerance = tol("power_tolerance");
    options.seed = seed(9);
    const std::vector<double>& rr = radii("paraproduct");
    for (const BMOExample& ex : bmo_examples(grid.spacing())) {
        Record& r = add("paraproduct", "compactness", ex.label);
        r.context["symbol"] = ex.function.label;
        r.context["expected"] = to_string(ex.expected);
        const Paraproduct P(psi, phi, ParaproductSymbol::from_closed_form(ex.function, *psi));
        const TailProfile p = rk_tail_profile(P, *psi, rr, options, tol("paraproduct_cmo"), tol("paraproduct_bmo"));
        r.values = {{"radii", rr}, {"values", p.values}, {"ratio", p.ratio}, {"verdict", to_string(p.verdict)}};
        r.check("non-increasing in R", non_increasing(p.values) ? 0.0 : 1.0, Relation::LessEqual, 0.0);
        if (ex.label == "zero") r.check("rk_tail(0)", p.values.front(), Relation::LessEqual, 0.0);
        else if (ex.expected == BMOClass::CMO) r.check("ratio", p.ratio, Relation::Less, tol("paraproduct_cmo"));
        else if (ex.expected == BMOClass::BMONotCMO) r.check("ratio", p.ratio, Relation::Greater, tol("paraproduct_bmo"));
        Table t{"paraproduct_rk_tail_" + ex.label, {"R", "value", "iterations", "converged"}, {}};
        for (std::size_t i = 0; i < rr.size(); ++i)
            t.rows.push_back({rr[i], p.values[i], double(p.iterations[i]), p.converged[i] ? 1.0 : 0.0});
        table(r, std::move(t));
        if (ex.label == "bump" || ex.label == "log") {
            const std::vector<double> s = singular_spectrum(P, 32);
            r.values["sigma"] = s;
            Table st{"paraproduct_spectrum_" + ex.label, {"index", "sigma"}, {}};
            for (std::size_t i = 0; i < s.size(); ++i) st.rows.push_back({double(i + 1), s[i]});
            table(r, std::move(st));
        }
        note("  paraproduct " + ex.label + " done");
    }
}

// ---------------------------------------------------------------------------

void Suite::run_decomposition() {
    wavelets();
    bumps();
    std::mt19937_64 rng(seed(10));
    const double window = 2.0 * grid.half_width();
    const std::vector<GroupPoint> probes{GroupPoint(1, 0), GroupPoint(0.5, 1),  GroupPoint(2, 3),
                                         GroupPoint(4, -2), GroupPoint(0.25, -0.5), GroupPoint(8, 0)};
    for (const std::string& label : config.operators) {
        const CZKernel& k = find_model(label).kernel;
        Record& r = add("decomposition", "decompose", label);
        r.context["window"] = window;
        r.context["m_phi"] = bump_phi().mass();
        std::unique_ptr<CZDecomposition> D;
        try {
            D = std::make_unique<CZDecomposition>(k, psi, phi, window, tol("t1_tail"));
        } catch (const TruncationError& e) {
            r.values["error"] = e.what();
            r.check("T1 computable", 1.0, Relation::LessEqual, 0.0);
            continue;
        }
        r.context["tail_bound"] = std::max(D->t1().tail_bound, D->t1star().tail_bound);
        double recon = 0.0, degenerate = 0.0;
        for (int s = 0; s < 6; ++s) {
            const SampledFunction f = random_function(rng);
            const SampledFunction g = random_function(rng);
            const Complex t = inner_product(D->T().apply(f), g);
            const Complex sum = inner_product(D->apply(f), g) + inner_product(D->p_t1().apply(f), g) +
                                inner_product(D->p_t1star().adjoint(f), g);
            const double scale = std::max(D->T().apply(f).norm() * g.norm(), 1e-300);
            recon = std::max(recon, std::abs(t - sum) / scale);
            SampledFunction diff = D->apply(f);
            diff -= D->T().apply(f);
            degenerate = std::max(degenerate, max_abs(diff));
        }
        r.values = {{"reconstruction", recon}, {"max_|Sf-Tf|", degenerate}};
        r.check("<Tf,g> vs <Sf,g> + <P f,g> + <P* f,g>", recon, Relation::LessEqual, tol("reconstruction"));
        if (k.exact_cancellation) r.check("max |Sf - Tf|", degenerate, Relation::LessEqual, tol("degenerate"));
        const SampledFunction s1 = D->apply_to_one();
        const SampledFunction s1s = D->adjoint_to_one();
        const double t1_sup = max_abs(D->t1().values);
        const double t1s_sup = max_abs(D->t1star().values);
        double paired = 0.0, paired_star = 0.0;
        for (const GroupPoint& g : probes) {
            const SampledFunction w = dilate(make_mother_wavelet().profile(), g, 0.5, grid);
            const double l1 = l1_norm(w);
            if (t1_sup > 0.0) paired = std::max(paired, std::abs(inner_product(s1, w)) / (l1 * t1_sup));
            if (t1s_sup > 0.0) paired_star = std::max(paired_star, std::abs(inner_product(s1s, w)) / (l1 * t1s_sup));
        }
        r.values["sup_T1"] = t1_sup;
        r.values["paired_S1"] = paired;
        r.values["paired_Sstar1"] = paired_star;
        r.values["S1_over_T1"] = t1_sup > 0.0 ? s1.norm() / D->t1().values.norm() : 0.0;
        if (t1_sup > 0.0) {
            r.check("max |<S1,w>| / (|w|_1 |T1|_inf)", paired, Relation::LessEqual, tol("paired_s1"));
            r.check("max |<S*1,w>| / (|w|_1 |T*1|_inf)", paired_star, Relation::LessEqual, tol("paired_s1"));
            // Node-wise: |<S1, psi_n>| against |<T1, psi_n>| at resolved nodes inside the half box.
            // Coefficients below `floor` of the largest sit at the reproducing-formula noise level.
            const auto annihilation = [&](const SampledFunction& s, const SampledFunction& t, double floor) {
                const CoefficientField cs = psi->analyze(s);
                const CoefficientField ct = psi->analyze(t);
                double top = 0.0;
                for (std::size_t n = 0; n < ct.size(); ++n) top = std::max(top, std::abs(ct[n]));
                double worst = 0.0;
                for (std::size_t n = 0; n < ct.size(); ++n) {
                    const FrameNode& node = (*frame)[n];
                    if (node.a < kDefaultProjectionCells * grid.spacing()) continue;
                    if (std::abs(node.b) + node.a > 0.5 * grid.half_width()) continue;
                    if (std::abs(ct[n]) < floor * top) continue;
                    worst = std::max(worst, std::abs(cs[n]) / std::abs(ct[n]));
                }
                return worst;
            };
            // bump'' in the FiniteRank kernel is not resolved at the smallest scales
            const bool enforced = label.rfind("DampedHilbert", 0) == 0;
            const double n1 = annihilation(s1, D->t1().values, 1e-2);
            const double n1s = annihilation(s1s, D->t1star().values, 1e-2);
            const double n1_fine = annihilation(s1, D->t1().values, 1e-3);
            r.context["annihilation_nodes"] = {{"a_min", kDefaultProjectionCells * grid.spacing()},
                                               {"b_half_width", 0.5 * grid.half_width()},
                                               {"coefficient_floor", 1e-2}};
            r.values["annihilation"] = n1;
            r.values["annihilation_star"] = n1s;
            r.values["annihilation_floor_1e-3"] = n1_fine;
            r.check("max |<S1,psi_n>| / |<T1,psi_n>| at resolved nodes", n1, Relation::LessEqual, tol("annihilation"),
                    !enforced);
            r.check("max |<S*1,psi_n>| / |<T*1,psi_n>| at resolved nodes", n1s, Relation::LessEqual,
                    tol("annihilation"), !enforced);
            r.check("same with a 1e-3 coefficient floor", n1_fine, Relation::LessEqual, tol("annihilation"), true);
        }
        note("  decomposition " + label + " done");
    }
}

} // namespace

Report run_suite(const SuiteConfig& c, std::ostream* log) {
    Report report;
    report.seed = c.seed;
    report.config = to_json(c);
    Suite s(c, report, log);
    const std::map<std::string, void (Suite::*)()> runners{
        {"group", &Suite::run_group},           {"grid", &Suite::run_grid},
        {"frame", &Suite::run_frame},           {"operators", &Suite::run_operators},
        {"localization", &Suite::run_localization}, {"compactness", &Suite::run_compactness},
        {"carleson", &Suite::run_carleson},     {"paraproduct", &Suite::run_paraproduct},
        {"decomposition", &Suite::run_decomposition},
    };
    for (const std::string& d : diagnostic_names()) {
        if (std::find(c.diagnostics.begin(), c.diagnostics.end(), d) == c.diagnostics.end()) continue;
        const auto t0 = Clock::now();
        s.note("running " + d);
        (s.*runners.at(d))();
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1f s", seconds_since(t0));
        s.note("finished " + d + " in " + buf);
    }
    return report;
}

} // namespace czframe
