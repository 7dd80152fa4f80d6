#include "rheat/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rheat/balance.hpp"
#include "rheat/catalog.hpp"
#include "rheat/diagnostics.hpp"
#include "rheat/errors.hpp"
#include "rheat/foliation.hpp"
#include "rheat/reconstruct.hpp"
#include "rheat/simulator.hpp"
#include "rheat/verify.hpp"

namespace rheat {

namespace fs = std::filesystem;
using nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Outputs {
public:
    explicit Outputs(const std::string& dir) : dir_(dir) {}

    void write(const std::string& name, const std::string& content) {
        fs::create_directories(dir_);
        std::ofstream f(dir_ / name, std::ios::binary);
        if (!f) throw ConfigError("cannot write " + (dir_ / name).string());
        f << content;
    }
    std::ostringstream summary;
    void finish() { write("summary.txt", summary.str()); }

private:
    fs::path dir_;
};

std::string csv_row(std::initializer_list<std::string> cells) {
    std::string s;
    for (auto& c : cells) {
        if (!s.empty()) s += ',';
        s += c;
    }
    return s + "\n";
}

std::pair<int, int> parse_grid(const std::string& s) {
    auto x = s.find('x');
    if (x == std::string::npos) throw ConfigError("grid must look like 20x20");
    try {
        return {std::stoi(s.substr(0, x)), std::stoi(s.substr(x + 1))};
    } catch (const std::exception&) {
        throw ConfigError("grid must look like 20x20");
    }
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError("bad number in list: " + item);
        }
    }
    return out;
}

json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read config " + path);
    try {
        return json::parse(f);
    } catch (const json::exception& e) {
        throw ConfigError("config " + path + ": " + e.what());
    }
}

void dry(const std::string& cmd, const json& plan) {
    json j{{"command", cmd}, {"plan", plan}};
    std::cout << j.dump(2) << "\n";
}

// ---- verify-catalog

struct CatalogArgs {
    std::string entry = "all", entry_config, grid = "20x20", out = ".";
    double tol = 1e-9;
    bool dry = false;
};

int cmd_verify_catalog(const CatalogArgs& a) {
    std::vector<ExactSolutionEntry> entries;
    if (!a.entry_config.empty())
        entries.push_back(entry_from_json(read_json(a.entry_config)));
    else if (a.entry == "all")
        for (auto id : all_solution_ids()) entries.push_back(default_entry(id));
    else
        entries.push_back(default_entry(solution_id_from_string(a.entry)));
    auto [nt, nr] = parse_grid(a.grid);
    if (a.dry) {
        json plan{{"grid", {nt, nr}}, {"tol", a.tol}, {"entries", json::array()}};
        for (auto& e : entries) plan["entries"].push_back(to_json(e));
        dry("verify-catalog", plan);
        return 0;
    }
    Outputs out(a.out);
    std::string csv = csv_row({"entry", "t", "r", "u", "residual", "scaled"});
    json rep = json::array();
    bool ok = true;
    for (auto& e : entries) {
        CatalogCheck c = verify_entry(e, nt, nr);
        for (auto& s : c.samples)
            csv += csv_row({to_string(e.id), fmt17(s.t), fmt17(s.r), fmt17(s.u), fmt17(s.residual), fmt17(s.scaled)});
        bool pass = !c.samples.empty() && c.max_scaled <= a.tol;
        ok = ok && pass;
        rep.push_back({{"entry", to_json(e)},
                       {"samples", c.samples.size()},
                       {"skipped", c.skipped},
                       {"max_scaled", c.max_scaled},
                       {"pass", pass}});
        out.summary << to_string(e.id) << ": " << c.samples.size() << " points, max scaled residual "
                    << fmt17(c.max_scaled) << (pass ? " ok" : " FAIL") << "\n";
    }
    out.write("residuals.csv", csv);
    out.write("report.json", rep.dump(2) + "\n");
    out.finish();
    return ok ? 0 : 1;
}

// ---- verify-foliation

struct FoliationArgs {
    std::string pair = "all", grid = "20x20", out = ".";
    int branch = 1;
    double tol = 1e-10;
    bool dry = false;
};

int cmd_verify_foliation(const FoliationArgs& a) {
    std::vector<GhPairId> ids;
    if (a.pair == "all")
        ids = all_gh_pairs();
    else
        ids.push_back(gh_pair_from_string(a.pair));
    auto [nx, nv] = parse_grid(a.grid);
    if (a.dry) {
        json plan{{"grid", {nx, nv}}, {"tol", a.tol}, {"branch", a.branch}, {"pairs", json::array()}};
        for (auto id : ids) plan["pairs"].push_back(to_string(id));
        dry("verify-foliation", plan);
        return 0;
    }
    Outputs out(a.out);
    std::string csv = csv_row({"pair", "x", "v", "R1", "R2", "defect"});
    json rep = json::array();
    bool ok = true;
    for (auto id : ids) {
        GhPair pair = catalog_GH(id, default_gh_params(id), a.branch);
        FoliationCheck c = verify_pair(pair, nx, nv);
        for (auto& s : c.grid)
            csv += csv_row({to_string(id), fmt17(s.x), fmt17(s.v), fmt17(s.R1), fmt17(s.R2), fmt17(s.defect)});
        bool pass = c.max_scaled <= a.tol && c.defect_violations == 0 && !c.grid.empty();
        ok = ok && pass;
        rep.push_back({{"pair", to_string(id)},
                       {"max_scaled", c.max_scaled},
                       {"min_abs_defect", c.min_abs_defect},
                       {"defect_samples", c.defect_samples},
                       {"defect_violations", c.defect_violations},
                       {"pass", pass}});
        out.summary << to_string(id) << ": max scaled residual " << fmt17(c.max_scaled) << ", min |defect| "
                    << fmt17(c.min_abs_defect) << (pass ? " ok" : " FAIL") << "\n";
    }
    out.write("residuals.csv", csv);
    out.write("report.json", rep.dump(2) + "\n");
    out.finish();
    return ok ? 0 : 1;
}

// ---- balances

struct BalanceArgs {
    std::string terms = "all", out = ".";
    bool compare_reference = false, dry = false;
};

int cmd_balances(const BalanceArgs& a) {
    std::vector<int> counts;
    if (a.terms == "all")
        counts = {2, 3};
    else if (a.terms == "2" || a.terms == "3")
        counts = {std::stoi(a.terms)};
    else
        throw ConfigError("--terms must be 2, 3 or all");
    if (a.dry) {
        dry("balances", {{"term_counts", counts}, {"compare_reference", a.compare_reference}});
        return 0;
    }
    Outputs out(a.out);
    json rep = json::object();
    bool ok = true;
    for (int m : counts) {
        auto found = enumerate_balances(m);
        auto ref = reference_balance_cases(m);
        bool equal = same_case_set(found, ref);
        json cases = json::array(), pr = json::array();
        for (auto& c : found) cases.push_back(to_json(c));
        for (auto& c : ref) {
            json j = to_json(c);
            if (c.q) j["status"] = to_string(classify_balance(*c.q, c.a.at(*c.q),
                                                                   c.b ? std::optional(c.b->at(*c.q)) : std::nullopt));
            pr.push_back(j);
        }
        rep[std::to_string(m)] = {{"cases", cases}, {"reference", pr}, {"matches_reference", equal}};
        out.summary << m << "-term ansatz: " << found.size() << " cases";
        for (auto& c : found) out.summary << " [" << c.label << "]";
        out.summary << (equal ? ", same as reference" : ", differs from reference") << "\n";
        if (a.compare_reference) ok = ok && equal;
    }
    out.write("report.json", rep.dump(2) + "\n");
    out.finish();
    return ok ? 0 : 1;
}

// ---- simulate / sweep

struct RunResult {
    Trajectory tr;
    std::optional<double> max_error;
    bool expectation_ok = true;
    std::vector<std::string> failures;
};

RunResult simulate_one(const json& cfgj) {
    SimConfig cfg = sim_config_from_json(cfgj);
    RadialField init;
    if (cfg.entry)
        init = field_from_entry(cfg, *cfg.entry, cfg.t_start);
    else
        throw ConfigError("simulation config needs an entry for the initial data");
    RunResult rr;
    rr.tr = run(cfg, init);
    if (cfg.entry && !rr.tr.blew_up()) {
        double err = 0;
        for (auto& s : rr.tr.snapshots) {
            bool defined = true;
            for (int j = 0; j <= s.J() && defined; ++j) defined = cfg.entry->violation(s.t, s.r(j)).empty();
            if (defined) err = std::max(err, max_error(s, *cfg.entry));
        }
        rr.max_error = err;
    }
    if (cfgj.contains("expect")) {
        const json& ex = cfgj.at("expect");
        if (ex.contains("event")) {
            std::string want = ex.at("event").get<std::string>();
            const SimEvent& last = rr.tr.events.back();
            if (to_string(last.type) != want) rr.failures.push_back("expected " + want + ", got " + to_string(last.type));
            if (ex.contains("t_est_range")) {
                auto rg = ex.at("t_est_range").get<std::vector<double>>();
                if (rg.size() != 2) throw ConfigError("t_est_range needs two values");
                if (last.t_est < rg[0] || last.t_est > rg[1])
                    rr.failures.push_back("t_est " + fmt17(last.t_est) + " outside the expected range");
            }
        }
        if (ex.contains("max_error")) {
            double lim = ex.at("max_error").get<double>();
            if (!rr.max_error || *rr.max_error > lim) rr.failures.push_back("max error above " + fmt17(lim));
        }
    }
    rr.expectation_ok = rr.failures.empty();
    return rr;
}

json events_json(const Trajectory& tr) {
    json a = json::array();
    for (auto& e : tr.events) a.push_back({{"type", to_string(e.type)}, {"t_est", e.t_est}, {"detail", e.detail}});
    return a;
}

int cmd_simulate(const std::string& config, const std::string& outdir, bool parallel, bool dry_run) {
    json cfgj = read_json(config);
    if (parallel) cfgj["parallel"] = true;
    if (dry_run) {
        SimConfig cfg = sim_config_from_json(cfgj);
        json plan = to_json(cfg);
        plan["dt_limit"] = diffusive_dt_limit(cfg);
        if (cfgj.contains("expect")) plan["expect"] = cfgj["expect"];
        dry("simulate", plan);
        return 0;
    }
    RunResult rr = simulate_one(cfgj);
    Outputs out(outdir);
    std::string csv = csv_row({"t", "r", "u"});
    for (auto& s : rr.tr.snapshots)
        for (int j = 0; j <= s.J(); ++j) csv += csv_row({fmt17(s.t), fmt17(s.r(j)), fmt17(s.u[j])});
    out.write("snapshots.csv", csv);
    std::string ev;
    for (auto& e : rr.tr.events) ev += json{{"type", to_string(e.type)}, {"t_est", e.t_est}}.dump() + "\n";
    out.write("events.jsonl", ev);
    json rep{{"steps", rr.tr.steps}, {"events", events_json(rr.tr)}, {"failures", rr.failures}};
    rep["max_error"] = rr.max_error ? json(*rr.max_error) : json(nullptr);
    out.write("report.json", rep.dump(2) + "\n");
    for (auto& e : rr.tr.events) out.summary << to_string(e.type) << " at t = " << fmt17(e.t_est) << "\n";
    out.summary << "steps: " << rr.tr.steps << "\n";
    if (rr.max_error) out.summary << "max error vs exact: " << fmt17(*rr.max_error) << "\n";
    for (auto& f : rr.failures) out.summary << "FAIL: " << f << "\n";
    out.finish();
    return rr.expectation_ok ? 0 : 1;
}

int cmd_sweep(const std::string& config, const std::string& outdir, bool dry_run) {
    json j = read_json(config);
    if (!j.contains("runs") || !j.at("runs").is_array()) throw ConfigError("sweep config needs a runs array");
    std::vector<json> runs = j.at("runs").get<std::vector<json>>();
    for (auto& r : runs) sim_config_from_json(r);  // validate up front
    if (dry_run) {
        dry("sweep", {{"runs", runs.size()}, {"configs", runs}});
        return 0;
    }
    std::vector<RunResult> res(runs.size());
    std::vector<std::string> errors(runs.size());
    const int m = static_cast<int>(runs.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < m; ++i) {
        try {
            res[i] = simulate_one(runs[i]);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    Outputs out(outdir);
    json rep = json::array();
    std::string ev;
    bool ok = true;
    for (int i = 0; i < m; ++i) {
        if (!errors[i].empty()) {
            ok = false;
            rep.push_back({{"run", i}, {"error", errors[i]}});
            out.summary << "run " << i << ": error " << errors[i] << "\n";
            continue;
        }
        auto& rr = res[i];
        ok = ok && rr.expectation_ok;
        json r{{"run", i}, {"steps", rr.tr.steps}, {"events", events_json(rr.tr)}, {"failures", rr.failures}};
        r["max_error"] = rr.max_error ? json(*rr.max_error) : json(nullptr);
        rep.push_back(r);
        for (auto& e : rr.tr.events)
            ev += json{{"run", i}, {"type", to_string(e.type)}, {"t_est", e.t_est}}.dump() + "\n";
        out.summary << "run " << i << ": " << to_string(rr.tr.events.back().type) << " at t = "
                    << fmt17(rr.tr.events.back().t_est) << (rr.expectation_ok ? "" : " FAIL") << "\n";
    }
    out.write("events.jsonl", ev);
    out.write("report.json", rep.dump(2) + "\n");
    out.finish();
    return ok ? 0 : 1;
}

// ---- reconstruct

struct ReconArgs {
    std::string config, pair, seed, window, grid = "5x5", out = ".";
    int branch = 0;
    bool dry = false;
};

int cmd_reconstruct(const ReconArgs& a) {
    json j = a.config.empty() ? json::object() : read_json(a.config);
    if (!a.pair.empty()) j["pair"] = a.pair;
    if (a.branch != 0) j["branch"] = a.branch;
    if (!a.seed.empty()) {
        auto s = parse_list(a.seed);
        if (s.size() != 3) throw ConfigError("--seed needs t0,r0,u0");
        j["seed"] = {{"t0", s[0]}, {"r0", s[1]}, {"u0", s[2]}};
    }
    if (!a.window.empty()) {
        auto w = parse_list(a.window);
        if (w.size() != 4) throw ConfigError("--window needs t_lo,t_hi,r_lo,r_hi");
        j["window"] = {{"t_lo", w[0]}, {"t_hi", w[1]}, {"r_lo", w[2]}, {"r_hi", w[3]}};
    }
    if (!j.contains("pair")) throw ConfigError("reconstruct needs a pair");
    GhPairId id = gh_pair_from_string(j.at("pair").get<std::string>());
    Parameters P = default_gh_params(id);
    try {
        if (j.contains("params"))
            P = make_parameters(j["params"].at("n").get<double>(), j["params"].at("q").get<double>(),
                                j["params"].at("k").get<double>());
        int branch = j.value("branch", 1);
        std::optional<ExactSolutionEntry> compare;
        if (j.contains("compare")) compare = entry_from_json(j.at("compare"));
        Seed seed;
        if (j.contains("seed")) {
            seed.t0 = j["seed"].at("t0").get<double>();
            seed.r0 = j["seed"].at("r0").get<double>();
            if (j["seed"].contains("u0"))
                seed.u0 = j["seed"]["u0"].get<double>();
            else if (compare)
                seed.u0 = eval_value(*compare, seed.t0, seed.r0);
            else
                throw ConfigError("seed needs u0 or a compare entry");
        } else {
            throw ConfigError("reconstruct needs a seed");
        }
        Window w;
        if (j.contains("window")) {
            w.t_lo = j["window"].at("t_lo").get<double>();
            w.t_hi = j["window"].at("t_hi").get<double>();
            w.r_lo = j["window"].at("r_lo").get<double>();
            w.r_hi = j["window"].at("r_hi").get<double>();
        }
        auto [nt, nr] = parse_grid(j.value("grid", a.grid));
        double tol = j.value("tol", 1e-6);
        if (a.dry) {
            json plan = j;
            plan["seed"] = {{"t0", seed.t0}, {"r0", seed.r0}, {"u0", seed.u0}};
            dry("reconstruct", plan);
            return 0;
        }
        GhPair pair = catalog_GH(id, P, branch);
        Reconstruction rec = reconstruct(pair, seed, w);
        Outputs out(a.out);
        std::string csv = compare ? csv_row({"t", "r", "u", "exact", "error"}) : csv_row({"t", "r", "u"});
        double max_err = 0;
        for (int i = 0; i < nt; ++i)
            for (int k = 0; k < nr; ++k) {
                double t = w.t_lo + (w.t_hi - w.t_lo) * i / std::max(1, nt - 1);
                double r = w.r_lo + (w.r_hi - w.r_lo) * k / std::max(1, nr - 1);
                double u = rec(t, r);
                if (compare) {
                    double ex = eval_value(*compare, t, r);
                    max_err = std::max(max_err, std::fabs(u - ex));
                    csv += csv_row({fmt17(t), fmt17(r), fmt17(u), fmt17(ex), fmt17(u - ex)});
                } else {
                    csv += csv_row({fmt17(t), fmt17(r), fmt17(u)});
                }
            }
        out.write("snapshots.csv", csv);
        json rep{{"pair", to_string(id)},
                 {"path_discrepancy", rec.path_discrepancy()},
                 {"max_consistency_residual", rec.max_consistency_residual()}};
        bool ok = true;
        if (compare) {
            rep["max_error"] = max_err;
            ok = max_err <= tol;
        }
        rep["pass"] = ok;
        out.write("report.json", rep.dump(2) + "\n");
        out.summary << to_string(id) << ": path discrepancy " << fmt17(rec.path_discrepancy());
        if (compare) out.summary << ", max error " << fmt17(max_err) << (ok ? " ok" : " FAIL");
        out.summary << "\n";
        out.finish();
        return ok ? 0 : 1;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("reconstruct config: ") + e.what());
    }
}

// ---- diagnose

struct DiagnoseArgs {
    std::string entry, entry_config, times = "1", out = ".";
    std::optional<double> nu, k;
    double dt_probe = 0;
    bool dry = false;
};

ExactSolutionEntry diagnose_entry(const DiagnoseArgs& a) {
    if (!a.entry_config.empty()) return entry_from_json(read_json(a.entry_config));
    if (a.entry.empty()) throw ConfigError("diagnose needs --entry or --entry-config");
    SolutionId id = solution_id_from_string(a.entry);
    ExactSolutionEntry d = default_entry(id);
    double k = a.k.value_or(d.params.k);
    if (a.nu) {
        if (id != SolutionId::TWODIM_USOL2 && id != SolutionId::TWODIM_USOL2_CUTOFF)
            throw ConfigError("--nu applies to the TWODIM entries only");
        return make_entry(id, 2 - *a.nu, 2 / *a.nu, k, d.branch, {{"c", d.constant("c")}});
    }
    if (a.k) return make_entry(id, d.params.n, d.params.q, k, d.branch, d.constants);
    return d;
}

int cmd_diagnose(const DiagnoseArgs& a) {
    ExactSolutionEntry e = diagnose_entry(a);
    std::vector<double> times = parse_list(a.times);
    if (times.empty()) throw ConfigError("--times is empty");
    if (a.dry) {
        dry("diagnose", {{"entry", to_json(e)}, {"times", times}, {"dt_probe", a.dt_probe}});
        return 0;
    }
    DiagnosticsOptions opt;
    opt.dt_probe = a.dt_probe;
    Outputs out(a.out);
    auto cell = [](const std::optional<double>& v) { return v ? fmt17(*v) : std::string(""); };
    std::string csv = csv_row({"t", "H", "E", "S", "F", "dH_dt", "dE_dt", "flags"});
    json reps = json::array();
    std::vector<std::pair<double, double>> Es, Hs;
    for (double t : times) {
        DiagnosticsReport r = diagnostics_report(e, t, opt);
        std::string flags;
        for (auto& [name, d] : r.divergent)
            if (d) flags += (flags.empty() ? "" : ";") + name + "_divergent";
        csv += csv_row({fmt17(t), cell(r.H), cell(r.E), cell(r.S), cell(r.F), cell(r.dH_dt), cell(r.dE_dt), flags});
        json j = to_json(r);
        json cf = json::object(), cc = json::object();
        for (Quantity q : {Quantity::H, Quantity::E, Quantity::S, Quantity::F, Quantity::DH_DT}) {
            auto p = closed_form_reference(e, q, t);
            auto c = corrected_closed_form(e, q, t);
            cf[to_string(q)] = p ? json(*p) : json(nullptr);
            cc[to_string(q)] = c ? json(*c) : json(nullptr);
        }
        j["closed_form"] = cf;
        j["corrected_closed_form"] = cc;
        reps.push_back(j);
        if (r.E && *r.E > 0) Es.push_back({t, *r.E});
        if (r.H && *r.H > 0) Hs.push_back({t, *r.H});
    }
    json rep{{"entry", to_json(e)}, {"reports", reps}};
    if (Es.size() == times.size() && Es.size() >= 5) rep["E_slope"] = fit_decay_exponent(Es);
    if (Hs.size() == times.size() && Hs.size() >= 5) rep["H_slope"] = fit_decay_exponent(Hs);
    out.write("diagnostics.csv", csv);
    out.write("report.json", rep.dump(2) + "\n");
    out.summary << to_string(e.id) << " at " << times.size() << " times\n";
    if (rep.contains("E_slope")) out.summary << "fitted E exponent: " << fmt17(rep["E_slope"].get<double>()) << "\n";
    if (rep.contains("H_slope")) out.summary << "fitted H exponent: " << fmt17(rep["H_slope"].get<double>()) << "\n";
    out.finish();
    return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    for (auto& s : args) argv.push_back(s.c_str());
    return dispatch(static_cast<int>(argv.size()), argv.data());
}

int dispatch(int argc, const char* const* argv) {
    CLI::App app{"Radial semilinear heat equation: exact solutions, foliation, simulation, diagnostics"};
    app.require_subcommand(1);

    CatalogArgs ca;
    auto* vc = app.add_subcommand("verify-catalog", "PDE residuals of the exact-solution catalog");
    vc->add_option("--entry", ca.entry, "solution id or all");
    vc->add_option("--entry-config", ca.entry_config, "JSON catalog entry");
    vc->add_option("--grid", ca.grid, "points per side, e.g. 20x20");
    vc->add_option("--tol", ca.tol, "scaled residual tolerance");
    vc->add_option("--out", ca.out, "output directory");
    vc->add_flag("--dry-run", ca.dry, "print the plan only");

    FoliationArgs fa;
    auto* vf = app.add_subcommand("verify-foliation", "resolving-system residuals of the (G,H) pairs");
    vf->add_option("--pair", fa.pair, "pair id or all");
    vf->add_option("--branch", fa.branch, "+1 or -1");
    vf->add_option("--grid", fa.grid, "points per side, e.g. 20x20");
    vf->add_option("--tol", fa.tol, "scaled residual tolerance");
    vf->add_option("--out", fa.out, "output directory");
    vf->add_flag("--dry-run", fa.dry, "print the plan only");

    BalanceArgs ba;
    auto* bl = app.add_subcommand("balances", "exponent balances of the power ansatz");
    bl->add_option("--terms", ba.terms, "2, 3 or all");
    bl->add_flag("--compare-reference", ba.compare_reference, "fail unless the reference case lists are reproduced");
    bl->add_option("--out", ba.out, "output directory");
    bl->add_flag("--dry-run", ba.dry, "print the plan only");

    std::string sim_config, sim_out = ".";
    bool sim_parallel = false, sim_dry = false;
    auto* sm = app.add_subcommand("simulate", "method-of-lines run from a JSON config");
    sm->add_option("--config", sim_config, "JSON simulation config")->required();
    sm->add_flag("--parallel", sim_parallel, "OpenMP right-hand side");
    sm->add_option("--out", sim_out, "output directory");
    sm->add_flag("--dry-run", sim_dry, "print the plan only");

    ReconArgs ra;
    auto* rc = app.add_subcommand("reconstruct", "integrate u from a (G,H) pair");
    rc->add_option("--config", ra.config, "JSON reconstruction config");
    rc->add_option("--pair", ra.pair, "pair id");
    rc->add_option("--branch", ra.branch, "+1 or -1");
    rc->add_option("--seed", ra.seed, "t0,r0,u0");
    rc->add_option("--window", ra.window, "t_lo,t_hi,r_lo,r_hi");
    rc->add_option("--grid", ra.grid, "output grid, e.g. 5x5");
    rc->add_option("--out", ra.out, "output directory");
    rc->add_flag("--dry-run", ra.dry, "print the plan only");

    DiagnoseArgs da;
    double nu = NAN, kk = NAN;
    auto* dg = app.add_subcommand("diagnose", "heat, energy and flux diagnostics of a catalog entry");
    dg->add_option("--entry", da.entry, "solution id");
    dg->add_option("--entry-config", da.entry_config, "JSON catalog entry");
    dg->add_option("--nu", nu, "nu = 2 - n for the TWODIM entries");
    dg->add_option("--k", kk, "source coefficient");
    dg->add_option("--times", da.times, "comma-separated times");
    dg->add_option("--dt-probe", da.dt_probe, "central-difference step (default 1e-4 t)");
    dg->add_option("--out", da.out, "output directory");
    dg->add_flag("--dry-run", da.dry, "print the plan only");

    std::string sw_config, sw_out = ".";
    bool sw_dry = false;
    auto* sw = app.add_subcommand("sweep", "independent simulations in parallel");
    sw->add_option("--config", sw_config, "JSON file with a runs array")->required();
    sw->add_option("--out", sw_out, "output directory");
    sw->add_flag("--dry-run", sw_dry, "print the plan only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*vc) return cmd_verify_catalog(ca);
        if (*vf) return cmd_verify_foliation(fa);
        if (*bl) return cmd_balances(ba);
        if (*sm) return cmd_simulate(sim_config, sim_out, sim_parallel, sim_dry);
        if (*rc) return cmd_reconstruct(ra);
        if (*dg) {
            if (!std::isnan(nu)) da.nu = nu;
            if (!std::isnan(kk)) da.k = kk;
            return cmd_diagnose(da);
        }
        if (*sw) return cmd_sweep(sw_config, sw_out, sw_dry);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const CheckFailed& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace rheat
