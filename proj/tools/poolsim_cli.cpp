#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "poolsim/analysis.hpp"
#include "poolsim/engine.hpp"
#include "poolsim/fluid.hpp"
#include "poolsim/replications.hpp"
#include "poolsim/scenario_io.hpp"
#include "poolsim/trajectory_io.hpp"

namespace fs = std::filesystem;
using namespace poolsim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

void write_json(const fs::path& path, const nlohmann::json& doc) {
    write_file(path, doc.dump(2) + "\n");
}

std::vector<int> parse_tail_levels(const std::vector<int>& v) { return v; }

struct RunOptions {
    std::string scenario_path;
    std::string out_dir = "out";
    std::string mode_override;
    std::int64_t seed_override = -1;
    std::vector<int> tails;
};

int cmd_run(const RunOptions& opt) {
    Scenario sc = load_scenario_file(opt.scenario_path);
    if (opt.seed_override >= 0) sc.seed = static_cast<std::uint64_t>(opt.seed_override);
    if (!opt.mode_override.empty()) {
        if (opt.mode_override == "thinning") sc.mode = EngineMode::thinning;
        else if (opt.mode_override == "coupled") sc.mode = EngineMode::coupled;
        else if (opt.mode_override == "oracle") sc.mode = EngineMode::oracle;
        else throw std::invalid_argument("unknown mode: " + opt.mode_override);
        sc.validate();
    }
    const Trajectory traj = run(sc);
    const fs::path dir(opt.out_dir);
    std::ostringstream events, samples;
    write_events_csv(events, traj);
    write_samples_csv(samples, traj.sample(sc.grid), parse_tail_levels(opt.tails));
    write_file(dir / "events.csv", events.str());
    write_file(dir / "samples.csv", samples.str());
    auto summary = summary_json(sc, traj);
    if (!traj.counting_identity_holds()) {
        write_json(dir / "summary.json", summary);
        std::cerr << "counting identity violated\n";
        return kExitCheckFailed;
    }
    write_json(dir / "summary.json", summary);
    std::cout << "wrote " << (dir / "events.csv").string() << ", samples.csv, summary.json\n";
    return kExitOk;
}

struct Figure2Options {
    int delta = 0;  // 0 = both 1 and 3
    std::int64_t n = 300;
    int seeds = 20;
    std::uint64_t seed0 = 1;
    std::string out_dir = "out/figure2";
    std::string scenario_path;  // optional override
};

int cmd_figure2(const Figure2Options& opt) {
    const fs::path dir(opt.out_dir);
    std::vector<int> deltas = opt.delta == 0 ? std::vector<int>{1, 3}
                                             : std::vector<int>{opt.delta};
    nlohmann::json report = nlohmann::json::array();
    for (int delta : deltas) {
        Scenario base = opt.scenario_path.empty()
                            ? figure2_scenario(delta, opt.n, opt.seed0)
                            : load_scenario_file(opt.scenario_path);
        base.delta = delta;
        base.n = opt.n;
        const FluidSolution fluid = solve_u(base);
        const auto high = certify_interval(base.lambda, base.mu, fluid, kFigure2HighA,
                                           kFigure2HighB, delta);
        const auto low = certify_interval(base.lambda, base.mu, fluid, kFigure2LowA,
                                          kFigure2LowB, delta);

        std::vector<Scenario> batch;
        for (int s = 0; s < opt.seeds; ++s) {
            Scenario sc = base;
            sc.seed = opt.seed0 + static_cast<std::uint64_t>(s);
            batch.push_back(sc);
        }
        const auto trajs = run_batch(batch);

        nlohmann::json entry;
        entry["delta"] = delta;
        entry["n"] = opt.n;
        entry["seeds"] = opt.seeds;
        entry["certificates"] = {certificate_json(high), certificate_json(low)};
        for (const auto* cert : {&high, &low}) {
            if (!cert->certified()) continue;
            const double sigma_used = cert->sigma + 0.2;
            nlohmann::json reports = nlohmann::json::array();
            int settled_at_target = 0;
            for (const auto& traj : trajs) {
                const auto rep = check_settling_claims(traj, *cert, sigma_used, fluid);
                if (rep.settled && rep.settled_ell == cert->m * cert->delta)
                    ++settled_at_target;
                reports.push_back(settling_report_json(rep));
            }
            const std::string key = cert == &high ? "high_load" : "low_load";
            entry["settling"][key] = {
                {"sigma_used", sigma_used},
                {"settled_at_target", settled_at_target},
                {"reports", reports},
            };
        }
        report.push_back(entry);

        const int tail_level = (high.certified() ? (high.m + 1) * delta : (low.m + 1) * delta) + 1;
        for (int s = 0; s < opt.seeds; ++s) {
            std::ostringstream samples;
            write_samples_csv(samples, trajs[static_cast<std::size_t>(s)].sample(base.grid),
                              {tail_level});
            std::ostringstream name;
            name << "fig2_delta" << delta << "_seed" << (opt.seed0 + static_cast<std::uint64_t>(s))
                 << ".csv";
            write_file(dir / name.str(), samples.str());
        }
    }
    write_json(dir / "fig2_report.json", report);
    std::cout << "wrote " << (dir / "fig2_report.json").string() << " and per-seed series\n";
    return kExitOk;
}

struct FluidOptions {
    std::string scenario_path;
    std::string out_dir = "out/fluid";
    std::vector<std::string> intervals;  // "a,b" pairs
    double step = 0.01;
};

int cmd_fluid(const FluidOptions& opt) {
    const Scenario sc = load_scenario_file(opt.scenario_path);
    const FluidSolution fluid = solve_u(sc);
    const fs::path dir(opt.out_dir);

    std::ostringstream csv;
    csv << "t,u,lambda,rho\r\n";
    for (double t = 0.0; t <= sc.horizon + 1e-12; t += opt.step) {
        const double tt = std::min(t, sc.horizon);
        csv << format_double(tt) << ',' << format_double(fluid.value(tt)) << ','
            << format_double(sc.lambda.value(tt)) << ','
            << format_double(sc.lambda.value(tt) / sc.mu) << "\r\n";
    }
    write_file(dir / "fluid.csv", csv.str());

    nlohmann::json certs = nlohmann::json::array();
    for (const std::string& spec : opt.intervals) {
        const auto comma = spec.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("interval must be \"a,b\": " + spec);
        const double a = std::stod(spec.substr(0, comma));
        const double b = std::stod(spec.substr(comma + 1));
        certs.push_back(certificate_json(
            certify_interval(sc.lambda, sc.mu, fluid, a, b, sc.delta)));
    }
    write_json(dir / "certificates.json", certs);
    std::cout << "wrote " << (dir / "fluid.csv").string() << " and certificates.json\n";
    return kExitOk;
}

struct SweepOptions {
    std::string scenario_path;
    std::string out_dir = "out/sweep";
    std::vector<std::int64_t> n_list{100, 300, 1000};
    int seeds = 20;
    int j = 2;
};

int cmd_sweep(const SweepOptions& opt) {
    Scenario base = load_scenario_file(opt.scenario_path);
    if (base.mode != EngineMode::coupled)
        throw std::invalid_argument("sweep requires a coupled-mode scenario");
    if (opt.n_list.empty()) throw std::invalid_argument("empty n list");
    std::vector<std::int64_t> ns = opt.n_list;
    std::sort(ns.begin(), ns.end());
    const std::int64_t n_ref = ns.back();

    std::ostringstream csv;
    csv << "seed,n,sup_u_gap,sup_delta_j,rho_dist_to_largest\r\n";
    std::vector<std::vector<double>> u_gaps(ns.size()), d_sups(ns.size()), dists(ns.size());
    for (int s = 0; s < opt.seeds; ++s) {
        const std::uint64_t seed = base.seed + static_cast<std::uint64_t>(s);
        SkeletonSet skels(seed);
        Scenario ref = base;
        ref.n = n_ref;
        ref.seed = seed;
        const Trajectory ref_traj = run_coupled(ref, skels);
        for (std::size_t k = 0; k < ns.size(); ++k) {
            Scenario sc = base;
            sc.n = ns[k];
            sc.seed = seed;
            const Trajectory traj =
                ns[k] == n_ref ? ref_traj : run_coupled(sc, skels);
            const double gap = total_mass_gap(traj, solve_u(sc));
            const double dsup = delta_error_sup(traj, opt.j, sc.lambda, sc.mu);
            const int levels = std::max(traj.max_level_seen, ref_traj.max_level_seen) + 1;
            const double dist = convergence_metric(traj.sample(base.grid, levels),
                                                   ref_traj.sample(base.grid, levels));
            u_gaps[k].push_back(gap);
            d_sups[k].push_back(dsup);
            dists[k].push_back(dist);
            csv << seed << ',' << ns[k] << ',' << format_double(gap) << ','
                << format_double(dsup) << ',' << format_double(dist) << "\r\n";
        }
    }
    const fs::path dir(opt.out_dir);
    write_file(dir / "convergence.csv", csv.str());

    auto med = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        const std::size_t k = v.size() / 2;
        return v.size() % 2 == 1 ? v[k] : 0.5 * (v[k - 1] + v[k]);
    };
    nlohmann::json verdicts;
    bool all_ok = true;
    auto trend = [&](const char* name, const std::vector<std::vector<double>>& samples,
                     bool include_last) {
        std::vector<double> medians;
        for (const auto& v : samples) medians.push_back(med(v));
        bool decreasing = true;
        const std::size_t upto = include_last ? medians.size() : medians.size() - 1;
        for (std::size_t k = 1; k < upto; ++k)
            if (!(medians[k] < medians[k - 1])) decreasing = false;
        verdicts[name] = {{"medians", medians}, {"decreasing", ns.size() > 1 ? decreasing : true}};
        if (ns.size() > 1 && !decreasing) all_ok = false;
    };
    trend("sup_u_gap", u_gaps, true);
    trend("sup_delta_j", d_sups, true);
    trend("rho_dist_to_largest", dists, false);  // the largest-n distance is 0 by construction
    verdicts["n_list"] = ns;
    verdicts["seeds"] = opt.seeds;
    verdicts["j"] = opt.j;
    write_json(dir / "verdicts.json", verdicts);
    std::cout << verdicts.dump(2) << '\n';
    return all_ok ? kExitOk : kExitCheckFailed;
}

struct FsllnOptions {
    std::vector<double> gammas{0.0, 0.25};
    std::vector<std::int64_t> n_list{100, 1000, 10000};
    int seeds = 50;
    double horizon = 10.0;
    std::uint64_t seed0 = 1;
    std::string out_dir = "out/fslln";
};

int cmd_fslln(const FsllnOptions& opt) {
    std::ostringstream csv;
    csv << "seed,gamma,n,statistic\r\n";
    nlohmann::json summary;
    bool all_ok = true;
    for (double gamma : opt.gammas) {
        int monotone = 0;
        for (int s = 0; s < opt.seeds; ++s) {
            const std::uint64_t seed = opt.seed0 + static_cast<std::uint64_t>(s);
            const auto stats = fslln_diag(seed, opt.n_list, gamma, opt.horizon);
            bool dec = true;
            for (std::size_t k = 1; k < stats.size(); ++k)
                if (!(stats[k] < stats[k - 1])) dec = false;
            if (dec) ++monotone;
            for (std::size_t k = 0; k < stats.size(); ++k)
                csv << seed << ',' << format_double(gamma) << ',' << opt.n_list[k] << ','
                    << format_double(stats[k]) << "\r\n";
        }
        const double frac = static_cast<double>(monotone) / opt.seeds;
        summary[format_double(gamma)] = {{"monotone_fraction", frac}};
        if (frac < 0.9) all_ok = false;
    }
    const fs::path dir(opt.out_dir);
    write_file(dir / "fslln.csv", csv.str());
    write_json(dir / "summary.json", summary);
    std::cout << summary.dump(2) << '\n';
    return all_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adaptive threshold load-balancing simulator"};
    app.require_subcommand(1);

    RunOptions run_opt;
    auto* run_cmd = app.add_subcommand("run", "simulate one scenario file");
    run_cmd->add_option("--scenario", run_opt.scenario_path, "scenario JSON")->required();
    run_cmd->add_option("--out-dir", run_opt.out_dir, "output directory");
    run_cmd->add_option("--seed", run_opt.seed_override, "override the scenario seed");
    run_cmd->add_option("--mode", run_opt.mode_override, "override the engine mode");
    run_cmd->add_option("--tail", run_opt.tails, "emit v_j sample columns");

    Figure2Options fig_opt;
    auto* fig_cmd = app.add_subcommand("figure2", "two-mode load experiment");
    fig_cmd->add_option("--delta", fig_opt.delta, "threshold step (default: both 1 and 3)")
        ->check(CLI::IsMember({0, 1, 3}));
    fig_cmd->add_option("--n", fig_opt.n, "pool count");
    fig_cmd->add_option("--seeds", fig_opt.seeds, "number of seeds");
    fig_cmd->add_option("--seed", fig_opt.seed0, "first seed");
    fig_cmd->add_option("--out-dir", fig_opt.out_dir, "output directory");
    fig_cmd->add_option("--scenario", fig_opt.scenario_path, "override the built-in scenario");

    FluidOptions fluid_opt;
    auto* fluid_cmd = app.add_subcommand("fluid", "fluid solution and interval certificates");
    fluid_cmd->add_option("--scenario", fluid_opt.scenario_path, "scenario JSON")->required();
    fluid_cmd->add_option("--interval", fluid_opt.intervals, "interval \"a,b\" (repeatable)");
    fluid_cmd->add_option("--out-dir", fluid_opt.out_dir, "output directory");
    fluid_cmd->add_option("--step", fluid_opt.step, "series step");

    SweepOptions sweep_opt;
    auto* sweep_cmd = app.add_subcommand("sweep", "common-random-number n sweep");
    sweep_cmd->add_option("--scenario", sweep_opt.scenario_path, "coupled-mode scenario")
        ->required();
    sweep_cmd->add_option("--n-list", sweep_opt.n_list, "system sizes");
    sweep_cmd->add_option("--seeds", sweep_opt.seeds, "number of seeds");
    sweep_cmd->add_option("--j", sweep_opt.j, "error-process tail index");
    sweep_cmd->add_option("--out-dir", sweep_opt.out_dir, "output directory");

    FsllnOptions fs_opt;
    auto* fs_cmd = app.add_subcommand("fslln", "refined strong-law diagnostic");
    fs_cmd->add_option("--gamma-list", fs_opt.gammas, "scaling exponents");
    fs_cmd->add_option("--n-list", fs_opt.n_list, "scale parameters");
    fs_cmd->add_option("--seeds", fs_opt.seeds, "number of seeds");
    fs_cmd->add_option("--horizon", fs_opt.horizon, "time horizon");
    fs_cmd->add_option("--seed", fs_opt.seed0, "first seed");
    fs_cmd->add_option("--out-dir", fs_opt.out_dir, "output directory");

    try {
        app.parse(argc, argv);
        if (*run_cmd) return cmd_run(run_opt);
        if (*fig_cmd) return cmd_figure2(fig_opt);
        if (*fluid_cmd) return cmd_fluid(fluid_opt);
        if (*sweep_cmd) return cmd_sweep(sweep_opt);
        if (*fs_cmd) return cmd_fslln(fs_opt);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "scenario parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}
