#include <cmath>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "csv.hpp"
#include "figures.hpp"
#include "hyperzeno/fock_oracle.hpp"
#include "hyperzeno/photstat.hpp"
#include "params_io.hpp"
#include "sweep.hpp"
#include "validate.hpp"
#include "version.hpp"

namespace {

using namespace hz;
using namespace hz::cli;

constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidity = 3;

struct ValidityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string params_file;
    std::string out;
    int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::uint64_t seed = kDefaultSeed;
};

struct PointArgs {
    std::string scenario = "pump";
    std::optional<double> z, gz;
    std::vector<std::string> overrides;
};

void add_point_args(CLI::App* c, PointArgs& a) {
    c->add_option("--scenario,-s", a.scenario, "pump|stokes|antistokes|split|general (or I..IV)");
    c->add_option("--z", a.z, "propagation length");
    c->add_option("--gz", a.gz, "dimensionless length g*z");
    c->add_option("--set", a.overrides, "override a parameter, e.g. amp.V.mag=0 or Gamma1=0.5");
}

SystemParams base_params(const Globals& g) {
    return g.params_file.empty() ? figure2_params() : load_params(g.params_file);
}

struct Resolved {
    SystemParams params;
    ProbeScenario scenario;
    double z;
};

Resolved resolve(const Globals& g, const PointArgs& a) {
    Resolved r;
    r.params = base_params(g);
    for (const std::string& o : a.overrides) apply_override(r.params, o);
    const auto s = scenario_from_name(a.scenario);
    if (!s) throw ParseError("unknown scenario '" + a.scenario + "'");
    r.scenario = *s;
    if (a.z && a.gz) throw ParseError("give --z or --gz, not both");
    if (a.gz) {
        if (r.params.g == 0) throw ParseError("--gz needs g != 0");
        r.z = *a.gz / r.params.g;
    } else {
        r.z = a.z.value_or(0.1 / (r.params.g != 0 ? r.params.g : 1.0));
    }
    return r;
}

void guard(double strength) {
    if (strength > kValidityHard)
        throw ValidityError("max |coupling * z| = " + format_number(strength) + " exceeds 1; the perturbative solution does not apply");
    if (strength > kValidityWarn)
        std::cerr << "warning: max |coupling * z| = " << format_number(strength) << " > " << kValidityWarn
                  << "; second-order results are unreliable\n";
}

// Output goes to <out>/<name> when --out is given, otherwise to stdout.
struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;
    Sink(const Globals& g, const std::string& name) {
        if (g.out.empty()) return;
        std::filesystem::create_directories(g.out);
        file.open(std::filesystem::path(g.out) / name, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + (std::filesystem::path(g.out) / name).string());
        os = &file;
    }
};

int cmd_zeno(const Globals& g, const PointArgs& a, const std::string& evaluator) {
    const Resolved r = resolve(g, a);
    const SystemParams p = apply_scenario(r.params, r.scenario);
    guard(check_validity(p, r.z).strength);
    if (evaluator != "closed" && evaluator != "general") throw ParseError("--evaluator must be closed or general");
    const ZenoReport z = zeno_evaluator(evaluator == "general" ? Evaluator::General : Evaluator::Closed, r.scenario)(p, r.z);
    Sink sink(g, "zeno.csv");
    write_header(*sink.os, "zeno scenario=" + std::string(scenario_name(r.scenario)) + " evaluator=" + evaluator, p);
    CsvWriter w(*sink.os);
    w.columns({"z", "Z_S", "Z_V", "Z_A", "effect_S", "effect_V", "effect_A"});
    std::vector<Cell> row{r.z};
    for (Channel c : kChannels) row.emplace_back(z.applicable[static_cast<int>(c)] ? z[c] : std::nan(""));
    for (Channel c : kChannels) row.emplace_back(std::string(effect_name(z.effect(c))));
    w.row(row);
    return 0;
}

int cmd_sweep(const Globals& g, const std::string& spec_file) {
    const SweepSpec spec = sweep_from_json(load_json(spec_file), base_params(g));
    const SweepResult res = run_sweep(spec, g.threads);
    guard(res.max_strength);
    Sink sink(g, std::filesystem::path(spec_file).stem().string() + ".csv");
    write_sweep_csv(*sink.os, spec, res);
    return 0;
}

int cmd_stats(const Globals& g, const PointArgs& a, const std::string& source, bool with_g2,
              const std::vector<int>& dims) {
    const Resolved r = resolve(g, a);
    guard(check_validity(r.params, r.z).strength);
    StatReport rep;
    if (source == "closed") {
        rep = stat_report(r.params, r.z, StatSource::ClosedForm, with_g2);
    } else if (source == "expansion") {
        rep = stat_report(r.params, r.z, StatSource::Expansion, with_g2);
    } else if (source == "oracle") {
        oracle::FockConfig cfg;
        if (!dims.empty()) {
            if (dims.size() != kModeCount) throw ParseError("--dims needs seven values");
            std::copy(dims.begin(), dims.end(), cfg.dims.begin());
        }
        rep = oracle::oracle_stats(r.params, cfg, r.z, with_g2);
    } else {
        throw ParseError("--source must be closed, expansion or oracle");
    }
    Sink sink(g, "stats.csv");
    write_header(*sink.os, "stats source=" + std::string(source_name(rep.source)), r.params);
    CsvWriter w(*sink.os);
    std::vector<std::string> cols{"z"};
    for (StatKey k : kStatKeys) cols.push_back("D_" + std::string(stat_name(k)));
    for (StatKey k : kStatKeys) cols.push_back("class_" + std::string(stat_name(k)));
    if (rep.g2)
        for (StatKey k : kStatKeys) cols.push_back("g2_" + std::string(stat_name(k)));
    w.columns(cols);
    std::vector<Cell> row{r.z};
    for (StatKey k : kStatKeys) row.emplace_back(rep.D[k]);
    for (StatKey k : kStatKeys) row.emplace_back(std::string(bunching_name(rep.bunching(k))));
    if (rep.g2)
        for (StatKey k : kStatKeys) row.emplace_back((*rep.g2)[k]);
    w.row(row);
    return 0;
}

int cmd_figure(const Globals& g, const std::vector<std::string>& names) {
    std::vector<Figure> figs;
    for (const std::string& n : names) {
        if (n == "all") {
            const auto all = all_figures();
            figs.insert(figs.end(), all.begin(), all.end());
            continue;
        }
        const auto f = figure_from_name(n);
        if (!f) throw ParseError("unknown figure preset '" + n + "'");
        figs.push_back(*f);
    }
    const std::filesystem::path out = g.out.empty() ? "figures" : g.out;
    for (Figure f : figs) std::cout << write_figure(f, out, g.threads).string() << '\n';
    return 0;
}

int cmd_validate(const Globals& g, const std::string& level) {
    if (level != "fast" && level != "full") throw ParseError("validate level must be fast or full");
    ValidateOptions o;
    o.seed = g.seed;
    const auto results = run_validation(level == "full", o);
    print_table(std::cout, results);
    return all_pass(results) ? 0 : kExitFailure;
}

int cmd_oracle(const Globals& g, const PointArgs& a, const std::vector<int>& dims, bool certify) {
    const Resolved r = resolve(g, a);
    const SystemParams p = apply_scenario(r.params, r.scenario);
    guard(check_validity(p, r.z).strength);
    oracle::FockConfig cfg;
    if (!dims.empty()) {
        if (dims.size() != kModeCount) throw ParseError("--dims needs seven values");
        std::copy(dims.begin(), dims.end(), cfg.dims.begin());
    }
    const ZenoReport o = oracle::oracle_zeno(p, cfg, r.z, r.scenario);
    const ZenoReport an = zeno(p, r.z, r.scenario);
    Sink sink(g, "oracle.csv");
    std::string dims_text = "dims:";
    for (int d : cfg.dims) dims_text += " " + std::to_string(d);
    write_header(*sink.os, "oracle scenario=" + std::string(scenario_name(r.scenario)) + " " + dims_text, p);
    CsvWriter w(*sink.os);
    if (certify) {
        const oracle::TruncationReport t = oracle::certify_truncation(p, cfg, r.z);
        std::string grow;
        for (Mode m : t.grow) grow += " " + std::string(mode_name(m));
        w.comment(std::string("truncation: ") + (t.certified ? "certified" : "NOT certified") +
                  " max change " + format_number(t.max_change) + (t.reason.empty() ? "" : "; " + t.reason) +
                  (grow.empty() ? "" : "; grow:" + grow));
    }
    w.columns({"z", "channel", "oracle", "analytic", "difference"});
    for (Channel c : kChannels) {
        if (!o.applicable[static_cast<int>(c)]) continue;
        w.row({r.z, std::string(channel_name(c)), o[c], an[c], o[c] - an[c]});
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zeno and antibunching parameters of a probed hyper-Raman waveguide"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--params", g.params_file, "JSON parameter file (default: the figure parameter set)");
    app.add_option("--out", g.out, "output directory");
    app.add_option("--threads", g.threads, "worker threads for sweeps")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "seed for randomized validation draws");

    PointArgs pa;
    std::string evaluator = "closed", source = "closed", level = "fast", spec_file;
    std::vector<std::string> figures;
    std::vector<int> dims;
    bool with_g2 = false, certify = false;

    auto* zeno_cmd = app.add_subcommand("zeno", "Zeno parameters at one point");
    add_point_args(zeno_cmd, pa);
    zeno_cmd->add_option("--evaluator", evaluator, "closed|general");

    auto* sweep_cmd = app.add_subcommand("sweep", "grid sweep from a JSON spec");
    sweep_cmd->add_option("spec", spec_file, "sweep spec file")->required();

    auto* stats_cmd = app.add_subcommand("stats", "antibunching discriminants at one point");
    add_point_args(stats_cmd, pa);
    stats_cmd->add_option("--source", source, "closed|expansion|oracle");
    stats_cmd->add_flag("--g2", with_g2, "also print normalized g2");
    stats_cmd->add_option("--dims", dims, "oracle truncation dims (seven values)");

    auto* figure_cmd = app.add_subcommand("figure", "write figure data and plot scripts");
    figure_cmd->add_option("presets", figures, "Fig2a..Fig6d, Fig8 or all")->required();

    auto* validate_cmd = app.add_subcommand("validate", "run the property checks");
    validate_cmd->add_option("level", level, "fast|full");

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force Fock-space Zeno parameters");
    add_point_args(oracle_cmd, pa);
    oracle_cmd->add_option("--dims", dims, "truncation dims (seven values)");
    oracle_cmd->add_flag("--certify", certify, "rerun with every dim + 2 and report convergence");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*zeno_cmd) return cmd_zeno(g, pa, evaluator);
        if (*sweep_cmd) return cmd_sweep(g, spec_file);
        if (*stats_cmd) return cmd_stats(g, pa, source, with_g2, dims);
        if (*figure_cmd) return cmd_figure(g, figures);
        if (*validate_cmd) return cmd_validate(g, level);
        if (*oracle_cmd) return cmd_oracle(g, pa, dims, certify);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ValidityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}
