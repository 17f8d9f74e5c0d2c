// Command-line driver: resolves a sweep from a config file, scenario preset and
// overrides, runs it, and writes results.csv, summary.txt and manifest.txt.

#include "pls/config.hpp"
#include "pls/error.hpp"
#include "pls/experiment.hpp"
#include "pls/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

enum ExitCode { kOk = 0, kConfigError = 2, kNumericalFailure = 3, kIoError = 4 };

int exit_code_for(pls::ErrorKind kind) {
    switch (kind) {
        case pls::ErrorKind::CellFailed:
        case pls::ErrorKind::RankDeficient:
        case pls::ErrorKind::SingularGram:
        case pls::ErrorKind::NoNullspace:
        case pls::ErrorKind::ZeroChannel:
            return kNumericalFailure;
        case pls::ErrorKind::IoError:
            return kIoError;
        default:
            return kConfigError;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo secrecy simulator for massive MIMO downlink precoding"};

    std::string config_path;
    std::string scenario;
    std::optional<long long> seed;
    std::optional<int> trials;
    std::string out_dir = "out";
    std::string schemes;
    std::string baseline = "MRT";
    std::vector<std::string> overrides;
    unsigned threads = 0;
    bool emit_cdf = false;

    app.add_option("--config", config_path, "Key-value configuration file (a manifest works too)");
    app.add_option("--scenario", scenario, "Preset: snr_sweep, outage_sweep, ee_sweep, "
                                           "antenna_scaling, cdf, heatmap, eve_antennas, "
                                           "band_compare, summary");
    app.add_option("--seed", seed, "Master seed");
    app.add_option("--trials", trials, "Monte Carlo trials per cell");
    app.add_option("--out", out_dir, "Output directory");
    app.add_option("--schemes", schemes, "Comma-separated subset of MRT,ZF,MRT_AN,ROBUST");
    app.add_option("--set", overrides, "key=value override (repeatable)");
    app.add_option("--baseline", baseline, "Reference scheme for effect sizes in summary.txt");
    app.add_option("--threads", threads, "Worker threads (0: all cores)");
    app.add_flag("--cdf", emit_cdf, "Write per-cell CDF files (always on for the cdf scenario)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfigError;
    }

    pls::SweepSpec spec;
    try {
        std::vector<pls::KeyValue> entries;
        if (!config_path.empty()) entries = pls::read_config_file(config_path);
        if (!scenario.empty()) entries.push_back({"scenario", scenario});
        for (const auto& o : overrides) entries.push_back(pls::parse_assignment(o));
        if (seed) entries.push_back({"master_seed", std::to_string(*seed)});
        if (trials) entries.push_back({"num_trials", std::to_string(*trials)});
        if (!schemes.empty()) entries.push_back({"schemes", schemes});
        spec = pls::resolve_config(entries);
    } catch (const pls::Error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    }

    try {
        const auto cells = pls::run_grid(spec, {threads});

        const fs::path dir(out_dir);
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) throw pls::Error(pls::ErrorKind::IoError, "cannot create " + dir.string());

        pls::RunManifest manifest{spec, pls::kArtifactVersion, pls::utc_timestamp(), {}};
        pls::emit_csv(cells, dir / "results.csv");
        manifest.outputs.emplace_back("results", "results.csv");

        if (spec.schemes.size() >= 2) {
            const auto base = pls::scheme_from_string(baseline);
            const bool has_base = std::find(spec.schemes.begin(), spec.schemes.end(), base) != spec.schemes.end();
            pls::emit_summary(cells, has_base ? base : spec.schemes.front(), dir / "summary.txt");
            manifest.outputs.emplace_back("summary", "summary.txt");
        }
        if (emit_cdf || spec.scenario == "cdf") {
            const auto files = pls::emit_cdf_files(cells, dir);
            manifest.outputs.emplace_back("cdf_count", std::to_string(files.size()));
        }
        pls::write_manifest(manifest, dir / "manifest.txt");

        std::cout << "wrote " << cells.size() << " cells to " << (dir / "results.csv").string() << "\n";
    } catch (const pls::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
    return kOk;
}
