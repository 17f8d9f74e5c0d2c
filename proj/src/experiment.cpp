#include "pls/experiment.hpp"

#include "pls/error.hpp"
#include "pls/stats.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <thread>

namespace pls {

namespace {

constexpr std::uint64_t kRetryTag = 0x7265747279ULL;

std::string describe(const GridPoint& p) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "scheme=%s M=%d K=%d Ne=%d band=%s snr_db=%g rho=%g csi=%g",
                  std::string(to_string(p.scheme)).c_str(), p.config.m, p.config.k, p.config.ne,
                  p.config.band.name.c_str(), p.config.snr_db, p.config.rho,
                  p.config.csi_error_var);
    return buf;
}

template <typename T>
void require_nonempty(const std::vector<T>& v, const char* field) {
    if (v.empty()) throw Error(ErrorKind::ConfigError, std::string(field) + " must be nonempty");
}

}  // namespace

void validate(const SweepSpec& spec) {
    require_nonempty(spec.m_values, "m_values");
    require_nonempty(spec.snr_values, "snr_values");
    require_nonempty(spec.rho_values, "rho_values");
    require_nonempty(spec.ne_values, "ne_values");
    require_nonempty(spec.csi_values, "csi_values");
    require_nonempty(spec.bands, "bands");
    require_nonempty(spec.schemes, "schemes");
    for (const auto& p : expand_grid(spec)) {
        validate(p.config);
        if (p.scheme == SchemeId::MRT_AN && p.config.m <= p.config.k) {
            throw Error(ErrorKind::ConfigError, "m must be > k for MRT_AN (artificial noise needs a null space)");
        }
    }
}

std::vector<GridPoint> expand_grid(const SweepSpec& spec) {
    std::vector<GridPoint> grid;
    for (const auto& band : spec.bands)
        for (int m : spec.m_values)
            for (int ne : spec.ne_values)
                for (double csi : spec.csi_values)
                    for (double rho : spec.rho_values)
                        for (double snr : spec.snr_values)
                            for (SchemeId scheme : spec.schemes) {
                                GridPoint p{spec.base, scheme};
                                p.config.band = band;
                                p.config.m = m;
                                p.config.ne = ne;
                                p.config.csi_error_var = csi;
                                p.config.rho = rho;
                                p.config.snr_db = snr;
                                grid.push_back(std::move(p));
                            }
    return grid;
}

LinkSample run_trial(const SystemConfig& cfg, SchemeId scheme, int trial_index, int attempt) {
    if (trial_index < 0 || trial_index >= cfg.num_trials) {
        throw Error(ErrorKind::ConfigError, "trial_index out of range");
    }
    RngStream rng(cfg.master_seed, static_cast<std::uint64_t>(trial_index));
    if (attempt > 0) {
        rng = rng.child(kRetryTag + static_cast<std::uint64_t>(attempt));
    }
    const ChannelSet channels = draw_channel_set(cfg, rng);
    const auto alpha = robust_alpha(cfg.m, cfg.k, effective_csi_error_var(cfg), cfg.robust_alpha_scale);

    const auto t0 = std::chrono::steady_clock::now();
    const PrecoderOutput precoder = build_precoder(scheme, channels.h_hat, alpha);
    const auto t1 = std::chrono::steady_clock::now();

    LinkSample s = evaluate_link(channels, precoder, allocation_for(cfg, scheme),
                                 cfg.target_secrecy_rate, cfg.circuit_power_per_antenna);
    if (cfg.record_timing) {
        s.precoder_time = std::chrono::duration<double>(t1 - t0).count();
    }
    return s;
}

AggregateCell aggregate(const GridPoint& point, const std::vector<LinkSample>& samples,
                        double target_secrecy_rate) {
    AggregateCell cell;
    cell.point = point;
    cell.n = samples.size();
    if (samples.empty()) {
        throw Error(ErrorKind::EmptySamples, "aggregate: no trials");
    }
    std::size_t outages = 0;
    std::size_t user_slots = 0;
    double time_sum = 0.0;
    for (const auto& s : samples) {
        std::size_t trial_outages = 0;
        for (double r : s.secrecy_rate) {
            if (r < target_secrecy_rate) ++trial_outages;
        }
        outages += trial_outages;
        user_slots += s.secrecy_rate.size();
        cell.trial_outage.push_back(static_cast<double>(trial_outages) /
                                    static_cast<double>(s.secrecy_rate.size()));
        cell.trial_ee.push_back(s.energy_efficiency);
        cell.trial_sum_secrecy.push_back(s.sum_secrecy);
        time_sum += s.precoder_time;
    }
    const auto summary = stats::summarize(cell.trial_sum_secrecy);
    cell.mean_sum_secrecy = summary.mean;
    if (cell.n >= 2) {
        cell.ci_halfwidth = stats::mean_ci95(cell.trial_sum_secrecy).halfwidth;
    }
    cell.outage_prob = static_cast<double>(outages) / static_cast<double>(user_slots);
    cell.mean_ee = stats::summarize(cell.trial_ee).mean;
    cell.mean_precoder_time = time_sum / static_cast<double>(cell.n);
    cell.secrecy_samples = cell.trial_sum_secrecy;
    std::sort(cell.secrecy_samples.begin(), cell.secrecy_samples.end());
    return cell;
}

std::vector<AggregateCell> run_grid(const SweepSpec& spec, const RunOptions& options) {
    validate(spec);
    const std::vector<GridPoint> grid = expand_grid(spec);
    const auto trials = static_cast<std::size_t>(spec.base.num_trials);
    const std::size_t jobs = grid.size() * trials;

    std::vector<std::vector<LinkSample>> results(grid.size(), std::vector<LinkSample>(trials));
    std::vector<std::string> failures(grid.size());
    std::vector<std::atomic<bool>> failed(grid.size());
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t job = next++; job < jobs; job = next++) {
            const std::size_t cell = job / trials;
            const int trial = static_cast<int>(job % trials);
            if (failed[cell].load()) continue;
            const GridPoint& p = grid[cell];
            try {
                try {
                    results[cell][static_cast<std::size_t>(trial)] = run_trial(p.config, p.scheme, trial, 0);
                } catch (const Error& e) {
                    if (!e.is_numerical()) throw;
                    results[cell][static_cast<std::size_t>(trial)] = run_trial(p.config, p.scheme, trial, 1);
                }
            } catch (const Error& e) {
                std::lock_guard lock(failure_mutex);
                if (!failed[cell].exchange(true)) {
                    failures[cell] = "trial " + std::to_string(trial) + ": " + e.what();
                }
            }
        }
    };

    unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(jobs, 1))));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }

    std::vector<AggregateCell> cells;
    cells.reserve(grid.size());
    for (std::size_t c = 0; c < grid.size(); ++c) {
        if (failed[c].load()) {
            throw Error(ErrorKind::CellFailed, describe(grid[c]) + " (" + failures[c] + ")");
        }
        cells.push_back(aggregate(grid[c], results[c], grid[c].config.target_secrecy_rate));
    }
    return cells;
}

SweepSpec scenario_preset(const std::string& name) {
    SweepSpec spec;
    spec.scenario = name;
    if (name == "snr_sweep" || name == "outage_sweep" || name == "ee_sweep" || name == "heatmap" ||
        name == "summary") {
        return spec;
    }
    if (name == "antenna_scaling") {
        spec.m_values = {32, 64, 128, 256};
        spec.snr_values = {20};
        return spec;
    }
    if (name == "cdf") {
        spec.snr_values = {20};
        return spec;
    }
    if (name == "eve_antennas") {
        spec.ne_values = {1, 2, 4};
        spec.snr_values = {20};
        return spec;
    }
    if (name == "band_compare") {
        spec.bands = {band_sub6(), band_mmwave()};
        return spec;
    }
    throw Error(ErrorKind::UnknownScenario, "'" + name + "'");
}

}  // namespace pls
