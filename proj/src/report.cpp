#include "pls/report.hpp"

#include "pls/error.hpp"
#include "pls/stats.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace pls {

namespace {

std::string g6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string opt(const std::optional<double>& v) { return v ? g6(*v) : "unavailable"; }

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    out.close();
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
}

MetricSummary metric(const std::vector<double>& samples) {
    MetricSummary m;
    m.mean = stats::summarize(samples).mean;
    if (samples.size() >= 2) m.ci95 = stats::mean_ci95(samples).halfwidth;
    return m;
}

}  // namespace

std::string format_csv(const std::vector<AggregateCell>& cells) {
    std::ostringstream out;
    out << kCsvHeader << "\n";
    for (const auto& c : cells) {
        const auto& cfg = c.point.config;
        out << to_string(c.point.scheme) << ',' << cfg.m << ',' << cfg.k << ',' << cfg.ne << ','
            << cfg.band.name << ',' << g6(cfg.snr_db) << ',' << g6(cfg.rho) << ','
            << g6(cfg.csi_error_var) << ',' << c.n << ',' << g6(c.mean_sum_secrecy) << ','
            << (c.ci_halfwidth ? g6(*c.ci_halfwidth) : "NA") << ',' << g6(c.outage_prob) << ','
            << g6(c.mean_ee) << ',' << g6(c.mean_precoder_time) << "\n";
    }
    return out.str();
}

void emit_csv(const std::vector<AggregateCell>& cells, const std::filesystem::path& path) {
    if (cells.empty()) throw Error(ErrorKind::EmptySamples, "emit_csv: no cells");
    write_file(path, format_csv(cells));
}

std::vector<std::filesystem::path> emit_cdf_files(const std::vector<AggregateCell>& cells,
                                                  const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> paths;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& c = cells[i];
        char name[64];
        std::snprintf(name, sizeof name, "cdf_%04zu_%s.csv", i,
                      std::string(to_string(c.point.scheme)).c_str());
        std::ostringstream out;
        out << "sum_secrecy,cdf\n";
        const double n = static_cast<double>(c.secrecy_samples.size());
        for (std::size_t j = 0; j < c.secrecy_samples.size(); ++j) {
            out << g6(c.secrecy_samples[j]) << ',' << g6(static_cast<double>(j + 1) / n) << "\n";
        }
        paths.push_back(dir / name);
        write_file(paths.back(), out.str());
    }
    return paths;
}

SummaryReport build_summary(const std::vector<AggregateCell>& cells, SchemeId baseline) {
    std::vector<SchemeId> order;
    std::map<SchemeId, std::vector<double>> secrecy, outage, ee;
    for (const auto& c : cells) {
        const SchemeId s = c.point.scheme;
        if (std::find(order.begin(), order.end(), s) == order.end()) order.push_back(s);
        secrecy[s].insert(secrecy[s].end(), c.trial_sum_secrecy.begin(), c.trial_sum_secrecy.end());
        outage[s].insert(outage[s].end(), c.trial_outage.begin(), c.trial_outage.end());
        ee[s].insert(ee[s].end(), c.trial_ee.begin(), c.trial_ee.end());
    }
    if (order.size() < 2) {
        throw Error(ErrorKind::MissingScheme, "summary needs at least two schemes");
    }
    if (std::find(order.begin(), order.end(), baseline) == order.end()) {
        throw Error(ErrorKind::MissingScheme,
                    "baseline " + std::string(to_string(baseline)) + " not among the results");
    }

    SummaryReport report;
    report.baseline = baseline;
    const auto& base = secrecy[baseline];
    for (SchemeId s : order) {
        report.schemes.push_back({s, secrecy[s].size(), metric(secrecy[s]), metric(outage[s]), metric(ee[s])});

        EffectSize effect;
        effect.scheme = s;
        if (secrecy[s].size() >= 2 && base.size() >= 2) {
            try {
                effect.cohens_d = stats::cohens_d(secrecy[s], base);
                const auto w = stats::welch_t(secrecy[s], base);
                effect.welch_t = w.t;
                effect.p_value = w.p_value;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::DegenerateVariance) throw;
            }
        }
        report.effects.push_back(effect);
    }
    return report;
}

std::string format_summary(const SummaryReport& report) {
    std::ostringstream out;
    const std::string base(to_string(report.baseline));
    out << "baseline = " << base << "\n";
    out << "schemes = ";
    for (std::size_t i = 0; i < report.schemes.size(); ++i) {
        out << (i ? "," : "") << to_string(report.schemes[i].scheme);
    }
    out << "\n";
    for (const auto& s : report.schemes) {
        const std::string p = std::string(to_string(s.scheme)) + ".";
        out << p << "n = " << s.n << "\n";
        out << p << "sum_secrecy.mean = " << g6(s.sum_secrecy.mean) << "\n";
        out << p << "sum_secrecy.ci95 = " << opt(s.sum_secrecy.ci95) << "\n";
        out << p << "outage.mean = " << g6(s.outage.mean) << "\n";
        out << p << "outage.ci95 = " << opt(s.outage.ci95) << "\n";
        out << p << "ee.mean = " << g6(s.ee.mean) << "\n";
        out << p << "ee.ci95 = " << opt(s.ee.ci95) << "\n";
    }
    for (const auto& e : report.effects) {
        const std::string p = std::string(to_string(e.scheme)) + "_vs_" + base + ".sum_secrecy.";
        out << p << "cohens_d = " << opt(e.cohens_d) << "\n";
        out << p << "welch_t = " << opt(e.welch_t) << "\n";
        out << p << "p_value = " << opt(e.p_value) << "\n";
    }
    return out.str();
}

void emit_summary(const std::vector<AggregateCell>& cells, SchemeId baseline,
                  const std::filesystem::path& path) {
    write_file(path, format_summary(build_summary(cells, baseline)));
}

}  // namespace pls
