#include "pls/config.hpp"

#include "pls/error.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

namespace pls {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(value);
    while (std::getline(in, token, ',')) {
        token = trim(token);
        if (!token.empty()) out.push_back(token);
    }
    return out;
}

double to_double(const std::string& key, const std::string& text) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw Error(ErrorKind::ConfigError, key + ": '" + text + "' is not a number");
    }
    return v;
}

long long to_integer(const std::string& key, const std::string& text) {
    long long v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw Error(ErrorKind::ConfigError, key + ": '" + text + "' is not an integer");
    }
    return v;
}

int to_int(const std::string& key, const std::string& text) {
    const long long v = to_integer(key, text);
    if (v < -2147483647LL || v > 2147483647LL) {
        throw Error(ErrorKind::ConfigError, key + ": '" + text + "' out of range");
    }
    return static_cast<int>(v);
}

bool to_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "1" || text == "on") return true;
    if (text == "false" || text == "0" || text == "off") return false;
    throw Error(ErrorKind::ConfigError, key + " must be true or false, got '" + text + "'");
}

std::vector<double> to_doubles(const std::string& key, const std::string& value) {
    std::vector<double> out;
    for (const auto& t : split_list(value)) out.push_back(to_double(key, t));
    return out;
}

std::vector<int> to_ints(const std::string& key, const std::string& value) {
    std::vector<int> out;
    for (const auto& t : split_list(value)) out.push_back(to_int(key, t));
    return out;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <typename T, typename F>
std::string join(const std::vector<T>& values, F&& f) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += f(values[i]);
    }
    return out;
}

bool is_informational(const std::string& key) {
    return key == "artifact_version" || key == "timestamp" || key.rfind("output.", 0) == 0;
}

void apply(SweepSpec& spec, const KeyValue& kv) {
    const auto& key = kv.key;
    const auto& v = kv.value;
    auto& b = spec.base;
    if (key == "k") b.k = to_int(key, v);
    else if (key == "m_values") spec.m_values = to_ints(key, v);
    else if (key == "snr_values") spec.snr_values = to_doubles(key, v);
    else if (key == "rho_values") spec.rho_values = to_doubles(key, v);
    else if (key == "ne_values") spec.ne_values = to_ints(key, v);
    else if (key == "csi_values") spec.csi_values = to_doubles(key, v);
    else if (key == "bands") {
        spec.bands.clear();
        for (const auto& name : split_list(v)) spec.bands.push_back(band_by_name(name));
    } else if (key == "schemes") {
        spec.schemes.clear();
        for (const auto& name : split_list(v)) spec.schemes.push_back(scheme_from_string(name));
    } else if (key == "num_trials") b.num_trials = to_int(key, v);
    else if (key == "master_seed") {
        const long long seed = to_integer(key, v);
        if (seed < 0) throw Error(ErrorKind::ConfigError, "master_seed must be >= 0");
        b.master_seed = static_cast<std::uint64_t>(seed);
    } else if (key == "target_secrecy_rate") b.target_secrecy_rate = to_double(key, v);
    else if (key == "circuit_power_per_antenna") b.circuit_power_per_antenna = to_double(key, v);
    else if (key == "csi_model") {
        if (v == "inject") b.csi_model = CsiModel::ErrorInjection;
        else if (v == "pilot") b.csi_model = CsiModel::Pilot;
        else throw Error(ErrorKind::ConfigError, "csi_model must be inject or pilot, got '" + v + "'");
    } else if (key == "pilot_power") b.pilot_power = to_double(key, v);
    else if (key == "robust_alpha_scale") b.robust_alpha_scale = to_double(key, v);
    else if (key == "pathloss_mode") {
        if (v == "fixed") b.pathloss_mode = PathlossMode::FixedCoefficient;
        else if (v == "distance") b.pathloss_mode = PathlossMode::DistanceBased;
        else throw Error(ErrorKind::ConfigError, "pathloss_mode must be fixed or distance, got '" + v + "'");
    } else if (key == "user_distances") b.distance.user_distances_m = to_doubles(key, v);
    else if (key == "eve_distance") b.distance.eve_distance_m = to_double(key, v);
    else if (key == "reference_distance") b.distance.reference_distance_m = to_double(key, v);
    else if (key == "pathloss_exponent") b.distance.exponent = to_double(key, v);
    else if (key == "record_timing") b.record_timing = to_bool(key, v);
    else if (key == "scenario" || is_informational(key)) return;
    else throw Error(ErrorKind::ConfigError, "unknown key '" + key + "'");
}

}  // namespace

std::vector<KeyValue> read_key_values(std::istream& in, const std::string& source) {
    std::vector<KeyValue> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorKind::ConfigError,
                        source + ":" + std::to_string(line_no) + ": expected 'key = value'");
        }
        out.push_back({trim(std::string_view(t).substr(0, eq)),
                       trim(std::string_view(t).substr(eq + 1))});
    }
    return out;
}

std::vector<KeyValue> read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::ConfigError, "cannot open config file " + path.string());
    }
    return read_key_values(in, path.string());
}

KeyValue parse_assignment(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
        throw Error(ErrorKind::ConfigError, "expected key=value, got '" + text + "'");
    }
    return {trim(std::string_view(text).substr(0, eq)), trim(std::string_view(text).substr(eq + 1))};
}

SweepSpec resolve_config(const std::vector<KeyValue>& entries) {
    SweepSpec spec;
    const auto scenario = std::find_if(entries.rbegin(), entries.rend(),
                                       [](const KeyValue& kv) { return kv.key == "scenario"; });
    if (scenario != entries.rend() && !scenario->value.empty()) {
        spec = scenario_preset(scenario->value);
    }
    for (const auto& kv : entries) apply(spec, kv);
    validate(spec);
    return spec;
}

SweepSpec parse_config(const std::filesystem::path& path) {
    return resolve_config(read_config_file(path));
}

std::string format_spec(const SweepSpec& spec) {
    const auto& b = spec.base;
    std::ostringstream out;
    if (!spec.scenario.empty()) out << "scenario = " << spec.scenario << "\n";
    out << "k = " << b.k << "\n";
    out << "m_values = " << join(spec.m_values, [](int v) { return std::to_string(v); }) << "\n";
    out << "snr_values = " << join(spec.snr_values, fmt_double) << "\n";
    out << "rho_values = " << join(spec.rho_values, fmt_double) << "\n";
    out << "ne_values = " << join(spec.ne_values, [](int v) { return std::to_string(v); }) << "\n";
    out << "csi_values = " << join(spec.csi_values, fmt_double) << "\n";
    out << "bands = " << join(spec.bands, [](const BandProfile& p) { return p.name; }) << "\n";
    out << "schemes = "
        << join(spec.schemes, [](SchemeId s) { return std::string(to_string(s)); }) << "\n";
    out << "num_trials = " << b.num_trials << "\n";
    out << "master_seed = " << b.master_seed << "\n";
    out << "target_secrecy_rate = " << fmt_double(b.target_secrecy_rate) << "\n";
    out << "circuit_power_per_antenna = " << fmt_double(b.circuit_power_per_antenna) << "\n";
    out << "csi_model = " << (b.csi_model == CsiModel::Pilot ? "pilot" : "inject") << "\n";
    out << "pilot_power = " << fmt_double(b.pilot_power) << "\n";
    out << "robust_alpha_scale = " << fmt_double(b.robust_alpha_scale) << "\n";
    out << "pathloss_mode = "
        << (b.pathloss_mode == PathlossMode::DistanceBased ? "distance" : "fixed") << "\n";
    out << "user_distances = " << join(b.distance.user_distances_m, fmt_double) << "\n";
    out << "eve_distance = " << fmt_double(b.distance.eve_distance_m) << "\n";
    out << "reference_distance = " << fmt_double(b.distance.reference_distance_m) << "\n";
    out << "pathloss_exponent = " << fmt_double(b.distance.exponent) << "\n";
    out << "record_timing = " << (b.record_timing ? "true" : "false") << "\n";
    return out.str();
}

std::string format_manifest(const RunManifest& manifest) {
    std::ostringstream out;
    out << "# run manifest; pass back with --config to regenerate the outputs\n";
    out << "artifact_version = " << manifest.version << "\n";
    out << "timestamp = " << manifest.timestamp << "\n";
    for (const auto& [name, path] : manifest.outputs) {
        out << "output." << name << " = " << path.string() << "\n";
    }
    out << format_spec(manifest.spec);
    return out.str();
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    out << format_manifest(manifest);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace pls
