#pragma once

#include "pls/experiment.hpp"

#include <filesystem>
#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace pls {

struct KeyValue {
    std::string key;
    std::string value;
};

/// Reads `key = value` lines; blank lines and lines starting with '#' are skipped.
/// List values are comma separated.
std::vector<KeyValue> read_key_values(std::istream& in, const std::string& source);
std::vector<KeyValue> read_config_file(const std::filesystem::path& path);

/// Parses "key=value" as given to --set.
KeyValue parse_assignment(const std::string& text);

/// Starts from the defaults, applies the last `scenario` entry's preset, then
/// every other entry in order. Throws ConfigError / UnknownScenario.
SweepSpec resolve_config(const std::vector<KeyValue>& entries);

SweepSpec parse_config(const std::filesystem::path& path);

/// Every resolvable key of spec, one `key = value` per line, in a fixed order.
/// resolve_config(read_key_values(format_spec(s))) == s.
std::string format_spec(const SweepSpec& spec);

inline constexpr const char* kArtifactVersion = "1.0.0";

struct RunManifest {
    SweepSpec spec;
    std::string version = kArtifactVersion;
    std::string timestamp;
    std::vector<std::pair<std::string, std::filesystem::path>> outputs;
};

std::string format_manifest(const RunManifest& manifest);
void write_manifest(const RunManifest& manifest, const std::filesystem::path& path);

/// Current UTC time as ISO-8601.
std::string utc_timestamp();

}  // namespace pls
