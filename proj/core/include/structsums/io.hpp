#pragma once

#include "structsums/features.hpp"
#include "structsums/microgen.hpp"

#include <optional>
#include <string>
#include <vector>

namespace structsums::io {

/// Configuration JSON: lattice (preset name or explicit periods), disk list,
/// free-form metadata echoed back on load.
struct StoredConfig {
    DiskConfiguration config;
    std::string metadata_json; // "{}" when absent
};

std::string config_to_json(const DiskConfiguration& config,
                           const std::string& metadata_json = "{}");
StoredConfig config_from_json_text(const std::string& text);
StoredConfig load_config(const std::string& path);
void save_config(const std::string& path, const DiskConfiguration& config,
                 const std::string& metadata_json = "{}");

/// Three-column x,y,r CSV (header row optional); lattice supplied separately.
DiskConfiguration config_from_csv_text(const std::string& text, LatticePtr lattice);
DiskConfiguration load_config_csv(const std::string& path, LatticePtr lattice);

/// Either a .json configuration or a .csv one (square lattice assumed).
StoredConfig load_config_any(const std::string& path);

GeneratorSpec spec_from_json_text(const std::string& text);
GeneratorSpec load_spec(const std::string& path);
std::string spec_to_json(const GeneratorSpec& spec);

/// Run manifest: enough to re-execute a command and reproduce its outputs.
struct RunManifest {
    std::string tool_version;
    std::string command;
    std::vector<std::string> argv;
    std::uint64_t seed = 0;
    std::vector<std::string> outputs;
    std::string timestamp;
};

std::string manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json_text(const std::string& text);
RunManifest load_manifest(const std::string& path);
void save_manifest(const std::string& path, const RunManifest& m);

/// Feature-table sidecar metadata (written next to the CSV as <name>.meta.json).
struct FeatureTableMeta {
    int q = 0;
    std::string projection;
    std::string lattice;
    std::string generator_json; // "{}" when unknown
    std::uint64_t seed = 0;
    std::vector<std::string> feature_names;
};

std::string feature_meta_to_json(const FeatureTableMeta& m);

/// Shell-style glob (expands '*' and '?' in the filename part), sorted.
std::vector<std::string> expand_glob(const std::string& pattern);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace structsums::io
