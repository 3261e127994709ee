#include "structsums/io.hpp"

#include "structsums/csv.hpp"
#include "structsums/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace structsums::io {

namespace {

using nlohmann::json;

json lattice_to_json(const Lattice& lattice) {
    const Lattice square = Lattice::square(2);
    const Lattice hex = Lattice::hexagonal(2);
    if (lattice.same_as(square)) return json{{"preset", "square"}};
    if (lattice.same_as(hex)) return json{{"preset", "hexagonal"}};
    return json{{"omega1", {lattice.omega1().real(), lattice.omega1().imag()}},
                {"omega2", {lattice.omega2().real(), lattice.omega2().imag()}}};
}

LatticePtr lattice_from_json(const json& j) {
    if (j.is_string()) return std::make_shared<const Lattice>(Lattice::preset(j.get<std::string>()));
    if (j.contains("preset"))
        return std::make_shared<const Lattice>(Lattice::preset(j.at("preset").get<std::string>()));
    const auto w1 = j.at("omega1");
    const auto w2 = j.at("omega2");
    return std::make_shared<const Lattice>(
        Lattice(cplx(w1.at(0).get<double>(), w1.at(1).get<double>()),
                cplx(w2.at(0).get<double>(), w2.at(1).get<double>())));
}

} // namespace

std::string config_to_json(const DiskConfiguration& config, const std::string& metadata_json) {
    json j;
    j["schema"] = "disk-config-v1";
    j["lattice"] = lattice_to_json(config.lattice());
    json disks = json::array();
    for (int k = 0; k < config.size(); ++k) {
        const auto i = static_cast<std::size_t>(k);
        disks.push_back(json{{"x", config.centers()[i].real()},
                             {"y", config.centers()[i].imag()},
                             {"r", config.radii()[i]}});
    }
    j["disks"] = std::move(disks);
    j["metadata"] = json::parse(metadata_json);
    return j.dump(2) + "\n";
}

StoredConfig config_from_json_text(const std::string& text) {
    const json j = json::parse(text);
    auto lattice = lattice_from_json(j.at("lattice"));
    std::vector<cplx> centers;
    std::vector<double> radii;
    for (const auto& d : j.at("disks")) {
        centers.emplace_back(d.at("x").get<double>(), d.at("y").get<double>());
        radii.push_back(d.at("r").get<double>());
    }
    std::string meta = "{}";
    if (j.contains("metadata")) meta = j.at("metadata").dump();
    return {DiskConfiguration(std::move(lattice), std::move(centers), std::move(radii)),
            std::move(meta)};
}

StoredConfig load_config(const std::string& path) {
    return config_from_json_text(read_text_file(path));
}

void save_config(const std::string& path, const DiskConfiguration& config,
                 const std::string& metadata_json) {
    write_text_file(path, config_to_json(config, metadata_json));
}

DiskConfiguration config_from_csv_text(const std::string& text, LatticePtr lattice) {
    const auto table = csv::read_string(text);
    std::vector<cplx> centers;
    std::vector<double> radii;
    auto parse_row = [&](const std::vector<std::string>& row) {
        if (row.size() != 3)
            throw std::invalid_argument("config csv: expected three columns x,y,r");
        centers.emplace_back(csv::parse_double(row[0]), csv::parse_double(row[1]));
        radii.push_back(csv::parse_double(row[2]));
    };
    // header row is optional: treat the first row as data when numeric
    bool header_is_data = true;
    try {
        (void)csv::parse_double(table.header.at(0));
    } catch (const std::invalid_argument&) {
        header_is_data = false;
    }
    if (header_is_data) parse_row(table.header);
    for (const auto& row : table.rows) parse_row(row);
    return DiskConfiguration(std::move(lattice), std::move(centers), std::move(radii));
}

DiskConfiguration load_config_csv(const std::string& path, LatticePtr lattice) {
    return config_from_csv_text(read_text_file(path), std::move(lattice));
}

StoredConfig load_config_any(const std::string& path) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
        return {load_config_csv(path, make_square_lattice()), "{}"};
    return load_config(path);
}

GeneratorSpec spec_from_json_text(const std::string& text) {
    const json j = json::parse(text);
    GeneratorSpec s;
    s.protocol = protocol_from_string(j.at("protocol").get<std::string>());
    if (j.contains("lattice")) {
        if (!j.at("lattice").is_string())
            throw std::invalid_argument("generator spec: lattice must be a preset name");
        s.lattice = j.at("lattice").get<std::string>();
    } else if (s.protocol == Protocol::hexagonal) {
        s.lattice = "hexagonal";
    }
    s.n = j.at("n").get<int>();
    s.concentration = j.at("concentration").get<double>();
    if (j.contains("radii_law")) {
        const auto& law = j.at("radii_law");
        s.radii_law = radii_law_from_string(law.is_string()
                                                ? law.get<std::string>()
                                                : law.at("kind").get<std::string>());
    }
    if (j.contains("step_law")) s.step_law = step_law_from_string(j.at("step_law").get<std::string>());
    if (j.contains("cycles")) s.cycles = j.at("cycles").get<int>();
    if (j.contains("shape_id")) s.shape_id = j.at("shape_id").get<int>();
    if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("max_attempts")) s.max_attempts = j.at("max_attempts").get<std::uint64_t>();
    return s;
}

GeneratorSpec load_spec(const std::string& path) {
    return spec_from_json_text(read_text_file(path));
}

std::string spec_to_json(const GeneratorSpec& spec) {
    json j;
    j["schema"] = "generator-spec-v1";
    j["protocol"] = to_string(spec.protocol);
    j["lattice"] = spec.lattice;
    j["n"] = spec.n;
    j["concentration"] = spec.concentration;
    j["radii_law"] = to_string(spec.radii_law);
    j["step_law"] = to_string(spec.step_law);
    j["cycles"] = spec.cycles;
    j["shape_id"] = spec.shape_id;
    j["seed"] = spec.seed;
    j["max_attempts"] = spec.max_attempts;
    return j.dump(2) + "\n";
}

std::string manifest_to_json(const RunManifest& m) {
    json j;
    j["schema"] = "run-manifest-v1";
    j["tool_version"] = m.tool_version;
    j["command"] = m.command;
    j["argv"] = m.argv;
    j["seed"] = m.seed;
    j["outputs"] = m.outputs;
    j["timestamp"] = m.timestamp;
    return j.dump(2) + "\n";
}

RunManifest manifest_from_json_text(const std::string& text) {
    const json j = json::parse(text);
    RunManifest m;
    m.tool_version = j.at("tool_version").get<std::string>();
    m.command = j.at("command").get<std::string>();
    m.argv = j.at("argv").get<std::vector<std::string>>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.outputs = j.at("outputs").get<std::vector<std::string>>();
    m.timestamp = j.at("timestamp").get<std::string>();
    return m;
}

RunManifest load_manifest(const std::string& path) {
    return manifest_from_json_text(read_text_file(path));
}

void save_manifest(const std::string& path, const RunManifest& m) {
    write_text_file(path, manifest_to_json(m));
}

std::string feature_meta_to_json(const FeatureTableMeta& m) {
    json j;
    j["schema"] = "feature-table-v1";
    j["q"] = m.q;
    j["projection"] = m.projection;
    j["lattice"] = m.lattice;
    j["generator"] = json::parse(m.generator_json);
    j["seed"] = m.seed;
    j["feature_names"] = m.feature_names;
    return j.dump(2) + "\n";
}

std::vector<std::string> expand_glob(const std::string& pattern) {
    namespace fs = std::filesystem;
    const fs::path p(pattern);
    const fs::path dir = p.has_parent_path() ? p.parent_path() : fs::path(".");
    const std::string name = p.filename().string();
    if (name.find_first_of("*?") == std::string::npos) {
        if (fs::exists(p)) return {pattern};
        return {};
    }
    // simple wildcard matcher over the filename component
    auto match = [](const std::string& text, const std::string& pat) {
        std::size_t t = 0, g = 0, star_t = std::string::npos, star_g = std::string::npos;
        while (t < text.size()) {
            if (g < pat.size() && (pat[g] == '?' || pat[g] == text[t])) {
                ++t;
                ++g;
            } else if (g < pat.size() && pat[g] == '*') {
                star_g = g++;
                star_t = t;
            } else if (star_g != std::string::npos) {
                g = star_g + 1;
                t = ++star_t;
            } else {
                return false;
            }
        }
        while (g < pat.size() && pat[g] == '*') ++g;
        return g == pat.size();
    };
    std::vector<std::string> out;
    if (!fs::is_directory(dir)) return out;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        if (match(entry.path().filename().string(), name)) out.push_back(entry.path().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << text;
    if (!f) throw std::runtime_error("write failed: " + path);
}

} // namespace structsums::io
