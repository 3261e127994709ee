#include "structsums/io.hpp"

#include "structsums/csv.hpp"

#include <doctest.h>

#include <filesystem>

using namespace structsums;

namespace {

std::filesystem::path temp_dir(const std::string& tag) {
    auto p = std::filesystem::temp_directory_path() / ("structsums_test_" + tag);
    std::filesystem::create_directories(p);
    return p;
}

} // namespace

TEST_CASE("csv doubles round-trip exactly") {
    for (double v : {0.1, -3.25e-17, 12345.6789, 1.0 / 3.0, -0.0, 5e300}) {
        const std::string s = csv::format_double(v);
        CHECK(csv::parse_double(s) == v);
    }
}

TEST_CASE("csv quoting round-trips") {
    csv::Table t;
    t.header = {"a", "b"};
    t.rows.push_back({"plain", "with,comma"});
    t.rows.push_back({"with\"quote", "multi\nline"});
    const auto back = csv::read_string(csv::to_string(t));
    CHECK(back.header == t.header);
    CHECK(back.rows == t.rows);
}

TEST_CASE("configuration JSON round-trips bit for bit") {
    const auto lat = make_hexagonal_lattice();
    const DiskConfiguration config(lat, {cplx(0.1, 0.2), cplx(-0.3, 0.11)}, {0.04, 0.05});
    const auto text = io::config_to_json(config, R"({"label":"demo"})");
    const auto back = io::config_from_json_text(text);
    CHECK(back.config.centers() == config.centers());
    CHECK(back.config.radii() == config.radii());
    CHECK(back.config.lattice().same_as(config.lattice()));
    CHECK(back.metadata_json.find("demo") != std::string::npos);
}

TEST_CASE("explicit-period lattices round-trip through JSON") {
    const auto rect = std::make_shared<const Lattice>(
        Lattice(cplx(2.0, 0.0), cplx(0.0, 0.5), 16));
    const DiskConfiguration config(rect, {cplx(0.4, 0.1)}, {0.06});
    const auto back = io::config_from_json_text(io::config_to_json(config));
    CHECK(back.config.lattice().omega1() == rect->omega1());
    CHECK(back.config.lattice().omega2() == rect->omega2());
}

TEST_CASE("csv configuration import, with and without header") {
    const std::string with_header = "x,y,r\n0.1,0.2,0.04\n-0.3,0.11,0.05\n";
    const std::string bare = "0.1,0.2,0.04\n-0.3,0.11,0.05\n";
    const auto a = io::config_from_csv_text(with_header, make_square_lattice());
    const auto b = io::config_from_csv_text(bare, make_square_lattice());
    CHECK(a.centers() == b.centers());
    CHECK(a.radii() == b.radii());
}

TEST_CASE("manifest round-trips") {
    io::RunManifest m;
    m.tool_version = "structsums 0.1.0";
    m.command = "generate";
    m.argv = {"generate", "--spec", "s.json"};
    m.seed = 42;
    m.outputs = {"a.json", "b.json"};
    m.timestamp = "2024-01-01T00:00:00Z";
    const auto back = io::manifest_from_json_text(io::manifest_to_json(m));
    CHECK(back.command == m.command);
    CHECK(back.argv == m.argv);
    CHECK(back.seed == m.seed);
    CHECK(back.outputs == m.outputs);
}

TEST_CASE("glob expansion is sorted and wildcard-aware") {
    const auto dir = temp_dir("glob");
    for (const char* name : {"s_02.json", "s_00.json", "s_01.json", "other.txt"})
        io::write_text_file((dir / name).string(), "{}");
    const auto files = io::expand_glob((dir / "s_*.json").string());
    REQUIRE(files.size() == 3);
    CHECK(files[0] < files[1]);
    CHECK(files[1] < files[2]);
    CHECK(io::expand_glob((dir / "missing_*.json").string()).empty());
    std::filesystem::remove_all(dir);
}
