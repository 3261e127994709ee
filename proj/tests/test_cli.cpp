#include "structsums/csv.hpp"
#include "structsums/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace fs = std::filesystem;
using structsums::csv::parse_double;

namespace {

const std::string kCli = STRUCTSUMS_CLI_PATH;

int run_cli(const std::string& args) {
    const std::string cmd = kCli + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

fs::path work_dir(const std::string& tag) {
    auto p = fs::temp_directory_path() / ("structsums_cli_" + tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) { return structsums::io::read_text_file(p.string()); }

} // namespace

TEST_CASE("latsum emits zeros at odd n and is replayable") {
    const auto dir = work_dir("latsum");
    const auto out = (dir / "sums.csv").string();
    REQUIRE(run_cli("latsum --lattice square --nmax 8 --out " + out) == 0);
    const auto t = structsums::csv::read_file(out);
    REQUIRE(t.rows.size() == 7); // n = 2..8
    for (const auto& row : t.rows) {
        const int n = static_cast<int>(parse_double(row[0]));
        if (n % 2 == 1) {
            CHECK(parse_double(row[1]) == 0.0);
            CHECK(parse_double(row[2]) == 0.0);
        }
    }
    const std::string first = slurp(out);
    REQUIRE(run_cli("latsum --lattice square --nmax 8 --out " + out) == 0);
    CHECK(slurp(out) == first);

    // nmax=2 gives a single row
    const auto single = (dir / "single.csv").string();
    REQUIRE(run_cli("latsum --nmax 2 --out " + single) == 0);
    CHECK(structsums::csv::read_file(single).rows.size() == 1);
    fs::remove_all(dir);
}

TEST_CASE("generate writes count files and is seed-deterministic") {
    const auto dir = work_dir("generate");
    const auto spec = dir / "spec.json";
    structsums::io::write_text_file(spec.string(),
                                    R"({"protocol":"rsa","n":12,"concentration":0.25,)"
                                    R"("radii_law":"uniform","seed":77})");
    const auto out_a = dir / "a";
    const auto out_b = dir / "b";
    REQUIRE(run_cli("generate --spec " + spec.string() + " --count 5 --out-dir " +
                    out_a.string()) == 0);
    REQUIRE(run_cli("generate --spec " + spec.string() + " --count 5 --out-dir " +
                    out_b.string()) == 0);
    for (int i = 0; i < 5; ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "config_%04d.json", i);
        REQUIRE(fs::exists(out_a / name));
        CHECK(slurp(out_a / name) == slurp(out_b / name));
    }
    CHECK(fs::exists(out_a / "manifest.json"));
    fs::remove_all(dir);
}

TEST_CASE("infeasible generate exits with the numeric-error code") {
    const auto dir = work_dir("saturate");
    const auto spec = dir / "spec.json";
    structsums::io::write_text_file(
        spec.string(),
        R"({"protocol":"rsa","n":64,"concentration":0.9,"seed":1,"max_attempts":5000})");
    CHECK(run_cli("generate --spec " + spec.string() + " --count 1 --out-dir " +
                  (dir / "out").string()) == 3);
    fs::remove_all(dir);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("no-such-command") == 2);
    CHECK(run_cli("generate --count 1") == 2);        // missing required options
    CHECK(run_cli("features --q 40 --inputs x --out y") == 2); // out of range
}

TEST_CASE("features table has the expected column count and replay is byte-identical") {
    const auto dir = work_dir("features");
    const auto spec = dir / "spec.json";
    structsums::io::write_text_file(spec.string(),
                                    R"({"protocol":"rsa","n":10,"concentration":0.2,"seed":5})");
    REQUIRE(run_cli("generate --spec " + spec.string() + " --count 4 --out-dir " +
                    (dir / "cfg").string()) == 0);

    const auto table = dir / "x4_abs.csv";
    REQUIRE(run_cli("features --inputs '" + (dir / "cfg" / "config_*.json").string() +
                    "' --q 4 --projection abs --out " + table.string()) == 0);
    const auto t = structsums::csv::read_file(table.string());
    CHECK(t.header.size() == 8); // sample + 7 features of X_4
    CHECK(t.rows.size() == 4);

    // q=1 has a single feature column
    const auto table1 = dir / "x1.csv";
    REQUIRE(run_cli("features --inputs '" + (dir / "cfg" / "config_*.json").string() +
                    "' --q 1 --projection abs --out " + table1.string()) == 0);
    CHECK(structsums::csv::read_file(table1.string()).header.size() == 2);

    // replay from the manifest reproduces the bytes
    const std::string bytes = slurp(table);
    REQUIRE(run_cli("replay --manifest " + table.string() + ".manifest.json") == 0);
    CHECK(slurp(table) == bytes);

    // worker-thread count does not change the bytes
    const auto table_t1 = dir / "x4_abs_t1.csv";
    REQUIRE(run_cli("features --inputs '" + (dir / "cfg" / "config_*.json").string() +
                    "' --q 4 --projection abs --threads 1 --out " + table_t1.string()) == 0);
    CHECK(slurp(table_t1) == bytes);

    // missing inputs are an error
    CHECK(run_cli("features --inputs '" + (dir / "cfg" / "missing_*.json").string() +
                  "' --q 2 --projection abs --out " + (dir / "x.csv").string()) == 3);
    fs::remove_all(dir);
}

TEST_CASE("conduct: lambda_f = 1 gives lambda = 1; negative lambda_f errors") {
    const auto dir = work_dir("conduct");
    const auto spec = dir / "spec.json";
    structsums::io::write_text_file(spec.string(),
                                    R"({"protocol":"rsa","n":8,"concentration":0.2,"seed":9})");
    REQUIRE(run_cli("generate --spec " + spec.string() + " --count 1 --out-dir " +
                    (dir / "cfg").string()) == 0);
    const auto cfg = (dir / "cfg" / "config_0000.json").string();

    const auto out = (dir / "lambda.csv").string();
    REQUIRE(run_cli("conduct --inputs " + cfg + " --lambda-f 1 --qmax 3 --out " + out) == 0);
    const auto t = structsums::csv::read_file(out);
    CHECK(parse_double(t.rows.back()[3]) == 1.0);

    CHECK(run_cli("conduct --inputs " + cfg + " --lambda-f -2 --qmax 3 --out " +
                  (dir / "x.csv").string()) == 3);
    fs::remove_all(dir);
}

TEST_CASE("full pipeline determinism: classify outputs replay byte-identically") {
    const auto dir = work_dir("pipeline");
    // two tiny classes with different step laws
    for (int cls = 0; cls < 2; ++cls) {
        const auto spec = dir / ("spec" + std::to_string(cls) + ".json");
        structsums::io::write_text_file(
            spec.string(), std::string(R"({"protocol":"mc_walk","n":12,"concentration":0.4,)") +
                               R"("step_law":")" + (cls == 0 ? "Z2" : "Z3") +
                               R"(","cycles":6,"seed":)" + std::to_string(100 + cls) + "}");
        REQUIRE(run_cli("generate --spec " + spec.string() + " --count 8 --out-dir " +
                        (dir / ("cfg" + std::to_string(cls))).string()) == 0);
        REQUIRE(run_cli("features --inputs '" +
                        (dir / ("cfg" + std::to_string(cls)) / "*.json").string() +
                        "' --q 3 --projection abs --out " +
                        (dir / ("class" + std::to_string(cls) + ".csv")).string()) == 0);
    }
    const std::string classify_args =
        "classify --features " + (dir / "class0.csv").string() + " " +
        (dir / "class1.csv").string() + " -k 4 --repeats 5 --out-dir " + (dir / "res").string() +
        " --seed 31337";
    REQUIRE(run_cli(classify_args) == 0);
    const std::string acc = slurp(dir / "res" / "accuracy.csv");
    const std::string conf = slurp(dir / "res" / "confusion.csv");
    REQUIRE(run_cli("replay --manifest " + (dir / "res" / "manifest.json").string()) == 0);
    CHECK(slurp(dir / "res" / "accuracy.csv") == acc);
    CHECK(slurp(dir / "res" / "confusion.csv") == conf);

    // k larger than a class errors out
    CHECK(run_cli("classify --features " + (dir / "class0.csv").string() + " " +
                  (dir / "class1.csv").string() + " -k 9 --repeats 2 --out-dir " +
                  (dir / "res2").string()) == 3);
    fs::remove_all(dir);
}

TEST_CASE("environment variables feed the global flags") {
    const auto dir = work_dir("env");
    const auto spec = dir / "spec.json";
    structsums::io::write_text_file(spec.string(),
                                    R"({"protocol":"rsa","n":6,"concentration":0.2,"seed":1})");
    // seed from the environment overrides the spec file's seed
    const std::string env_run = "STRUCTSUMS_SEED=555 " + kCli + " generate --spec " +
                                spec.string() + " --out-dir " + (dir / "a").string() +
                                " >/dev/null 2>&1";
    REQUIRE(WEXITSTATUS(std::system(env_run.c_str())) == 0);
    REQUIRE(run_cli("generate --spec " + spec.string() + " --seed 555 --out-dir " +
                    (dir / "b").string()) == 0);
    CHECK(slurp(dir / "a" / "config_0000.json") == slurp(dir / "b" / "config_0000.json"));
    // and the flag wins over the environment
    const std::string both = "STRUCTSUMS_SEED=999 " + kCli + " generate --spec " +
                             spec.string() + " --seed 555 --out-dir " + (dir / "c").string() +
                             " >/dev/null 2>&1";
    REQUIRE(WEXITSTATUS(std::system(both.c_str())) == 0);
    CHECK(slurp(dir / "c" / "config_0000.json") == slurp(dir / "b" / "config_0000.json"));
    fs::remove_all(dir);
}

TEST_CASE("irregularity and fit-curve smoke") {
    const auto dir = work_dir("irr");
    const auto spec = dir / "spec.json";
    structsums::io::write_text_file(
        spec.string(), R"({"protocol":"square","n":16,"concentration":0.5,"seed":0})");
    REQUIRE(run_cli("generate --spec " + spec.string() + " --count 1 --out-dir " +
                    (dir / "cfg").string()) == 0);
    const auto out = (dir / "mu.csv").string();
    REQUIRE(run_cli("irregularity --inputs 'square=" +
                    (dir / "cfg" / "*.json").string() + "' --out " + out + " --means " +
                    (dir / "means.csv").string()) == 0);
    const auto t = structsums::csv::read_file(out);
    REQUIRE(t.rows.size() == 1);
    CHECK(parse_double(t.rows[0][2]) == doctest::Approx(2.950).epsilon(0.05));

    // empty glob errors
    CHECK(run_cli("irregularity --inputs '" + (dir / "cfg" / "zz_*.json").string() +
                  "' --out " + (dir / "none.csv").string()) == 3);

    // fit-curve on exact data
    const auto pts = dir / "pts.csv";
    std::string text = "x,y\n";
    for (int i = 0; i <= 12; ++i) {
        const double x = i * 2.0;
        text += structsums::csv::format_double(x) + "," +
                structsums::csv::format_double(3.118 * std::log(0.061 * x + 1.0)) + "\n";
    }
    structsums::io::write_text_file(pts.string(), text);
    const auto fit_out = (dir / "fit.csv").string();
    REQUIRE(run_cli("fit-curve --points " + pts.string() + " --out " + fit_out) == 0);
    const auto fit = structsums::csv::read_file(fit_out);
    CHECK(parse_double(fit.rows[0][0]) == doctest::Approx(3.118).epsilon(1e-6));
    CHECK(parse_double(fit.rows[0][1]) == doctest::Approx(0.061).epsilon(1e-6));
    fs::remove_all(dir);
}
