#include "commands.hpp"

#include "structsums/analysis.hpp"
#include "structsums/conductivity.hpp"
#include "structsums/csv.hpp"
#include "structsums/io.hpp"
#include "structsums/version.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <thread>

namespace structsums::cli {

namespace {

namespace fs = std::filesystem;

std::string now_iso8601() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct Globals {
    std::uint64_t seed = 0;
    int threads = 0; // 0 = hardware
    double tolerance = EisensteinEvaluator::kDefaultTolerance;

    int effective_threads() const {
        if (threads > 0) return threads;
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }
};

void write_manifest_for(const std::string& anchor_path, bool anchor_is_dir,
                        const std::string& command, const std::vector<std::string>& argv,
                        std::uint64_t seed, std::vector<std::string> outputs) {
    io::RunManifest m;
    m.tool_version = std::string(kToolName) + " " + std::string(kToolVersion);
    m.command = command;
    m.argv = argv;
    m.seed = seed;
    m.outputs = std::move(outputs);
    m.timestamp = now_iso8601();
    const fs::path path = anchor_is_dir ? fs::path(anchor_path) / "manifest.json"
                                        : fs::path(anchor_path + ".manifest.json");
    io::save_manifest(path.string(), m);
}

bool is_sidecar(const std::string& path) {
    const std::string name = fs::path(path).filename().string();
    if (name == "manifest.json") return true;
    return name.size() > 10 && name.substr(name.size() - 10) == ".meta.json";
}

std::vector<std::string> expand_inputs(const std::vector<std::string>& patterns) {
    std::vector<std::string> files;
    for (const auto& p : patterns)
        for (auto& f : io::expand_glob(p))
            if (!is_sidecar(f)) files.push_back(std::move(f));
    if (files.empty()) throw std::runtime_error("no input files matched");
    return files;
}

std::string sample_name(const std::string& path) { return fs::path(path).stem().string(); }

// Order of a feature column named like "e_2_3_3_abs" (projection suffix and
// the trailing _re/_im of re_im tables are ignored): half the digit sum.
int column_order(const std::string& name) {
    if (name.rfind("e_", 0) != 0) throw std::runtime_error("not a feature column: " + name);
    int alpha = 0;
    std::size_t i = 1;
    while (i < name.size() && name[i] == '_') {
        std::size_t j = i + 1;
        std::size_t value = 0;
        bool digits = false;
        while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j]))) {
            value = value * 10 + static_cast<std::size_t>(name[j] - '0');
            digits = true;
            ++j;
        }
        if (!digits) break;
        alpha += static_cast<int>(value);
        i = j;
    }
    if (alpha == 0 || alpha % 2 != 0)
        throw std::runtime_error("cannot parse feature column order: " + name);
    return alpha / 2;
}

struct FeatureTable {
    std::vector<std::string> columns; // without the leading sample column
    std::vector<std::string> samples;
    std::vector<std::vector<double>> rows;
};

FeatureTable read_feature_table(const std::string& path) {
    const auto t = csv::read_file(path);
    if (t.header.size() < 2 || t.header.front() != "sample")
        throw std::runtime_error("feature table needs a 'sample' column: " + path);
    FeatureTable out;
    out.columns.assign(t.header.begin() + 1, t.header.end());
    for (const auto& row : t.rows) {
        if (row.size() != t.header.size())
            throw std::runtime_error("ragged feature table row in " + path);
        out.samples.push_back(row.front());
        std::vector<double> values;
        values.reserve(row.size() - 1);
        for (std::size_t i = 1; i < row.size(); ++i) values.push_back(csv::parse_double(row[i]));
        out.rows.push_back(std::move(values));
    }
    if (out.rows.empty()) throw std::runtime_error("empty feature table: " + path);
    return out;
}

// ---------------------------------------------------------------- latsum --

int cmd_latsum(const Globals&, const std::vector<std::string>& argv,
               const std::string& lattice_name, int n_max, const std::string& out) {
    const auto lattice = Lattice::preset(lattice_name, std::max(n_max, 2));
    csv::Table t;
    t.header = {"n", "s_re", "s_im"};
    for (int n = 2; n <= n_max; ++n)
        t.rows.push_back({std::to_string(n), csv::format_double(lattice.sum(n).real()),
                          csv::format_double(lattice.sum(n).imag())});
    if (out.empty()) {
        std::cout << csv::to_string(t);
    } else {
        csv::write_file(out, t);
        write_manifest_for(out, false, "latsum", argv, 0, {out});
    }
    return 0;
}

// -------------------------------------------------------------- generate --

int cmd_generate(const Globals& g, const std::vector<std::string>& argv,
                 const std::string& spec_path, int count, const std::string& out_dir,
                 bool seed_given) {
    GeneratorSpec spec = io::load_spec(spec_path);
    if (seed_given) spec.seed = g.seed;
    fs::create_directories(out_dir);

    std::vector<std::string> outputs;
    for (int i = 0; i < count; ++i) {
        GeneratorSpec sample_spec = spec;
        sample_spec.seed = Rng::derive_seed(spec.seed, std::uint64_t(i));
        const DiskConfiguration config = generate(sample_spec);
        char name[32];
        std::snprintf(name, sizeof(name), "config_%04d.json", i);
        const std::string path = (fs::path(out_dir) / name).string();
        const std::string meta = std::string("{\"generator\":") + io::spec_to_json(sample_spec) +
                                 ",\"sample_index\":" + std::to_string(i) + "}";
        io::save_config(path, config, meta);
        outputs.push_back(path);
    }
    write_manifest_for(out_dir, true, "generate", argv, spec.seed, std::move(outputs));
    return 0;
}

// -------------------------------------------------------------- features --

int cmd_features(const Globals& g, const std::vector<std::string>& argv,
                 const std::vector<std::string>& inputs, int q, const std::string& projection,
                 const std::string& family, const std::string& out) {
    const auto files = expand_inputs(inputs);
    const Projection proj = projection_from_string(projection);
    const bool prime = family == "xq-prime";
    if (!prime && family != "xq") throw std::runtime_error("unknown family: " + family);

    struct RowResult {
        std::vector<std::string> names;
        std::vector<double> values;
    };
    std::vector<RowResult> rows(files.size());
    std::vector<std::exception_ptr> errors(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < files.size();) {
            try {
                const auto stored = io::load_config_any(files[i]);
                const auto lattice = stored.config.lattice_ptr();
                const EisensteinEvaluator ev(lattice, EisensteinEvaluator::kDefaultSeriesOrder,
                                             g.tolerance);
                SumCache cache;
                const FeatureVector v = prime ? build_Xq_prime(stored.config, q, ev, cache)
                                              : build_Xq(stored.config, q, ev, cache);
                auto projected = v.project(proj);
                rows[i] = {std::move(projected.names), std::move(projected.values)};
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int n_threads = std::min<int>(g.effective_threads(), static_cast<int>(files.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    csv::Table table;
    table.header = {"sample"};
    for (const auto& n : rows.front().names) table.header.push_back(n);
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (rows[i].names != rows.front().names)
            throw std::runtime_error("inconsistent feature sets across inputs");
        std::vector<std::string> row{sample_name(files[i])};
        for (double v : rows[i].values) row.push_back(csv::format_double(v));
        table.rows.push_back(std::move(row));
    }
    csv::write_file(out, table);

    io::FeatureTableMeta meta;
    meta.q = q;
    meta.projection = projection;
    meta.lattice = "per-config";
    meta.generator_json = "{}";
    meta.seed = g.seed;
    meta.feature_names.assign(table.header.begin() + 1, table.header.end());
    io::write_text_file(out + ".meta.json", io::feature_meta_to_json(meta));
    write_manifest_for(out, false, "features", argv, g.seed, {out, out + ".meta.json"});
    return 0;
}

// -------------------------------------------------------------- classify --

int cmd_classify(const Globals& g, const std::vector<std::string>& argv,
                 const std::vector<std::string>& feature_files, int k, int repeats,
                 const std::string& out_dir) {
    if (feature_files.size() < 2)
        throw std::runtime_error("classify needs at least two class tables");
    std::vector<FeatureTable> tables;
    std::vector<std::string> class_names;
    for (const auto& f : feature_files) {
        tables.push_back(read_feature_table(f));
        class_names.push_back(sample_name(f));
        if (tables.back().columns != tables.front().columns)
            throw std::runtime_error("class tables have different feature columns");
    }

    std::vector<int> orders;
    for (const auto& c : tables.front().columns) orders.push_back(column_order(c));
    std::vector<int> q_values;
    for (int o : orders)
        if (std::find(q_values.begin(), q_values.end(), o) == q_values.end())
            q_values.push_back(o);
    std::sort(q_values.begin(), q_values.end());

    fs::create_directories(out_dir);
    csv::Table acc;
    acc.header = {"q", "accuracy"};
    LabeledDataset full;
    for (int q : q_values) {
        std::vector<std::size_t> cols;
        for (std::size_t i = 0; i < orders.size(); ++i)
            if (orders[i] <= q) cols.push_back(i);
        LabeledDataset ds;
        ds.class_names = class_names;
        for (std::size_t i : cols) ds.feature_names.push_back(tables.front().columns[i]);
        for (std::size_t c = 0; c < tables.size(); ++c)
            for (const auto& row : tables[c].rows) {
                std::vector<double> sub;
                sub.reserve(cols.size());
                for (std::size_t i : cols) sub.push_back(row[i]);
                ds.x.push_back(std::move(sub));
                ds.y.push_back(static_cast<int>(c));
            }
        const double a = mean_split_accuracy(ds, k, repeats, g.seed);
        acc.rows.push_back({std::to_string(q), csv::format_double(a)});
        if (q == q_values.back()) full = std::move(ds);
    }
    const std::string acc_path = (fs::path(out_dir) / "accuracy.csv").string();
    csv::write_file(acc_path, acc);

    // 3 stratified 25:75 rounds, counts accumulated
    const auto confusion = confusion_protocol(full, 3, 0.25, g.seed);
    csv::Table conf;
    conf.header = {"class"};
    for (const auto& n : class_names) conf.header.push_back(n);
    for (std::size_t i = 0; i < confusion.size(); ++i) {
        std::vector<std::string> row{class_names[i]};
        for (int v : confusion[i]) row.push_back(std::to_string(v));
        conf.rows.push_back(std::move(row));
    }
    const std::string conf_path = (fs::path(out_dir) / "confusion.csv").string();
    csv::write_file(conf_path, conf);

    write_manifest_for(out_dir, true, "classify", argv, g.seed, {acc_path, conf_path});
    return 0;
}

// --------------------------------------------------------------- conduct --

int cmd_conduct(const Globals& g, const std::vector<std::string>& argv,
                const std::vector<std::string>& inputs, double lambda_f, int q_max,
                const std::string& out) {
    const auto files = expand_inputs(inputs);
    csv::Table t;
    if (files.size() == 1) {
        const auto stored = io::load_config_any(files.front());
        const EisensteinEvaluator ev(stored.config.lattice_ptr(),
                                     EisensteinEvaluator::kDefaultSeriesOrder, g.tolerance);
        SumCache cache;
        const auto r = effective_conductivity(stored.config, lambda_f, q_max, ev, cache);
        t.header = {"q", "b_q_re", "b_q_im", "lambda_partial"};
        for (int q = 0; q <= q_max; ++q)
            t.rows.push_back({std::to_string(q),
                              csv::format_double(r.bq_values[std::size_t(q)].real()),
                              csv::format_double(r.bq_values[std::size_t(q)].imag()),
                              csv::format_double(r.partial[std::size_t(q)])});
        std::cout << "lambda," << csv::format_double(r.lambda) << "\n"
                  << "imag_residual," << csv::format_double(r.imag_residual) << "\n";
    } else {
        t.header = {"sample", "lambda", "imag_residual"};
        for (const auto& f : files) {
            const auto stored = io::load_config_any(f);
            const EisensteinEvaluator ev(stored.config.lattice_ptr(),
                                         EisensteinEvaluator::kDefaultSeriesOrder, g.tolerance);
            SumCache cache;
            const auto r = effective_conductivity(stored.config, lambda_f, q_max, ev, cache);
            t.rows.push_back({sample_name(f), csv::format_double(r.lambda),
                              csv::format_double(r.imag_residual)});
        }
    }
    if (out.empty()) {
        std::cout << csv::to_string(t);
    } else {
        csv::write_file(out, t);
        write_manifest_for(out, false, "conduct", argv, g.seed, {out});
    }
    return 0;
}

// ---------------------------------------------------------- irregularity --

int cmd_irregularity(const Globals& g, const std::vector<std::string>& argv,
                     const std::vector<std::string>& groups, const std::string& out,
                     const std::string& means_out) {
    // groups are "class=glob" pairs, or bare globs labeled "all"
    struct Item {
        std::string cls;
        std::string file;
    };
    std::vector<Item> items;
    for (const auto& spec : groups) {
        std::string cls = "all", pattern = spec;
        const auto eq = spec.find('=');
        if (eq != std::string::npos) {
            cls = spec.substr(0, eq);
            pattern = spec.substr(eq + 1);
        }
        for (const auto& f : io::expand_glob(pattern))
            if (!is_sidecar(f)) items.push_back({cls, f});
    }
    if (items.empty()) throw std::runtime_error("no input files matched");

    csv::Table t;
    t.header = {"sample", "class", "mu", "e88_re", "neg_e33_re", "e33_im", "e88_im"};
    std::map<std::string, std::pair<double, int>> means;
    for (const auto& item : items) {
        const auto stored = io::load_config_any(item.file);
        const EisensteinEvaluator ev(stored.config.lattice_ptr(),
                                     EisensteinEvaluator::kDefaultSeriesOrder, g.tolerance);
        SumCache cache;
        const auto r = irregularity(stored.config, ev, cache);
        t.rows.push_back({sample_name(item.file), item.cls, csv::format_double(r.mu),
                          csv::format_double(r.e88.real()),
                          csv::format_double(-r.e33.real()), csv::format_double(r.e33.imag()),
                          csv::format_double(r.e88.imag())});
        auto& [sum, count] = means[item.cls];
        sum += r.mu;
        ++count;
    }
    csv::write_file(out, t);
    // per-class means always accompany the per-sample table
    const std::string means_path = means_out.empty() ? out + ".means.csv" : means_out;
    csv::Table m;
    m.header = {"class", "mean_mu", "count"};
    for (const auto& [cls, agg] : means)
        m.rows.push_back({cls, csv::format_double(agg.first / agg.second),
                          std::to_string(agg.second)});
    csv::write_file(means_path, m);
    write_manifest_for(out, false, "irregularity", argv, g.seed, {out, means_path});
    return 0;
}

// ------------------------------------------------------------ scan-pairs --

int cmd_scan_pairs(const Globals& g, const std::vector<std::string>& argv,
                   const std::vector<std::string>& feature_files, const std::string& out) {
    if (feature_files.size() < 2)
        throw std::runtime_error("scan-pairs needs at least two class tables");
    std::vector<FeatureTable> tables;
    std::vector<std::string> class_names;
    for (const auto& f : feature_files) {
        tables.push_back(read_feature_table(f));
        class_names.push_back(sample_name(f));
        if (tables.back().columns != tables.front().columns)
            throw std::runtime_error("class tables have different feature columns");
    }
    LabeledDataset ds;
    ds.class_names = class_names;
    ds.feature_names = tables.front().columns;
    for (std::size_t c = 0; c < tables.size(); ++c)
        for (const auto& row : tables[c].rows) {
            ds.x.push_back(row);
            ds.y.push_back(static_cast<int>(c));
        }
    const auto ranked = two_feature_scan(ds, g.seed);
    csv::Table t;
    t.header = {"rank", "feature_a", "feature_b", "accuracy"};
    for (std::size_t i = 0; i < ranked.size(); ++i)
        t.rows.push_back({std::to_string(i + 1),
                          ds.feature_names[std::size_t(ranked[i].feature_a)],
                          ds.feature_names[std::size_t(ranked[i].feature_b)],
                          csv::format_double(ranked[i].accuracy)});
    csv::write_file(out, t);
    write_manifest_for(out, false, "scan-pairs", argv, g.seed, {out});
    return 0;
}

// ------------------------------------------------------------- fit-curve --

int cmd_fit_curve(const Globals&, const std::vector<std::string>& argv,
                  const std::string& points_path, const std::string& out) {
    const auto table = csv::read_file(points_path);
    std::vector<std::pair<double, double>> pts;
    auto parse_row = [&pts](const std::vector<std::string>& row) {
        if (row.size() < 2) throw std::runtime_error("points csv needs two columns");
        pts.emplace_back(csv::parse_double(row[0]), csv::parse_double(row[1]));
    };
    bool header_is_data = true;
    try {
        (void)csv::parse_double(table.header.at(0));
    } catch (const std::invalid_argument&) {
        header_is_data = false;
    }
    if (header_is_data) parse_row(table.header);
    for (const auto& row : table.rows) parse_row(row);

    const auto fit = fit_log_curve(pts);
    if (!fit.converged)
        std::cerr << "warning: fit did not converge, residual = "
                  << csv::format_double(fit.residual) << "\n";
    csv::Table t;
    t.header = {"a", "b", "residual", "converged", "iterations"};
    t.rows.push_back({csv::format_double(fit.a), csv::format_double(fit.b),
                      csv::format_double(fit.residual), fit.converged ? "1" : "0",
                      std::to_string(fit.iterations)});
    if (out.empty()) {
        std::cout << csv::to_string(t);
    } else {
        csv::write_file(out, t);
        write_manifest_for(out, false, "fit-curve", argv, 0, {out});
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"structural-sums toolbox for 2D disk composites"};
    app.set_version_flag("--version", std::string(kToolName) + " " + std::string(kToolVersion));
    app.require_subcommand(1);

    Globals g;
    app.add_option("--seed", g.seed, "global random seed")->envname("STRUCTSUMS_SEED");
    app.add_option("--threads", g.threads, "worker threads (0 = hardware)")
        ->envname("STRUCTSUMS_THREADS");
    app.add_option("--tolerance", g.tolerance, "Eisenstein evaluation tolerance")
        ->envname("STRUCTSUMS_TOLERANCE");
    // global flags may appear after the subcommand name
    app.fallthrough();

    // latsum
    auto* latsum = app.add_subcommand("latsum", "print lattice sums S_2..S_nmax as CSV");
    std::string lattice_name = "square";
    int n_max = 8;
    std::string latsum_out;
    latsum->add_option("--lattice", lattice_name, "lattice preset (square, hexagonal)");
    latsum->add_option("--nmax", n_max, "largest sum index")->check(CLI::Range(2, 360));
    latsum->add_option("--out", latsum_out, "output CSV (stdout when omitted)");

    // generate
    auto* generate = app.add_subcommand("generate", "draw configurations from a generator spec");
    std::string spec_path, gen_out_dir;
    int gen_count = 1;
    generate->add_option("--spec", spec_path, "generator spec JSON")->required();
    generate->add_option("--count", gen_count, "number of samples")->check(CLI::PositiveNumber);
    generate->add_option("--out-dir", gen_out_dir, "output directory")->required();

    // features
    auto* features = app.add_subcommand("features", "compute structural-sums feature tables");
    std::vector<std::string> feat_inputs;
    int feat_q = 4;
    std::string feat_projection = "abs", feat_family = "xq", feat_out;
    features->add_option("--inputs", feat_inputs, "configuration files or globs")->required();
    features->add_option("--q", feat_q, "feature order")->check(CLI::Range(1, 12));
    features->add_option("--projection", feat_projection,
                         "complex, abs, re, im, arg or re_im");
    features->add_option("--family", feat_family, "xq or xq-prime");
    features->add_option("--out", feat_out, "output CSV")->required();

    // classify
    auto* classify = app.add_subcommand("classify", "NB classification over class tables");
    std::vector<std::string> cls_files;
    int cls_k = 8, cls_repeats = 10;
    std::string cls_out_dir;
    classify->add_option("--features", cls_files, "one feature CSV per class")->required();
    classify->add_option("-k,--train-per-class", cls_k, "training samples per class")
        ->check(CLI::PositiveNumber);
    classify->add_option("--repeats", cls_repeats, "random splits to average")
        ->check(CLI::PositiveNumber);
    classify->add_option("--out-dir", cls_out_dir, "output directory")->required();

    // conduct
    auto* conduct = app.add_subcommand("conduct", "effective conductivity of configurations");
    std::vector<std::string> cond_inputs;
    double lambda_f = 10.0;
    int q_max = 6;
    std::string cond_out;
    conduct->add_option("--inputs", cond_inputs, "configuration files or globs")->required();
    conduct->add_option("--lambda-f", lambda_f, "inclusion conductivity");
    conduct->add_option("--qmax", q_max, "series truncation order")->check(CLI::Range(0, 12));
    conduct->add_option("--out", cond_out, "output CSV (stdout when omitted)");

    // irregularity
    auto* irr = app.add_subcommand("irregularity", "irregularity measure per sample");
    std::vector<std::string> irr_groups;
    std::string irr_out, irr_means;
    irr->add_option("--inputs", irr_groups, "globs or class=glob groups")->required();
    irr->add_option("--out", irr_out, "per-sample CSV")->required();
    irr->add_option("--means", irr_means, "per-class means CSV");

    // scan-pairs
    auto* scan = app.add_subcommand("scan-pairs", "exhaustive two-feature NB selection");
    std::vector<std::string> scan_files;
    std::string scan_out;
    scan->add_option("--features", scan_files, "one feature CSV per class")->required();
    scan->add_option("--out", scan_out, "ranked pairs CSV")->required();

    // fit-curve
    auto* fit = app.add_subcommand("fit-curve", "fit y = a log(b x + 1) to points");
    std::string fit_points, fit_out;
    fit->add_option("--points", fit_points, "CSV with x,y columns")->required();
    fit->add_option("--out", fit_out, "output CSV (stdout when omitted)");

    // replay
    auto* replay = app.add_subcommand("replay", "re-run a command from its manifest");
    std::string replay_manifest;
    replay->add_option("--manifest", replay_manifest, "manifest JSON")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (latsum->parsed()) return cmd_latsum(g, args, lattice_name, n_max, latsum_out);
        if (generate->parsed())
            // count() covers both the flag and the environment fallback
            return cmd_generate(g, args, spec_path, gen_count, gen_out_dir,
                                app.count("--seed") > 0);
        if (features->parsed())
            return cmd_features(g, args, feat_inputs, feat_q, feat_projection, feat_family,
                                feat_out);
        if (classify->parsed())
            return cmd_classify(g, args, cls_files, cls_k, cls_repeats, cls_out_dir);
        if (conduct->parsed()) return cmd_conduct(g, args, cond_inputs, lambda_f, q_max, cond_out);
        if (irr->parsed()) return cmd_irregularity(g, args, irr_groups, irr_out, irr_means);
        if (scan->parsed()) return cmd_scan_pairs(g, args, scan_files, scan_out);
        if (fit->parsed()) return cmd_fit_curve(g, args, fit_points, fit_out);
        if (replay->parsed()) {
            const auto m = io::load_manifest(replay_manifest);
            if (!m.argv.empty() && m.argv.front() == "replay")
                throw std::runtime_error("refusing to replay a replay manifest");
            return run(m.argv);
        }
        throw std::runtime_error("no subcommand selected");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace structsums::cli
