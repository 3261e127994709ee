#include "structsums/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <stdexcept>

namespace structsums {

LabeledDataset make_dataset(const std::vector<std::string>& class_names,
                            const std::vector<std::vector<std::vector<double>>>& per_class_rows,
                            std::vector<std::string> feature_names) {
    if (class_names.size() != per_class_rows.size())
        throw std::invalid_argument("make_dataset: class name/rows mismatch");
    LabeledDataset ds;
    ds.class_names = class_names;
    ds.feature_names = std::move(feature_names);
    for (std::size_t c = 0; c < per_class_rows.size(); ++c)
        for (const auto& row : per_class_rows[c]) {
            ds.x.push_back(row);
            ds.y.push_back(static_cast<int>(c));
        }
    ds.validate();
    return ds;
}

namespace {

std::vector<std::vector<std::size_t>> indices_by_class(const LabeledDataset& ds) {
    std::vector<std::vector<std::size_t>> idx(static_cast<std::size_t>(ds.classes()));
    for (std::size_t i = 0; i < ds.size(); ++i)
        idx[static_cast<std::size_t>(ds.y[i])].push_back(i);
    return idx;
}

void shuffle_indices(std::vector<std::size_t>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng.uniform_index(i)]);
}

std::pair<LabeledDataset, LabeledDataset> split_by_counts(const LabeledDataset& ds,
                                                          const std::vector<int>& train_count,
                                                          Rng& rng) {
    LabeledDataset train, test;
    train.class_names = test.class_names = ds.class_names;
    train.feature_names = test.feature_names = ds.feature_names;
    auto idx = indices_by_class(ds);
    for (std::size_t c = 0; c < idx.size(); ++c) {
        auto& pool = idx[c];
        shuffle_indices(pool, rng);
        const int k = train_count[c];
        for (std::size_t i = 0; i < pool.size(); ++i) {
            auto& dst = (static_cast<int>(i) < k) ? train : test;
            dst.x.push_back(ds.x[pool[i]]);
            dst.y.push_back(ds.y[pool[i]]);
        }
    }
    return {std::move(train), std::move(test)};
}

} // namespace

std::pair<LabeledDataset, LabeledDataset> k_per_class_split(const LabeledDataset& ds, int k,
                                                            Rng& rng) {
    ds.validate();
    if (k < 2) throw std::invalid_argument("split: k must be >= 2");
    auto idx = indices_by_class(ds);
    for (std::size_t c = 0; c < idx.size(); ++c)
        if (static_cast<int>(idx[c].size()) <= k)
            throw std::invalid_argument("split: class '" + ds.class_names[c] +
                                        "' has too few samples for k = " + std::to_string(k));
    return split_by_counts(ds, std::vector<int>(idx.size(), k), rng);
}

std::pair<LabeledDataset, LabeledDataset> stratified_split(const LabeledDataset& ds,
                                                           double train_fraction, Rng& rng) {
    ds.validate();
    if (!(train_fraction > 0.0) || !(train_fraction < 1.0))
        throw std::invalid_argument("split: train fraction must be in (0, 1)");
    auto idx = indices_by_class(ds);
    std::vector<int> counts(idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c) {
        const int n = static_cast<int>(idx[c].size());
        int k = static_cast<int>(std::lround(train_fraction * n));
        k = std::clamp(k, 2, n - 1);
        counts[c] = k;
    }
    return split_by_counts(ds, counts, rng);
}

double mean_split_accuracy(const LabeledDataset& ds, int k_train, int repeats,
                           std::uint64_t seed) {
    if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");
    std::vector<double> scores(static_cast<std::size_t>(repeats));
    std::vector<std::future<double>> jobs;
    jobs.reserve(static_cast<std::size_t>(repeats));
    for (int r = 0; r < repeats; ++r)
        jobs.push_back(std::async(std::launch::deferred | std::launch::async,
                                  [&ds, k_train, seed, r] {
                                      Rng rng(Rng::derive_seed(seed, std::uint64_t(r)));
                                      auto [train, test] = k_per_class_split(ds, k_train, rng);
                                      return accuracy(nb_fit(train), test);
                                  }));
    for (int r = 0; r < repeats; ++r) scores[static_cast<std::size_t>(r)] =
        jobs[static_cast<std::size_t>(r)].get();
    return std::accumulate(scores.begin(), scores.end(), 0.0) / double(repeats);
}

std::vector<std::vector<int>> confusion_protocol(const LabeledDataset& ds, int rounds,
                                                 double train_fraction, std::uint64_t seed) {
    const int c = ds.classes();
    std::vector<std::vector<int>> total(static_cast<std::size_t>(c),
                                        std::vector<int>(static_cast<std::size_t>(c), 0));
    for (int r = 0; r < rounds; ++r) {
        Rng rng(Rng::derive_seed(seed, std::uint64_t(r)));
        auto [train, test] = stratified_split(ds, train_fraction, rng);
        const auto m = confusion_matrix(nb_fit(train), test);
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < c; ++j)
                total[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return total;
}

ExperimentGrid run_experiment(const std::vector<ClassFeatures>& classes,
                              const std::vector<MultiOrder>& keys,
                              const std::vector<int>& q_values,
                              const std::vector<Projection>& projections, int k_train,
                              int repeats, std::uint64_t seed) {
    if (classes.size() < 2) throw std::invalid_argument("run_experiment: need >= 2 classes");
    for (const auto& cls : classes)
        for (const auto& row : cls.rows)
            if (row.size() != keys.size())
                throw std::invalid_argument("run_experiment: feature row width mismatch");

    ExperimentGrid grid;
    grid.projections = projections;
    grid.q_values = q_values;
    grid.accuracy.assign(projections.size(), std::vector<double>(q_values.size(), 0.0));

    for (std::size_t qi = 0; qi < q_values.size(); ++qi) {
        const int q = q_values[qi];
        std::vector<std::size_t> mask;
        std::vector<MultiOrder> sub_keys;
        for (std::size_t i = 0; i < keys.size(); ++i)
            if (keys[i].order() <= q) {
                mask.push_back(i);
                sub_keys.push_back(keys[i]);
            }
        if (sub_keys.empty()) throw std::invalid_argument("run_experiment: empty key subset");

        for (std::size_t pi = 0; pi < projections.size(); ++pi) {
            std::vector<std::string> class_names;
            std::vector<std::vector<std::vector<double>>> rows(classes.size());
            std::vector<std::string> feature_names;
            for (std::size_t c = 0; c < classes.size(); ++c) {
                class_names.push_back(classes[c].name);
                for (const auto& full_row : classes[c].rows) {
                    std::vector<cplx> sub(mask.size());
                    for (std::size_t i = 0; i < mask.size(); ++i) sub[i] = full_row[mask[i]];
                    auto projected = project_row(sub_keys, sub, projections[pi]);
                    if (feature_names.empty()) feature_names = projected.names;
                    rows[c].push_back(std::move(projected.values));
                }
            }
            const auto ds = make_dataset(class_names, rows, std::move(feature_names));
            grid.accuracy[pi][qi] = mean_split_accuracy(ds, k_train, repeats, seed);
        }
    }
    return grid;
}

std::vector<PairScore> two_feature_scan(const LabeledDataset& ds, std::uint64_t seed) {
    ds.validate();
    const int d = ds.features();
    if (d < 2) throw std::invalid_argument("two_feature_scan: need >= 2 features");
    std::vector<PairScore> out;
    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
            LabeledDataset sub;
            sub.class_names = ds.class_names;
            sub.feature_names = {ds.feature_names[static_cast<std::size_t>(a)],
                                 ds.feature_names[static_cast<std::size_t>(b)]};
            sub.y = ds.y;
            sub.x.reserve(ds.size());
            for (const auto& row : ds.x)
                sub.x.push_back({row[static_cast<std::size_t>(a)],
                                 row[static_cast<std::size_t>(b)]});
            const auto m = confusion_protocol(sub, 3, 0.25, seed);
            long correct = 0, total = 0;
            for (std::size_t i = 0; i < m.size(); ++i)
                for (std::size_t j = 0; j < m.size(); ++j) {
                    total += m[i][j];
                    if (i == j) correct += m[i][j];
                }
            out.push_back({a, b, double(correct) / double(total)});
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const PairScore& l, const PairScore& r) {
        if (l.accuracy != r.accuracy) return l.accuracy > r.accuracy;
        if (l.feature_a != r.feature_a) return l.feature_a < r.feature_a;
        return l.feature_b < r.feature_b;
    });
    return out;
}

IrregularityResult irregularity_from_features(const FeatureVector& features) {
    IrregularityResult r;
    r.e33 = features.at(MultiOrder{{3, 3}});
    r.e88 = features.at(MultiOrder{{8, 8}});
    const double f1 = 1.0 - r.e33.real();
    const double f2 = 1.0 + r.e88.real();
    if (!(f1 * f2 > 0.0))
        throw std::domain_error("irregularity: non-positive log argument, 1 - e33 = " +
                                std::to_string(f1) + ", 1 + e88 = " + std::to_string(f2));
    r.mu = std::log(f1 * f2);
    return r;
}

IrregularityResult irregularity(const DiskConfiguration& config, const EisensteinEvaluator& ev,
                                SumCache& cache) {
    std::vector<MultiOrder> keys{MultiOrder{{3, 3}}, MultiOrder{{8, 8}}};
    std::vector<cplx> values;
    for (const auto& k : keys) values.push_back(eval_sum(config, k, ev, cache));
    return irregularity_from_features(FeatureVector(std::move(keys), std::move(values), 8));
}

namespace {

double fit_residual(const std::vector<std::pair<double, double>>& pts, double a, double b) {
    double acc = 0.0;
    for (const auto& [x, y] : pts) {
        const double r = y - a * std::log(b * x + 1.0);
        acc += r * r;
    }
    return acc;
}

// optimal a for fixed b (linear least squares)
double best_a(const std::vector<std::pair<double, double>>& pts, double b) {
    double num = 0.0, den = 0.0;
    for (const auto& [x, y] : pts) {
        const double L = std::log(b * x + 1.0);
        num += y * L;
        den += L * L;
    }
    return den > 0.0 ? num / den : 0.0;
}

} // namespace

LogFit fit_log_curve(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw std::invalid_argument("fit_log_curve: need >= 3 points");
    for (const auto& [x, y] : points)
        if (x < 0.0) throw std::invalid_argument("fit_log_curve: x must be >= 0");

    // grid seed over b
    double a = 0.0, b = 1.0, best = fit_residual(points, best_a(points, 1.0), 1.0);
    a = best_a(points, 1.0);
    for (int i = 0; i <= 160; ++i) {
        const double bg = std::pow(10.0, -4.0 + 8.0 * i / 160.0);
        const double ag = best_a(points, bg);
        const double r = fit_residual(points, ag, bg);
        if (r < best) {
            best = r;
            a = ag;
            b = bg;
        }
    }

    // Gauss-Newton on (a, b) with Levenberg damping; b kept positive.
    LogFit fit;
    double damping = 1e-12;
    int iter = 0;
    for (; iter < 100; ++iter) {
        double jaa = 0.0, jab = 0.0, jbb = 0.0, ga = 0.0, gb = 0.0;
        for (const auto& [x, y] : points) {
            const double L = std::log(b * x + 1.0);
            const double r = y - a * L;
            const double da = -L;
            const double db = -a * x / (b * x + 1.0);
            jaa += da * da;
            jab += da * db;
            jbb += db * db;
            ga += da * r;
            gb += db * r;
        }
        const double det = (jaa + damping) * (jbb + damping) - jab * jab;
        if (std::abs(det) < 1e-300) break;
        const double step_a = -((jbb + damping) * ga - jab * gb) / det;
        const double step_b = -((jaa + damping) * gb - jab * ga) / det;
        double scale = 1.0;
        double next_a = a, next_b = b, next_res = best;
        bool improved = false;
        for (int h = 0; h < 30; ++h) {
            const double ta = a + scale * step_a;
            const double tb = std::max(b + scale * step_b, 1e-12);
            const double tr = fit_residual(points, ta, tb);
            if (tr < best) {
                next_a = ta;
                next_b = tb;
                next_res = tr;
                improved = true;
                break;
            }
            scale *= 0.5;
        }
        if (!improved) break;
        const double move = std::abs(next_a - a) + std::abs(next_b - b);
        a = next_a;
        b = next_b;
        best = next_res;
        if (move < 1e-14 * (1.0 + std::abs(a) + std::abs(b))) {
            ++iter;
            break;
        }
    }
    fit.a = a;
    fit.b = b;
    fit.residual = std::sqrt(best);
    fit.iterations = iter;
    // converged: the gradient is numerically flat at the minimum
    double ga = 0.0, gb = 0.0, scale = 0.0;
    for (const auto& [x, y] : points) {
        const double L = std::log(b * x + 1.0);
        const double r = y - a * L;
        ga += -L * r;
        gb += -a * x / (b * x + 1.0) * r;
        scale += std::abs(y);
    }
    fit.converged = std::abs(ga) + std::abs(gb) <= 1e-6 * (1.0 + scale + fit.residual);
    return fit;
}

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size() || a.size() < 2)
        throw std::invalid_argument("spearman: need two equal-length series");
    auto midranks = [](const std::vector<double>& v) {
        const std::size_t n = v.size();
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&v](std::size_t i, std::size_t j) { return v[i] < v[j]; });
        std::vector<double> rank(n);
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
            const double mid = 0.5 * (double(i) + double(j)) + 1.0;
            for (std::size_t k = i; k <= j; ++k) rank[order[k]] = mid;
            i = j + 1;
        }
        return rank;
    };
    const auto ra = midranks(a);
    const auto rb = midranks(b);
    const double n = double(a.size());
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += ra[i];
        mb += rb[i];
    }
    ma /= n;
    mb /= n;
    double cov = 0.0, va = 0.0, vb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        cov += (ra[i] - ma) * (rb[i] - mb);
        va += (ra[i] - ma) * (ra[i] - ma);
        vb += (rb[i] - mb) * (rb[i] - mb);
    }
    if (va == 0.0 || vb == 0.0) return 0.0;
    return cov / std::sqrt(va * vb);
}

} // namespace structsums
