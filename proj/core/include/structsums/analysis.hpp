#pragma once

#include "structsums/features.hpp"
#include "structsums/naive_bayes.hpp"
#include "structsums/rng.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace structsums {

/// Complex feature rows of one class (all rows share one key list).
struct ClassFeatures {
    std::string name;
    std::vector<std::vector<cplx>> rows;
};

LabeledDataset make_dataset(const std::vector<std::string>& class_names,
                            const std::vector<std::vector<std::vector<double>>>& per_class_rows,
                            std::vector<std::string> feature_names);

/// Split with k training samples per class (uniformly chosen), remainder as
/// test. Throws when a class has <= k samples.
std::pair<LabeledDataset, LabeledDataset> k_per_class_split(const LabeledDataset& ds, int k,
                                                            Rng& rng);

/// Stratified split with the given training fraction per class (at least 2
/// training samples per class).
std::pair<LabeledDataset, LabeledDataset> stratified_split(const LabeledDataset& ds,
                                                           double train_fraction, Rng& rng);

/// Mean test accuracy over `repeats` random k-per-class splits.
double mean_split_accuracy(const LabeledDataset& ds, int k_train, int repeats,
                           std::uint64_t seed);

/// Accumulated confusion counts over `rounds` independent stratified splits
/// at the given training fraction (the 25:75 / 3-round protocol).
std::vector<std::vector<int>> confusion_protocol(const LabeledDataset& ds, int rounds,
                                                 double train_fraction, std::uint64_t seed);

/// Accuracy grid over (projection, q): complex feature rows are truncated to
/// the keys of order <= q, projected, and scored with mean_split_accuracy.
/// Splits are shared across grid cells (seed derived per repeat only).
struct ExperimentGrid {
    std::vector<Projection> projections;
    std::vector<int> q_values;
    std::vector<std::vector<double>> accuracy; // [projection][q]
};

ExperimentGrid run_experiment(const std::vector<ClassFeatures>& classes,
                              const std::vector<MultiOrder>& keys,
                              const std::vector<int>& q_values,
                              const std::vector<Projection>& projections, int k_train,
                              int repeats, std::uint64_t seed);

/// Exhaustive two-feature selection over the diagonal sums: every pair of
/// columns is scored with the 3-round 25:75 protocol and ranked descending
/// (ties by column index). The dataset is expected to hold |X'| features.
struct PairScore {
    int feature_a = 0; // column indices into the dataset
    int feature_b = 0;
    double accuracy = 0.0;
};

std::vector<PairScore> two_feature_scan(const LabeledDataset& ds, std::uint64_t seed);

/// Irregularity measure mu = log[(1 - e_{3,3})(1 + e_{8,8})], real parts;
/// the imaginary parts are reported as diagnostics.
struct IrregularityResult {
    double mu = 0.0;
    cplx e33;
    cplx e88;
};

IrregularityResult irregularity(const DiskConfiguration& config, const EisensteinEvaluator& ev,
                                SumCache& cache);
/// Same measure from an already-built feature vector containing (3,3), (8,8).
IrregularityResult irregularity_from_features(const FeatureVector& features);

/// Least-squares fit of y = a log(b x + 1) (grid-seeded Gauss-Newton, b > 0).
struct LogFit {
    double a = 0.0;
    double b = 0.0;
    double residual = 0.0; // sqrt of the sum of squared residuals
    bool converged = false;
    int iterations = 0;
};

LogFit fit_log_curve(const std::vector<std::pair<double, double>>& points);

/// Spearman rank correlation with midranks for ties.
double spearman(const std::vector<double>& a, const std::vector<double>& b);

} // namespace structsums
