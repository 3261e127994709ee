#pragma once

#include <string>
#include <vector>

namespace structsums {

/// Feature matrix with class labels. Labels index class_names.
struct LabeledDataset {
    std::vector<std::vector<double>> x;
    std::vector<int> y;
    std::vector<std::string> feature_names;
    std::vector<std::string> class_names;

    int classes() const { return static_cast<int>(class_names.size()); }
    int features() const { return x.empty() ? 0 : static_cast<int>(x.front().size()); }
    std::size_t size() const { return x.size(); }

    /// Row-count/label agreement, >= 2 classes, rectangular, finite values.
    void validate() const;
};

/// Gaussian Naive Bayes. Per-class per-feature means and variances use the
/// population convention (divide by the class count); priors are class
/// frequencies; variances are floored at epsilon = 1e-9 times the largest
/// pooled feature variance of the training set.
struct GaussianNbModel {
    std::vector<std::vector<double>> mean; // [class][feature]
    std::vector<std::vector<double>> var;  // [class][feature]
    std::vector<double> log_prior;         // [class]
    double epsilon = 0.0;

    int classes() const { return static_cast<int>(mean.size()); }
    int features() const { return mean.empty() ? 0 : static_cast<int>(mean.front().size()); }

    /// Joint log-likelihood + log-prior per class.
    std::vector<double> log_posterior(const std::vector<double>& row) const;
    /// argmax class; ties resolved to the lowest class index.
    int predict(const std::vector<double>& row) const;
};

/// Fit on a training set; every class needs at least 2 samples.
GaussianNbModel nb_fit(const LabeledDataset& train);

std::vector<int> nb_predict(const GaussianNbModel& model,
                            const std::vector<std::vector<double>>& rows);

/// Fraction of rows whose predicted label matches.
double accuracy(const GaussianNbModel& model, const LabeledDataset& test);

/// Count matrix: entry (i, j) = samples of class i predicted as class j.
std::vector<std::vector<int>> confusion_matrix(const GaussianNbModel& model,
                                               const LabeledDataset& test);

} // namespace structsums
