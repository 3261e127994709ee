#include "structsums/naive_bayes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace structsums {

void LabeledDataset::validate() const {
    if (x.size() != y.size())
        throw std::invalid_argument("dataset: row count does not match label count");
    if (classes() < 2) throw std::invalid_argument("dataset: need at least 2 classes");
    const std::size_t d = x.empty() ? feature_names.size() : x.front().size();
    for (const auto& row : x) {
        if (row.size() != d) throw std::invalid_argument("dataset: ragged feature matrix");
        for (double v : row)
            if (!std::isfinite(v)) throw std::invalid_argument("dataset: non-finite feature");
    }
    for (int label : y)
        if (label < 0 || label >= classes())
            throw std::invalid_argument("dataset: label out of range");
}

GaussianNbModel nb_fit(const LabeledDataset& train) {
    train.validate();
    const int c = train.classes();
    const int d = train.features();
    const auto n = train.size();
    if (n == 0) throw std::invalid_argument("nb_fit: empty training set");

    std::vector<int> count(static_cast<std::size_t>(c), 0);
    for (int label : train.y) ++count[static_cast<std::size_t>(label)];
    for (int k = 0; k < c; ++k)
        if (count[static_cast<std::size_t>(k)] < 2)
            throw std::invalid_argument("nb_fit: class '" +
                                        train.class_names[static_cast<std::size_t>(k)] +
                                        "' has fewer than 2 training samples");

    GaussianNbModel m;
    m.mean.assign(static_cast<std::size_t>(c), std::vector<double>(static_cast<std::size_t>(d), 0.0));
    m.var = m.mean;
    m.log_prior.resize(static_cast<std::size_t>(c));

    for (std::size_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(train.y[i]);
        for (int f = 0; f < d; ++f)
            m.mean[k][static_cast<std::size_t>(f)] += train.x[i][static_cast<std::size_t>(f)];
    }
    for (int k = 0; k < c; ++k)
        for (int f = 0; f < d; ++f)
            m.mean[static_cast<std::size_t>(k)][static_cast<std::size_t>(f)] /=
                count[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(train.y[i]);
        for (int f = 0; f < d; ++f) {
            const double dev = train.x[i][static_cast<std::size_t>(f)] -
                               m.mean[k][static_cast<std::size_t>(f)];
            m.var[k][static_cast<std::size_t>(f)] += dev * dev;
        }
    }
    for (int k = 0; k < c; ++k)
        for (int f = 0; f < d; ++f)
            m.var[static_cast<std::size_t>(k)][static_cast<std::size_t>(f)] /=
                count[static_cast<std::size_t>(k)];

    // pooled per-feature variance of the whole training set, for the floor
    double max_pooled = 0.0;
    for (int f = 0; f < d; ++f) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += train.x[i][static_cast<std::size_t>(f)];
        mean /= double(n);
        double var = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double dev = train.x[i][static_cast<std::size_t>(f)] - mean;
            var += dev * dev;
        }
        max_pooled = std::max(max_pooled, var / double(n));
    }
    m.epsilon = std::max(1e-9 * max_pooled, 1e-300);
    for (auto& row : m.var)
        for (auto& v : row) v = std::max(v, m.epsilon);

    for (int k = 0; k < c; ++k)
        m.log_prior[static_cast<std::size_t>(k)] =
            std::log(double(count[static_cast<std::size_t>(k)]) / double(n));
    return m;
}

std::vector<double> GaussianNbModel::log_posterior(const std::vector<double>& row) const {
    if (static_cast<int>(row.size()) != features())
        throw std::invalid_argument("nb_predict: feature count mismatch");
    static const double kLog2Pi = std::log(2.0 * std::numbers::pi);
    std::vector<double> lp(static_cast<std::size_t>(classes()));
    for (int k = 0; k < classes(); ++k) {
        double acc = log_prior[static_cast<std::size_t>(k)];
        for (int f = 0; f < features(); ++f) {
            const double v = var[static_cast<std::size_t>(k)][static_cast<std::size_t>(f)];
            const double dev =
                row[static_cast<std::size_t>(f)] - mean[static_cast<std::size_t>(k)][static_cast<std::size_t>(f)];
            acc += -0.5 * (kLog2Pi + std::log(v)) - dev * dev / (2.0 * v);
        }
        lp[static_cast<std::size_t>(k)] = acc;
    }
    return lp;
}

int GaussianNbModel::predict(const std::vector<double>& row) const {
    const auto lp = log_posterior(row);
    int best = 0;
    for (int k = 1; k < classes(); ++k)
        if (lp[static_cast<std::size_t>(k)] > lp[static_cast<std::size_t>(best)]) best = k;
    return best;
}

std::vector<int> nb_predict(const GaussianNbModel& model,
                            const std::vector<std::vector<double>>& rows) {
    std::vector<int> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(model.predict(row));
    return out;
}

double accuracy(const GaussianNbModel& model, const LabeledDataset& test) {
    if (test.size() == 0) throw std::invalid_argument("accuracy: empty test set");
    std::size_t correct = 0;
    for (std::size_t i = 0; i < test.size(); ++i)
        if (model.predict(test.x[i]) == test.y[i]) ++correct;
    return double(correct) / double(test.size());
}

std::vector<std::vector<int>> confusion_matrix(const GaussianNbModel& model,
                                               const LabeledDataset& test) {
    const int c = model.classes();
    std::vector<std::vector<int>> m(static_cast<std::size_t>(c),
                                    std::vector<int>(static_cast<std::size_t>(c), 0));
    for (std::size_t i = 0; i < test.size(); ++i)
        ++m[static_cast<std::size_t>(test.y[i])]
           [static_cast<std::size_t>(model.predict(test.x[i]))];
    return m;
}

} // namespace structsums
