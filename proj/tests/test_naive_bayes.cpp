#include "structsums/naive_bayes.hpp"

#include "structsums/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace structsums;

namespace {

LabeledDataset toy_two_class() {
    LabeledDataset ds;
    ds.class_names = {"low", "high"};
    ds.feature_names = {"f"};
    ds.x = {{0.0}, {0.0}, {10.0}, {10.0}};
    ds.y = {0, 0, 1, 1};
    return ds;
}

} // namespace

TEST_CASE("two symmetric classes split at the midpoint") {
    const auto model = nb_fit(toy_two_class());
    CHECK(model.predict({4.9}) == 0);
    CHECK(model.predict({5.1}) == 1);
}

TEST_CASE("log-posteriors match the direct formula") {
    LabeledDataset ds;
    ds.class_names = {"a", "b"};
    ds.feature_names = {"x", "y"};
    ds.x = {{1.0, 2.0}, {2.0, 1.0}, {3.0, 0.5}, {8.0, -1.0}, {9.0, -2.0}, {10.5, -1.5}};
    ds.y = {0, 0, 0, 1, 1, 1};
    const auto model = nb_fit(ds);

    const std::vector<double> probe{2.5, 0.75};
    const auto lp = model.log_posterior(probe);

    // independent recomputation, straight from the definition
    for (int k = 0; k < 2; ++k) {
        double mean_x = 0.0, mean_y = 0.0;
        for (int i = 0; i < 3; ++i) {
            mean_x += ds.x[std::size_t(3 * k + i)][0];
            mean_y += ds.x[std::size_t(3 * k + i)][1];
        }
        mean_x /= 3.0;
        mean_y /= 3.0;
        double var_x = 0.0, var_y = 0.0;
        for (int i = 0; i < 3; ++i) {
            var_x += std::pow(ds.x[std::size_t(3 * k + i)][0] - mean_x, 2);
            var_y += std::pow(ds.x[std::size_t(3 * k + i)][1] - mean_y, 2);
        }
        var_x = std::max(var_x / 3.0, model.epsilon);
        var_y = std::max(var_y / 3.0, model.epsilon);
        auto log_gauss = [](double x, double mu, double var) {
            return -0.5 * std::log(2.0 * std::numbers::pi * var) -
                   (x - mu) * (x - mu) / (2.0 * var);
        };
        const double expect = std::log(0.5) + log_gauss(probe[0], mean_x, var_x) +
                              log_gauss(probe[1], mean_y, var_y);
        CHECK(std::abs(lp[std::size_t(k)] - expect) < 1e-12);
    }
}

TEST_CASE("duplicating every training row leaves the model unchanged") {
    auto ds = toy_two_class();
    const auto base = nb_fit(ds);
    LabeledDataset doubled = ds;
    for (std::size_t i = 0; i < ds.x.size(); ++i) {
        doubled.x.push_back(ds.x[i]);
        doubled.y.push_back(ds.y[i]);
    }
    const auto twice = nb_fit(doubled);
    CHECK(twice.mean == base.mean);
    CHECK(twice.var == base.var);
    CHECK(twice.log_prior == base.log_prior);
}

TEST_CASE("all-equal posteriors fall back to class 0") {
    LabeledDataset ds;
    ds.class_names = {"a", "b"};
    ds.feature_names = {"x"};
    ds.x = {{1.0}, {2.0}, {1.0}, {2.0}};
    ds.y = {0, 0, 1, 1};
    const auto model = nb_fit(ds);
    // identical class-conditionals and priors: exact tie everywhere
    CHECK(model.predict({1.7}) == 0);
}

TEST_CASE("class with fewer than two samples is a training error") {
    LabeledDataset ds;
    ds.class_names = {"a", "b"};
    ds.feature_names = {"x"};
    ds.x = {{1.0}, {2.0}, {5.0}};
    ds.y = {0, 0, 1};
    CHECK_THROWS_AS(nb_fit(ds), std::invalid_argument);
}

TEST_CASE("dimension mismatch is rejected at prediction") {
    const auto model = nb_fit(toy_two_class());
    CHECK_THROWS_AS(model.predict({1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("prediction is invariant under positive feature scaling") {
    Rng rng(555);
    LabeledDataset ds;
    ds.class_names = {"a", "b", "c"};
    ds.feature_names = {"x", "y", "z"};
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 12; ++i) {
            ds.x.push_back({2.0 * k + rng.normal01(), -k + 0.5 * rng.normal01(),
                            0.3 * k + 0.25 * rng.normal01()});
            ds.y.push_back(k);
        }
    const auto model = nb_fit(ds);

    const double scale = 37.5;
    LabeledDataset scaled = ds;
    for (auto& row : scaled.x)
        for (auto& v : row) v *= scale;
    const auto scaled_model = nb_fit(scaled);

    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> probe{rng.uniform(-2, 6), rng.uniform(-4, 2), rng.uniform(-1, 2)};
        std::vector<double> probe_scaled = probe;
        for (auto& v : probe_scaled) v *= scale;
        CHECK(model.predict(probe) == scaled_model.predict(probe_scaled));
    }
}

TEST_CASE("perfect separation with zero within-class variance") {
    LabeledDataset ds;
    ds.class_names = {"a", "b"};
    ds.feature_names = {"x"};
    ds.x = {{1.0}, {1.0}, {4.0}, {4.0}};
    ds.y = {0, 0, 1, 1};
    const auto model = nb_fit(ds);
    LabeledDataset test = ds;
    CHECK(accuracy(model, test) == 1.0);
}

TEST_CASE("confusion matrix row sums equal per-class test counts") {
    Rng rng(808);
    LabeledDataset ds;
    ds.class_names = {"a", "b"};
    ds.feature_names = {"x"};
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 9 + 3 * k; ++i) {
            ds.x.push_back({double(k) + 0.8 * rng.normal01()});
            ds.y.push_back(k);
        }
    const auto model = nb_fit(ds);
    const auto m = confusion_matrix(model, ds);
    CHECK(m[0][0] + m[0][1] == 9);
    CHECK(m[1][0] + m[1][1] == 12);
}

TEST_CASE("perfect classifier yields a diagonal confusion matrix") {
    const auto ds = toy_two_class();
    const auto model = nb_fit(ds);
    const auto m = confusion_matrix(model, ds);
    CHECK(m[0][1] == 0);
    CHECK(m[1][0] == 0);
    CHECK(m[0][0] == 2);
    CHECK(m[1][1] == 2);
}
