#include "structsums/features.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace structsums {

Projection projection_from_string(const std::string& name) {
    if (name == "complex") return Projection::complex_parts;
    if (name == "abs") return Projection::abs;
    if (name == "re") return Projection::re;
    if (name == "im") return Projection::im;
    if (name == "arg") return Projection::arg;
    if (name == "re_im") return Projection::re_im;
    throw std::invalid_argument("unknown projection: " + name);
}

std::string to_string(Projection p) {
    switch (p) {
    case Projection::complex_parts: return "complex";
    case Projection::abs: return "abs";
    case Projection::re: return "re";
    case Projection::im: return "im";
    case Projection::arg: return "arg";
    case Projection::re_im: return "re_im";
    }
    return "?";
}

namespace {

// Principal argument in (-pi, pi]; exact zeros map to 0 and are flagged,
// and a negative real axis value reports +pi regardless of the sign of the
// zero imaginary part.
double principal_arg(cplx v, bool& was_zero) {
    was_zero = false;
    if (v == cplx(0.0, 0.0)) {
        was_zero = true;
        return 0.0;
    }
    if (v.imag() == 0.0) return v.real() < 0.0 ? std::numbers::pi : 0.0;
    return std::arg(v);
}

} // namespace

FeatureVector::FeatureVector(std::vector<MultiOrder> keys, std::vector<cplx> values,
                             int order_q)
    : keys_(std::move(keys)), values_(std::move(values)), order_q_(order_q) {
    if (keys_.size() != values_.size())
        throw std::invalid_argument("feature vector: key/value size mismatch");
    if (!std::is_sorted(keys_.begin(), keys_.end(), feature_key_less))
        throw std::invalid_argument("feature vector: keys not in (order, lex) order");
}

cplx FeatureVector::at(const MultiOrder& key) const {
    for (std::size_t i = 0; i < keys_.size(); ++i)
        if (keys_[i] == key) return values_[i];
    throw std::out_of_range("feature vector: key " + key.name() + " not present");
}

ProjectedFeatures FeatureVector::project(Projection projection) const {
    return project_row(keys_, values_, projection);
}

ProjectedFeatures project_row(const std::vector<MultiOrder>& keys,
                              const std::vector<cplx>& values, Projection projection) {
    if (keys.size() != values.size())
        throw std::invalid_argument("project_row: key/value size mismatch");
    ProjectedFeatures out;
    const auto n = keys.size();
    auto push = [&out](std::string name, double v) {
        out.names.push_back(std::move(name));
        out.values.push_back(v);
    };
    switch (projection) {
    case Projection::complex_parts:
        for (std::size_t i = 0; i < n; ++i) {
            push(keys[i].name() + "_re", values[i].real());
            push(keys[i].name() + "_im", values[i].imag());
        }
        break;
    case Projection::abs:
        for (std::size_t i = 0; i < n; ++i) push(keys[i].name() + "_abs", std::abs(values[i]));
        break;
    case Projection::re:
        for (std::size_t i = 0; i < n; ++i) push(keys[i].name() + "_re", values[i].real());
        break;
    case Projection::im:
        for (std::size_t i = 0; i < n; ++i) push(keys[i].name() + "_im", values[i].imag());
        break;
    case Projection::arg:
        for (std::size_t i = 0; i < n; ++i) {
            bool zero = false;
            const double a = principal_arg(values[i], zero);
            if (zero) out.zero_arg.push_back(out.values.size());
            push(keys[i].name() + "_arg", a);
        }
        break;
    case Projection::re_im:
        for (std::size_t i = 0; i < n; ++i) push(keys[i].name() + "_re", values[i].real());
        for (std::size_t i = 0; i < n; ++i) push(keys[i].name() + "_im", values[i].imag());
        break;
    }
    return out;
}

std::vector<MultiOrder> xq_keys(int q) {
    if (q < 1 || q > 12) throw std::invalid_argument("X_q: q must be in [1, 12]");
    std::vector<MultiOrder> keys;
    for (int j = 1; j <= q; ++j) {
        auto g = reduce_mirrors(generate_Mq(j));
        keys.insert(keys.end(), g.begin(), g.end());
    }
    std::sort(keys.begin(), keys.end(), feature_key_less);
    return keys;
}

std::vector<MultiOrder> xq_prime_keys(int q) {
    if (q < 2 || q > 12) throw std::invalid_argument("X'_q: q must be in [2, 12]");
    std::vector<MultiOrder> keys;
    for (int p = 2; p <= q; ++p) keys.emplace_back(std::vector<int>{p, p});
    return keys;
}

namespace {

FeatureVector evaluate_keys(const DiskConfiguration& config, std::vector<MultiOrder> keys,
                            int q, const EisensteinEvaluator& ev, SumCache& cache) {
    std::vector<cplx> values;
    values.reserve(keys.size());
    for (const auto& key : keys) values.push_back(eval_sum(config, key, ev, cache));
    return FeatureVector(std::move(keys), std::move(values), q);
}

} // namespace

FeatureVector build_Xq(const DiskConfiguration& config, int q, const EisensteinEvaluator& ev,
                       SumCache& cache) {
    return evaluate_keys(config, xq_keys(q), q, ev, cache);
}

FeatureVector build_Xq_prime(const DiskConfiguration& config, int q,
                             const EisensteinEvaluator& ev, SumCache& cache) {
    return evaluate_keys(config, xq_prime_keys(q), q, ev, cache);
}

} // namespace structsums
