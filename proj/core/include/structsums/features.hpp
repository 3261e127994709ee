#pragma once

#include "structsums/structural_sums.hpp"

#include <string>
#include <vector>

namespace structsums {

enum class Projection { complex_parts, abs, re, im, arg, re_im };

Projection projection_from_string(const std::string& name);
std::string to_string(Projection p);

/// Real-valued view of a complex feature vector. `zero_arg` flags entries
/// whose argument was defined as 0 because the value was exactly zero.
struct ProjectedFeatures {
    std::vector<std::string> names;
    std::vector<double> values;
    std::vector<std::size_t> zero_arg;
};

/// Structural-sums feature vector X_q (or the diagonal subset X'_q): an
/// ordered map from multi-order to complex value. Keys are ascending in
/// (order, lexicographic), so CSV columns are stable across runs.
class FeatureVector {
public:
    FeatureVector(std::vector<MultiOrder> keys, std::vector<cplx> values, int order_q);

    const std::vector<MultiOrder>& keys() const { return keys_; }
    const std::vector<cplx>& values() const { return values_; }
    int order_q() const { return order_q_; }
    std::size_t size() const { return keys_.size(); }

    /// Value of one key; throws if absent.
    cplx at(const MultiOrder& key) const;

    ProjectedFeatures project(Projection projection) const;

private:
    std::vector<MultiOrder> keys_;
    std::vector<cplx> values_;
    int order_q_;
};

/// Keys of X_q: the mirror-reduced sets G_1..G_q in (order, lex) order.
std::vector<MultiOrder> xq_keys(int q);
/// Keys of X'_q: the diagonal sums e_{p,p}, 2 <= p <= q.
std::vector<MultiOrder> xq_prime_keys(int q);

/// Evaluate X_q on a configuration. 1 <= q <= 12.
FeatureVector build_Xq(const DiskConfiguration& config, int q,
                       const EisensteinEvaluator& ev, SumCache& cache);
/// Evaluate X'_q on a configuration. 2 <= q <= 12.
FeatureVector build_Xq_prime(const DiskConfiguration& config, int q,
                             const EisensteinEvaluator& ev, SumCache& cache);

/// Project one row of complex features (shared by FeatureVector::project and
/// the experiment drivers). Names get the projection suffix appended.
ProjectedFeatures project_row(const std::vector<MultiOrder>& keys,
                              const std::vector<cplx>& values, Projection projection);

} // namespace structsums
