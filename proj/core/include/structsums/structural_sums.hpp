#pragma once

#include "structsums/disk_config.hpp"
#include "structsums/eisenstein.hpp"
#include "structsums/multi_order.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace structsums {

/// Reusable intermediates for structural-sum chains on one configuration:
/// the N x N Eisenstein matrices per p-value and the folded prefix vectors
/// per chain prefix (p_1..p_j). A cache is bound to the first configuration
/// and evaluator it sees; mixing in a different one is a logic error.
///
/// Thread modes: `synchronized` guards the maps with a mutex so one cache can
/// serve concurrent eval_sum calls; `unsynchronized` is for per-thread
/// caches. Cached entries are bit-identical to freshly computed ones (the
/// compute path is the same either way).
class SumCache {
public:
    enum class ThreadMode { unsynchronized, synchronized };

    explicit SumCache(ThreadMode mode = ThreadMode::unsynchronized) : mode_(mode) {}

    void bind(const DiskConfiguration& config, const EisensteinEvaluator& ev);
    bool bound() const { return key_ != 0; }

    /// Matrix of E_p values at pairwise center differences, row-major:
    /// entry(k, m) = E_p(a_k - a_m).
    const std::vector<cplx>& eisenstein_matrix(const DiskConfiguration& config,
                                               const EisensteinEvaluator& ev, int p);

    /// Folded prefix vector for (p_1..p_j); nullopt when absent.
    std::optional<std::vector<cplx>> find_prefix(const std::vector<int>& prefix) const;
    void store_prefix(const std::vector<int>& prefix, std::vector<cplx> value);

private:
    void check_key(const DiskConfiguration& config, const EisensteinEvaluator& ev) const;
    static std::uint64_t make_key(const DiskConfiguration& config,
                                  const EisensteinEvaluator& ev);

    ThreadMode mode_;
    std::uint64_t key_ = 0;
    mutable std::mutex mutex_;
    std::map<int, std::vector<cplx>> matrices_;
    std::map<std::vector<int>, std::vector<cplx>> prefixes_;
};

/// Structural sum e_p of the configuration: the (n+1)-fold chain of
/// polydispersity-weighted, alternately conjugated Eisenstein factors,
/// normalized by eta^(order+1). Evaluated as a fold of the weight vector
/// through the per-p Eisenstein matrices (O(n N^2) after matrix reuse);
/// inner products use compensated accumulation. The empty multi-order
/// evaluates to 1.
cplx eval_sum(const DiskConfiguration& config, const MultiOrder& order,
              const EisensteinEvaluator& ev, SumCache& cache);

/// Convenience overload with a private single-use cache.
cplx eval_sum(const DiskConfiguration& config, const MultiOrder& order,
              const EisensteinEvaluator& ev);

/// Reference oracle: direct nested-loop evaluation of the defining sum, term
/// by term. Refuses inputs beyond the caps (the loop is N^(n+1)).
cplx eval_sum_bruteforce(const DiskConfiguration& config, const MultiOrder& order,
                         const EisensteinEvaluator& ev, int max_disks = 30,
                         int max_length = 5);

/// Value of the mirror sum derived from the canonical one:
/// e_mirror = (-1)^alpha * conj^(n+1)(e). alpha is even for admissible
/// tuples, so this is a plain conjugation when the length n is even.
cplx mirror_value(cplx value, const MultiOrder& order);

} // namespace structsums
