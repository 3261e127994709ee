#include "structsums/structural_sums.hpp"

#include <cmath>
#include <stdexcept>

namespace structsums {

namespace {

// Neumaier-compensated accumulator, real and imaginary parts separately.
struct Kahan {
    double sum = 0.0, comp = 0.0;
    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

struct KahanC {
    Kahan re, im;
    void add(cplx v) {
        re.add(v.real());
        im.add(v.imag());
    }
    cplx value() const { return {re.value(), im.value()}; }
};

// out[m] = sum_k v[k] * M(k, m), compensated per output entry, streaming the
// matrix row-contiguously.
std::vector<cplx> fold_through(const std::vector<cplx>& v, const std::vector<cplx>& mat,
                               int n, bool conjugate) {
    std::vector<Kahan> re(static_cast<std::size_t>(n)), im(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const cplx w = v[static_cast<std::size_t>(k)];
        if (w == cplx(0.0, 0.0)) continue;
        const cplx* row = mat.data() + static_cast<std::size_t>(k) * static_cast<std::size_t>(n);
        for (int m = 0; m < n; ++m) {
            const cplx e = conjugate ? std::conj(row[m]) : row[m];
            const cplx t = w * e;
            re[static_cast<std::size_t>(m)].add(t.real());
            im[static_cast<std::size_t>(m)].add(t.imag());
        }
    }
    std::vector<cplx> out(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m)
        out[static_cast<std::size_t>(m)] =
            cplx(re[static_cast<std::size_t>(m)].value(), im[static_cast<std::size_t>(m)].value());
    return out;
}

std::vector<double> nu_powers(const DiskConfiguration& config, int exponent) {
    const auto& nu = config.polydispersity();
    std::vector<double> out(nu.size());
    for (std::size_t j = 0; j < nu.size(); ++j) {
        double v = 1.0;
        for (int e = 0; e < exponent; ++e) v *= nu[j];
        out[j] = v;
    }
    return out;
}

double eta_power(const DiskConfiguration& config, int exponent) {
    double v = 1.0;
    for (int e = 0; e < exponent; ++e) v *= config.eta();
    return v;
}

void require_compatible(const DiskConfiguration& config, const EisensteinEvaluator& ev) {
    if (!config.lattice().same_as(ev.lattice()))
        throw std::invalid_argument("structural sum: configuration and evaluator "
                                    "use different lattices");
}

} // namespace

void SumCache::bind(const DiskConfiguration& config, const EisensteinEvaluator& ev) {
    check_key(config, ev);
}

std::uint64_t SumCache::make_key(const DiskConfiguration& config,
                                 const EisensteinEvaluator& ev) {
    std::uint64_t h = config.fingerprint();
    h ^= 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(ev.series_order());
    h *= 0x00000100000001b3ULL;
    const double tol = ev.tolerance();
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(tol));
    __builtin_memcpy(&bits, &tol, sizeof(bits));
    h ^= bits;
    h *= 0x00000100000001b3ULL;
    return h == 0 ? 1 : h;
}

void SumCache::check_key(const DiskConfiguration& config, const EisensteinEvaluator& ev) const {
    const std::uint64_t k = make_key(config, ev);
    auto* self = const_cast<SumCache*>(this);
    std::unique_lock<std::mutex> lock(self->mutex_, std::defer_lock);
    if (mode_ == ThreadMode::synchronized) lock.lock();
    if (self->key_ == 0) {
        self->key_ = k;
    } else if (self->key_ != k) {
        throw std::invalid_argument("sum cache is bound to a different configuration");
    }
}

const std::vector<cplx>& SumCache::eisenstein_matrix(const DiskConfiguration& config,
                                                     const EisensteinEvaluator& ev, int p) {
    check_key(config, ev);
    {
        std::unique_lock<std::mutex> lock(mutex_, std::defer_lock);
        if (mode_ == ThreadMode::synchronized) lock.lock();
        auto it = matrices_.find(p);
        if (it != matrices_.end()) return it->second;
    }
    const int n = config.size();
    std::vector<cplx> mat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    const auto& a = config.centers();
    for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m)
            mat[static_cast<std::size_t>(k) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(m)] =
                ev.eval(p, a[static_cast<std::size_t>(k)] - a[static_cast<std::size_t>(m)]);
    std::unique_lock<std::mutex> lock(mutex_, std::defer_lock);
    if (mode_ == ThreadMode::synchronized) lock.lock();
    return matrices_.emplace(p, std::move(mat)).first->second;
}

std::optional<std::vector<cplx>> SumCache::find_prefix(const std::vector<int>& prefix) const {
    std::unique_lock<std::mutex> lock(mutex_, std::defer_lock);
    if (mode_ == ThreadMode::synchronized) lock.lock();
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) return std::nullopt;
    return it->second;
}

void SumCache::store_prefix(const std::vector<int>& prefix, std::vector<cplx> value) {
    std::unique_lock<std::mutex> lock(mutex_, std::defer_lock);
    if (mode_ == ThreadMode::synchronized) lock.lock();
    prefixes_.emplace(prefix, std::move(value));
}

cplx eval_sum(const DiskConfiguration& config, const MultiOrder& order,
              const EisensteinEvaluator& ev, SumCache& cache) {
    require_compatible(config, ev);
    if (order.length() == 0) return 1.0; // unit of the symbolic layer

    cache.bind(config, ev);
    const int n_disks = config.size();
    const auto& p = order.values();
    const auto& t = order.exponents();
    const int n = order.length();

    // Longest cached prefix of (p_1..p_j), then extend factor by factor.
    // The prefix vector after j factors excludes the nu^(t_j) weight of the
    // free index, so it can be shared by every sum with that prefix.
    int start = 0;
    std::vector<cplx> vec;
    for (int j = n; j >= 1; --j) {
        auto hit = cache.find_prefix(std::vector<int>(p.begin(), p.begin() + j));
        if (hit) {
            start = j;
            vec = std::move(*hit);
            break;
        }
    }
    if (start == 0) {
        std::vector<double> w0 = nu_powers(config, t[0]);
        vec.assign(w0.begin(), w0.end());
    }
    for (int j = start + 1; j <= n; ++j) {
        // multiply in the nu^(t_{j-1}) weights of the now-bound index
        std::vector<cplx> weighted = vec;
        if (j > 1) {
            const std::vector<double> w = nu_powers(config, t[static_cast<std::size_t>(j - 1)]);
            for (int k = 0; k < n_disks; ++k)
                weighted[static_cast<std::size_t>(k)] *= w[static_cast<std::size_t>(k)];
        }
        const auto& mat =
            cache.eisenstein_matrix(config, ev, p[static_cast<std::size_t>(j - 1)]);
        const bool conj = (j % 2 == 0); // factors at even positions are conjugated
        vec = fold_through(weighted, mat, n_disks, conj);
        cache.store_prefix(std::vector<int>(p.begin(), p.begin() + j), vec);
    }

    const std::vector<double> wn = nu_powers(config, t.back());
    KahanC acc;
    for (int k = 0; k < n_disks; ++k)
        acc.add(vec[static_cast<std::size_t>(k)] * wn[static_cast<std::size_t>(k)]);
    return acc.value() / eta_power(config, order.order() + 1);
}

cplx eval_sum(const DiskConfiguration& config, const MultiOrder& order,
              const EisensteinEvaluator& ev) {
    SumCache cache;
    return eval_sum(config, order, ev, cache);
}

cplx eval_sum_bruteforce(const DiskConfiguration& config, const MultiOrder& order,
                         const EisensteinEvaluator& ev, int max_disks, int max_length) {
    require_compatible(config, ev);
    if (order.length() == 0) return 1.0;
    const int n_disks = config.size();
    const int n = order.length();
    if (n_disks > max_disks || n > max_length)
        throw std::domain_error("brute-force oracle misuse: size exceeds caps");

    const auto& p = order.values();
    const auto& t = order.exponents();
    const auto& a = config.centers();
    const auto& nu = config.polydispersity();

    // Pairwise E_p tables (value memoization only; the sum below still runs
    // term by term over all N^(n+1) index tuples).
    std::vector<std::vector<cplx>> table(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        auto& m = table[static_cast<std::size_t>(j)];
        m.resize(static_cast<std::size_t>(n_disks) * static_cast<std::size_t>(n_disks));
        for (int k = 0; k < n_disks; ++k)
            for (int l = 0; l < n_disks; ++l)
                m[static_cast<std::size_t>(k) * static_cast<std::size_t>(n_disks) +
                  static_cast<std::size_t>(l)] =
                    ev.eval(p[static_cast<std::size_t>(j)],
                            a[static_cast<std::size_t>(k)] - a[static_cast<std::size_t>(l)]);
    }

    // nu^(t_j) per disk, one row per chain position
    std::vector<std::vector<double>> weight(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) {
        auto& w = weight[static_cast<std::size_t>(j)];
        w.resize(static_cast<std::size_t>(n_disks));
        for (int k = 0; k < n_disks; ++k) {
            double v = 1.0;
            for (int e = 0; e < t[static_cast<std::size_t>(j)]; ++e)
                v *= nu[static_cast<std::size_t>(k)];
            w[static_cast<std::size_t>(k)] = v;
        }
    }

    // Nested loops over (k_0, ..., k_n), carrying the partial product of the
    // already-fixed factors down the recursion; each leaf adds one term.
    KahanC acc;
    auto descend = [&](auto&& self, int j, int prev, cplx partial) -> void {
        if (j > n) {
            acc.add(partial);
            return;
        }
        const auto& w = weight[static_cast<std::size_t>(j)];
        const cplx* row = table[static_cast<std::size_t>(j - 1)].data() +
                          static_cast<std::size_t>(prev) * static_cast<std::size_t>(n_disks);
        const bool conj = (j % 2 == 0);
        for (int k = 0; k < n_disks; ++k) {
            const cplx e = conj ? std::conj(row[k]) : row[k];
            self(self, j + 1, k, partial * w[static_cast<std::size_t>(k)] * e);
        }
    };
    const auto& w0 = weight[0];
    for (int k0 = 0; k0 < n_disks; ++k0)
        descend(descend, 1, k0, cplx(w0[static_cast<std::size_t>(k0)], 0.0));

    return acc.value() / eta_power(config, order.order() + 1);
}

cplx mirror_value(cplx value, const MultiOrder& order) {
    const double sign = (order.alpha() % 2 == 0) ? 1.0 : -1.0;
    const bool conjugate = ((order.length() + 1) % 2 == 1);
    return sign * (conjugate ? std::conj(value) : value);
}

} // namespace structsums
