#pragma once

#include "structsums/lattice.hpp"

#include <vector>

namespace structsums {

/// Evaluates the Eisenstein functions E_n(z) = sum over the lattice of
/// (z - w)^(-n), with E_n(0) := S_n.
///
/// Method: the argument is first reduced to the origin-centered cell, then
///   E_n(z) = z^(-n) + (-1)^n sum_{j>=0} C(n+j-1, j) S_{n+j} z^j.
/// The coefficient rows depend only on (lattice, n) and are precomputed for
/// n = 2..max_n at construction; entries with S_{n+j} = 0 are dropped so the
/// symmetry gaps of the sum table (odd sums, fourfold/sixfold zeros) cannot
/// masquerade as convergence. The series is cut once three consecutive
/// retained terms fall below `tolerance` relative to the accumulated value,
/// with `series_order` as a hard cap (cell-corner arguments need the long
/// tail).
///
/// Immutable after construction; safe for concurrent use from any number of
/// threads. Evaluation is a pure function of (n, z).
class EisensteinEvaluator {
public:
    static constexpr int kDefaultSeriesOrder = 300;
    static constexpr double kDefaultTolerance = 1e-10;
    static constexpr int kDefaultMaxN = 16;

    explicit EisensteinEvaluator(LatticePtr lattice,
                                 int series_order = kDefaultSeriesOrder,
                                 double tolerance = kDefaultTolerance,
                                 int max_n = kDefaultMaxN);

    /// E_n at z (any complex argument; reduced internally). n >= 2.
    cplx eval(int n, cplx z) const;

    /// Weierstrass P recovered from E_2 = P + S_2.
    cplx weierstrass_p(cplx z) const { return eval(2, z) - lattice_->sum(2); }

    const Lattice& lattice() const { return *lattice_; }
    LatticePtr lattice_ptr() const { return lattice_; }
    int series_order() const { return series_order_; }
    double tolerance() const { return tolerance_; }
    int max_n() const { return max_n_; }

private:
    LatticePtr lattice_;
    int series_order_;
    double tolerance_;
    int max_n_;
    // coeffs_[n-2]: nonzero (j, C(n+j-1, j) * S_{n+j}) pairs, ascending j
    std::vector<std::vector<std::pair<int, cplx>>> coeffs_;
};

} // namespace structsums
