#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace structsums {

using cplx = std::complex<double>;

struct ReducedPoint {
    cplx z;        // representative in the origin-centered cell
    long long m1;  // subtracted multiples of omega1
    long long m2;  // subtracted multiples of omega2
};

/// Doubly periodic lattice spanned by the periods (omega1, omega2) together
/// with the precomputed lattice sums S_n, n = 2..n_max.
///
/// S_2 comes from the rapidly convergent q-series
///   S_2 = (pi/omega1)^2 (1/3 - 8 sum m q^{2m} / (1 - q^{2m})),  q = exp(i pi tau),
/// S_4 and S_6 from their q-series, higher even sums from the recurrence
///   S_{2n} = 3 sum_{m=2}^{n-2} (2m-1)(2n-2m-1) S_{2m} S_{2(n-m)}
///            / ((2n+1)(2n-1)(n-3)),
/// and S_n = 0 exactly for odd n.
///
/// Immutable after construction; safe for concurrent reads.
class Lattice {
public:
    static constexpr int kDefaultNMax = 360;

    /// Periods are used as given (no normalization). Requires Im(tau) > 0.
    Lattice(cplx omega1, cplx omega2, int n_max = kDefaultNMax);

    /// Unit-area square cell: omega1 = 1, omega2 = i.
    static Lattice square(int n_max = kDefaultNMax);
    /// Unit-area hexagonal cell: tau = exp(i pi/3), |omega1 x omega2| = 1.
    static Lattice hexagonal(int n_max = kDefaultNMax);
    /// Build from a preset name ("square" or "hexagonal").
    static Lattice preset(const std::string& name, int n_max = kDefaultNMax);

    cplx omega1() const { return omega1_; }
    cplx omega2() const { return omega2_; }
    cplx tau() const { return tau_; }
    cplx nome_q() const { return q_; }
    int n_max() const { return n_max_; }
    double cell_area() const { return area_; }

    /// Lattice sum S_n, n in [2, n_max]. Exact zero for odd n.
    cplx sum(int n) const;
    /// Whole table, index i holds S_{i+2}.
    const std::vector<cplx>& sum_table() const { return sums_; }

    /// Lattice coordinates (t1, t2) of z: z = t1*omega1 + t2*omega2.
    void coordinates(cplx z, double& t1, double& t2) const;

    /// Representative of z in the origin-centered cell, obtained by rounding
    /// the lattice coordinates to nearest integers (reduction happens before
    /// any series evaluation, making E_n exactly periodic by construction).
    ReducedPoint reduce(cplx z) const;

    /// Minimum distance between a and b under the periodic metric
    /// (reduction plus a scan of the surrounding translation shell).
    double min_image_distance(cplx a, cplx b) const;

    /// Length of the shortest nonzero lattice vector.
    double shortest_vector() const { return shortest_; }

    /// Same periods bit-for-bit (used to detect evaluator/configuration
    /// mismatches).
    bool same_as(const Lattice& other) const {
        return omega1_ == other.omega1_ && omega2_ == other.omega2_;
    }

private:
    void build_sums();

    cplx omega1_, omega2_, tau_, q_;
    double area_ = 0.0;
    double inv_[4]{}; // row-major inverse of [[Re w1, Re w2], [Im w1, Im w2]]
    double shortest_ = 0.0;
    int n_max_;
    std::vector<cplx> sums_; // S_2 .. S_{n_max}
};

using LatticePtr = std::shared_ptr<const Lattice>;

inline LatticePtr make_square_lattice(int n_max = Lattice::kDefaultNMax) {
    return std::make_shared<const Lattice>(Lattice::square(n_max));
}
inline LatticePtr make_hexagonal_lattice(int n_max = Lattice::kDefaultNMax) {
    return std::make_shared<const Lattice>(Lattice::hexagonal(n_max));
}

} // namespace structsums
