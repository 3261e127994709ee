#pragma once

#include "structsums/lattice.hpp"

#include <cstdint>
#include <vector>

namespace structsums {

/// Non-overlapping disks in the periodic cell.
///
/// Derived quantities follow the polydisperse conventions: r is the largest
/// radius, nu_j = (r_j/r)^2, eta = sum nu_j, and the concentration is
/// nu = pi * sum r_j^2 (the cell has unit area for the shipped presets).
class DiskConfiguration {
public:
    static constexpr double kOverlapSlack = 1e-12;

    /// Centers are reduced into the origin-centered cell; the periodic
    /// non-overlap invariant is checked unless `validate` is false.
    DiskConfiguration(LatticePtr lattice, std::vector<cplx> centers,
                      std::vector<double> radii, bool validate = true);

    int size() const { return static_cast<int>(centers_.size()); }
    const std::vector<cplx>& centers() const { return centers_; }
    const std::vector<double>& radii() const { return radii_; }
    const Lattice& lattice() const { return *lattice_; }
    LatticePtr lattice_ptr() const { return lattice_; }

    double max_radius() const { return r_max_; }
    const std::vector<double>& polydispersity() const { return nu_; }
    double eta() const { return eta_; }
    double concentration() const { return concentration_; }

    /// Re-check the periodic non-overlap invariant; throws on violation.
    void check_overlaps() const;

    /// Fingerprint over the lattice periods and disk data (used to bind
    /// caches to one configuration).
    std::uint64_t fingerprint() const { return fingerprint_; }

    /// Copy with all centers shifted by `delta` (and re-reduced).
    DiskConfiguration translated(cplx delta) const;

private:
    void finalize();

    LatticePtr lattice_;
    std::vector<cplx> centers_;
    std::vector<double> radii_;
    std::vector<double> nu_;
    double r_max_ = 0.0;
    double eta_ = 0.0;
    double concentration_ = 0.0;
    std::uint64_t fingerprint_ = 0;
};

} // namespace structsums
