#include "structsums/disk_config.hpp"

#include <cmath>
#include <cstring>
#include <numbers>
#include <stdexcept>
#include <string>

namespace structsums {

namespace {

std::uint64_t fnv1a(const void* data, std::size_t size, std::uint64_t hash) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
        hash ^= bytes[i];
        hash *= 0x00000100000001b3ULL;
    }
    return hash;
}

} // namespace

DiskConfiguration::DiskConfiguration(LatticePtr lattice, std::vector<cplx> centers,
                                     std::vector<double> radii, bool validate)
    : lattice_(std::move(lattice)), centers_(std::move(centers)), radii_(std::move(radii)) {
    if (!lattice_) throw std::invalid_argument("configuration: null lattice");
    if (centers_.empty()) throw std::invalid_argument("configuration: N must be >= 1");
    if (centers_.size() != radii_.size())
        throw std::invalid_argument("configuration: centers/radii size mismatch");
    for (auto& c : centers_) c = lattice_->reduce(c).z;
    for (double r : radii_)
        if (!(r > 0.0)) throw std::invalid_argument("configuration: radii must be positive");
    finalize();
    if (validate) check_overlaps();
}

void DiskConfiguration::finalize() {
    r_max_ = 0.0;
    for (double r : radii_) r_max_ = std::max(r_max_, r);
    nu_.resize(radii_.size());
    eta_ = 0.0;
    double area = 0.0;
    for (std::size_t j = 0; j < radii_.size(); ++j) {
        const double s = radii_[j] / r_max_;
        nu_[j] = s * s;
        eta_ += nu_[j];
        area += radii_[j] * radii_[j];
    }
    concentration_ = std::numbers::pi * area;

    std::uint64_t h = 0xcbf29ce484222325ULL;
    const cplx w1 = lattice_->omega1(), w2 = lattice_->omega2();
    h = fnv1a(&w1, sizeof(w1), h);
    h = fnv1a(&w2, sizeof(w2), h);
    h = fnv1a(centers_.data(), centers_.size() * sizeof(cplx), h);
    h = fnv1a(radii_.data(), radii_.size() * sizeof(double), h);
    fingerprint_ = h;
}

void DiskConfiguration::check_overlaps() const {
    const int n = size();
    for (int j = 0; j < n; ++j) {
        // against periodic self-images
        const double self_gap = lattice_->shortest_vector() - 2.0 * radii_[j];
        if (self_gap < -kOverlapSlack)
            throw std::invalid_argument("configuration: disk " + std::to_string(j) +
                                        " overlaps its own periodic image");
        for (int k = j + 1; k < n; ++k) {
            const double d = lattice_->min_image_distance(centers_[j], centers_[k]);
            if (d < radii_[j] + radii_[k] - kOverlapSlack)
                throw std::invalid_argument("configuration: disks " + std::to_string(j) +
                                            " and " + std::to_string(k) + " overlap");
        }
    }
}

DiskConfiguration DiskConfiguration::translated(cplx delta) const {
    std::vector<cplx> moved = centers_;
    for (auto& c : moved) c += delta;
    return DiskConfiguration(lattice_, std::move(moved), radii_, /*validate=*/false);
}

} // namespace structsums
