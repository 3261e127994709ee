#include "structsums/eisenstein.hpp"

#include <cmath>
#include <stdexcept>

namespace structsums {

EisensteinEvaluator::EisensteinEvaluator(LatticePtr lattice, int series_order,
                                         double tolerance, int max_n)
    : lattice_(std::move(lattice)),
      series_order_(series_order),
      tolerance_(tolerance),
      max_n_(max_n) {
    if (!lattice_) throw std::invalid_argument("eisenstein: null lattice");
    if (series_order_ < 2) throw std::invalid_argument("eisenstein: series_order must be >= 2");
    if (!(tolerance_ > 0.0)) throw std::invalid_argument("eisenstein: tolerance must be positive");
    if (max_n_ < 2) throw std::invalid_argument("eisenstein: max_n must be >= 2");
    if (max_n_ + 2 > lattice_->n_max())
        throw std::invalid_argument("eisenstein: lattice sum table too short for max_n");

    coeffs_.resize(static_cast<std::size_t>(max_n_ - 1));
    for (int n = 2; n <= max_n_; ++n) {
        const int terms = lattice_->n_max() - n + 1;
        auto& row = coeffs_[static_cast<std::size_t>(n - 2)];
        double binom = 1.0; // C(n-1, 0)
        for (int j = 0; j < terms; ++j) {
            if (j > 0) binom *= double(n + j - 1) / double(j);
            const cplx c = binom * lattice_->sum(n + j);
            if (c != cplx(0.0, 0.0)) row.emplace_back(j, c);
        }
    }
}

cplx EisensteinEvaluator::eval(int n, cplx z) const {
    if (n < 2) throw std::domain_error("eisenstein: order n must be >= 2");
    if (n > max_n_) throw std::domain_error("eisenstein: order n exceeds evaluator max_n");

    const cplx zr = lattice_->reduce(z).z;
    if (zr == cplx(0.0, 0.0)) return lattice_->sum(n); // E_n(0) := S_n

    // pole part z^(-n)
    const cplx inv = 1.0 / zr;
    cplx pole = 1.0;
    for (int k = 0; k < n; ++k) pole *= inv;

    const auto& row = coeffs_[static_cast<std::size_t>(n - 2)];
    const double pole_mag = std::abs(pole);

    cplx acc = 0.0;
    cplx zpow = 1.0;
    int j_cur = 0;
    int quiet = 0; // consecutive sub-tolerance retained terms
    for (const auto& [j, coeff] : row) {
        if (j >= series_order_) break;
        while (j_cur < j) {
            zpow *= zr;
            ++j_cur;
        }
        const cplx term = coeff * zpow;
        acc += term;
        const double scale = std::max(std::abs(acc), pole_mag);
        if (std::abs(term) <= tolerance_ * scale) {
            if (++quiet >= 3) break;
        } else {
            quiet = 0;
        }
    }

    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return pole + sign * acc;
}

} // namespace structsums
