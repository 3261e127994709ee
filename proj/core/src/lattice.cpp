#include "structsums/lattice.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace structsums {

namespace {

constexpr double kPi = std::numbers::pi;

// Truncation rule for the q-series: stop once the current term drops below
// 1e-16 of the partial sum, hard cap 10^4 terms.
constexpr double kSeriesCut = 1e-16;
constexpr int kSeriesMaxTerms = 10'000;

// sum_{m>=1} m^k q^{2m} / (1 - q^{2m})
cplx lambert_series(cplx q2, int k) {
    cplx acc = 0.0;
    cplx q2m = 1.0;
    for (int m = 1; m <= kSeriesMaxTerms; ++m) {
        q2m *= q2;
        cplx term = std::pow(static_cast<double>(m), k) * q2m / (1.0 - q2m);
        acc += term;
        if (std::abs(term) < kSeriesCut * std::abs(acc)) break;
    }
    return acc;
}

} // namespace

Lattice::Lattice(cplx omega1, cplx omega2, int n_max)
    : omega1_(omega1), omega2_(omega2), n_max_(n_max) {
    if (n_max_ < 2) throw std::invalid_argument("lattice: n_max must be >= 2");
    if (omega1_ == cplx(0.0, 0.0)) throw std::invalid_argument("lattice: omega1 = 0");
    tau_ = omega2_ / omega1_;
    if (!(tau_.imag() > 0.0))
        throw std::invalid_argument("lattice: Im(omega2/omega1) must be positive");
    q_ = std::exp(cplx(0.0, kPi) * tau_);
    if (!(std::abs(q_) < 1.0))
        throw std::invalid_argument("lattice: |q| >= 1, series do not converge");

    const double a = omega1_.real(), b = omega2_.real();
    const double c = omega1_.imag(), d = omega2_.imag();
    const double det = a * d - b * c;
    area_ = std::abs(det);
    inv_[0] = d / det;
    inv_[1] = -b / det;
    inv_[2] = -c / det;
    inv_[3] = a / det;

    shortest_ = std::abs(omega1_);
    for (int m1 = -2; m1 <= 2; ++m1)
        for (int m2 = -2; m2 <= 2; ++m2) {
            if (m1 == 0 && m2 == 0) continue;
            shortest_ = std::min(shortest_,
                                 std::abs(double(m1) * omega1_ + double(m2) * omega2_));
        }

    build_sums();
}

void Lattice::build_sums() {
    sums_.assign(static_cast<std::size_t>(n_max_ - 1), cplx(0.0, 0.0));
    auto set = [this](int n, cplx v) { sums_[static_cast<std::size_t>(n - 2)] = v; };

    const cplx pw = kPi / omega1_;
    const cplx pw2 = pw * pw;
    const cplx q2 = q_ * q_;

    set(2, pw2 * (1.0 / 3.0 - 8.0 * lambert_series(q2, 1)));
    if (n_max_ >= 4) {
        const cplx pw4 = pw2 * pw2;
        set(4, pw4 / 60.0 * (4.0 / 3.0 + 320.0 * lambert_series(q2, 3)));
    }
    if (n_max_ >= 6) {
        const cplx pw6 = pw2 * pw2 * pw2;
        set(6, pw6 / 140.0 * (8.0 / 27.0 - 448.0 / 3.0 * lambert_series(q2, 5)));
    }
    // S_{2n} for n >= 4 from the quadratic recurrence over lower even sums.
    for (int n = 4; 2 * n <= n_max_; ++n) {
        cplx acc = 0.0;
        for (int m = 2; m <= n - 2; ++m)
            acc += double((2 * m - 1) * (2 * n - 2 * m - 1)) * sum(2 * m) * sum(2 * (n - m));
        set(2 * n, 3.0 * acc / double((2 * n + 1) * (2 * n - 1) * (n - 3)));
    }
}

Lattice Lattice::square(int n_max) { return Lattice(cplx(1.0, 0.0), cplx(0.0, 1.0), n_max); }

Lattice Lattice::hexagonal(int n_max) {
    // |omega1|^2 * sin(pi/3) = 1  =>  |omega1| = (2/sqrt(3))^(1/2)
    const double h = std::sqrt(2.0 / std::sqrt(3.0));
    const cplx w1(h, 0.0);
    const cplx w2 = w1 * std::exp(cplx(0.0, kPi / 3.0));
    return Lattice(w1, w2, n_max);
}

Lattice Lattice::preset(const std::string& name, int n_max) {
    if (name == "square") return square(n_max);
    if (name == "hexagonal") return hexagonal(n_max);
    throw std::invalid_argument("unknown lattice preset: " + name);
}

cplx Lattice::sum(int n) const {
    if (n < 2 || n > n_max_)
        throw std::out_of_range("lattice sum index outside [2, n_max]");
    return sums_[static_cast<std::size_t>(n - 2)];
}

void Lattice::coordinates(cplx z, double& t1, double& t2) const {
    t1 = inv_[0] * z.real() + inv_[1] * z.imag();
    t2 = inv_[2] * z.real() + inv_[3] * z.imag();
}

ReducedPoint Lattice::reduce(cplx z) const {
    double t1, t2;
    coordinates(z, t1, t2);
    const long long m1 = std::llround(t1);
    const long long m2 = std::llround(t2);
    const cplx r = z - double(m1) * omega1_ - double(m2) * omega2_;
    return {r, m1, m2};
}

double Lattice::min_image_distance(cplx a, cplx b) const {
    const cplx w = reduce(a - b).z;
    double best = std::abs(w);
    for (int m1 = -1; m1 <= 1; ++m1)
        for (int m2 = -1; m2 <= 1; ++m2) {
            if (m1 == 0 && m2 == 0) continue;
            best = std::min(best, std::abs(w + double(m1) * omega1_ + double(m2) * omega2_));
        }
    return best;
}

} // namespace structsums
