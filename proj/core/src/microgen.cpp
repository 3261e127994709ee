#include "structsums/microgen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace structsums {

namespace {

constexpr double kPi = std::numbers::pi;

LatticePtr lattice_for(const GeneratorSpec& spec) {
    return std::make_shared<const Lattice>(Lattice::preset(spec.lattice));
}

// Relative radius factors in draw order (index order), before the common
// rescale that hits the target concentration exactly.
std::vector<double> draw_radius_factors(const GeneratorSpec& spec, Rng& rng) {
    std::vector<double> f(static_cast<std::size_t>(spec.n), 1.0);
    switch (spec.radii_law) {
    case RadiiLaw::identical: break;
    case RadiiLaw::uniform:
        for (auto& v : f) v = rng.uniform(0.5, 1.5);
        break;
    case RadiiLaw::normal:
        for (auto& v : f) v = std::max(0.1, 1.0 + rng.truncated_normal3() / 4.0);
        break;
    }
    return f;
}

} // namespace

Protocol protocol_from_string(const std::string& s) {
    if (s == "rsa") return Protocol::rsa;
    if (s == "mc_walk") return Protocol::mc_walk;
    if (s == "hexagonal") return Protocol::hexagonal;
    if (s == "square") return Protocol::square;
    if (s == "rsa_shapes") return Protocol::rsa_shapes;
    throw std::invalid_argument("unknown protocol: " + s);
}

std::string to_string(Protocol p) {
    switch (p) {
    case Protocol::rsa: return "rsa";
    case Protocol::mc_walk: return "mc_walk";
    case Protocol::hexagonal: return "hexagonal";
    case Protocol::square: return "square";
    case Protocol::rsa_shapes: return "rsa_shapes";
    }
    return "?";
}

RadiiLaw radii_law_from_string(const std::string& s) {
    if (s == "identical") return RadiiLaw::identical;
    if (s == "uniform") return RadiiLaw::uniform;
    if (s == "normal") return RadiiLaw::normal;
    throw std::invalid_argument("unknown radii law: " + s);
}

std::string to_string(RadiiLaw law) {
    switch (law) {
    case RadiiLaw::identical: return "identical";
    case RadiiLaw::uniform: return "uniform";
    case RadiiLaw::normal: return "normal";
    }
    return "?";
}

StepLaw step_law_from_string(const std::string& s) {
    if (s == "Z1") return StepLaw::Z1;
    if (s == "Z2") return StepLaw::Z2;
    if (s == "Z3") return StepLaw::Z3;
    throw std::invalid_argument("unknown step law: " + s);
}

std::string to_string(StepLaw law) {
    switch (law) {
    case StepLaw::Z1: return "Z1";
    case StepLaw::Z2: return "Z2";
    case StepLaw::Z3: return "Z3";
    }
    return "?";
}

DiskConfiguration gen_rsa(const GeneratorSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("rsa: n must be >= 1");
    if (!(spec.concentration > 0.0) || spec.concentration >= 1.0)
        throw std::invalid_argument("rsa: concentration must be in (0, 1)");
    auto lattice = lattice_for(spec);
    Rng rng(spec.seed);

    std::vector<double> factors = draw_radius_factors(spec, rng);
    const double sum_sq =
        std::inner_product(factors.begin(), factors.end(), factors.begin(), 0.0);
    // nu = pi * sum r_j^2 in the unit-area cell; rescale hits it exactly
    const double scale = std::sqrt(spec.concentration / (kPi * sum_sq));
    std::vector<double> radii(factors.size());
    for (std::size_t k = 0; k < factors.size(); ++k) radii[k] = scale * factors[k];
    // Largest first: random-order insertion of the big disks saturates well
    // below the concentrations the walk protocol starts from.
    std::sort(radii.begin(), radii.end(), std::greater<>());

    for (double r : radii)
        if (2.0 * r > lattice->shortest_vector())
            throw std::invalid_argument("rsa: disk diameter exceeds the cell period");

    std::vector<cplx> centers;
    centers.reserve(radii.size());
    std::uint64_t rejections = 0;
    for (std::size_t k = 0; k < radii.size(); ++k) {
        while (true) {
            const double t1 = rng.uniform01() - 0.5;
            const double t2 = rng.uniform01() - 0.5;
            const cplx cand = t1 * lattice->omega1() + t2 * lattice->omega2();
            bool ok = true;
            for (std::size_t j = 0; j < centers.size(); ++j) {
                if (lattice->min_image_distance(cand, centers[j]) < radii[k] + radii[j]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                centers.push_back(cand);
                break;
            }
            if (++rejections > spec.max_attempts)
                throw SaturationError("rsa saturated after " + std::to_string(rejections - 1) +
                                          " rejections with " + std::to_string(centers.size()) +
                                          " of " + std::to_string(radii.size()) +
                                          " disks placed",
                                      static_cast<int>(centers.size()));
        }
    }
    return DiskConfiguration(lattice, std::move(centers), std::move(radii));
}

namespace {

// Translation vectors that can matter for collision checks: every reduced
// pair difference lies within the covering bound, the move is capped at one
// period, so only translations shorter than bound + cap + contact reach.
std::vector<cplx> collision_shell(const Lattice& lattice, double r_max) {
    const double covering_bound =
        0.5 * (std::abs(lattice.omega1()) + std::abs(lattice.omega2()));
    const double need = covering_bound + lattice.shortest_vector() + 2.0 * r_max;
    std::vector<cplx> shell;
    for (int m1 = -3; m1 <= 3; ++m1)
        for (int m2 = -3; m2 <= 3; ++m2) {
            const cplx t = double(m1) * lattice.omega1() + double(m2) * lattice.omega2();
            if (std::abs(t) <= need) shell.push_back(t);
        }
    return shell;
}

// Collision-free displacement interval [d_min, d_max] (d_min <= 0 <= d_max)
// for moving disk k along the unit direction u, against every other disk,
// every periodic image (own images included), capped at one period.
void free_interval(const Lattice& lattice, const std::vector<cplx>& shell,
                   const std::vector<cplx>& centers, const std::vector<double>& radii,
                   std::size_t k, cplx u, double& d_min, double& d_max) {
    const double cap = lattice.shortest_vector();
    d_max = cap;
    d_min = -cap;
    for (std::size_t j = 0; j < centers.size(); ++j) {
        const cplx base = (j == k) ? cplx(0.0, 0.0) : lattice.reduce(centers[j] - centers[k]).z;
        const double rr = radii[k] + radii[j];
        for (const cplx& t : shell) {
            if (j == k && t == cplx(0.0, 0.0)) continue;
            const cplx c = base + t;
            const double b = u.real() * c.real() + u.imag() * c.imag(); // Re(conj(u) c)
            const double disc = b * b - (std::norm(c) - rr * rr);
            if (disc <= 0.0) continue;
            const double s = std::sqrt(disc);
            const double lo = b - s, hi = b + s; // forbidden interval
            if (lo >= 0.0) {
                d_max = std::min(d_max, lo); // contact ahead, retreat stays free
            } else if (hi <= 0.0) {
                d_min = std::max(d_min, hi);
            } else {
                // overlapping beyond roundoff can only be numerical: freeze
                d_max = std::min(d_max, 0.0);
                d_min = std::max(d_min, 0.0);
            }
        }
    }
}

DiskConfiguration walk_cycles(const GeneratorSpec& spec, const DiskConfiguration& initial,
                              Rng& rng) {
    if (spec.cycles < 0) throw std::invalid_argument("mc_walk: cycles must be >= 0");
    const Lattice& lattice = initial.lattice();
    std::vector<cplx> centers = initial.centers();
    const std::vector<double>& radii = initial.radii();
    const std::vector<cplx> shell = collision_shell(lattice, initial.max_radius());

    for (int cycle = 0; cycle < spec.cycles; ++cycle) {
        for (std::size_t k = 0; k < centers.size(); ++k) {
            const double phi = kPi * rng.uniform01();
            const cplx u(std::cos(phi), std::sin(phi));
            double d_min = 0.0, d_max = 0.0;
            free_interval(lattice, shell, centers, radii, k, u, d_min, d_max);
            const double z = draw_step(rng, spec.step_law);
            const double d = d_min + (d_max - d_min) * z;
            centers[k] = lattice.reduce(centers[k] + d * u).z;
        }
    }
    return DiskConfiguration(initial.lattice_ptr(), std::move(centers), radii);
}

} // namespace

DiskConfiguration gen_mc_walk(const GeneratorSpec& spec, const DiskConfiguration& initial) {
    Rng rng(spec.seed);
    return walk_cycles(spec, initial, rng);
}

DiskConfiguration gen_mc_walk(const GeneratorSpec& spec) {
    // Stream discipline: the RSA initial state consumes Rng(seed); the walk
    // runs on the derived sub-stream (seed, 1), so both halves replay exactly.
    GeneratorSpec rsa_spec = spec;
    rsa_spec.protocol = Protocol::rsa;
    DiskConfiguration initial = gen_rsa(rsa_spec);
    Rng walk_rng(Rng::derive_seed(spec.seed, 1));
    return walk_cycles(spec, initial, walk_rng);
}

DiskConfiguration gen_regular(const GeneratorSpec& spec) {
    const bool hex = spec.protocol == Protocol::hexagonal;
    if (!hex && spec.protocol != Protocol::square)
        throw std::invalid_argument("gen_regular: protocol must be square or hexagonal");
    const std::string wanted = hex ? "hexagonal" : "square";
    if (spec.lattice != wanted)
        throw std::invalid_argument("gen_regular: " + wanted + " array requires the " + wanted +
                                    " lattice preset");
    const int m = static_cast<int>(std::lround(std::sqrt(double(spec.n))));
    if (m * m != spec.n)
        throw std::invalid_argument("gen_regular: n must be a perfect square");
    auto lattice = std::make_shared<const Lattice>(Lattice::preset(wanted));

    std::vector<cplx> centers;
    centers.reserve(static_cast<std::size_t>(spec.n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const double t1 = (i + 0.5) / m - 0.5;
            const double t2 = (j + 0.5) / m - 0.5;
            centers.push_back(t1 * lattice->omega1() + t2 * lattice->omega2());
        }
    const double r = std::sqrt(spec.concentration / (kPi * spec.n));
    std::vector<double> radii(static_cast<std::size_t>(spec.n), r);
    return DiskConfiguration(std::move(lattice), std::move(centers), std::move(radii));
}

ShapeSample gen_rsa_shapes(const GeneratorSpec& spec, const ShapeLibrary& library) {
    if (spec.n < 1) throw std::invalid_argument("rsa_shapes: n must be >= 1");
    if (!(spec.concentration > 0.0) || spec.concentration >= 1.0)
        throw std::invalid_argument("rsa_shapes: concentration must be in (0, 1)");
    const Shape& shape = library.shape(spec.shape_id);
    auto lattice = lattice_for(spec);
    Rng rng(spec.seed);

    const int disks_per_shape = static_cast<int>(shape.offsets.size());
    const int total = spec.n * disks_per_shape;
    const double r = std::sqrt(spec.concentration / (kPi * total));
    const std::vector<cplx> offsets = shape.euclidean_offsets(2.0 * r);

    std::vector<cplx> centers;
    centers.reserve(static_cast<std::size_t>(total));
    std::vector<ShapePlacement> placements;
    std::uint64_t rejections = 0;
    for (int s = 0; s < spec.n; ++s) {
        while (true) {
            const double t1 = rng.uniform01() - 0.5;
            const double t2 = rng.uniform01() - 0.5;
            const cplx anchor = t1 * lattice->omega1() + t2 * lattice->omega2();
            bool ok = true;
            for (const cplx& off : offsets) {
                const cplx cand = anchor + off;
                for (const cplx& placed : centers) {
                    if (lattice->min_image_distance(cand, placed) < 2.0 * r) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
            if (ok) {
                for (const cplx& off : offsets) centers.push_back(anchor + off);
                placements.push_back({anchor, spec.shape_id});
                break;
            }
            if (++rejections > spec.max_attempts)
                throw SaturationError("rsa_shapes saturated after " +
                                          std::to_string(rejections - 1) + " rejections with " +
                                          std::to_string(placements.size()) + " of " +
                                          std::to_string(spec.n) + " shapes placed",
                                      static_cast<int>(placements.size()));
        }
    }
    std::vector<double> radii(static_cast<std::size_t>(total), r);
    DiskConfiguration config(std::move(lattice), std::move(centers), std::move(radii));
    return {std::move(config), std::move(placements), r};
}

DiskConfiguration generate(const GeneratorSpec& spec) {
    switch (spec.protocol) {
    case Protocol::rsa: return gen_rsa(spec);
    case Protocol::mc_walk: return gen_mc_walk(spec);
    case Protocol::hexagonal:
    case Protocol::square: return gen_regular(spec);
    case Protocol::rsa_shapes: return gen_rsa_shapes(spec).config;
    }
    throw std::invalid_argument("generate: unknown protocol");
}

} // namespace structsums
