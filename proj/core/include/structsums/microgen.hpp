#pragma once

#include "structsums/disk_config.hpp"
#include "structsums/rng.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace structsums {

enum class Protocol { rsa, mc_walk, hexagonal, square, rsa_shapes };
enum class RadiiLaw { identical, uniform, normal };

Protocol protocol_from_string(const std::string& s);
std::string to_string(Protocol p);
RadiiLaw radii_law_from_string(const std::string& s);
std::string to_string(RadiiLaw law);
StepLaw step_law_from_string(const std::string& s);
std::string to_string(StepLaw law);

/// Parameters of one microstructure draw. The seed fully determines the
/// output; every random draw flows through one Rng stream in a fixed order
/// (radii first, then placements, then walk steps).
struct GeneratorSpec {
    Protocol protocol = Protocol::rsa;
    std::string lattice = "square"; // preset name
    int n = 64;                     // disk count, or shape count for rsa_shapes
    double concentration = 0.5;
    RadiiLaw radii_law = RadiiLaw::identical;
    StepLaw step_law = StepLaw::Z1; // mc_walk only
    int cycles = 100;               // mc_walk only
    int shape_id = 0;               // rsa_shapes only
    std::uint64_t seed = 0;
    std::uint64_t max_attempts = 1'000'000; // RSA rejection budget
};

/// RSA ran out of its rejection budget before reaching the target count.
class SaturationError : public std::runtime_error {
public:
    SaturationError(std::string message, int placed_count)
        : std::runtime_error(std::move(message)), placed(placed_count) {}
    int placed;
};

/// Rigid multi-disk cluster: integer offsets on the triangular grid; the
/// Euclidean position of (i, j) is (i + j/2, j*sqrt(3)/2) disk diameters.
struct Shape {
    int id = 0;
    std::string name;
    std::vector<std::pair<int, int>> offsets;

    std::vector<cplx> euclidean_offsets(double diameter) const;
    Shape mirrored() const;   // reflect across the vertical axis, renormalized
    Shape rotated60() const;  // rotate by 60 degrees, renormalized
    /// Equal up to grid translation + rotations by multiples of 60 degrees.
    bool congruent(const Shape& other) const;
};

class ShapeLibrary {
public:
    static const ShapeLibrary& builtin();
    static ShapeLibrary from_json_text(const std::string& text);
    static ShapeLibrary load(const std::string& path);

    const Shape& shape(int id) const;
    int size() const { return static_cast<int>(shapes_.size()); }
    int version() const { return version_; }
    int disks_per_shape() const { return disks_per_shape_; }

private:
    int version_ = 0;
    int disks_per_shape_ = 0;
    std::vector<Shape> shapes_;
};

/// Sequential random insertion with periodic overlap rejection.
DiskConfiguration gen_rsa(const GeneratorSpec& spec);

/// Random-walk cycles applied to an explicit initial configuration. Each
/// cycle moves every disk once (index order): direction uniform in (0, pi),
/// displacement d = d_min + (d_max - d_min) Z along it, where d_max/d_min are
/// the collision-free limits against all periodic neighbors, capped at one
/// period. Non-overlap holds after every individual move.
DiskConfiguration gen_mc_walk(const GeneratorSpec& spec, const DiskConfiguration& initial);
/// Convenience: initial state drawn by RSA from the same spec (same stream).
DiskConfiguration gen_mc_walk(const GeneratorSpec& spec);

/// Regular array of identical disks (protocol square or hexagonal); n must
/// be a perfect square.
DiskConfiguration gen_regular(const GeneratorSpec& spec);

struct ShapePlacement {
    cplx anchor;
    int shape_id;
};

struct ShapeSample {
    DiskConfiguration config;
    std::vector<ShapePlacement> placements;
    double disk_radius;
};

/// RSA over rigid 21-disk clusters: uniformly random positions, rejected
/// when any disk of the candidate overlaps any placed disk.
ShapeSample gen_rsa_shapes(const GeneratorSpec& spec,
                           const ShapeLibrary& library = ShapeLibrary::builtin());

/// Dispatch on spec.protocol (rsa_shapes returns just the configuration).
DiskConfiguration generate(const GeneratorSpec& spec);

} // namespace structsums
