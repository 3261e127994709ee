#include "structsums/lattice.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace structsums;

TEST_CASE("square lattice S2 equals pi") {
    const auto lat = Lattice::square();
    CHECK(lat.sum(2).real() == doctest::Approx(std::numbers::pi).epsilon(1e-12));
    CHECK(std::abs(lat.sum(2).imag()) < 1e-12);
}

TEST_CASE("S2 agrees with the direct Eisenstein-ordered summation") {
    for (const auto& lat : {Lattice::square(), Lattice::hexagonal()}) {
        const cplx direct = oracle::lattice_sum_direct(lat, 2);
        CHECK(std::abs(lat.sum(2) - direct) < 1e-8);
    }
}

TEST_CASE("odd lattice sums vanish exactly") {
    const auto lat = Lattice::hexagonal();
    for (int n = 3; n <= 11; n += 2) CHECK(lat.sum(n) == cplx(0.0, 0.0));
}

TEST_CASE("square lattice S4 matches the direct oracle and the known value") {
    const auto lat = Lattice::square();
    CHECK(lat.sum(4).real() == doctest::Approx(3.1512).epsilon(1e-4));
    const cplx direct = oracle::lattice_sum_direct(lat, 4);
    CHECK(std::abs(lat.sum(4) - direct) < 1e-10);
}

TEST_CASE("square lattice S6 vanishes by fourfold symmetry") {
    const auto lat = Lattice::square();
    CHECK(std::abs(lat.sum(6)) < 1e-12);
}

TEST_CASE("recurrence sums match direct summation") {
    for (const auto& lat : {Lattice::square(), Lattice::hexagonal()}) {
        for (int n : {8, 10, 12}) {
            const cplx direct = oracle::lattice_sum_direct(lat, n);
            CHECK(std::abs(lat.sum(n) - direct) < 1e-10);
        }
    }
}

TEST_CASE("rectangular lattices have real S2") {
    const Lattice rect(cplx(2.0, 0.0), cplx(0.0, 0.5), 8);
    CHECK(std::abs(rect.sum(2).imag()) < 1e-12);
}

TEST_CASE("invalid lattices are rejected") {
    CHECK_THROWS_AS(Lattice(cplx(1.0, 0.0), cplx(2.0, 0.0), 8), std::invalid_argument);
    CHECK_THROWS_AS(Lattice(cplx(1.0, 0.0), cplx(0.0, -1.0), 8), std::invalid_argument);
    CHECK_THROWS_AS(Lattice(cplx(0.0, 0.0), cplx(0.0, 1.0), 8), std::invalid_argument);
}

TEST_CASE("presets have unit cell area") {
    CHECK(Lattice::square().cell_area() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(Lattice::hexagonal().cell_area() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("reduction maps into the centered cell and is idempotent") {
    const auto lat = Lattice::hexagonal();
    const cplx z(3.7, -2.9);
    const auto red = lat.reduce(z);
    double t1, t2;
    lat.coordinates(red.z, t1, t2);
    CHECK(std::abs(t1) <= 0.5 + 1e-12);
    CHECK(std::abs(t2) <= 0.5 + 1e-12);
    const auto again = lat.reduce(red.z);
    CHECK(again.z == red.z);
}
