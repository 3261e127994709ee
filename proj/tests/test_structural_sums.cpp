#include "structsums/structural_sums.hpp"

#include "structsums/microgen.hpp"

#include <doctest.h>

#include <cmath>
#include <thread>

using namespace structsums;

namespace {

DiskConfiguration random_config(int n, std::uint64_t seed, RadiiLaw law = RadiiLaw::uniform,
                                double concentration = 0.2) {
    GeneratorSpec spec;
    spec.protocol = Protocol::rsa;
    spec.n = n;
    spec.concentration = concentration;
    spec.radii_law = law;
    spec.seed = seed;
    return gen_rsa(spec);
}

} // namespace

TEST_CASE("single identical disk collapses e_2 to S_2") {
    const auto lat = make_square_lattice();
    const DiskConfiguration config(lat, {cplx(0.1, 0.2)}, {0.05});
    const EisensteinEvaluator ev(lat);
    const cplx value = eval_sum(config, MultiOrder({2}), ev);
    CHECK(std::abs(value - lat->sum(2)) < 1e-14);
}

TEST_CASE("empty multi-order evaluates to one") {
    const auto config = random_config(4, 11);
    const EisensteinEvaluator ev(config.lattice_ptr());
    CHECK(eval_sum(config, MultiOrder{}, ev) == cplx(1.0, 0.0));
}

TEST_CASE("fast evaluator equals brute force on a random polydisperse config") {
    const auto config = random_config(10, 42);
    const EisensteinEvaluator ev(config.lattice_ptr());
    SumCache cache;
    const MultiOrder order({2, 3, 3});
    const cplx fast = eval_sum(config, order, ev, cache);
    const cplx brute = eval_sum_bruteforce(config, order, ev);
    CHECK(std::abs(fast - brute) < 1e-12 * std::abs(brute));
}

TEST_CASE("brute force on p=(2) equals the displayed double-sum formula") {
    const auto config = random_config(7, 5);
    const EisensteinEvaluator ev(config.lattice_ptr());
    const auto& a = config.centers();
    const auto& nu = config.polydispersity();
    cplx acc = 0.0;
    for (int k0 = 0; k0 < config.size(); ++k0)
        for (int k1 = 0; k1 < config.size(); ++k1)
            acc += nu[std::size_t(k0)] * nu[std::size_t(k1)] *
                   ev.eval(2, a[std::size_t(k0)] - a[std::size_t(k1)]);
    acc /= config.eta() * config.eta();
    const cplx brute = eval_sum_bruteforce(config, MultiOrder({2}), ev);
    CHECK(std::abs(brute - acc) < 1e-12 * std::max(1.0, std::abs(acc)));
}

TEST_CASE("identical disks: e_{2,3,3} equals e_{3,3,2} exactly") {
    const auto config = random_config(8, 7, RadiiLaw::identical);
    const EisensteinEvaluator ev(config.lattice_ptr());
    SumCache cache;
    const cplx a = eval_sum(config, MultiOrder({2, 3, 3}), ev, cache);
    const cplx b = eval_sum(config, MultiOrder({3, 3, 2}), ev, cache);
    // alpha = 8 even and the conjugation power is the identity here
    CHECK(std::abs(a - b) < 1e-12 * std::max(1.0, std::abs(a)));
    CHECK(mirror_value(a, MultiOrder({2, 3, 3})) == a);
}

TEST_CASE("mirror relation holds for all orders <= 6 on a polydisperse config") {
    const auto config = random_config(9, 101);
    const EisensteinEvaluator ev(config.lattice_ptr());
    SumCache cache;
    for (int q = 1; q <= 6; ++q) {
        for (const auto& order : generate_Mq(q)) {
            const cplx direct = eval_sum(config, order, ev, cache);
            const cplx mirrored = eval_sum(config, order.mirror(), ev, cache);
            const cplx derived = mirror_value(mirrored, order.mirror());
            CHECK(std::abs(direct - derived) <= 1e-10 * std::max(1.0, std::abs(direct)));
        }
    }
}

TEST_CASE("mirror relation holds term by term in the brute-force oracle") {
    const auto config = random_config(6, 13);
    const EisensteinEvaluator ev(config.lattice_ptr());
    const MultiOrder order({2, 4, 4});
    const cplx direct = eval_sum_bruteforce(config, order, ev);
    const cplx mirrored = eval_sum_bruteforce(config, order.mirror(), ev);
    CHECK(std::abs(direct - mirror_value(mirrored, order.mirror())) <=
          1e-12 * std::max(1.0, std::abs(direct)));
}

TEST_CASE("symmetric pair on the real axis has real e_2") {
    const auto lat = make_square_lattice();
    const cplx c(0.21, 0.0); // reflection symmetry across the real axis
    const DiskConfiguration config(lat, {c, -c}, {0.05, 0.05});
    const EisensteinEvaluator ev(lat);
    const cplx value = eval_sum_bruteforce(config, MultiOrder({2}), ev);
    CHECK(std::abs(value.imag()) < 1e-12);
}

TEST_CASE("square array collapses e_88 to |S_8|^2 for any grid size") {
    // Summing E_8 over an M x M sublattice gives the refined-lattice sum
    // M^8 S_8, and the eta^(delta+1) normalization cancels every power of M,
    // so e_88 = |S_8|^2 independent of M (and e_33 = 0, odd sum).
    const auto lat = make_square_lattice();
    const double expect = std::norm(lat->sum(8));
    for (int m : {3, 4, 5}) {
        GeneratorSpec spec;
        spec.protocol = Protocol::square;
        spec.n = m * m;
        spec.concentration = 0.5;
        const auto config = gen_regular(spec);
        const EisensteinEvaluator ev(config.lattice_ptr());
        SumCache cache;
        const cplx e88 = eval_sum(config, MultiOrder({8, 8}), ev, cache);
        CHECK(std::abs(e88.real() - expect) < 1e-9 * expect);
        CHECK(std::abs(e88.imag()) < 1e-12);
        CHECK(std::abs(eval_sum(config, MultiOrder({3, 3}), ev, cache)) < 1e-10);
    }
}

TEST_CASE("translation invariance of structural sums") {
    const auto config = random_config(8, 55);
    const EisensteinEvaluator ev(config.lattice_ptr());
    const auto moved = config.translated(cplx(0.313, -0.271));
    SumCache c1, c2;
    for (const auto& order : {MultiOrder({2}), MultiOrder({3, 3}), MultiOrder({2, 2, 2})}) {
        const cplx a = eval_sum(config, order, ev, c1);
        const cplx b = eval_sum(moved, order, ev, c2);
        CHECK(std::abs(a - b) <= 1e-8 * std::max(1.0, std::abs(a)));
    }
}

TEST_CASE("cache transparency: results are bit-identical with and without cache") {
    const auto config = random_config(8, 77);
    const EisensteinEvaluator ev(config.lattice_ptr());
    SumCache shared;
    for (int q = 1; q <= 5; ++q) {
        for (const auto& order : reduce_mirrors(generate_Mq(q))) {
            const cplx with_cache = eval_sum(config, order, ev, shared);
            const cplx without = eval_sum(config, order, ev); // fresh cache each time
            CHECK(with_cache == without);
        }
    }
}

TEST_CASE("synchronized cache serves concurrent evaluations") {
    const auto config = random_config(8, 78);
    const EisensteinEvaluator ev(config.lattice_ptr());
    SumCache cache(SumCache::ThreadMode::synchronized);
    const MultiOrder order({2, 2, 2});
    const cplx expect = eval_sum(config, order, ev);
    cplx a, b;
    std::thread ta([&] { a = eval_sum(config, order, ev, cache); });
    std::thread tb([&] { b = eval_sum(config, order, ev, cache); });
    ta.join();
    tb.join();
    CHECK(a == expect);
    CHECK(b == expect);
}

TEST_CASE("cache bound to another configuration is rejected") {
    const auto c1 = random_config(5, 1);
    const auto c2 = random_config(5, 2);
    const EisensteinEvaluator ev(c1.lattice_ptr());
    SumCache cache;
    (void)eval_sum(c1, MultiOrder({2}), ev, cache);
    CHECK_THROWS_AS(eval_sum(c2, MultiOrder({2}), ev, cache), std::invalid_argument);
}

TEST_CASE("brute-force caps refuse oversized input") {
    const auto config = random_config(12, 3);
    const EisensteinEvaluator ev(config.lattice_ptr());
    CHECK_THROWS_AS(eval_sum_bruteforce(config, MultiOrder({2}), ev, 10, 5),
                    std::domain_error);
    CHECK_THROWS_AS(
        eval_sum_bruteforce(config, MultiOrder({2, 2, 2, 2, 2, 2}), ev, 30, 5),
        std::domain_error);
}

TEST_CASE("oracle equivalence holds on the hexagonal lattice too") {
    GeneratorSpec spec;
    spec.lattice = "hexagonal";
    spec.n = 9;
    spec.concentration = 0.25;
    spec.radii_law = RadiiLaw::uniform;
    spec.seed = 313;
    const auto config = gen_rsa(spec);
    const EisensteinEvaluator ev(config.lattice_ptr());
    SumCache cache;
    for (int q = 1; q <= 4; ++q)
        for (const auto& order : generate_Mq(q)) {
            const cplx fast = eval_sum(config, order, ev, cache);
            const cplx brute = eval_sum_bruteforce(config, order, ev);
            CHECK(std::abs(fast - brute) <= 1e-10 * std::max(1.0, std::abs(brute)));
        }
}

TEST_CASE("incompatible lattices are a configuration error") {
    const auto config = random_config(4, 9); // square lattice
    const EisensteinEvaluator hex_ev(make_hexagonal_lattice());
    SumCache cache;
    CHECK_THROWS_AS(eval_sum(config, MultiOrder({2}), hex_ev, cache), std::invalid_argument);
}
