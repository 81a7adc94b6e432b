#include "property_checks.hpp"

#include <doctest.h>

using namespace badred;

namespace {

void require(const props::Outcome& o) {
    INFO("checked " << o.checked << ", failed " << o.failed << ", first failure: " << o.first_failure);
    CHECK(o.ok());
}

}  // namespace

TEST_CASE("Hasse bound holds on every enumeration") { require(props::hasse_bound()); }

TEST_CASE("torsion reduces injectively") { require(props::torsion_injectivity()); }

TEST_CASE("Selmer groups are subgroups") { require(props::selmer_closure({11, 13, 17, 19, 37})); }

TEST_CASE("images of twist points lie in the Selmer group") {
    require(props::twist_images_in_selmer({13, 17}, 10000));
}

TEST_CASE("certificates replay after a JSON round trip") { require(props::certificate_replay({13, 17})); }

TEST_CASE("divisor search agrees with the direct sweep") { require(props::search_matches_sweep()); }

TEST_CASE("real place agrees with the numeric sampler") { require(props::real_place_sampler()); }

TEST_CASE("kronecker is multiplicative in both arguments") {
    oracle::Gen gen(5);
    for (int t = 0; t < 500; ++t) {
        long a = gen.range(-300, 300), b = gen.range(-300, 300), n = gen.range(1, 300) * 2 + 1;
        CHECK(kronecker(Integer(a * b), Integer(n)) == kronecker(a, n) * kronecker(b, n));
        long m = gen.range(1, 200) * 2 + 1;
        CHECK(kronecker(Integer(a), Integer(n * m)) == kronecker(a, n) * kronecker(a, m));
    }
}

TEST_CASE("Frobenius is additive on F_{p^k}") {
    oracle::Gen gen(6);
    for (int t = 0; t < 200; ++t) {
        long p = gen.prime_in(2, 13);
        int k = static_cast<int>(gen.range(1, 3));
        auto F = FieldDescriptor::get(p, k);
        auto x = FFElem::from_index(F, gen.range(0, F->size() - 1));
        auto y = FFElem::from_index(F, gen.range(0, F->size() - 1));
        CHECK((x + y).pow(p) == x.pow(p) + y.pow(p));
        CHECK((x * y).pow(p) == x.pow(p) * y.pow(p));
    }
}

TEST_CASE("group law on reductions is associative") {
    oracle::Gen gen(7);
    for (int t = 0; t < 40; ++t) {
        long p = gen.prime_in(5, 60);
        auto a = gen.curve(10);
        if (oracle::discriminant(a) % p == 0) continue;
        auto E = reduce_curve(rational_curve(a), FieldDescriptor::get(p));
        auto pts = enumerate_points(E).points;
        for (int s = 0; s < 10; ++s) {
            auto& P = pts[gen.range(0, static_cast<long>(pts.size()) - 1)];
            auto& Q = pts[gen.range(0, static_cast<long>(pts.size()) - 1)];
            auto& R = pts[gen.range(0, static_cast<long>(pts.size()) - 1)];
            CHECK(E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R)));
            CHECK(E.mul(static_cast<long>(pts.size()), P).inf);
        }
    }
}
