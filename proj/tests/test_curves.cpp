#include "badred/curves.hpp"
#include "badred/modcurves.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace badred;

namespace {

const std::vector<std::pair<std::string, std::array<long, 5>>> kModels = {
    {"X0_20", {0, 1, 0, 4, 4}},  {"X0_24", {0, -1, 0, -4, 4}}, {"X0_32", {0, 0, 0, 4, 0}},
    {"X0_36", {0, 0, 0, 0, 1}},  {"X0_49", {1, -1, 0, -2, -1}}, {"X1_11", {0, -1, 1, 0, 0}},
    {"X1_14", {1, 0, 1, -1, 0}}, {"X1_15", {1, 1, 1, 0, 0}}};

long count_over(const std::array<long, 5>& a, long p, int k = 1) {
    return enumerate_points(reduce_curve(rational_curve(a), FieldDescriptor::get(p, k))).order();
}

}  // namespace

TEST_CASE("discriminant of the level 20 model") {
    auto E = rational_curve({0, 1, 0, 4, 4});
    CHECK(E.disc == -6400);
    CHECK(oracle::discriminant({0, 1, 0, 4, 4}) == -6400);
    CHECK(E.j_invariant() == Rational(21296, 25));
}

TEST_CASE("registry models match the shipped registry") {
    for (auto& [label, a] : kModels) {
        auto& E = registry_get(label).elliptic();
        auto c = E.coefficients();
        for (int i = 0; i < 5; ++i) CHECK(c[i] == a[i]);
        CHECK(E.disc == oracle::discriminant(a));
    }
}

TEST_CASE("rational torsion orders") {
    const std::map<std::string, long> expected = {{"X0_20", 6}, {"X0_24", 8}, {"X0_32", 4}, {"X0_36", 6},
                                                  {"X0_49", 2}, {"X1_11", 5}, {"X1_14", 6}, {"X1_15", 4}};
    for (auto& [label, a] : kModels) {
        auto T = rational_torsion(rational_curve(a));
        CHECK(T.order == expected.at(label));
        CHECK(static_cast<long>(T.points.size()) == T.order);
        // the order divides #E(F_p) at every odd good prime
        for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L})
            if (oracle::discriminant(a) % p != 0) CHECK(oracle::count_points(a, p) % T.order == 0);
    }
}

TEST_CASE("point counts agree with the pair-by-pair oracle") {
    CHECK(count_over({0, 1, 0, 4, 4}, 3) == 6);
    CHECK(count_over({0, 1, 0, 4, 4}, 7) == 6);
    CHECK(count_over({0, -1, 1, 0, 0}, 2) == 5);
    for (auto& [label, a] : kModels)
        for (long p : primes_up_to(60))
            if (oracle::discriminant(a) % p != 0) CHECK(count_over(a, p) == oracle::count_points(a, p));
}

TEST_CASE("counts over extension fields satisfy the zeta relation") {
    // #E(F_{p^2}) = p^2 + 1 - (a_p^2 - 2p)
    for (auto& [label, a] : kModels)
        for (long p : {3L, 7L, 13L}) {
            if (oracle::discriminant(a) % p == 0) continue;
            long ap = p + 1 - oracle::count_points(a, p);
            CHECK(count_over(a, p, 2) == p * p + 1 - (ap * ap - 2 * p));
        }
}

TEST_CASE("bad reduction is refused") {
    auto E = rational_curve({0, 1, 0, 4, 4});
    CHECK_FALSE(has_good_reduction(E, 2));
    CHECK_FALSE(has_good_reduction(E, 5));
    CHECK(has_good_reduction(E, 3));
    CHECK_THROWS_AS(reduce_curve(E, FieldDescriptor::get(5)), DomainError);
}

TEST_CASE("x-coordinate surjectivity") {
    CHECK(x_image_full(reduce_curve(rational_curve({0, 1, 0, 4, 4}), FieldDescriptor::get(3))));
    CHECK_FALSE(x_image_full(reduce_curve(rational_curve({0, 0, 0, 4, 0}), FieldDescriptor::get(3))));
}

TEST_CASE("genus 2 counts of X1(13)") {
    const auto& C = *registry_get("X1_13").hyperelliptic;
    const std::vector<std::pair<long, long>> expected = {{2, 6}, {3, 6}, {5, 6}, {7, 8}, {11, 12}};
    for (auto [p, n] : expected) CHECK(hyperelliptic_count(C, p) == n);
    std::vector<long> h, g;
    for (auto& c : C.h) h.push_back(c.get_si());
    for (auto& c : C.g) g.push_back(c.get_si());
    for (long p : primes_up_to(40))
        if (hyperelliptic_good_reduction(C, p)) CHECK(hyperelliptic_count(C, p) == oracle::count_genus2(h, g, p));
    CHECK_FALSE(hyperelliptic_good_reduction(C, 13));
}

TEST_CASE("group law on the rational model") {
    auto E = rational_curve({0, 1, 0, 4, 4});
    auto P = RationalPoint::affine(Rational(4), Rational(10));
    REQUIRE(E.contains(P));
    CHECK(E.order(P, 20) == 6);
    auto Q = scalar_mul(E, 3, P);
    CHECK(Q == RationalPoint::affine(Rational(-1), Rational(0)));
    CHECK(point_add(E, P, point_neg(E, P)).inf);
}
