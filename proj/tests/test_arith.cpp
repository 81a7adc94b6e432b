#include "badred/arith.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace badred;

TEST_CASE("kronecker symbol values") {
    CHECK(kronecker(-20, 13) == -1);
    CHECK(kronecker(1, 7) == 1);
    CHECK(kronecker(-11, 3) == 1);
    CHECK(kronecker(-20, 17) == -1);
    CHECK(kronecker(17, 3) == -1);
    CHECK(kronecker(-1, 17) == 1);
    CHECK(kronecker(6, 9) == 0);
}

TEST_CASE("kronecker agrees with the factorization oracle") {
    for (long n = -60; n <= 60; ++n) {
        if (n == 0) continue;
        for (long a = -40; a <= 40; ++a) CHECK(kronecker(a, n) == oracle::kronecker(a, n));
    }
    CHECK_THROWS_AS(kronecker(3, 0), DomainError);
}

TEST_CASE("sum of two squares for primes 1 mod 4") {
    CHECK(sum_of_two_squares(13) == std::pair<Integer, Integer>(3, 2));
    CHECK(sum_of_two_squares(17) == std::pair<Integer, Integer>(1, 4));
    CHECK(sum_of_two_squares(53) == std::pair<Integer, Integer>(7, 2));
    for (long q : primes_up_to(3000)) {
        if (q % 4 != 1) continue;
        auto [a, b] = sum_of_two_squares(q);
        CHECK(a * a + b * b == q);
        CHECK(a % 2 != 0);  // odd part first
        bool listed = false;
        for (auto [x, y] : oracle::two_squares(q)) listed = listed || (x == a && y == b);
        CHECK(listed);
    }
    CHECK_THROWS_AS(sum_of_two_squares(7), DomainError);
}

TEST_CASE("factor_small and squarefree part") {
    auto f = factor_small(6400);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<Integer, unsigned>(2, 8));
    CHECK(f.factors[1] == std::pair<Integer, unsigned>(5, 2));
    for (long n = 2; n < 5000; n += 7) {
        auto g = factor_small(n);
        auto o = oracle::factor(n);
        REQUIRE(g.factors.size() == o.size());
        for (size_t i = 0; i < o.size(); ++i) {
            CHECK(g.factors[i].first == o[i].first);
            CHECK(g.factors[i].second == static_cast<unsigned>(o[i].second));
        }
        CHECK(g.value() == n);
    }
    CHECK(squarefree_part(-6400) == -1);
    CHECK(squarefree_part(180) == 5);
}

TEST_CASE("primality and modular square roots") {
    for (long n = 0; n < 3000; ++n) CHECK(is_prime(n) == oracle::prime(n));
    for (long p : {3L, 7L, 13L, 97L, 1009L})
        for (long a = 0; a < p; ++a) {
            auto r = sqrt_mod_prime(a, p);
            CHECK(r.has_value() == (oracle::legendre(a, p) >= 0));
            if (r) {
                CHECK(mod(*r * *r, p) == a);
                CHECK(*r <= p - *r);
            }
        }
}

TEST_CASE("gaussian integers") {
    Gaussian a(3, 2), b(1, -4);
    CHECK(a * b == Gaussian(11, -10));
    CHECK(a.conj() == Gaussian(3, -2));
    CHECK(divides(Gaussian(2, 1), Gaussian(5)));
    CHECK(divexact(Gaussian(5), Gaussian(2, 1)) == Gaussian(2, -1));
    CHECK(gaussian_valuation(Gaussian(0, 4), Gaussian(1, 1)) == 4);
    auto s = gaussian_sqrt(Gaussian(-3, 4));
    REQUIRE(s);
    CHECK(*s * *s == Gaussian(-3, 4));
    CHECK_FALSE(gaussian_sqrt(Gaussian(2)).has_value());
}
