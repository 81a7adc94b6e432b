#include "badred/fields.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace badred;

namespace {

std::vector<long> as_longs(const PolyFp& f) { return std::vector<long>(f.begin(), f.end()); }

}  // namespace

TEST_CASE("factoring x^3+x^2+4x+4 mod 3") {
    auto fac = poly_factor_mod(std::vector<Integer>{4, 4, 1, 1}, 3);
    REQUIRE(fac.size() == 2);
    CHECK(as_longs(fac[0].first) == std::vector<long>{1, 1});
    CHECK(fac[0].second == 1);
    CHECK(as_longs(fac[1].first) == std::vector<long>{1, 0, 1});
    CHECK(fac[1].second == 1);
}

TEST_CASE("linear factors match the root oracle") {
    oracle::Gen gen(11);
    for (int trial = 0; trial < 200; ++trial) {
        long p = gen.prime_in(2, 60);
        int d = static_cast<int>(gen.range(1, 6));
        std::vector<long> f(d + 1);
        for (auto& c : f) c = gen.range(0, p - 1);
        f[d] = 1;
        std::vector<Integer> fi(f.begin(), f.end());
        auto fac = poly_factor_mod(fi, p);
        std::vector<long> roots;
        int total = 0;
        for (auto& [g, e] : fac) {
            total += fp::deg(g) * e;
            if (fp::deg(g) == 1) roots.push_back(oracle::md(-g[0], p));
            CHECK(fp::is_irreducible(g, p));
        }
        std::sort(roots.begin(), roots.end());
        CHECK(total == d);
        CHECK(roots == oracle::roots(f, p));
    }
}

TEST_CASE("splitting of small primes in quadratic fields") {
    auto K = NumberField::quadratic(-11);
    auto P3 = primes_above(K, 3);
    REQUIRE(P3.size() == 2);
    for (auto& P : P3) CHECK((P.e == 1 && P.f_deg == 1));

    auto L = NumberField::quadratic(17);
    auto Q3 = primes_above(L, 3);
    REQUIRE(Q3.size() == 1);
    CHECK(Q3[0].f_deg == 2);
    CHECK(Q3[0].e == 1);

    auto M = NumberField::quadratic(10);
    auto R5 = primes_above(M, 5);
    REQUIRE(R5.size() == 1);
    CHECK(R5[0].e == 2);
    CHECK(nf_valuation(NFElem::generator(M), R5[0]) == 1);
    CHECK(nf_valuation(NFElem(M, Rational(25)), R5[0]) == 4);
}

TEST_CASE("finite field square roots") {
    auto F7 = FieldDescriptor::get(7);
    auto r = ff_sqrt(FFElem(F7, 2));
    REQUIRE(r);
    CHECK(r->index() == 3);
    CHECK_FALSE(ff_sqrt(FFElem(FieldDescriptor::get(13), 6)).has_value());
    auto F9 = FieldDescriptor::get(3, 2);
    long squares = 0;
    for (long i = 0; i < F9->size(); ++i) {
        auto x = FFElem::from_index(F9, i);
        auto s = ff_sqrt(x);
        if (s) {
            CHECK(*s * *s == x);
            squares++;
        }
    }
    CHECK(squares == 5);
}

TEST_CASE("finite field axioms on F_{5^3}") {
    auto F = FieldDescriptor::get(5, 3);
    oracle::Gen gen(3);
    for (int t = 0; t < 300; ++t) {
        auto a = FFElem::from_index(F, gen.range(0, F->size() - 1));
        auto b = FFElem::from_index(F, gen.range(0, F->size() - 1));
        auto c = FFElem::from_index(F, gen.range(0, F->size() - 1));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        if (!a.is_zero()) CHECK(a * a.inverse() == FFElem(F, 1));
        CHECK(a.pow(F->size()) == a);
    }
}

TEST_CASE("number field arithmetic") {
    auto K = NumberField::make({-1, 1, 4, 1});  // x^3 + 4x^2 + x - 1
    auto t = NFElem::generator(K);
    auto x = t * t + NFElem(K, Rational(3));
    CHECK(x * x.inverse() == NFElem(K, Rational(1)));
    CHECK_THROWS_AS(NumberField::make({-4, 0, 1}), DomainError);  // x^2 - 4 is reducible
}
