#include "badred/descent.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace badred;

namespace {

unsigned bits_of(const AmbientGroup& G, const std::string& name) {
    for (unsigned b = 0; b < (1u << G.rank()); ++b)
        if (G.make(b).name() == name) return b;
    throw std::runtime_error("no class " + name);
}

std::vector<std::string> names(const AmbientGroup& G, const std::vector<unsigned>& v) {
    std::vector<std::string> out;
    for (unsigned b : v) out.push_back(G.make(b).name());
    return out;
}

}  // namespace

TEST_CASE("primes of Z[i] above q") {
    CHECK(nq(13) == Gaussian(3, 2));
    CHECK(nq(17) == Gaussian(1, -4));
    CHECK(nq(53) == Gaussian(7, -2));
    for (long q : primes_up_to(500)) {
        if (q % 20 != 13 && q % 20 != 17) continue;
        auto n = nq(q);
        CHECK(n.re * n.re + n.im * n.im == q);
        CHECK(n.re > 0);
        CHECK(oracle::md(n.im.get_si(), 2) == 0);
    }
}

TEST_CASE("ambient groups") {
    auto G = ambient_group(13);
    REQUIRE(G.rank() == 6);
    CHECK(G.generators[0].pair() == "(1, i)");
    CHECK(G.generators[1].pair() == "(2, 1+i)");
    CHECK(G.generators[2].pair() == "(5, 2+i)");
    CHECK(G.generators[3].pair() == "(1, 5)");
    CHECK(G.generators[4].pair() == "(13, 3+2i)");
    CHECK(G.generators[5].pair() == "(1, 13)");
    auto H = ambient_group(11);
    REQUIRE(H.rank() == 5);
    CHECK(H.generators[4].pair() == "(1, 11)");
    // every class satisfies the norm condition and classifies back to itself
    for (auto* A : {&G, &H})
        for (unsigned b = 0; b < (1u << A->rank()); ++b) {
            auto c = A->make(b);
            Integer nb = c.beta.re * c.beta.re + c.beta.im * c.beta.im;
            CHECK(is_square(c.a * nb));
            CHECK(A->classify(c.a, c.beta) == b);
        }
}

TEST_CASE("descent images of torsion") {
    auto E = twist_curve(13);
    CHECK(descent_image(RationalPoint::affine(Rational(-13), Rational(0)), 13).name() == "g1g3g6");
    CHECK(descent_image(RationalPoint::infinity(), 13).name() == "1");
    CHECK(E.contains(RationalPoint::affine(Rational(39), Rational(338))));
    CHECK(descent_image(RationalPoint::affine(Rational(39), Rational(338)), 13).name() == "g5g6");
}

TEST_CASE("cover equations") {
    auto G = ambient_group(13);
    auto C1 = cover_curve(G.make(bits_of(G, "g1")), 13);
    CHECK(C1.str() == "{s^2 - t^2 - 26u^2 = 0, r^2 + 2st - 13u^2 = 0}");
    auto C56 = cover_curve(G.make(bits_of(G, "g5g6")), 13);
    CHECK(C56.str() == "{s^2 + 3st - t^2 - u^2 = 0, r^2 - 3s^2 + 4st + 3t^2 - u^2 = 0}");
    CHECK(cover_curve(G.make(0), 13).point_at_infinity.has_value());
}

TEST_CASE("local solvability examples with replay") {
    auto G = ambient_group(13);
    struct Case {
        const char* cls;
        long p;
        LocalStatus status;
        long modulus;
    };
    const std::vector<Case> cases = {{"g4", 2, LocalStatus::solvable, 8},      {"g1", 2, LocalStatus::insolvable, 4},
                                     {"g4", 5, LocalStatus::insolvable, 25},   {"g1", 5, LocalStatus::insolvable, 5},
                                     {"g1g4", 5, LocalStatus::insolvable, 25}, {"g5g6", 13, LocalStatus::solvable, 13}};
    for (auto& c : cases) {
        auto C = cover_curve(G.make(bits_of(G, c.cls)), 13);
        auto cert = local_solvable(C, c.p);
        CHECK_MESSAGE(cert.status == c.status, c.cls);
        CHECK_MESSAGE(cert.modulus == c.modulus, c.cls);
        CHECK(replay_certificate(C, cert));
    }
    CHECK_THROWS_AS(local_solvable(cover_curve(G.make(1), 13), 4), DomainError);
}

TEST_CASE("a tampered certificate does not replay") {
    auto G = ambient_group(13);
    auto C = cover_curve(G.make(bits_of(G, "g5g6")), 13);
    auto cert = local_solvable(C, 13);
    REQUIRE(cert.status == LocalStatus::solvable);
    auto bad = cert;
    bad.witness[0] += 1;
    CHECK_FALSE(replay_certificate(C, bad));
    auto lie = local_solvable(cover_curve(G.make(bits_of(G, "g1")), 13), 5);
    lie.status = LocalStatus::solvable;
    CHECK_FALSE(replay_certificate(cover_curve(G.make(bits_of(G, "g1")), 13), lie));
    auto flip = local_solvable(C, 2);
    REQUIRE(flip.status == LocalStatus::solvable);
    flip.status = LocalStatus::insolvable;
    CHECK_FALSE(replay_certificate(C, flip));
}

TEST_CASE("alternative models of a class") {
    // the product representative of g1g3g5 at 13 reduces to a double plane; another model decides it
    auto G = ambient_group(13);
    auto C = cover_curve(G.make(bits_of(G, "g1g3g5")), 13);
    auto cert = local_solvable(C, 13);
    CHECK(cert.status == LocalStatus::solvable);
    CHECK(cert.model.has_value());
    CHECK(replay_certificate(C, cert));
    CHECK(pencil_discriminant(C) != 0);
}

TEST_CASE("local images at q = 13") {
    auto G = ambient_group(13);
    auto want2 = span({bits_of(G, "g1g3"), bits_of(G, "g4"), bits_of(G, "g5"), bits_of(G, "g6")});
    CHECK(local_image(13, 2) == want2);
    auto want5 = span({bits_of(G, "g1g6"), bits_of(G, "g2g6"), bits_of(G, "g3"), bits_of(G, "g5g6")});
    CHECK(local_image(13, 5) == want5);
}

TEST_CASE("Selmer groups of the twists") {
    for (long q : {13L, 17L, 37L, 53L}) {
        auto S = selmer_group(q);
        CHECK(S.determined);
        CHECK(S.dimension == 2);
        CHECK(S.rank_bound == 1);
        auto G = S.ambient;
        CHECK(S.members == span({bits_of(G, "g1g3g6"), bits_of(G, "g5g6")}));
        CHECK(names(G, S.members) == std::vector<std::string>{"1", "g1g3g5", "g1g3g6", "g5g6"});
    }
    for (long q : {11L, 19L}) {
        auto S = selmer_group(q);
        CHECK(S.dimension == 2);
        REQUIRE(S.basis.size() == 2);
        CHECK(S.basis[0].pair() == "(5, -1+2i)");
        CHECK(S.basis[1].pair() == "(1, " + std::to_string(q) + ")");
    }
    CHECK_THROWS_AS(selmer_group(7), DomainError);
    CHECK_THROWS_AS(selmer_group(21), DomainError);
}

TEST_CASE("four-lines probe and residue symbols") {
    auto r13 = four_lines_probe(13);
    CHECK(r13.i == 8);
    CHECK(r13.one_plus_2i == 4);
    CHECK(r13.one_plus_2i_square);
    CHECK(r13.two_over_e_square);
    CHECK(r13.four_lines);
    CHECK(r13.certificate_replays);
    auto r53 = four_lines_probe(53);
    CHECK(r53.i == 23);
    CHECK(r53.one_plus_2i == 47);
    CHECK(residue_symbol_probe(17).symbol_e == 1);
    CHECK(residue_symbol_probe(13).symbol_e == -1);
    CHECK(residue_symbol_probe(53).symbol_e == -1);
    CHECK(residue_symbol_probe(13).two_over_e_square);
}

TEST_CASE("classification by the two hypotheses") {
    CHECK(cor32_classify(13) == Cor32::weaker);
    CHECK(cor32_classify(17) == Cor32::stronger);
    CHECK(cor32_classify(7) == Cor32::none);
    CHECK(cor32_classify(11) == Cor32::none);
    CHECK_THROWS_AS(cor32_classify(5), DomainError);
}

TEST_CASE("points on the twists") {
    auto p11 = twist_point_search(-11, 200);
    bool two_torsion = false;
    for (auto& t : p11) two_torsion = two_torsion || (t.order == 2 && t.point.x == 11);
    CHECK(two_torsion);
    CHECK(p11.front().point.inf);
    auto p1 = twist_point_search(1, 50);
    CHECK(p1.size() == 6);
    for (auto& t : p1) CHECK(t.torsion());
    auto p13 = twist_point_search(13, 10000);
    CHECK(p13.size() == 8);
    auto K = NumberField::quadratic(-11);
    auto E = base_change(rational_curve({0, 1, 0, 4, 4}), K);
    for (auto& t : p11) CHECK(E.contains(twist_to_field(t.point, -11, K)));
}
