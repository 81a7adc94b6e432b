#include "badred/descent.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace badred {

namespace {

void require_prime(const Integer& q) {
    if (q < 3 || !is_prime(q)) throw DomainError("q = " + q.get_str() + " must be an odd prime");
    if (q == 5) throw DomainError("q = 5 is a bad prime of the base curve");
}

std::string pair_str(const Integer& a, const Gaussian& b) { return "(" + a.get_str() + ", " + b.str() + ")"; }

bool is_one_mod_two(const Gaussian& x) { return mod(x.re, 2) == 1 && mod(x.im, 2) == 0; }

// an element of norm q, q = 1 mod 4, normalised as nq when that is defined
Gaussian prime_over(const Integer& q) {
    long r = mod(q, 20).get_si();
    if (r == 13 || r == 17) return nq(q);
    auto [a, b] = sum_of_two_squares(q);  // a odd, b even
    return Gaussian(a, b);
}

Integer content(const Quadric& Q) {
    Integer g = 0;
    for (auto& row : Q.c)
        for (auto& x : row) g = gcd(g, x);
    return g;
}

void divide(Quadric& Q, const Integer& g) {
    for (auto& row : Q.c)
        for (auto& x : row) x /= g;
}

}  // namespace

Gaussian nq(const Integer& q) {
    long r = mod(q, 20).get_si();
    if (!is_prime(q) || (r != 13 && r != 17))
        throw DomainError("nq: q = " + q.get_str() + " is not a prime = 13, 17 mod 20");
    auto [a, b] = sum_of_two_squares(q);
    const Gaussian m(2, 1);
    std::vector<Gaussian> good;
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}})
        for (int sx : {1, -1})
            for (int sy : {1, -1}) {
                Gaussian g(x * sx, y * sy);
                Gaussian res = gaussian_mod(g, m);
                if (is_one_mod_two(g) && (res == Gaussian(1) || res == Gaussian(-1))) good.push_back(g);
            }
    if (good.size() != 2 || !(good[0] == -good[1]))
        throw DomainError("nq: normalisation is not unique up to sign for q = " + q.get_str());
    return good[0].re > 0 ? good[0] : good[1];
}

RationalCurve twist_curve(const Integer& d) {
    if (d == 0) throw DomainError("twist by 0");
    Rational D(d);
    return RationalCurve(0, D, 0, 4 * D * D, 4 * D * D * D);
}

std::string DescentClass::name() const {
    if (!bits) return "1";
    std::string s;
    for (int j = 0; j < 32; ++j)
        if (bits >> j & 1) s += "g" + std::to_string(j + 1);
    return s;
}

std::string DescentClass::pair() const { return "(" + a.get_str() + ", " + beta.str() + ")"; }

DescentClass AmbientGroup::make(unsigned bits) const {
    if (bits >> rank()) throw DomainError("descent class outside the ambient group");
    DescentClass c;
    c.bits = bits;
    for (int j = 0; j < rank(); ++j)
        if (bits >> j & 1) {
            c.a *= generators[j].a;
            c.beta = c.beta * generators[j].beta;
        }
    return c;
}

unsigned AmbientGroup::classify(const Integer& a0, const Gaussian& beta0) const {
    if (a0 == 0 || beta0.is_zero()) throw DomainError("descent class of zero");
    // rational part: exponents at 2, 5, q and a square cofactor
    Integer a = a0;
    int sgn = a < 0;
    if (sgn) a = -a;
    std::array<long, 3> av{};
    const std::array<Integer, 3> ap{2, 5, q};
    for (int k = 0; k < 3; ++k)
        while (a % ap[k] == 0) a /= ap[k], ++av[k];
    if (!is_square(a)) throw DomainError("first component " + a0.get_str() + " is not supported on {2, 5, q}");
    // Gaussian part: exponents at 1+i, 2+i, 2-i and the primes over q, unit times square cofactor
    std::vector<Gaussian> primes = {Gaussian(1, 1), Gaussian(2, 1), Gaussian(2, -1)};
    if (split)
        primes.insert(primes.end(), {n, n.conj()});
    else
        primes.push_back(Gaussian(q));
    Gaussian b = beta0;
    std::vector<long> bv;
    for (auto& pi : primes) {
        long v = gaussian_valuation(b, pi);
        for (long j = 0; j < v; ++j) b = divexact(b, pi);
        bv.push_back(v & 1);
    }
    int u;
    if (gaussian_sqrt(b) || gaussian_sqrt(-b))
        u = 0;
    else if (gaussian_sqrt(Gaussian(0, 1) * b) || gaussian_sqrt(Gaussian(0, -1) * b))
        u = 1;
    else
        throw DomainError("second component " + beta0.str() + " is not supported on {2, 5, q}");
    unsigned e1 = u, e2 = bv[0], e3 = bv[1] ^ bv[2], e4 = bv[2];
    unsigned bits = e1 | e2 << 1 | e3 << 2 | e4 << 3;
    long aq_needed;
    if (split) {
        unsigned e5 = bv[3] ^ bv[4], e6 = bv[4];
        bits |= e5 << 4 | e6 << 5;
        aq_needed = e5;
    } else {
        bits |= static_cast<unsigned>(bv[3]) << 4;
        aq_needed = 0;
    }
    if (sgn || (av[0] & 1) != e2 || (av[1] & 1) != e3 || (av[2] & 1) != aq_needed)
        throw DomainError("class " + pair_str(a0, beta0) + " is not norm compatible");
    return bits;
}

AmbientGroup ambient_group(const Integer& q) {
    require_prime(q);
    AmbientGroup G;
    G.q = q;
    G.split = mod(q, 4) == 1;
    auto gen = [&](long a, Gaussian b) {
        DescentClass c;
        c.bits = 1u << G.generators.size();
        c.a = a;
        c.beta = b;
        G.generators.push_back(c);
    };
    gen(1, Gaussian(0, 1));
    gen(2, Gaussian(1, 1));
    gen(5, Gaussian(2, 1));
    gen(1, Gaussian(5));
    if (G.split) {
        G.n = prime_over(q);
        DescentClass c;
        c.bits = 1u << 4;
        c.a = q;
        c.beta = G.n;
        G.generators.push_back(c);
    }
    DescentClass c;
    c.bits = 1u << G.generators.size();
    c.a = 1;
    c.beta = Gaussian(q);
    G.generators.push_back(c);
    return G;
}

std::vector<DescentClass> ambient_basis(const Integer& q) { return ambient_group(q).generators; }

DescentClass descent_image(const RationalPoint& P, const Integer& q) {
    auto G = ambient_group(q);
    auto E = twist_curve(q);
    if (!E.contains(P)) throw DomainError("point " + P.str() + " is not on the twist by " + q.get_str());
    if (P.inf) return G.make(0);
    Rational x = P.x;
    Integer den = x.get_den();  // a square since P is on an integral model
    Integer m = x.get_num();
    if (x == -Rational(q)) return G.make(G.classify(5, Gaussian(-q, 2 * q)));
    // (x + q, x + 2qi) times den, which is a square
    return G.make(G.classify(m + q * den, Gaussian(m, 2 * q * den)));
}

Integer Quadric::eval(const std::array<Integer, 4>& x) const {
    Integer s = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) s += c[i][j] * x[i] * x[j];
    return s;
}

std::string Quadric::str() const {
    static const char* v[] = {"r", "s", "t", "u"};
    std::string s;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            Integer k = c[i][j];
            if (k == 0) continue;
            std::string mono = i == j ? std::string(v[i]) + "^2" : std::string(v[i]) + v[j];
            s += k < 0 ? (s.empty() ? "-" : " - ") : (s.empty() ? "" : " + ");
            Integer ak = abs(k);
            if (ak != 1) s += ak.get_str();
            s += mono;
        }
    return (s.empty() ? "0" : s) + " = 0";
}

std::string CoverCurve::str() const { return "{" + F1.str() + ", " + F2.str() + "}"; }

CoverCurve cover_curve(const DescentClass& cls, const Integer& q) { return cover_curve(cls, q, cls.a, cls.beta); }

CoverCurve cover_curve(const DescentClass& cls, const Integer& q, const Integer& a, const Gaussian& beta,
                       bool find_infinity) {
    CoverCurve C;
    C.q = q;
    C.cls = cls;
    C.a = a;
    C.b = beta.re;
    C.c = beta.im;
    enum { R, S, T, U };
    C.F1.c[S][T] = 2 * C.b;
    C.F1.c[S][S] = C.c;
    C.F1.c[T][T] = -C.c;
    C.F1.c[U][U] = -2 * q;
    C.F2.c[R][R] = C.a;
    C.F2.c[S][S] = -C.b;
    C.F2.c[T][T] = C.b;
    C.F2.c[S][T] = 2 * C.c;
    C.F2.c[U][U] = -q;
    divide(C.F1, content(C.F1));
    divide(C.F2, content(C.F2));
    // small search for a point with u = 0
    for (long h = 1; find_infinity && h <= 12 && !C.point_at_infinity; ++h)
        for (long r = 0; r <= h && !C.point_at_infinity; ++r)
            for (long s = -h; s <= h && !C.point_at_infinity; ++s)
                for (long t = -h; t <= h; ++t) {
                    if (std::max({r, std::abs(s), std::abs(t)}) != h) continue;
                    std::array<Integer, 4> x{r, s, t, 0};
                    if (C.F1.eval(x) == 0 && C.F2.eval(x) == 0) {
                        C.point_at_infinity = x;
                        break;
                    }
                }
    return C;
}

namespace {

Integer det4(std::array<std::array<Integer, 4>, 4> M) {
    // Bareiss elimination
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < 3; ++k) {
        if (M[k][k] == 0) {
            int r = k + 1;
            while (r < 4 && M[r][k] == 0) ++r;
            if (r == 4) return 0;
            std::swap(M[r], M[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < 4; ++i)
            for (int j = k + 1; j < 4; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return sign * M[3][3];
}

std::array<std::array<Integer, 4>, 4> sym2(const Quadric& Q) {
    std::array<std::array<Integer, 4>, 4> M;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) M[i][j] = i == j ? 2 * Q.c[i][i] : (i < j ? Q.c[i][j] : Q.c[j][i]);
    return M;
}

}  // namespace

Integer pencil_discriminant(const CoverCurve& C) {
    auto A = sym2(C.F1), B = sym2(C.F2);
    // g(x) = det(x A + B) has degree <= 4; recover it from x = 0..4 by Lagrange interpolation
    std::array<Integer, 5> val;
    for (long x = 0; x <= 4; ++x) {
        std::array<std::array<Integer, 4>, 4> M;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) M[i][j] = x * A[i][j] + B[i][j];
        val[x] = det4(M);
    }
    std::array<Rational, 5> co{};
    for (long k = 0; k <= 4; ++k) {
        // basis polynomial prod_{j != k} (x - j) / (k - j)
        std::vector<Rational> poly = {1};
        Rational den = 1;
        for (long j = 0; j <= 4; ++j) {
            if (j == k) continue;
            std::vector<Rational> next(poly.size() + 1, 0);
            for (size_t t = 0; t < poly.size(); ++t) {
                next[t + 1] += poly[t];
                next[t] -= poly[t] * j;
            }
            poly = next;
            den *= k - j;
        }
        for (size_t t = 0; t < poly.size(); ++t) co[t] += poly[t] * val[k] / den;
    }
    Rational e = co[0], d = co[1], c = co[2], b = co[3], a = co[4];
    Rational I = 12 * a * e - 3 * b * d + c * c;
    Rational J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c;
    Rational disc = (4 * I * I * I - J * J) / 27;
    disc.canonicalize();
    if (disc.get_den() != 1) throw DomainError("pencil discriminant is not integral");
    return disc.get_num();
}

std::vector<unsigned> span(const std::vector<unsigned>& gens) {
    std::set<unsigned> S{0};
    for (unsigned g : gens) {
        std::set<unsigned> T = S;
        for (unsigned x : S) T.insert(x ^ g);
        S = std::move(T);
    }
    return {S.begin(), S.end()};
}

bool is_subgroup(const std::vector<unsigned>& members) {
    std::set<unsigned> S(members.begin(), members.end());
    if (!S.count(0)) return false;
    for (unsigned x : S)
        for (unsigned y : S)
            if (!S.count(x ^ y)) return false;
    return true;
}

namespace {

LocalCertificate run_place(const CoverCurve& C, const std::string& place, const LocalOptions& opt) {
    if (place == "inf") return real_solvable(C);
    return local_solvable(C, std::stol(place), opt);
}

// basis of least total weight, preferring one that contains the torsion image
std::vector<unsigned> nice_basis(const std::vector<unsigned>& members, unsigned torsion) {
    std::vector<unsigned> nz;
    for (unsigned x : members)
        if (x) nz.push_back(x);
    int dim = std::countr_zero(static_cast<unsigned>(members.size()));
    auto key = [&](const std::vector<unsigned>& B) {
        int w = 0;
        bool has = false;
        for (unsigned x : B) w += std::popcount(x), has = has || x == torsion;
        return std::tuple(w, !has, B);
    };
    std::optional<std::vector<unsigned>> best;
    if (dim <= 3) {
        // exhaustive over sorted tuples
        std::vector<unsigned> cur;
        auto rec = [&](auto&& self, size_t from) -> void {
            if (static_cast<int>(cur.size()) == dim) {
                if (span(cur).size() == members.size() && (!best || key(cur) < key(*best))) best = cur;
                return;
            }
            for (size_t i = from; i < nz.size(); ++i) {
                cur.push_back(nz[i]);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        if (best) return *best;
    }
    std::sort(nz.begin(), nz.end(), [](unsigned x, unsigned y) {
        return std::pair(std::popcount(x), x) < std::pair(std::popcount(y), y);
    });
    std::vector<unsigned> B;
    for (unsigned x : nz) {
        auto S = span(B);
        if (!std::binary_search(S.begin(), S.end(), x)) B.push_back(x);
    }
    return B;
}

}  // namespace

std::vector<unsigned> local_image(const Integer& q, long p, const LocalOptions& opt) {
    auto G = ambient_group(q);
    std::vector<unsigned> out;
    for (unsigned bits = 0; bits < (1u << G.rank()); ++bits) {
        auto cert = local_solvable(cover_curve(G.make(bits), q), p, opt);
        if (cert.status == LocalStatus::undetermined)
            throw DomainError("local image at " + std::to_string(p) + ": class " + G.make(bits).name() +
                              " undetermined");
        if (cert.status == LocalStatus::solvable) out.push_back(bits);
    }
    return out;
}

SelmerGroup selmer_group(const Integer& q, bool audit_places, const LocalOptions& opt) {
    long r = mod(q, 20).get_si();
    if (!is_prime(q) || (r != 11 && r != 13 && r != 17 && r != 19))
        throw DomainError("selmer: q = " + q.get_str() + " must be a prime = 11, 13, 17, 19 mod 20");
    SelmerGroup S;
    S.q = q;
    S.case_tag = "q = " + std::to_string(r) + " mod 20";
    S.ambient = ambient_group(q);
    const std::vector<std::string> places = {"inf", "2", "5", q.get_str()};
    for (unsigned bits = 0; bits < (1u << S.ambient.rank()); ++bits) {
        ClassAudit A;
        A.cls = S.ambient.make(bits);
        auto C = cover_curve(A.cls, q);
        bool refuted = false, open = false;
        for (auto& pl : places) {
            auto cert = run_place(C, pl, opt);
            refuted = refuted || cert.status == LocalStatus::insolvable;
            open = open || cert.status == LocalStatus::undetermined;
            A.certificates.push_back(std::move(cert));
            if (refuted && !audit_places) break;
        }
        A.in_selmer = !refuted && !open;
        A.undetermined = !refuted && open;
        if (A.in_selmer) S.members.push_back(bits);
        if (A.undetermined && S.determined) {
            S.determined = false;
            S.undetermined_class = A.cls.name();
        }
        S.audit.push_back(std::move(A));
    }
    if (!is_subgroup(S.members)) throw DomainError("selmer: locally solvable classes do not form a subgroup");
    S.dimension = std::countr_zero(static_cast<unsigned>(S.members.size()));
    unsigned torsion = descent_image(RationalPoint::affine(Rational(-q), Rational(0)), q).bits;
    S.torsion_dimension = torsion ? 1 : 0;
    S.rank_bound = S.dimension - S.torsion_dimension;
    for (unsigned b : nice_basis(S.members, torsion)) S.basis.push_back(S.ambient.make(b));
    if (S.ambient.split) {
        S.conditional_notes.push_back(
            "if the 2-primary part of Sha of the twist is finite, its rank equals the bound");
        S.conditional_notes.push_back(
            "surjectivity of E(Q) + E^sigma(Q) -> E(Q(sqrt q)) is not computed");
    } else {
        S.conditional_notes.push_back(
            "if Sha[2^infinity] of the twist is finite, some generator maps to (1, q) and "
            "E(Q) + E^sigma(Q) -> E(Q(sqrt q)) is not surjective");
        S.conditional_notes.push_back("the ambient group for q = 3 mod 4 is derived from norm compatibility");
    }
    return S;
}

FourLinesReport four_lines_probe(const Integer& q) {
    FourLinesReport R;
    R.q = q;
    R.n = nq(q);
    R.d = R.n.re.get_si();
    R.e = R.n.im.get_si();
    long Q = q.get_si();
    if (mod(R.e, Q) == 0) throw DomainError("four_lines_probe: e = 0 mod q");
    R.i = mod(static_cast<long>(static_cast<__int128>(mod(R.d, Q)) * invmod(mod(R.e, Q), Q) % Q), Q);
    R.i_squared_is_minus_one = mod(R.i * R.i + 1, Q) == 0;
    R.one_plus_2i = mod(1 + 2 * R.i, Q);
    R.two_over_e = mod(2 * invmod(mod(R.e, Q), Q), Q);
    auto r0 = sqrt_mod_prime(R.one_plus_2i, Q);
    auto s0 = sqrt_mod_prime(R.two_over_e, Q);
    R.one_plus_2i_square = r0.has_value();
    R.two_over_e_square = s0.has_value();
    R.four_lines = R.i_squared_is_minus_one && R.one_plus_2i_square && R.two_over_e_square;
    if (!R.four_lines) return R;
    // g5 g6 cover: r^2 - d(s^2-t^2) + 2e st = u^2, 2d st + e(s^2-t^2) = 2u^2
    auto G = ambient_group(q);
    auto C = cover_curve(G.make(0b110000), q);
    R.smooth_point = {*r0, *s0, 0, 1};
    LocalCertificate cert;
    cert.place = q.get_str();
    cert.status = LocalStatus::solvable;
    cert.modulus = q;
    cert.witness = {*r0, *s0, 0, 1};
    cert.minor_valuation = 0;
    cert.justification = "point (sqrt(1+2i), sqrt(2/e), 0, 1) on exactly one of the four lines";
    R.certificate = cert;
    R.certificate_replays = replay_certificate(C, cert);
    R.smooth = R.certificate_replays;
    return R;
}

ResidueSymbolReport residue_symbol_probe(const Integer& q) {
    auto F = four_lines_probe(q);
    ResidueSymbolReport R;
    R.q = q;
    R.n = F.n;
    R.e = F.e;
    R.symbol_e = kronecker(Integer(F.e), q);
    R.two_over_e_square = F.two_over_e_square;
    R.one_plus_2i_square = F.one_plus_2i_square;
    return R;
}

std::string to_string(Cor32 c) {
    switch (c) {
        case Cor32::weaker: return "weaker";
        case Cor32::stronger: return "stronger";
        default: return "none";
    }
}

Cor32 cor32_classify(const Integer& q) {
    if (q < 3 || !is_prime(q) || q == 3 || q == 5)
        throw DomainError("cor32: q = " + q.get_str() + " must be an odd prime other than 3, 5");
    if (kronecker(-20, q) != -1) return Cor32::none;
    if (kronecker(q, 3) == 1) return Cor32::weaker;
    if (kronecker(-1, q) == 1) return Cor32::stronger;
    return Cor32::none;
}

namespace {

TwistPoint classify_point(const RationalCurve& E, const RationalPoint& P) { return {P, E.order(P, 12)}; }

bool point_order_less(const TwistPoint& a, const TwistPoint& b) {
    const auto &P = a.point, &Q = b.point;
    if (P.inf || Q.inf) return P.inf && !Q.inf;
    if (P.x != Q.x) return P.x < Q.x;
    return P.y < Q.y;
}

void add_with_negative(const RationalCurve& E, const Rational& x, const Integer& y2num, const Integer& den3,
                       std::vector<TwistPoint>& out) {
    Integer n = isqrt(y2num);
    Rational y = make_rational(n, den3);
    out.push_back(classify_point(E, RationalPoint::affine(x, y)));
    if (n != 0) out.push_back(classify_point(E, RationalPoint::affine(x, -y)));
}

void finish(std::vector<TwistPoint>& pts) {
    std::sort(pts.begin(), pts.end(), point_order_less);
}

}  // namespace

std::vector<TwistPoint> twist_point_search(const Integer& d, long bound) {
    if (d == 0 || abs(d) > 100000 || squarefree_part(d) != d)
        throw DomainError("twist_point_search: d = " + d.get_str() + " must be squarefree with |d| <= 10^5");
    if (bound < 1) throw DomainError("twist_point_search: bound must be positive");
    auto E = twist_curve(d);
    std::vector<TwistPoint> pts = {classify_point(E, RationalPoint::infinity())};
    // With A = m + d e^2 and B = m^2 + 4 d^2 e^4 we need A B square. gcd(A, B) divides 5 d^2,
    // so A = delta u^2 and B = delta v^2 for a positive squarefree divisor delta of 5d.
    std::vector<long> deltas;
    long D = 5 * std::abs(d.get_si());
    for (long k = 1; k <= D; ++k)
        if (D % k == 0 && squarefree_part(Integer(k)) == k) deltas.push_back(k);
    for (long e = 1; e <= bound; ++e) {
        Integer e2 = Integer(e) * e, e4 = e2 * e2;
        Integer de2 = d * e2;
        for (long delta : deltas) {
            // m = delta u^2 - d e^2 with |m| <= bound
            Integer lo = de2 - bound, hi = de2 + bound;
            if (hi < 0) continue;
            Integer ulo = lo <= 0 ? Integer(0) : isqrt((lo + delta - 1) / delta);
            while (delta * ulo * ulo < lo) ++ulo;
            for (Integer u = ulo; delta * u * u <= hi; ++u) {
                Integer m = delta * u * u - de2;
                if (abs(m) > bound) continue;
                if (gcd(m, Integer(e)) != 1) continue;
                Integer B = m * m + 4 * d * d * e4;
                if (u == 0) {
                    if (delta != 1) continue;  // the 2-torsion point, counted once
                } else if (B % delta != 0 || !is_square(B / delta)) {
                    continue;
                }
                Integer N = (m + de2) * B;
                add_with_negative(E, make_rational(m, e2), N, e2 * e, pts);
            }
        }
    }
    finish(pts);
    return pts;
}

std::vector<TwistPoint> twist_point_sweep(const Integer& d, long bound) {
    auto E = twist_curve(d);
    std::vector<TwistPoint> pts = {classify_point(E, RationalPoint::infinity())};
    for (long e = 1; e <= bound; ++e) {
        Integer e2 = Integer(e) * e;
        for (long m = -bound; m <= bound; ++m) {
            if (std::gcd(m, e) != 1) continue;
            Integer M(m);
            Integer N = (M + d * e2) * (M * M + 4 * d * d * e2 * e2);
            if (N < 0 || !is_square(N)) continue;
            add_with_negative(E, make_rational(M, e2), N, e2 * e, pts);
        }
    }
    finish(pts);
    return pts;
}

NFPoint twist_to_field(const RationalPoint& P, const Integer& d, const NumberFieldPtr& K) {
    if (!twist_curve(d).contains(P)) throw DomainError("point " + P.str() + " is not on the twist");
    if (P.inf) return NFPoint::infinity();
    // K must contain sqrt d: look for it as c * t with t the generator of x^2 - c^2 d
    const auto& f = K->poly();
    if (K->degree() != 2 || f[1] != 0) throw DomainError("twist_to_field: K must be Q(t), t^2 = c^2 d");
    Rational ratio = make_rational(-f[0], d);  // t^2 / d
    Integer num = ratio.get_num(), den = ratio.get_den();
    if (!is_square(num) || !is_square(den)) throw DomainError("twist_to_field: K does not contain sqrt d");
    Rational c = make_rational(isqrt(num), isqrt(den));  // t = c sqrt d
    Rational D(d);
    NFElem x(K, P.x / D);
    NFElem y(K, std::vector<Rational>{0, P.y / (D * D) / c});
    return NFPoint::affine(x, y);
}

}  // namespace badred
