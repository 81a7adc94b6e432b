#include "badred/curves.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

namespace badred {

RationalCurve rational_curve(const std::array<long, 5>& a) {
    return RationalCurve(a[0], a[1], a[2], a[3], a[4]);
}

NFCurve base_change(const RationalCurve& E, const NumberFieldPtr& K) {
    auto c = [&](const Rational& x) { return NFElem(K, x); };
    return NFCurve(c(E.a1), c(E.a2), c(E.a3), c(E.a4), c(E.a6));
}

NFPoint base_change(const RationalPoint& P, const NumberFieldPtr& K) {
    if (P.inf) return NFPoint::infinity();
    return NFPoint::affine(NFElem(K, P.x), NFElem(K, P.y));
}

bool point_less(const FFPoint& a, const FFPoint& b) {
    if (a.inf || b.inf) return a.inf && !b.inf;
    long ax = a.x.index(), bx = b.x.index();
    if (ax != bx) return ax < bx;
    return a.y.index() < b.y.index();
}

namespace {

struct Fiber {
    const FFCurve& E;
    FieldPtr F;
    long p;
    std::vector<long> artin_schreier;  // index of z^2 + z -> least z, char 2 only
    FFElem two_inv;

    explicit Fiber(const FFCurve& E) : E(E), F(E.a1.field()), p(F->p()) {
        if (F->size() > kMaxEnumeration) throw DomainError("enumeration: field too large");
        if (p == 2) {
            artin_schreier.assign(F->size(), -1);
            for (long i = 0; i < F->size(); ++i) {
                auto z = FFElem::from_index(F, i);
                long v = (z * z + z).index();
                if (artin_schreier[v] < 0) artin_schreier[v] = i;
            }
        } else {
            two_inv = FFElem(F, 2).inverse();
        }
    }

    // all y with y^2 + (a1 x + a3) y = x^3 + a2 x^2 + a4 x + a6
    void ys(const FFElem& x, std::vector<FFElem>& out) const {
        out.clear();
        FFElem B = E.a1 * x + E.a3;
        FFElem R = ((x + E.a2) * x + E.a4) * x + E.a6;
        if (p != 2) {
            FFElem D = B * B + FFElem(F, 4) * R;
            auto s = ff_sqrt(D);
            if (!s) return;
            out.push_back((-B + *s) * two_inv);
            if (!s->is_zero()) out.push_back((-B - *s) * two_inv);
            return;
        }
        if (B.is_zero()) {
            // Frobenius is bijective in characteristic 2
            out.push_back(R.pow(Integer(F->size() / 2)));
            return;
        }
        FFElem c = R / (B * B);
        long z = artin_schreier[c.index()];
        if (z < 0) return;
        FFElem y = B * FFElem::from_index(F, z);
        out.push_back(y);
        out.push_back(y + B);
    }
};

}  // namespace

FinitePointSet enumerate_points(const FFCurve& E, int jobs) {
    Fiber fib(E);
    const auto& F = fib.F;
    long q = F->size();
    jobs = std::max(1, std::min<int>(jobs, 64));
    if (q < 4096) jobs = 1;
    std::vector<std::vector<FFPoint>> parts(jobs);
    auto work = [&](int j) {
        std::vector<FFElem> ys;
        for (long i = q * j / jobs; i < q * (j + 1) / jobs; ++i) {
            auto x = FFElem::from_index(F, i);
            fib.ys(x, ys);
            for (auto& y : ys) parts[j].push_back(FFPoint::affine(x, y));
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> th;
        for (int j = 0; j < jobs; ++j) th.emplace_back(work, j);
        for (auto& t : th) t.join();
    }
    FinitePointSet S{E, {FFPoint::infinity()}};
    for (auto& part : parts) S.points.insert(S.points.end(), part.begin(), part.end());
    std::sort(S.points.begin(), S.points.end(), point_less);
    return S;
}

long count_points(const FFCurve& E) { return enumerate_points(E).order(); }

bool x_image_full(const FFCurve& E) {
    Fiber fib(E);
    std::vector<FFElem> ys;
    for (long i = 0; i < fib.F->size(); ++i) {
        fib.ys(FFElem::from_index(fib.F, i), ys);
        if (ys.empty()) return false;
    }
    return true;
}

FFCurve reduce_curve(const RationalCurve& E, const FieldPtr& F) {
    long p = F->p();
    FFElem c[5];
    auto a = E.coefficients();
    for (int i = 0; i < 5; ++i) {
        if (mod(Integer(a[i].get_den()), Integer(p)) == 0)
            throw NonIntegralModel("model " + E.str() + " is not integral at " + std::to_string(p));
        c[i] = ff_from_rational(a[i], F);
    }
    try {
        return FFCurve(c[0], c[1], c[2], c[3], c[4]);
    } catch (const SingularCurve&) {
        throw BadReduction("bad reduction of " + E.str() + " at " + std::to_string(p), p);
    }
}

FFCurve reduce_curve(const NFCurve& E, const PrimeOfField& P, const FFElem& root) {
    FFElem c[5];
    auto a = E.coefficients();
    for (int i = 0; i < 5; ++i) {
        try {
            c[i] = residue_under(a[i], P, root);
        } catch (const NonIntegral&) {
            throw NonIntegralModel("model " + E.str() + " is not integral at " + P.str());
        }
    }
    try {
        return FFCurve(c[0], c[1], c[2], c[3], c[4]);
    } catch (const SingularCurve&) {
        throw BadReduction("bad reduction of " + E.str() + " at " + P.str(), P.p);
    }
}

FFCurve reduce_curve(const NFCurve& E, const PrimeOfField& P) {
    auto F = FieldDescriptor::get(P.p, P.f_deg);
    return reduce_curve(E, P, ff_roots(P.g, F).front());
}

bool has_good_reduction(const RationalCurve& E, long p) {
    for (auto& a : E.coefficients())
        if (mod(Integer(a.get_den()), Integer(p)) == 0) return false;
    return valuation(E.disc, p) == 0;
}

FFPoint reduce_point(const RationalPoint& P, const FieldPtr& F) {
    if (P.inf) return FFPoint::infinity();
    long p = F->p();
    // on an integral model a point with non-integral x reduces to the identity
    if (P.x != 0 && valuation(P.x, p) < 0) return FFPoint::infinity();
    return FFPoint::affine(ff_from_rational(P.x, F), ff_from_rational(P.y, F));
}

FFPoint reduce_point(const NFPoint& P, const PrimeOfField& prime, const FFElem& root) {
    if (P.inf) return FFPoint::infinity();
    FFElem x, y;
    try {
        x = residue_under(P.x, prime, root);
    } catch (const NonIntegral&) {
        return FFPoint::infinity();
    }
    try {
        y = residue_under(P.y, prime, root);
    } catch (const NonIntegral&) {
        throw DomainError("reduce_point: x integral but y not at " + prime.str());
    }
    return FFPoint::affine(x, y);
}

FFPoint reduce_point(const NFPoint& P, const PrimeOfField& prime) {
    auto F = FieldDescriptor::get(prime.p, prime.f_deg);
    return reduce_point(P, prime, ff_roots(prime.g, F).front());
}

bool is_potentially_good(const NFCurve& E, const PrimeOfField& P) {
    if (E.c4.is_zero()) return true;
    return nf_valuation(E.j_invariant(), P) >= 0;
}

namespace {

bool is_rational_square(const Rational& q) {
    return q >= 0 && is_square(Integer(q.get_num())) && is_square(Integer(q.get_den()));
}

Rational rational_sqrt(const Rational& q) {
    return make_rational(isqrt(Integer(q.get_num())), isqrt(Integer(q.get_den())));
}

void add_points_at(const RationalCurve& E, const Rational& x, std::vector<RationalPoint>& out) {
    Rational B = E.a1 * x + E.a3;
    Rational R = ((x + E.a2) * x + E.a4) * x + E.a6;
    Rational D = B * B + 4 * R;
    if (!is_rational_square(D)) return;
    Rational s = rational_sqrt(D);
    out.push_back(RationalPoint::affine(x, Rational((-B + s) / 2)));
    if (s != 0) out.push_back(RationalPoint::affine(x, Rational((-B - s) / 2)));
}

bool rpoint_less(const RationalPoint& a, const RationalPoint& b) {
    if (a.inf || b.inf) return a.inf && !b.inf;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

std::vector<RationalPoint> torsion_by_search(const RationalCurve& E) {
    // on an integral model torsion points have 4x in Z
    std::vector<RationalPoint> cand, out = {RationalPoint::infinity()};
    for (long m = -40000; m <= 40000; ++m) add_points_at(E, make_rational(m, 4), cand);
    for (auto& P : cand)
        if (E.order(P, 12)) out.push_back(P);
    std::sort(out.begin(), out.end(), rpoint_less);
    return out;
}

// integer roots of X^3 + A X + C, by bisection on monotone pieces
std::vector<Integer> cubic_integer_roots(const Integer& A, const Integer& C) {
    auto g = [&](const Integer& X) { return Integer(X * X * X + A * X + C); };
    Integer bound = abs(A) + abs(C) + 1;
    std::vector<Integer> cuts = {-bound};
    if (A < 0) {
        Integer r = isqrt(Integer(-A / 3)) + 1;
        cuts.push_back(-r);
        cuts.push_back(r);
    }
    cuts.push_back(bound);
    std::set<Integer> roots;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        Integer lo = cuts[i], hi = cuts[i + 1];
        for (Integer x = lo; x <= lo + 2; ++x)
            if (g(x) == 0) roots.insert(x);
        for (Integer x = hi - 2; x <= hi; ++x)
            if (g(x) == 0) roots.insert(x);
        int slo = sgn(g(lo)), shi = sgn(g(hi));
        if (slo == 0 || shi == 0 || slo == shi) continue;
        while (hi - lo > 1) {
            Integer mid = (lo + hi) / 2;
            int sm = sgn(g(mid));
            if (sm == 0) {
                roots.insert(mid);
                break;
            }
            (sm == slo ? lo : hi) = mid;
        }
    }
    // the neighbourhood of the critical points can hide double roots
    for (size_t i = 1; i + 1 < cuts.size(); ++i)
        for (Integer x = cuts[i] - 3; x <= cuts[i] + 3; ++x)
            if (g(x) == 0) roots.insert(x);
    return {roots.begin(), roots.end()};
}

std::vector<RationalPoint> torsion_by_lutz_nagell(const RationalCurve& E) {
    // Y^2 = X^3 - 27 c4 X - 54 c6 with X = 36x + 3 b2, Y = 108 (2y + a1 x + a3)
    Integer A = Integer(Rational(-27 * E.c4).get_num()), C = Integer(Rational(-54 * E.c6).get_num());
    Integer D = 4 * A * A * A + 27 * C * C;
    // Y^2 | D; collect the prime powers of D
    Integer rest = abs(D);
    std::vector<std::pair<Integer, unsigned>> fac;
    for (unsigned long p = 2; p < 1000000 && Integer(p) * p <= rest; ++p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e) fac.emplace_back(Integer(p), e);
    }
    if (rest > 1) {
        if (is_prime(rest))
            fac.emplace_back(rest, 1u);
        else if (is_square(rest) && is_prime(isqrt(rest)))
            fac.emplace_back(isqrt(rest), 2u);
        else
            throw DomainError("Lutz-Nagell: cannot factor the discriminant");
    }
    std::vector<Integer> ys = {1};
    for (auto& [p, e] : fac) {
        size_t s = ys.size();
        Integer pe = 1;
        for (unsigned i = 0; i < e / 2; ++i) {
            pe *= p;
            for (size_t j = 0; j < s; ++j) ys.push_back(ys[j] * pe);
        }
    }
    ys.push_back(0);
    std::vector<RationalPoint> out = {RationalPoint::infinity()};
    std::set<std::pair<Rational, Rational>> seen;
    for (auto& Y0 : ys)
        for (int sign : {1, -1}) {
            if (Y0 == 0 && sign < 0) continue;
            Integer Y = sign * Y0;
            for (auto& X : cubic_integer_roots(A, Integer(C - Y * Y))) {
                Rational x = (Rational(X) - 3 * E.b2) / 36;
                Rational y = (make_rational(Y, 108) - E.a1 * x - E.a3) / 2;
                RationalPoint P = RationalPoint::affine(x, y);
                if (!E.contains(P) || !E.order(P, 12)) continue;
                if (seen.insert({x, y}).second) out.push_back(P);
            }
        }
    std::sort(out.begin(), out.end(), rpoint_less);
    return out;
}

}  // namespace

TorsionResult rational_torsion(const RationalCurve& E) {
    for (auto& a : E.coefficients())
        if (a.get_den() != 1) throw DomainError("rational_torsion: model must be integral");
    TorsionResult T;
    T.points = torsion_by_search(E);
    auto ln = torsion_by_lutz_nagell(E);
    if (ln.size() != T.points.size() || !std::equal(ln.begin(), ln.end(), T.points.begin()))
        throw DomainError("rational_torsion: search (" + std::to_string(T.points.size()) + ") and Lutz-Nagell (" +
                          std::to_string(ln.size()) + ") disagree");
    T.order = static_cast<long>(T.points.size());
    for (long p = 3; T.primes.size() < 3; p += 2) {
        if (!is_prime(Integer(p)) || !has_good_reduction(E, p)) continue;
        long n = count_points(reduce_curve(E, FieldDescriptor::get(p)));
        T.reduction_bound = std::gcd(T.reduction_bound, n);
        T.primes.push_back(p);
    }
    if (T.reduction_bound % T.order)
        throw DomainError("rational_torsion: order " + std::to_string(T.order) + " does not divide " +
                          std::to_string(T.reduction_bound));
    long two = 0;
    for (auto& P : T.points)
        if (!P.inf && E.order(P, 2) == 2) ++two;
    T.structure = two == 3 ? "Z/2 x Z/" + std::to_string(T.order / 2) : "Z/" + std::to_string(T.order);
    return T;
}

namespace {

PolyFp reversed(const PolyFp& a, int d) {
    PolyFp r(d + 1, 0);
    for (size_t i = 0; i < a.size() && static_cast<int>(i) <= d; ++i) r[d - i] = a[i];
    return fp::trim(r);
}

bool smooth_chart_char2(const PolyFp& h, const PolyFp& g) {
    // singular points need h(x) = 0 and h'(x)^2 g(x) = g'(x)^2
    PolyFp dh = fp::deriv(h, 2), dg = fp::deriv(g, 2);
    PolyFp t = fp::add(fp::mul(dg, dg, 2), fp::mul(fp::mul(dh, dh, 2), g, 2), 2);
    if (h.empty()) return false;
    return fp::deg(fp::gcd(h, t, 2)) == 0;
}

}  // namespace

bool hyperelliptic_good_reduction(const HyperellipticCurve& C, long p) {
    PolyFp h = fp::reduce(C.h, p), g = fp::reduce(C.g, p);
    if (p != 2) {
        PolyFp F = fp::add(fp::mul(h, h, p), fp::scale(g, 4, p), p);
        int d = fp::deg(F);
        if (d != 5 && d != 6) return false;
        return fp::deg(fp::gcd(F, fp::deriv(F, p), p)) == 0;
    }
    return smooth_chart_char2(h, g) && smooth_chart_char2(reversed(h, 3), reversed(g, 6));
}

long hyperelliptic_count(const HyperellipticCurve& C, long p) {
    if (p > 100000) throw DomainError("hyperelliptic_count: p too large");
    if (!hyperelliptic_good_reduction(C, p))
        throw BadReduction("hyperelliptic model has bad reduction at " + std::to_string(p), p);
    PolyFp h = fp::reduce(C.h, p), g = fp::reduce(C.g, p);
    auto coef = [](const PolyFp& a, size_t i) { return i < a.size() ? a[i] : 0L; };
    // roots Y of Y^2 + H Y - G in F_p
    auto count_quadratic = [p](long H, long G) {
        if (p == 2) {
            long n = 0;
            for (long y = 0; y < 2; ++y) n += (y * y + H * y - G) % 2 == 0;
            return n;
        }
        long D = mod(H * H + 4 * G, p);
        if (D == 0) return 1L;
        return kronecker(Integer(D), Integer(p)) == 1 ? 2L : 0L;
    };
    long n = 0;
    for (long x = 0; x < p; ++x) n += count_quadratic(fp::eval(h, x, p), fp::eval(g, x, p));
    long h3 = coef(h, 3), g6 = coef(g, 6);
    if (h3 == 0 && g6 == 0)
        n += 1;  // odd degree model, one point at infinity
    else
        n += count_quadratic(h3, g6);
    return n;
}

long hyperelliptic_count(const std::vector<Integer>& f, long p) {
    if (f.size() != 6 && f.size() != 7) throw DomainError("hyperelliptic_count: deg f must be 5 or 6");
    return hyperelliptic_count(HyperellipticCurve{{}, f}, p);
}

}  // namespace badred
