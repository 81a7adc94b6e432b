#pragma once

#include "badred/fields.hpp"

#include <array>
#include <string>
#include <vector>

namespace badred {

inline Rational zero_like(const Rational&) { return 0; }
inline FFElem zero_like(const FFElem& a) { return FFElem(a.field(), 0); }
inline NFElem zero_like(const NFElem& a) { return NFElem(a.field(), 0); }
inline Rational from_int(const Rational&, long n) { return n; }
inline FFElem from_int(const FFElem& a, long n) { return FFElem(a.field(), n); }
inline NFElem from_int(const NFElem& a, long n) { return NFElem(a.field(), Rational(n)); }
inline bool is_zero(const Rational& a) { return a == 0; }
inline bool is_zero(const FFElem& a) { return a.is_zero(); }
inline bool is_zero(const NFElem& a) { return a.is_zero(); }
inline std::string to_str(const Rational& a) { return a.get_str(); }
inline std::string to_str(const FFElem& a) { return a.str(); }
inline std::string to_str(const NFElem& a) { return a.str(); }

struct SingularCurve : DomainError {
    using DomainError::DomainError;
};
struct BadReduction : DomainError {
    long p;
    BadReduction(const std::string& what, long p) : DomainError(what), p(p) {}
};
struct NonIntegralModel : DomainError {
    using DomainError::DomainError;
};

template <class T>
struct CurvePoint {
    bool inf = true;
    T x, y;

    static CurvePoint infinity() { return {}; }
    static CurvePoint affine(T x, T y) { return {false, std::move(x), std::move(y)}; }
    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.inf || b.inf) return a.inf == b.inf;
        return a.x == b.x && a.y == b.y;
    }
    std::string str() const { return inf ? "inf" : "(" + to_str(x) + ", " + to_str(y) + ")"; }
};

template <class T>
class WeierstrassCurve {
public:
    T a1, a2, a3, a4, a6;
    T b2, b4, b6, b8, c4, c6, disc;

    WeierstrassCurve(T a1_, T a2_, T a3_, T a4_, T a6_)
        : a1(std::move(a1_)), a2(std::move(a2_)), a3(std::move(a3_)), a4(std::move(a4_)), a6(std::move(a6_)) {
        T two = from_int(a1, 2), four = from_int(a1, 4);
        b2 = a1 * a1 + four * a2;
        b4 = two * a4 + a1 * a3;
        b6 = a3 * a3 + four * a6;
        b8 = a1 * a1 * a6 + four * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        c4 = b2 * b2 - from_int(a1, 24) * b4;
        c6 = -(b2 * b2 * b2) + from_int(a1, 36) * b2 * b4 - from_int(a1, 216) * b6;
        disc = -(b2 * b2 * b8) - from_int(a1, 8) * b4 * b4 * b4 - from_int(a1, 27) * b6 * b6 +
               from_int(a1, 9) * b2 * b4 * b6;
        if (is_zero(disc)) throw SingularCurve("singular Weierstrass model");
    }

    std::array<T, 5> coefficients() const { return {a1, a2, a3, a4, a6}; }

    T j_invariant() const { return c4 * c4 * c4 / disc; }

    bool contains(const CurvePoint<T>& P) const {
        if (P.inf) return true;
        return P.y * P.y + a1 * P.x * P.y + a3 * P.y ==
               P.x * P.x * P.x + a2 * P.x * P.x + a4 * P.x + a6;
    }

    CurvePoint<T> neg(const CurvePoint<T>& P) const {
        if (P.inf) return P;
        return CurvePoint<T>::affine(P.x, -P.y - a1 * P.x - a3);
    }

    CurvePoint<T> add(const CurvePoint<T>& P, const CurvePoint<T>& Q) const {
        if (P.inf) return Q;
        if (Q.inf) return P;
        T lambda, nu;
        if (P.x == Q.x) {
            T s = P.y + Q.y + a1 * Q.x + a3;
            if (is_zero(s)) return CurvePoint<T>::infinity();
            T den = from_int(a1, 2) * P.y + a1 * P.x + a3;
            lambda = (from_int(a1, 3) * P.x * P.x + from_int(a1, 2) * a2 * P.x + a4 - a1 * P.y) / den;
            nu = (-(P.x * P.x * P.x) + a4 * P.x + from_int(a1, 2) * a6 - a3 * P.y) / den;
        } else {
            T dx = Q.x - P.x;
            lambda = (Q.y - P.y) / dx;
            nu = (P.y * Q.x - Q.y * P.x) / dx;
        }
        T x3 = lambda * lambda + a1 * lambda - a2 - P.x - Q.x;
        T y3 = -(lambda + a1) * x3 - nu - a3;
        return CurvePoint<T>::affine(std::move(x3), std::move(y3));
    }

    CurvePoint<T> mul(Integer n, const CurvePoint<T>& P) const {
        if (n < 0) return mul(-n, neg(P));
        CurvePoint<T> r = CurvePoint<T>::infinity();
        size_t bits = n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
        for (size_t i = bits; i-- > 0;) {
            r = add(r, r);
            if (mpz_tstbit(n.get_mpz_t(), i)) r = add(r, P);
        }
        return r;
    }

    // least n in [1, bound] with nP = 0, or 0
    long order(const CurvePoint<T>& P, long bound) const {
        CurvePoint<T> Q = P;
        for (long n = 1; n <= bound; ++n) {
            if (Q.inf) return n;
            Q = add(Q, P);
        }
        return 0;
    }

    std::string str() const {
        return "[" + to_str(a1) + "," + to_str(a2) + "," + to_str(a3) + "," + to_str(a4) + "," + to_str(a6) + "]";
    }
};

template <class T>
void require_on_curve(const WeierstrassCurve<T>& E, const CurvePoint<T>& P) {
    if (!E.contains(P)) throw DomainError("point " + P.str() + " is not on " + E.str());
}

template <class T>
CurvePoint<T> point_add(const WeierstrassCurve<T>& E, const CurvePoint<T>& P, const CurvePoint<T>& Q) {
    require_on_curve(E, P);
    require_on_curve(E, Q);
    return E.add(P, Q);
}

template <class T>
CurvePoint<T> point_neg(const WeierstrassCurve<T>& E, const CurvePoint<T>& P) {
    require_on_curve(E, P);
    return E.neg(P);
}

template <class T>
CurvePoint<T> scalar_mul(const WeierstrassCurve<T>& E, const Integer& n, const CurvePoint<T>& P) {
    require_on_curve(E, P);
    return E.mul(n, P);
}

template <class T>
T curve_j_invariant(const WeierstrassCurve<T>& E) {
    return E.j_invariant();
}

using RationalCurve = WeierstrassCurve<Rational>;
using RationalPoint = CurvePoint<Rational>;
using FFCurve = WeierstrassCurve<FFElem>;
using FFPoint = CurvePoint<FFElem>;
using NFCurve = WeierstrassCurve<NFElem>;
using NFPoint = CurvePoint<NFElem>;

RationalCurve rational_curve(const std::array<long, 5>& a);
NFCurve base_change(const RationalCurve& E, const NumberFieldPtr& K);
NFPoint base_change(const RationalPoint& P, const NumberFieldPtr& K);

// total order on finite field points: infinity first, then (x index, y index)
bool point_less(const FFPoint& a, const FFPoint& b);

struct FinitePointSet {
    FFCurve curve;
    std::vector<FFPoint> points;  // sorted by point_less
    long order() const { return static_cast<long>(points.size()); }
};

inline constexpr long kMaxEnumeration = 1000000;

FinitePointSet enumerate_points(const FFCurve& E, int jobs = 1);
long count_points(const FFCurve& E);
// every x in F_q lifts to a point of E(F_q); the point at infinity covers x = infinity
bool x_image_full(const FFCurve& E);

FFCurve reduce_curve(const RationalCurve& E, const FieldPtr& F);
FFCurve reduce_curve(const NFCurve& E, const PrimeOfField& P, const FFElem& root);
FFCurve reduce_curve(const NFCurve& E, const PrimeOfField& P);
FFPoint reduce_point(const RationalPoint& P, const FieldPtr& F);
FFPoint reduce_point(const NFPoint& P, const PrimeOfField& prime, const FFElem& root);
FFPoint reduce_point(const NFPoint& P, const PrimeOfField& prime);
bool has_good_reduction(const RationalCurve& E, long p);

bool is_potentially_good(const NFCurve& E, const PrimeOfField& P);

struct TorsionResult {
    std::vector<RationalPoint> points;  // includes infinity
    long order = 1;
    std::string structure;  // "Z/n" or "Z/2 x Z/2m"
    long reduction_bound = 0;  // gcd of #E(F_p) over the primes below
    std::vector<long> primes;
};

TorsionResult rational_torsion(const RationalCurve& E);

// y^2 + h(x) y = g(x); h = 0 gives y^2 = g
struct HyperellipticCurve {
    std::vector<Integer> h, g;
};

bool hyperelliptic_good_reduction(const HyperellipticCurve& C, long p);
long hyperelliptic_count(const HyperellipticCurve& C, long p);
long hyperelliptic_count(const std::vector<Integer>& f, long p);

}  // namespace badred
