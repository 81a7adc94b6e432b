#pragma once

#include "badred/arith.hpp"

#include <climits>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace badred {

// Polynomials over F_p: coefficients low to high, reduced to [0, p), no trailing zeros.
using PolyFp = std::vector<long>;

namespace fp {
PolyFp trim(PolyFp a);
PolyFp reduce(const std::vector<Integer>& a, long p);
PolyFp add(const PolyFp& a, const PolyFp& b, long p);
PolyFp sub(const PolyFp& a, const PolyFp& b, long p);
PolyFp mul(const PolyFp& a, const PolyFp& b, long p);
PolyFp scale(const PolyFp& a, long c, long p);
void divmod(const PolyFp& a, const PolyFp& b, long p, PolyFp& q, PolyFp& r);
PolyFp rem(const PolyFp& a, const PolyFp& b, long p);
PolyFp gcd(PolyFp a, PolyFp b, long p);  // monic
PolyFp monic(const PolyFp& a, long p);
PolyFp deriv(const PolyFp& a, long p);
PolyFp powmod(PolyFp base, Integer e, const PolyFp& m, long p);
long eval(const PolyFp& a, long x, long p);
int deg(const PolyFp& a);  // -1 for zero
bool is_irreducible(const PolyFp& f, long p);
std::string str(const PolyFp& a, const std::string& var = "x");
}  // namespace fp

// product of the result, with multiplicity, is monic(f); sorted by (degree, coefficients)
std::vector<std::pair<PolyFp, int>> poly_factor_mod(const PolyFp& f, long p);
std::vector<std::pair<PolyFp, int>> poly_factor_mod(const std::vector<Integer>& f, long p);

class FieldDescriptor;
using FieldPtr = std::shared_ptr<const FieldDescriptor>;

inline constexpr long kMaxTableField = 1000000;

class FieldDescriptor {
public:
    // shared, cached per (p, k)
    static FieldPtr get(long p, int k = 1);

    long p() const { return p_; }
    int k() const { return k_; }
    long size() const { return q_; }
    const PolyFp& modulus() const { return modulus_; }
    std::string name() const;

    // least square root by index, or -1; only for size() <= kMaxTableField
    long sqrt_index(long index) const;
    long square_index(long index) const;

    FieldDescriptor(long p, int k);

private:
    long p_;
    int k_;
    long q_;
    PolyFp modulus_;
    mutable std::vector<long> sqrt_;
    mutable std::vector<long> square_;
    mutable std::once_flag sqrt_once_;
    void build_tables() const;
};

class FiniteFieldElement {
public:
    FiniteFieldElement() = default;
    FiniteFieldElement(FieldPtr F, long c0);
    FiniteFieldElement(FieldPtr F, PolyFp coords);  // reduced mod modulus
    static FiniteFieldElement from_index(FieldPtr F, long index);

    const FieldPtr& field() const { return F_; }
    long index() const;  // c0 + c1 p + ...
    const PolyFp& coords() const { return c_; }  // trimmed
    bool is_zero() const { return c_.empty(); }
    std::string str() const;
    std::vector<long> coordinate_vector() const;  // padded to k

    FiniteFieldElement inverse() const;
    FiniteFieldElement pow(Integer e) const;

    friend FiniteFieldElement operator+(const FiniteFieldElement& a, const FiniteFieldElement& b);
    friend FiniteFieldElement operator-(const FiniteFieldElement& a, const FiniteFieldElement& b);
    friend FiniteFieldElement operator-(const FiniteFieldElement& a);
    friend FiniteFieldElement operator*(const FiniteFieldElement& a, const FiniteFieldElement& b);
    friend FiniteFieldElement operator/(const FiniteFieldElement& a, const FiniteFieldElement& b);
    friend bool operator==(const FiniteFieldElement& a, const FiniteFieldElement& b) {
        return a.c_ == b.c_;
    }
    friend bool operator<(const FiniteFieldElement& a, const FiniteFieldElement& b) {
        return a.index() < b.index();
    }

private:
    FieldPtr F_;
    PolyFp c_;
};

using FFElem = FiniteFieldElement;

std::optional<FFElem> ff_sqrt(const FFElem& x);
std::vector<FFElem> ff_roots(const PolyFp& g, const FieldPtr& F);  // sorted by index
FFElem ff_from_rational(const Rational& x, const FieldPtr& F);  // denominator prime to p
FFElem ff_eval(const PolyFp& g, const FFElem& x);

struct NonIntegral : DomainError {
    long valuation;
    NonIntegral(const std::string& what, long v) : DomainError(what), valuation(v) {}
};

struct UnsupportedPrime : DomainError {
    using DomainError::DomainError;
};

class NumberField;
using NumberFieldPtr = std::shared_ptr<const NumberField>;

class NumberField {
public:
    // f monic with integer coefficients, low to high; irreducibility is certified
    static NumberFieldPtr make(std::vector<Integer> f, std::string name = "");
    static NumberFieldPtr rationals();
    static NumberFieldPtr quadratic(const Integer& d);  // Q(sqrt d), f = x^2 - d

    const std::vector<Integer>& poly() const { return f_; }
    int degree() const { return static_cast<int>(f_.size()) - 1; }
    const std::string& name() const { return name_; }
    Integer discriminant() const;

    NumberField(std::vector<Integer> f, std::string name);

private:
    std::vector<Integer> f_;
    std::string name_;
};

class NumberFieldElement {
public:
    NumberFieldElement() = default;
    NumberFieldElement(NumberFieldPtr K, Rational c0);
    NumberFieldElement(NumberFieldPtr K, std::vector<Rational> coords);
    static NumberFieldElement generator(NumberFieldPtr K);

    const NumberFieldPtr& field() const { return K_; }
    const std::vector<Rational>& coords() const { return c_; }  // padded to degree
    bool is_zero() const;
    bool is_rational() const;
    Rational norm() const;
    Integer denominator() const;
    NumberFieldElement inverse() const;
    std::string str() const;

    friend NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b);
    friend NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b);
    friend NumberFieldElement operator-(const NumberFieldElement& a);
    friend NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b);
    friend NumberFieldElement operator/(const NumberFieldElement& a, const NumberFieldElement& b);
    friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
        return a.c_ == b.c_;
    }

private:
    NumberFieldPtr K_;
    std::vector<Rational> c_;
};

using NFElem = NumberFieldElement;

struct PrimeOfField {
    NumberFieldPtr K;
    long p = 0;
    PolyFp g;  // monic irreducible factor of f mod p
    int f_deg = 0;
    int e = 0;
    std::string str() const;
};

std::vector<PrimeOfField> primes_above(const NumberFieldPtr& K, long p);

// image in F_{p^f} sending the generator to the least root of g
FFElem residue_map(const NFElem& x, const PrimeOfField& P);
// images in F_{p^k} under every embedding of Z[theta]/P, i.e. one per root of g in F_{p^k}
std::vector<FFElem> residue_embeddings(const NFElem& x, const PrimeOfField& P, const FieldPtr& F);
FFElem residue_under(const NFElem& x, const PrimeOfField& P, const FFElem& root);

inline constexpr long kInfiniteValuation = LONG_MAX;
long nf_valuation(const NFElem& x, const PrimeOfField& P);

}  // namespace badred
