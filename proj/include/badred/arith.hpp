#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace badred {

using Integer = mpz_class;
using Rational = mpq_class;

// canonical num/den; mpq_class(num, den) alone does not reduce
inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// ~1e12, the trial division ceiling
inline const Integer kFactorLimit{"1000000000000"};

int kronecker(const Integer& a, const Integer& n);
bool is_prime(const Integer& n);
bool is_square(const Integer& n);
Integer isqrt(const Integer& n);
Integer squarefree_part(const Integer& n);  // sign kept, |n| <= kFactorLimit
long valuation(const Integer& n, long p);  // n != 0
long valuation(const Rational& x, long p);  // x != 0
Integer mod(const Integer& a, const Integer& m);  // in [0, |m|)
long mod(long a, long m);
long powmod(long b, long e, long m);
long invmod(long a, long m);  // m need not be prime, gcd(a, m) = 1
std::optional<long> sqrt_mod_prime(long a, long p);  // the smaller root

std::pair<Integer, Integer> sum_of_two_squares(const Integer& q);

struct Factorization {
    int sign = 1;
    std::vector<std::pair<Integer, unsigned>> factors;
    Integer value() const;
};

Factorization factor_small(const Integer& n);
std::vector<long> primes_up_to(long n);

struct Gaussian {
    Integer re, im;

    Gaussian() = default;
    Gaussian(Integer r, Integer i = 0) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(long r, long i = 0) : re(r), im(i) {}

    Integer norm() const { return re * re + im * im; }
    Gaussian conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
    std::string str() const;

    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
    friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
};

bool divides(const Gaussian& m, const Gaussian& x);
Gaussian divexact(const Gaussian& x, const Gaussian& m);
Gaussian gaussian_mod(const Gaussian& x, const Gaussian& m);
std::optional<Gaussian> gaussian_sqrt(const Gaussian& x);  // exact square root in Z[i]
long gaussian_valuation(Gaussian x, const Gaussian& pi);  // x != 0

}  // namespace badred
