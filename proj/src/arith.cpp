#include "badred/arith.hpp"

#include <algorithm>
#include <tuple>

namespace badred {

int kronecker(const Integer& a, const Integer& n) {
    if (n == 0) throw DomainError("kronecker: n = 0");
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    // BPSW plus extra rounds; below 2^64 this is deterministic
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

bool is_square(const Integer& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer isqrt(const Integer& n) {
    if (n < 0) throw DomainError("isqrt of negative");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Integer squarefree_part(const Integer& n) {
    auto f = factor_small(n);
    Integer r = f.sign;
    for (auto& [p, e] : f.factors)
        if (e % 2) r *= p;
    return r;
}

long valuation(const Integer& n, long p) {
    if (n == 0) throw DomainError("valuation of 0");
    Integer m = n;
    long v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++v;
    }
    return v;
}

long valuation(const Rational& x, long p) {
    if (x == 0) throw DomainError("valuation of 0");
    return valuation(Integer(x.get_num()), p) - valuation(Integer(x.get_den()), p);
}

Integer mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long powmod(long b, long e, long m) {
    __int128 r = 1 % m, x = mod(b, m);
    while (e > 0) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<long>(r);
}

long invmod(long a, long m) {
    Integer r, A = mod(a, m), M = m;
    if (!mpz_invert(r.get_mpz_t(), A.get_mpz_t(), M.get_mpz_t()))
        throw DomainError("invmod: not invertible");
    return r.get_si();
}

std::pair<Integer, Integer> sum_of_two_squares(const Integer& q) {
    if (mod(q, 4) != 1 || !is_prime(q))
        throw DomainError("sum_of_two_squares: need a prime q = 1 mod 4, got " + q.get_str());
    for (Integer a = 1; a * a < q; a += 2) {
        Integer b2 = q - a * a;
        if (is_square(b2)) return {a, isqrt(b2)};
    }
    throw DomainError("sum_of_two_squares: no representation");  // unreachable for primes
}

Integer Factorization::value() const {
    Integer r = sign;
    for (auto& [p, e] : factors) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        r *= pe;
    }
    return r;
}

Factorization factor_small(const Integer& n) {
    if (n == 0) throw DomainError("factor_small: n = 0");
    if (abs(n) > kFactorLimit) throw DomainError("factor_small: |n| > 1e12");
    Factorization f;
    f.sign = n < 0 ? -1 : 1;
    unsigned long m = Integer(abs(n)).get_ui();
    auto take = [&](unsigned long p) {
        unsigned e = 0;
        while (m % p == 0) m /= p, ++e;
        if (e) f.factors.emplace_back(Integer(p), e);
    };
    take(2);
    take(3);
    for (unsigned long p = 5; p * p <= m; p += 6) {
        take(p);
        take(p + 2);
    }
    if (m > 1) f.factors.emplace_back(Integer(m), 1u);
    return f;
}

std::vector<long> primes_up_to(long n) {
    std::vector<long> out;
    if (n < 2) return out;
    std::vector<bool> comp(n + 1);
    for (long i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (long j = i * i; j <= n; j += i) comp[j] = true;
    }
    return out;
}

std::string Gaussian::str() const {
    if (im == 0) return re.get_str();
    std::string s = re == 0 ? "" : re.get_str();
    Integer b = im;
    if (b < 0) {
        s += "-";
        b = -b;
    } else if (re != 0) {
        s += "+";
    }
    if (b != 1) s += b.get_str();
    return s + "i";
}

namespace {

// nearest integer to a / n, n > 0, halves rounded up
Integer round_div(const Integer& a, const Integer& n) {
    Integer r;
    Integer t = 2 * a + n;
    Integer d = 2 * n;
    mpz_fdiv_q(r.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t());
    return r;
}

bool divisible(const Integer& a, const Integer& n) {
    return mpz_divisible_p(a.get_mpz_t(), n.get_mpz_t()) != 0;
}

}  // namespace

bool divides(const Gaussian& m, const Gaussian& x) {
    if (m.is_zero()) return x.is_zero();
    Gaussian t = x * m.conj();
    Integer n = m.norm();
    return divisible(t.re, n) && divisible(t.im, n);
}

Gaussian divexact(const Gaussian& x, const Gaussian& m) {
    if (!divides(m, x)) throw DomainError("divexact: " + m.str() + " does not divide " + x.str());
    Gaussian t = x * m.conj();
    Integer n = m.norm();
    return {Integer(t.re / n), Integer(t.im / n)};
}

Gaussian gaussian_mod(const Gaussian& x, const Gaussian& m) {
    if (m.is_zero()) throw DomainError("gaussian_mod: modulus 0");
    Gaussian t = x * m.conj();
    Integer n = m.norm();
    Gaussian r = x - Gaussian(round_div(t.re, n), round_div(t.im, n)) * m;
    Gaussian best = r;
    for (long a = -1; a <= 1; ++a)
        for (long b = -1; b <= 1; ++b) {
            Gaussian c = r + Gaussian(a, b) * m;
            if (std::tuple(c.norm(), c.re, c.im) < std::tuple(best.norm(), best.re, best.im)) best = c;
        }
    return best;
}

std::optional<Gaussian> gaussian_sqrt(const Gaussian& x) {
    if (x.is_zero()) return Gaussian(0, 0);
    Integer n = x.norm();
    if (!is_square(n)) return std::nullopt;
    n = isqrt(n);
    Integer u2 = n + x.re, v2 = n - x.re;
    if (u2 % 2 != 0) return std::nullopt;
    u2 /= 2;
    v2 /= 2;
    if (!is_square(u2) || !is_square(v2)) return std::nullopt;
    Integer u = isqrt(u2), v = isqrt(v2);
    if (x.im < 0) v = -v;
    if (u == 0 && v < 0) v = -v;
    Gaussian r(u, v);
    if (!(r * r == x)) return std::nullopt;
    return r;
}

long gaussian_valuation(Gaussian x, const Gaussian& pi) {
    if (x.is_zero()) throw DomainError("gaussian_valuation of 0");
    long v = 0;
    while (divides(pi, x)) {
        x = divexact(x, pi);
        ++v;
    }
    return v;
}

// Tonelli-Shanks
std::optional<long> sqrt_mod_prime(long a, long p) {
    a = mod(a, p);
    if (a == 0 || p == 2) return a;
    if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    long q = p - 1, s = 0;
    while (q % 2 == 0) q /= 2, ++s;
    long z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    long m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    auto mulm = [p](long x, long y) { return static_cast<long>(static_cast<__int128>(x) * y % p); };
    while (t != 1) {
        long i = 0, tt = t;
        while (tt != 1) tt = mulm(tt, tt), ++i;
        long b = c;
        for (long j = 0; j < m - i - 1; ++j) b = mulm(b, b);
        m = i;
        c = mulm(b, b);
        t = mulm(t, c);
        r = mulm(r, b);
    }
    return std::min(r, p - r);
}

}  // namespace badred
