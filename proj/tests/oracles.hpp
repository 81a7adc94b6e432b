#pragma once

// Independent brute-force oracles, used only by the tests. They share no code with the library.

#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

inline long md(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline long pw(long b, long e, long m) {
    long r = 1 % m;
    b = md(b, m);
    while (e > 0) {
        if (e & 1) r = static_cast<long>(static_cast<__int128>(r) * b % m);
        b = static_cast<long>(static_cast<__int128>(b) * b % m);
        e >>= 1;
    }
    return r;
}

inline bool prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Legendre symbol by Euler's criterion
inline int legendre(long a, long p) {
    a = md(a, p);
    if (a == 0) return 0;
    return pw(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// Kronecker symbol from the factorization of n and the definition at 2 and -1
inline int kronecker(long a, long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int s = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) s = -s;
    }
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        long r = md(a, 8);
        if (r == 3 || r == 5) s = -s;
    }
    for (long p = 3; p * p <= n; p += 2)
        while (n % p == 0) {
            n /= p;
            s *= legendre(a, p);
        }
    if (n > 1) s *= legendre(a, n);
    return s;
}

// all (x, y) with x^2 + y^2 = n, x, y >= 0
inline std::vector<std::pair<long, long>> two_squares(long n) {
    std::vector<std::pair<long, long>> out;
    for (long x = 0; x * x <= n; ++x)
        for (long y = 0; x * x + y * y <= n; ++y)
            if (x * x + y * y == n) out.push_back({x, y});
    return out;
}

inline std::vector<std::pair<long, int>> factor(long n) {
    std::vector<std::pair<long, int>> f;
    if (n < 0) n = -n;
    for (long d = 2; d * d <= n; ++d) {
        int e = 0;
        while (n % d == 0) n /= d, ++e;
        if (e) f.push_back({d, e});
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

// #E(F_p) for y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, counted pair by pair
inline long count_points(const std::array<long, 5>& a, long p) {
    long n = 1;
    for (long x = 0; x < p; ++x)
        for (long y = 0; y < p; ++y) {
            long lhs = md(y * y + a[0] * x % p * y + a[2] * y, p);
            long rhs = md(((x * x % p) * x + a[1] * (x * x % p) + a[3] * x + a[4]), p);
            if (lhs == rhs) n++;
        }
    return n;
}

inline long discriminant(const std::array<long, 5>& a) {
    long b2 = a[0] * a[0] + 4 * a[1], b4 = 2 * a[3] + a[0] * a[2], b6 = a[2] * a[2] + 4 * a[4];
    long b8 = a[0] * a[0] * a[4] + 4 * a[1] * a[4] - a[0] * a[2] * a[3] + a[1] * a[2] * a[2] - a[3] * a[3];
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

// points of y^2 + h y = g over F_p on the smooth model with two points at infinity (deg g = 6, deg h <= 3)
inline long count_genus2(const std::vector<long>& h, const std::vector<long>& g, long p) {
    auto ev = [&](const std::vector<long>& f, long x) {
        long s = 0;
        for (size_t i = f.size(); i-- > 0;) s = md(s * x + f[i], p);
        return s;
    };
    long n = 0;
    for (long x = 0; x < p; ++x)
        for (long y = 0; y < p; ++y)
            if (md(y * y + ev(h, x) * y - ev(g, x), p) == 0) n++;
    long h3 = h.size() > 3 ? h[3] : 0, g6 = g.size() > 6 ? g[6] : 0;
    for (long b = 0; b < p; ++b)
        if (md(b * b + h3 * b - g6, p) == 0) n++;
    return n;
}

// roots of a polynomial (low to high) mod p
inline std::vector<long> roots(const std::vector<long>& f, long p) {
    std::vector<long> r;
    for (long x = 0; x < p; ++x) {
        long s = 0;
        for (size_t i = f.size(); i-- > 0;) s = md(s * x + f[i], p);
        if (s == 0) r.push_back(x);
    }
    return r;
}

// deterministic generator for property tests
struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}
    long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
    long prime_in(long lo, long hi) {
        for (;;) {
            long n = range(lo, hi);
            if (prime(n)) return n;
        }
    }
    std::array<long, 5> curve(long c) {
        return {range(-c, c), range(-c, c), range(-c, c), range(-c, c), range(-c, c)};
    }
};

}  // namespace oracle
