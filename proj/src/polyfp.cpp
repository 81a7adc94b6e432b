#include "badred/fields.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace badred {
namespace fp {

PolyFp trim(PolyFp a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

PolyFp reduce(const std::vector<Integer>& a, long p) {
    PolyFp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i], Integer(p)).get_si();
    return trim(r);
}

int deg(const PolyFp& a) { return static_cast<int>(a.size()) - 1; }

PolyFp add(const PolyFp& a, const PolyFp& b, long p) {
    PolyFp r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = ((i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0)) % p;
    return trim(r);
}

PolyFp sub(const PolyFp& a, const PolyFp& b, long p) {
    PolyFp r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = mod((i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0), p);
    return trim(r);
}

PolyFp mul(const PolyFp& a, const PolyFp& b, long p) {
    if (a.empty() || b.empty()) return {};
    std::vector<__int128> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<__int128>(a[i]) * b[j];
    PolyFp r(acc.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = static_cast<long>(acc[i] % p);
    return trim(r);
}

PolyFp scale(const PolyFp& a, long c, long p) {
    PolyFp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<long>(static_cast<__int128>(a[i]) * mod(c, p) % p);
    return trim(r);
}

void divmod(const PolyFp& a, const PolyFp& b, long p, PolyFp& q, PolyFp& r) {
    if (b.empty()) throw DomainError("polynomial division by zero");
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    long inv = invmod(b.back(), p);
    while (r.size() >= b.size() && !r.empty()) {
        size_t s = r.size() - b.size();
        long c = static_cast<long>(static_cast<__int128>(r.back()) * inv % p);
        q[s] = c;
        for (size_t i = 0; i < b.size(); ++i)
            r[s + i] = mod(r[s + i] - static_cast<long>(static_cast<__int128>(c) * b[i] % p), p);
        r = trim(r);
    }
    q = trim(q);
}

PolyFp rem(const PolyFp& a, const PolyFp& b, long p) {
    PolyFp q, r;
    divmod(a, b, p, q, r);
    return r;
}

PolyFp monic(const PolyFp& a, long p) {
    if (a.empty()) return a;
    return scale(a, invmod(a.back(), p), p);
}

PolyFp gcd(PolyFp a, PolyFp b, long p) {
    while (!b.empty()) {
        PolyFp r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

PolyFp deriv(const PolyFp& a, long p) {
    if (a.size() <= 1) return {};
    PolyFp r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = static_cast<long>(static_cast<__int128>(a[i]) * (i % p) % p);
    return trim(r);
}

PolyFp powmod(PolyFp base, Integer e, const PolyFp& m, long p) {
    PolyFp r = rem({1}, m, p);
    base = rem(base, m, p);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = rem(mul(r, r, p), m, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base, p), m, p);
    }
    return r;
}

long eval(const PolyFp& a, long x, long p) {
    __int128 r = 0;
    for (size_t i = a.size(); i-- > 0;) r = (r * x + a[i]) % p;
    return static_cast<long>(r);
}

bool is_irreducible(const PolyFp& f, long p) {
    int n = deg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    PolyFp g = monic(f, p);
    PolyFp x = {0, 1};
    // Rabin: x^(p^n) = x mod g and gcd(x^(p^(n/r)) - x, g) = 1 for primes r | n
    std::vector<PolyFp> frob(n + 1);
    frob[0] = x;
    for (int i = 1; i <= n; ++i) frob[i] = powmod(frob[i - 1], Integer(p), g, p);
    if (sub(frob[n], x, p) != PolyFp{}) return false;
    for (int r = 2; r <= n; ++r) {
        if (n % r) continue;
        bool prime = true;
        for (int s = 2; s * s <= r; ++s)
            if (r % s == 0) prime = false;
        if (!prime) continue;
        if (deg(gcd(sub(frob[n / r], x, p), g, p)) > 0) return false;
    }
    return true;
}

std::string str(const PolyFp& a, const std::string& var) {
    if (a.empty()) return "0";
    std::string s;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || a[i] != 1) s += std::to_string(a[i]);
        if (i > 0) {
            if (a[i] != 1) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace fp

namespace {

PolyFp pth_root(const PolyFp& f, long p) {
    PolyFp r;
    for (size_t i = 0; i < f.size(); i += p) r.push_back(f[i]);
    return fp::trim(r);
}

void equal_degree(const PolyFp& g, int d, long p, std::mt19937_64& rng, std::vector<PolyFp>& out) {
    int n = fp::deg(g);
    if (n == d) {
        out.push_back(g);
        return;
    }
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, d);
    std::uniform_int_distribution<long> coef(0, p - 1);
    for (;;) {
        PolyFp a(n);
        for (auto& c : a) c = coef(rng);
        a = fp::trim(a);
        if (fp::deg(a) < 1) continue;
        PolyFp b;
        if (p == 2) {
            // trace map a + a^2 + ... + a^(2^(d-1))
            PolyFp t = a, s = a;
            for (int i = 1; i < d; ++i) {
                t = fp::rem(fp::mul(t, t, p), g, p);
                s = fp::add(s, t, p);
            }
            b = s;
        } else {
            b = fp::sub(fp::powmod(a, (q - 1) / 2, g, p), {1}, p);
        }
        PolyFp c = fp::gcd(g, b, p);
        int dc = fp::deg(c);
        if (dc > 0 && dc < n) {
            PolyFp quo, r;
            fp::divmod(g, c, p, quo, r);
            equal_degree(c, d, p, rng, out);
            equal_degree(fp::monic(quo, p), d, p, rng, out);
            return;
        }
    }
}

void squarefree_irreducibles(PolyFp h, long p, std::vector<PolyFp>& out) {
    std::mt19937_64 rng(0x5eed);
    PolyFp x = {0, 1}, w = x;
    for (int i = 1; 2 * i <= fp::deg(h); ++i) {
        w = fp::powmod(w, Integer(p), h, p);
        PolyFp g = fp::gcd(h, fp::sub(w, x, p), p);
        if (fp::deg(g) > 0) {
            equal_degree(g, i, p, rng, out);
            PolyFp quo, r;
            fp::divmod(h, g, p, quo, r);
            h = fp::monic(quo, p);
            w = fp::rem(w, h, p);
        }
    }
    if (fp::deg(h) > 0) out.push_back(h);
}

void irreducibles(const PolyFp& f, long p, std::vector<PolyFp>& out) {
    if (fp::deg(f) <= 0) return;
    PolyFp d = fp::deriv(f, p);
    if (d.empty()) {
        irreducibles(pth_root(f, p), p, out);
        return;
    }
    PolyFp g = fp::gcd(f, d, p), quo, r;
    fp::divmod(f, g, p, quo, r);
    squarefree_irreducibles(fp::monic(quo, p), p, out);
    irreducibles(g, p, out);
}

}  // namespace

std::vector<std::pair<PolyFp, int>> poly_factor_mod(const PolyFp& f0, long p) {
    PolyFp f = fp::trim(f0);
    for (auto& c : f) c = mod(c, p);
    f = fp::trim(f);
    if (f.empty()) throw DomainError("poly_factor_mod: zero polynomial");
    f = fp::monic(f, p);
    std::vector<PolyFp> irr;
    irreducibles(f, p, irr);
    std::sort(irr.begin(), irr.end(), [](const PolyFp& a, const PolyFp& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    irr.erase(std::unique(irr.begin(), irr.end()), irr.end());
    std::vector<std::pair<PolyFp, int>> out;
    for (auto& g : irr) {
        int e = 0;
        for (;;) {
            PolyFp quo, r;
            fp::divmod(f, g, p, quo, r);
            if (!r.empty()) break;
            f = quo;
            ++e;
        }
        out.emplace_back(g, e);
    }
    return out;
}

std::vector<std::pair<PolyFp, int>> poly_factor_mod(const std::vector<Integer>& f, long p) {
    return poly_factor_mod(fp::reduce(f, p), p);
}

}  // namespace badred
