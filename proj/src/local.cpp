#include "badred/descent.hpp"

#include <algorithm>
#include <climits>
#include <functional>

namespace badred {

namespace {

using i128 = __int128;
using Vec = std::array<long, 4>;

// upper triangular coefficients, reduced to machine integers
struct Form {
    long c[4][4] = {};
    long at(int i, int j) const { return i <= j ? c[i][j] : c[j][i]; }
};

Form to_form(const Quadric& Q) {
    Form F;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            if (!Q.c[i][j].fits_slong_p()) throw DomainError("local_solvable: coefficient too large");
            F.c[i][j] = Q.c[i][j].get_si();
        }
    return F;
}

long md(i128 a, long m) {
    long r = static_cast<long>(a % m);
    return r < 0 ? r + m : r;
}

long eval_mod(const Form& F, const Vec& x, long m) {
    i128 s = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            if (!F.c[i][j]) continue;
            long xx = md(static_cast<i128>(x[i]) * x[j], m);
            s += static_cast<i128>(md(F.c[i][j], m)) * xx % m;
            s %= m;
        }
    return md(s, m);
}

Vec grad_mod(const Form& F, const Vec& x, long m) {
    Vec g{};
    for (int k = 0; k < 4; ++k) {
        i128 s = static_cast<i128>(md(2 * static_cast<i128>(F.c[k][k]), m)) * md(x[k], m) % m;
        for (int i = 0; i < 4; ++i)
            if (i != k) s = (s + static_cast<i128>(md(F.at(i, k), m)) * md(x[i], m)) % m;
        g[k] = md(s, m);
    }
    return g;
}

long vp(long n, long p, long cap) {
    if (n == 0) return cap;
    long v = 0;
    while (n % p == 0 && v < cap) n /= p, ++v;
    return v;
}

long ipow(long p, int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) {
        if (r > LONG_MAX / p) throw DomainError("local_solvable: modulus overflow");
        r *= p;
    }
    return r;
}

// least valuation of a 2x2 minor of the Jacobian at x, computed mod p^k (so capped at k)
long minor_valuation(const Form& F1, const Form& F2, const Vec& x, long p, int k) {
    long m = ipow(p, k);
    Vec g1 = grad_mod(F1, x, m), g2 = grad_mod(F2, x, m);
    long best = k;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            long det = md(static_cast<i128>(g1[i]) * g2[j] - static_cast<i128>(g1[j]) * g2[i], m);
            best = std::min(best, vp(det, p, k));
        }
    return best;
}

bool primitive(const Vec& x, long p) {
    for (long c : x)
        if (md(c, p)) return true;
    return false;
}

int default_exponent(long p) { return p == 2 ? 8 : 4; }

// roots mod p of A z^2 + B z + C; all residues when the polynomial vanishes identically
std::vector<long> quad_roots(long A, long B, long C, long p, bool& all) {
    A = md(A, p), B = md(B, p), C = md(C, p);
    all = !A && !B && !C;
    std::vector<long> r;
    if (all) return r;
    if (p <= 64) {
        for (long z = 0; z < p; ++z)
            if (md((static_cast<i128>(A) * z + B) * z + C, p) == 0) r.push_back(z);
        return r;
    }
    if (!A) {
        if (B) r.push_back(md(static_cast<i128>(p - C) * invmod(B, p), p));
        return r;
    }
    long disc = md(static_cast<i128>(B) * B - static_cast<i128>(4) * A % p * C, p);
    auto s = sqrt_mod_prime(disc, p);
    if (!s) return r;
    long inv2a = invmod(md(2 * static_cast<i128>(A), p), p);
    r.push_back(md(static_cast<i128>(md(-B + *s, p)) * inv2a, p));
    if (*s) r.push_back(md(static_cast<i128>(md(-B - *s, p)) * inv2a, p));
    return r;
}

// coefficients of F as a quadratic in x_z with the other coordinates fixed, mod p
void in_variable(const Form& F, Vec x, int z, long p, long& A, long& B, long& C) {
    A = md(F.c[z][z], p);
    i128 b = 0;
    for (int i = 0; i < 4; ++i)
        if (i != z) b += static_cast<i128>(md(F.at(i, z), p)) * md(x[i], p) % p;
    B = md(b, p);
    x[z] = 0;
    C = eval_mod(F, x, p);
}

struct Searcher {
    Form F1, F2;
    long p;
    int K;
    long budget;
    std::vector<long> pk;
    long nodes = 0;
    int deepest = 0;
    bool hit_cap = false;
    bool over_budget = false;
    std::optional<LocalCertificate> found;

    Searcher(const CoverCurve& C, long p, const LocalOptions& opt)
        : F1(to_form(C.F1)), F2(to_form(C.F2)), p(p), K(opt.max_exponent ? opt.max_exponent : default_exponent(p)),
          budget(opt.node_budget) {
        for (int k = 0; k <= K + 1; ++k) pk.push_back(ipow(p, k));
    }

    bool try_cert(const Vec& x, int k) {
        long v = minor_valuation(F1, F2, x, p, k);
        if (2 * v + 1 > k) return false;
        LocalCertificate c;
        c.place = std::to_string(p);
        c.status = LocalStatus::solvable;
        c.modulus = pk[k];
        for (long xi : x) c.witness.push_back(md(xi, pk[k]));
        c.minor_valuation = v;
        c.justification = "Hensel: Jacobian minor of valuation " + std::to_string(v) + " at a solution mod " +
                          std::to_string(p) + "^" + std::to_string(k);
        found = c;
        return true;
    }

    // level 1 in chart j: x_j = 1, earlier coordinates 0, later ones free; calls visit per solution
    bool level1(int j, const std::function<bool(const Vec&)>& visit) {
        std::vector<int> fv;
        for (int i = j + 1; i < 4; ++i) fv.push_back(i);
        Vec x{};
        x[j] = 1;
        if (fv.empty()) {
            if (eval_mod(F1, x, p) == 0 && eval_mod(F2, x, p) == 0) return visit(x);
            return false;
        }
        int z = fv.back();
        long outer = ipow(p, static_cast<int>(fv.size()) - 1);
        for (long idx = 0; idx < outer; ++idx) {
            long t = idx;
            for (size_t a = fv.size() - 1; a-- > 0;) x[fv[a]] = t % p, t /= p;
            long A, B, C;
            bool all1, all2;
            in_variable(F1, x, z, p, A, B, C);
            auto r1 = quad_roots(A, B, C, p, all1);
            std::vector<long> zs;
            if (all1) {
                in_variable(F2, x, z, p, A, B, C);
                auto r2 = quad_roots(A, B, C, p, all2);
                if (all2)
                    for (long v = 0; v < p; ++v) zs.push_back(v);
                else
                    zs = r2;
            } else {
                for (long v : r1) {
                    x[z] = v;
                    if (eval_mod(F2, x, p) == 0) zs.push_back(v);
                }
            }
            for (long v : zs) {
                x[z] = v;
                if (visit(x)) return true;
            }
        }
        return false;
    }

    // solutions mod p^{k+1} above x, a solution mod p^k in chart j
    std::vector<Vec> lift(const Vec& x, int k, int j) {
        long m1 = pk[k + 1];
        long f[2] = {eval_mod(F1, x, m1), eval_mod(F2, x, m1)};
        Vec g[2] = {grad_mod(F1, x, p), grad_mod(F2, x, p)};
        std::vector<int> vars;
        for (int i = 0; i < 4; ++i)
            if (i != j) vars.push_back(i);
        // J delta = -f / p^k mod p, unknowns indexed by vars
        long M[2][4];
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 3; ++c) M[r][c] = g[r][vars[c]];
            M[r][3] = md(-(f[r] / pk[k]), p);
        }
        int piv_col[2] = {-1, -1};
        int rank = 0;
        for (int c = 0; c < 3 && rank < 2; ++c) {
            int r = rank;
            while (r < 2 && M[r][c] == 0) ++r;
            if (r == 2) continue;
            std::swap(M[r], M[rank]);
            long inv = invmod(M[rank][c], p);
            for (int cc = 0; cc < 4; ++cc) M[rank][cc] = md(static_cast<i128>(M[rank][cc]) * inv, p);
            for (int rr = 0; rr < 2; ++rr)
                if (rr != rank && M[rr][c]) {
                    long fct = M[rr][c];
                    for (int cc = 0; cc < 4; ++cc)
                        M[rr][cc] = md(M[rr][cc] - static_cast<i128>(fct) * M[rank][cc], p);
                }
            piv_col[rank++] = c;
        }
        for (int r = rank; r < 2; ++r)
            if (M[r][3]) return {};
        std::vector<int> free_cols;
        for (int c = 0; c < 3; ++c)
            if (c != piv_col[0] && c != piv_col[1]) free_cols.push_back(c);
        std::vector<Vec> out;
        long count = ipow(p, static_cast<int>(free_cols.size()));
        for (long idx = 0; idx < count; ++idx) {
            long delta[3] = {0, 0, 0};
            long t = idx;
            for (int c : free_cols) delta[c] = t % p, t /= p;
            for (int r = 0; r < rank; ++r) {
                i128 s = M[r][3];
                for (int c : free_cols) s -= static_cast<i128>(M[r][c]) * delta[c];
                delta[piv_col[r]] = md(s, p);
            }
            Vec y = x;
            for (int c = 0; c < 3; ++c) y[vars[c]] = md(static_cast<i128>(x[vars[c]]) + static_cast<i128>(delta[c]) * pk[k], m1);
            out.push_back(y);
        }
        return out;
    }

    bool dfs(const Vec& x, int k, int j) {
        deepest = std::max(deepest, k);
        if (nodes > budget) {
            over_budget = true;
            return false;
        }
        if (k == K) {
            hit_cap = true;
            return false;
        }
        auto kids = lift(x, k, j);
        nodes += static_cast<long>(kids.size());
        if (!kids.empty()) deepest = std::max(deepest, k + 1);
        for (auto& y : kids)
            if (try_cert(y, k + 1)) return true;
        for (auto& y : kids)
            if (dfs(y, k + 1, j) || over_budget) return found.has_value();
        return false;
    }

    LocalCertificate run() {
        std::vector<std::pair<Vec, int>> singular;
        for (int j = 0; j < 4 && !found && !over_budget; ++j)
            level1(j, [&](const Vec& x) {
                ++nodes;
                deepest = std::max(deepest, 1);
                if (try_cert(x, 1)) return true;
                if (nodes <= budget)
                    singular.push_back({x, j});
                else
                    over_budget = true;
                return over_budget;
            });
        for (auto& [x, j] : singular) {
            if (found || over_budget) break;
            dfs(x, 1, j);
        }
        if (found) return *found;
        LocalCertificate c;
        c.place = std::to_string(p);
        if (hit_cap || over_budget) {
            c.status = LocalStatus::undetermined;
            c.modulus = pk[K];
            c.justification = over_budget ? "node budget exhausted" : "no Hensel certificate below the depth cap";
            return c;
        }
        c.status = LocalStatus::insolvable;
        c.modulus = pk[deepest + 1];
        c.justification = "no primitive solution mod " + std::to_string(p) + "^" + std::to_string(deepest + 1);
        return c;
    }
};

// all primitive solutions mod p^k by plain enumeration, no Hensel shortcut
long brute_count(const Form& F1, const Form& F2, long p, int k) {
    std::vector<std::pair<Vec, int>> level;
    for (int j = 0; j < 4; ++j) {
        int nfree = 3 - j;
        long count = ipow(p, nfree);
        for (long idx = 0; idx < count; ++idx) {
            Vec x{};
            x[j] = 1;
            long t = idx;
            for (int i = j + 1; i < 4; ++i) x[i] = t % p, t /= p;
            if (eval_mod(F1, x, p) == 0 && eval_mod(F2, x, p) == 0) level.push_back({x, j});
        }
    }
    long m = p;
    for (int depth = 2; depth <= k && !level.empty(); ++depth) {
        long m1 = m * p;
        std::vector<std::pair<Vec, int>> next;
        for (auto& [x, j] : level)
            for (long idx = 0; idx < p * p * p; ++idx) {
                Vec y = x;
                long t = idx;
                for (int i = 0; i < 4; ++i) {
                    if (i == j) continue;
                    y[i] = x[i] + (t % p) * m;
                    t /= p;
                }
                if (eval_mod(F1, y, m1) == 0 && eval_mod(F2, y, m1) == 0) next.push_back({y, j});
            }
        level = std::move(next);
        m = m1;
    }
    return static_cast<long>(level.size());
}

}  // namespace

std::string to_string(LocalStatus s) {
    switch (s) {
        case LocalStatus::solvable: return "solvable";
        case LocalStatus::insolvable: return "insolvable";
        default: return "undetermined";
    }
}

LocalStatus local_status_from_string(const std::string& s) {
    if (s == "solvable") return LocalStatus::solvable;
    if (s == "insolvable") return LocalStatus::insolvable;
    if (s == "undetermined") return LocalStatus::undetermined;
    throw DomainError("unknown local status " + s);
}

namespace {

long vp_int(Integer n, long p) {
    if (n == 0) return LONG_MAX;
    long v = 0;
    while (n % p == 0) n /= p, ++v;
    return v;
}

// Models (a, beta g^2) of the same class for g a product of the primes of Z[i] above 2, 5, q,
// ordered by the p-adic valuation of the pencil discriminant. The cover's own model comes first
// among equals. These covers are isomorphic over Q, so any of them decides solvability.
std::vector<CoverCurve> models_by_discriminant(const CoverCurve& cover, long p) {
    std::vector<Gaussian> primes = {Gaussian(1, 1), Gaussian(2, 1), Gaussian(2, -1)};
    if (mod(cover.q, 4) == 1) {
        Gaussian n = nq(cover.q);
        primes.push_back(n);
        primes.push_back(n.conj());
    } else {
        primes.push_back(Gaussian(cover.q));
    }
    Gaussian beta(cover.b, cover.c);
    std::vector<std::pair<long, CoverCurve>> cand;
    for (unsigned mask = 0; mask < (1u << primes.size()); ++mask) {
        Gaussian g(1);
        for (size_t i = 0; i < primes.size(); ++i)
            if (mask >> i & 1) g = g * primes[i];
        auto C = mask ? cover_curve(cover.cls, cover.q, cover.a, beta * g * g, false) : cover;
        Integer D = pencil_discriminant(C);
        if (D != 0) cand.push_back({vp_int(D, p), std::move(C)});
    }
    std::stable_sort(cand.begin(), cand.end(), [](auto& x, auto& y) { return x.first < y.first; });
    std::vector<CoverCurve> out;
    for (auto& c : cand) out.push_back(std::move(c.second));
    return out;
}

bool same_model(const CoverCurve& A, const CoverCurve& B) { return A.a == B.a && A.b == B.b && A.c == B.c; }

}  // namespace

LocalCertificate local_solvable(const CoverCurve& cover, long p, const LocalOptions& opt) {
    if (p < 2 || !is_prime(Integer(p))) throw DomainError("local_solvable: p must be prime");
    std::optional<LocalCertificate> first;
    for (auto& M : models_by_discriminant(cover, p)) {
        auto c = Searcher(M, p, opt).run();
        if (!same_model(M, cover)) c.model = std::pair(M.a, Gaussian(M.b, M.c));
        if (c.status != LocalStatus::undetermined) return c;
        if (!first) first = c;
    }
    if (!first) throw DomainError("local_solvable: every model of the cover is singular");
    return *first;
}

LocalCertificate real_solvable(const CoverCurve& cover) {
    LocalCertificate c;
    c.place = "inf";
    c.modulus = 0;
    if (cover.a > 0) {
        c.status = LocalStatus::solvable;
        c.justification = "a > 0: take x0 > -q, r = sqrt((x0+q)/a), s+ti a complex square root";
    } else {
        c.status = LocalStatus::insolvable;
        c.justification = "a < 0: x0 + q = a r^2 < 0 has no real point of the twist";
    }
    return c;
}

bool replay_certificate(const CoverCurve& cover, const LocalCertificate& cert, const LocalOptions& opt) {
    if (cert.place == "inf") return real_solvable(cover).status == cert.status;
    long p = std::stol(cert.place);
    if (cert.status == LocalStatus::undetermined) return local_solvable(cover, p, opt).status == cert.status;
    // modulus = p^k
    Integer m = cert.modulus;
    int k = 0;
    while (m > 1 && m % p == 0) m /= p, ++k;
    if (m != 1 || k < 1 || !cert.modulus.fits_slong_p()) return false;
    CoverCurve model = cover;
    if (cert.model) {
        // the searched model must be the same class with beta changed by a square
        auto& [a, beta] = *cert.model;
        if (a != cover.a) return false;
        Gaussian base(cover.b, cover.c);
        Gaussian prod = beta * base.conj();
        Integer nb = base.re * base.re + base.im * base.im;
        if (nb == 0 || prod.re % nb != 0 || prod.im % nb != 0) return false;
        // beta / base = prod / N(base) must be a square in Z[i]
        if (!gaussian_sqrt(Gaussian(prod.re / nb, prod.im / nb))) return false;
        model = cover_curve(cover.cls, cover.q, a, beta, false);
    }
    Form F1 = to_form(model.F1), F2 = to_form(model.F2);
    if (cert.status == LocalStatus::solvable) {
        if (cert.witness.size() != 4) return false;
        Vec x;
        for (int i = 0; i < 4; ++i) {
            if (!cert.witness[i].fits_slong_p()) return false;
            x[i] = cert.witness[i].get_si();
        }
        long mod_ = cert.modulus.get_si();
        if (!primitive(x, p)) return false;
        if (eval_mod(F1, x, mod_) || eval_mod(F2, x, mod_)) return false;
        long v = minor_valuation(F1, F2, x, p, k);
        return v == cert.minor_valuation && 2 * v + 1 <= k;
    }
    return brute_count(F1, F2, p, k) == 0;
}

}  // namespace badred
