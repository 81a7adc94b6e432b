#include "badred/fields.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace badred {

namespace {

Rational det(std::vector<std::vector<Rational>> m) {
    size_t n = m.size();
    Rational d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rational t = m[r][c] / m[c][c];
            for (size_t k = c; k < n; ++k) m[r][k] -= t * m[c][k];
        }
    }
    return d;
}

// solves m x = b, m square and invertible
std::vector<Rational> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> b) {
    size_t n = m.size();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) throw DomainError("singular linear system");
        std::swap(m[piv], m[c]);
        std::swap(b[piv], b[c]);
        for (size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational t = m[r][c] / m[c][c];
            for (size_t k = c; k < n; ++k) m[r][k] -= t * m[c][k];
            b[r] -= t * b[c];
        }
    }
    for (size_t i = 0; i < n; ++i) b[i] /= m[i][i];
    return b;
}

Integer eval_int(const std::vector<Integer>& f, const Integer& x) {
    Integer r = 0;
    for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

bool has_integer_root(const std::vector<Integer>& f) {
    if (f[0] == 0) return true;
    // roots of a monic integer polynomial are bounded by 1 + max |coefficient|
    Integer bound = 0;
    for (auto& c : f) bound = std::max(bound, Integer(abs(c)));
    bound += 1;
    if (bound > 1000000) {
        // fall back to divisors of the constant term only when it is small
        if (abs(f[0]) > kFactorLimit) throw DomainError("cannot certify irreducibility");
        auto fac = factor_small(f[0]);
        std::vector<Integer> divs = {1};
        for (auto& [p, e] : fac.factors) {
            size_t s = divs.size();
            Integer pe = 1;
            for (unsigned i = 0; i < e; ++i) {
                pe *= p;
                for (size_t j = 0; j < s; ++j) divs.push_back(divs[j] * pe);
            }
        }
        for (auto& d : divs)
            if (eval_int(f, d) == 0 || eval_int(f, -d) == 0) return true;
        return false;
    }
    long b = bound.get_si();
    for (long x = -b; x <= b; ++x)
        if (eval_int(f, Integer(x)) == 0) return true;
    return false;
}

void certify_irreducible(const std::vector<Integer>& f, const Integer& disc) {
    int n = static_cast<int>(f.size()) - 1;
    if (n == 1) return;
    if (disc == 0) throw DomainError("defining polynomial is not squarefree");
    if (has_integer_root(f)) throw DomainError("defining polynomial has a rational root");
    if (n <= 3) return;
    // degree patterns: a rational factor of degree d needs d to be a sum of local degrees at every p
    std::set<int> possible;
    for (int d = 1; d < n; ++d) possible.insert(d);
    for (long p : primes_up_to(2000)) {
        if (mod(disc, Integer(p)) == 0) continue;
        auto fac = poly_factor_mod(f, p);
        std::vector<bool> reach(n + 1, false);
        reach[0] = true;
        for (auto& [g, e] : fac)
            for (int s = n; s >= 0; --s)
                if (reach[s] && s + fp::deg(g) <= n) reach[s + fp::deg(g)] = true;
        for (auto it = possible.begin(); it != possible.end();)
            it = reach[*it] ? std::next(it) : possible.erase(it);
        if (possible.empty()) return;
    }
    throw DomainError("cannot certify irreducibility of the defining polynomial");
}

std::string rat_str(const Rational& x) { return x.get_str(); }

}  // namespace

NumberField::NumberField(std::vector<Integer> f, std::string name) : f_(std::move(f)), name_(std::move(name)) {}

NumberFieldPtr NumberField::make(std::vector<Integer> f, std::string name) {
    while (f.size() > 1 && f.back() == 0) f.pop_back();
    if (f.size() < 2 || f.back() != 1) throw DomainError("defining polynomial must be monic of degree >= 1");
    if (f.size() > 9) throw DomainError("number field degree above 8 unsupported");
    auto K = std::make_shared<NumberField>(f, "");
    certify_irreducible(f, K->discriminant());
    if (name.empty()) {
        std::string s;
        for (size_t i = f.size(); i-- > 0;) {
            if (f[i] == 0) continue;
            Integer c = f[i];
            bool neg = c < 0;
            if (neg) c = -c;
            s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            if (i == 0 || c != 1) s += c.get_str();
            if (i > 0) {
                if (c != 1) s += "*";
                s += "t";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        name = "Q[t]/(" + s + ")";
    }
    K->name_ = name;
    return K;
}

NumberFieldPtr NumberField::rationals() {
    static const NumberFieldPtr Q = std::make_shared<NumberField>(std::vector<Integer>{0, 1}, "Q");
    return Q;
}

NumberFieldPtr NumberField::quadratic(const Integer& d) {
    if (is_square(d)) throw DomainError("quadratic field: d is a square");
    return make({-d, 0, 1}, "Q(sqrt(" + d.get_str() + "))");
}

Integer NumberField::discriminant() const {
    int n = degree();
    if (n == 1) return 1;
    // Sylvester matrix of f and f'
    std::vector<Integer> df(n);
    for (int i = 1; i <= n; ++i) df[i - 1] = f_[i] * i;
    int sz = 2 * n - 1;
    std::vector<std::vector<Rational>> m(sz, std::vector<Rational>(sz, 0));
    for (int r = 0; r < n - 1; ++r)
        for (int i = 0; i <= n; ++i) m[r][r + i] = f_[n - i];
    for (int r = 0; r < n; ++r)
        for (int i = 0; i < n; ++i) m[n - 1 + r][r + i] = df[n - 1 - i];
    Rational res = det(m);
    if (((n * (n - 1)) / 2) % 2) res = -res;
    return Integer(res.get_num());
}

NumberFieldElement::NumberFieldElement(NumberFieldPtr K, Rational c0) : K_(std::move(K)) {
    c_.assign(K_->degree(), 0);
    c_[0] = c0;
}

NumberFieldElement::NumberFieldElement(NumberFieldPtr K, std::vector<Rational> coords) : K_(std::move(K)) {
    size_t n = K_->degree();
    if (coords.size() > n) {
        // reduce a longer polynomial modulo f
        const auto& f = K_->poly();
        for (size_t i = coords.size(); i-- > n;) {
            Rational c = coords[i];
            if (c == 0) continue;
            for (size_t j = 0; j < n; ++j) coords[i - n + j] -= c * f[j];
            coords[i] = 0;
        }
    }
    coords.resize(n, 0);
    c_ = std::move(coords);
}

NumberFieldElement NumberFieldElement::generator(NumberFieldPtr K) {
    if (K->degree() == 1) return NumberFieldElement(K, Rational(-K->poly()[0]));
    std::vector<Rational> c(K->degree(), 0);
    c[1] = 1;
    return NumberFieldElement(K, c);
}

bool NumberFieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

bool NumberFieldElement::is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& x) { return x == 0; });
}

Integer NumberFieldElement::denominator() const {
    Integer d = 1;
    for (auto& c : c_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
    return d;
}

namespace {

void check_same(const NFElem& a, const NFElem& b) {
    if (a.field() != b.field() && (!a.field() || !b.field() || a.field()->poly() != b.field()->poly()))
        throw DomainError("number field elements from different fields");
}

std::vector<std::vector<Rational>> mult_matrix(const NFElem& x) {
    int n = x.field()->degree();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    NFElem t = x;
    NFElem th = NFElem::generator(x.field());
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) m[i][j] = t.coords()[i];
        t = t * th;
    }
    return m;
}

}  // namespace

NFElem operator+(const NFElem& a, const NFElem& b) {
    check_same(a, b);
    NFElem r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

NFElem operator-(const NFElem& a, const NFElem& b) {
    check_same(a, b);
    NFElem r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
}

NFElem operator-(const NFElem& a) {
    NFElem r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

NFElem operator*(const NFElem& a, const NFElem& b) {
    check_same(a, b);
    size_t n = a.c_.size();
    if (n == 1) return NFElem(a.K_, Rational(a.c_[0] * b.c_[0]));
    std::vector<Rational> prod(2 * n - 1, 0);
    for (size_t i = 0; i < n; ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) prod[i + j] += a.c_[i] * b.c_[j];
    }
    return NFElem(a.K_, std::move(prod));
}

NFElem NumberFieldElement::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero in " + K_->name());
    int n = K_->degree();
    if (n == 1) return NFElem(K_, Rational(1 / c_[0]));
    std::vector<Rational> e(n, 0);
    e[0] = 1;
    return NFElem(K_, solve(mult_matrix(*this), e));
}

NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

Rational NumberFieldElement::norm() const {
    if (K_->degree() == 1) return c_[0];
    return det(mult_matrix(*this));
}

std::string NumberFieldElement::str() const {
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        std::string term = rat_str(abs(c_[i]));
        if (i > 0) {
            term = (abs(c_[i]) == 1 ? "" : term + "*") + "t" + (i > 1 ? "^" + std::to_string(i) : "");
        }
        if (s.empty())
            s = (c_[i] < 0 ? "-" : "") + term;
        else
            s += (c_[i] < 0 ? " - " : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

std::string PrimeOfField::str() const {
    return "(" + std::to_string(p) + ", " + fp::str(g, "t") + ")";
}

std::vector<PrimeOfField> primes_above(const NumberFieldPtr& K, long p) {
    if (!is_prime(Integer(p))) throw DomainError("primes_above: p not prime");
    const auto& f = K->poly();
    auto fac = poly_factor_mod(f, p);
    // Dedekind criterion: p divides [O_K : Z[t]] iff some repeated factor g divides (prod g^e - f)/p
    std::vector<Integer> G = {1};
    for (auto& [g, e] : fac)
        for (int i = 0; i < e; ++i) {
            std::vector<Integer> r(G.size() + g.size() - 1, 0);
            for (size_t a = 0; a < G.size(); ++a)
                for (size_t b = 0; b < g.size(); ++b) r[a + b] += G[a] * g[b];
            G = r;
        }
    std::vector<Integer> F(std::max(G.size(), f.size()), 0);
    for (size_t i = 0; i < F.size(); ++i) {
        Integer d = (i < G.size() ? G[i] : Integer(0)) - (i < f.size() ? f[i] : Integer(0));
        F[i] = d / p;
    }
    PolyFp Fbar = fp::reduce(F, p);
    std::vector<PrimeOfField> out;
    for (auto& [g, e] : fac) {
        if (e >= 2 && (Fbar.empty() || fp::rem(Fbar, g, p).empty()))
            throw UnsupportedPrime("unsupported prime " + std::to_string(p) + " in " + K->name() +
                                   ": p divides the index of Z[t]");
        out.push_back({K, p, g, fp::deg(g), e});
    }
    return out;
}

namespace {

// Hensel lift of the simple root r0 of f mod p to a root mod p^N
Integer hensel_root(const std::vector<Integer>& f, long r0, long p, long N) {
    Integer pN;
    mpz_ui_pow_ui(pN.get_mpz_t(), p, N);
    std::vector<Integer> df(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) df[i - 1] = f[i] * static_cast<long>(i);
    Integer a = r0;
    for (int it = 0; it < 200; ++it) {
        Integer v = mod(eval_int(f, a), pN);
        if (v == 0) return a;
        Integer d = mod(eval_int(df, a), pN), inv;
        if (!mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), pN.get_mpz_t()))
            throw UnsupportedPrime("Hensel lift: root is not simple");
        a = mod(a - v * inv, pN);
    }
    throw UnsupportedPrime("Hensel lift did not converge");
}

Integer eval_at(const std::vector<Integer>& y, const Integer& a, const Integer& m) {
    Integer r = 0;
    for (size_t i = y.size(); i-- > 0;) r = mod(r * a + y[i], m);
    return r;
}

}  // namespace

long nf_valuation(const NFElem& x, const PrimeOfField& P) {
    if (x.is_zero()) return kInfiniteValuation;
    auto all = primes_above(P.K, P.p);
    if (all.size() == 1) {
        long v = valuation(x.norm(), P.p);
        if (v % P.f_deg) throw DomainError("nf_valuation: norm valuation not divisible by residue degree");
        return v / P.f_deg;
    }
    if (P.e == 1 && P.f_deg == 1) {
        Integer D = x.denominator();
        std::vector<Integer> y;
        for (auto& c : x.coords()) y.push_back(Integer(c * D));
        // v_P(y) <= v_p(N(y)) since P has residue degree 1
        Rational nrm = x.norm();
        for (int i = 0; i < P.K->degree(); ++i) nrm *= D;
        long N = valuation(Integer(nrm.get_num()), P.p) + 1;
        Integer pN;
        mpz_ui_pow_ui(pN.get_mpz_t(), P.p, N);
        long r0 = mod(-P.g[0], P.p);
        Integer a = hensel_root(P.K->poly(), r0, P.p, N);
        Integer val = eval_at(y, a, pN);
        if (val == 0) throw DomainError("nf_valuation: precision exhausted");  // unreachable
        return valuation(val, P.p) - valuation(D, P.p);
    }
    throw UnsupportedPrime("nf_valuation unsupported at " + P.str() + " in " + P.K->name());
}

FFElem residue_under(const NFElem& x, const PrimeOfField& P, const FFElem& root) {
    const auto& F = root.field();
    Integer D = x.denominator();
    if (mod(D, Integer(P.p)) != 0) {
        FFElem r(F, 0);
        const auto& c = x.coords();
        for (size_t i = c.size(); i-- > 0;) r = r * root + ff_from_rational(c[i], F);
        return r;
    }
    long v = nf_valuation(x, P);
    if (v < 0) throw NonIntegral(x.str() + " is not integral at " + P.str(), v);
    if (P.e == 1 && P.f_deg == 1) {
        std::vector<Integer> y;
        for (auto& c : x.coords()) y.push_back(Integer(c * D));
        long m = valuation(D, P.p);
        Integer pN;
        mpz_ui_pow_ui(pN.get_mpz_t(), P.p, m + 1);
        Integer a = hensel_root(P.K->poly(), root.index(), P.p, m + 1);
        Integer val = eval_at(y, a, pN);
        Integer pm;
        mpz_ui_pow_ui(pm.get_mpz_t(), P.p, m);
        Integer num = val / pm, den = D / pm;
        return ff_from_rational(make_rational(num, den), F);
    }
    throw UnsupportedPrime("residue map: denominator divisible by " + std::to_string(P.p) + " at " + P.str());
}

FFElem residue_map(const NFElem& x, const PrimeOfField& P) {
    auto F = FieldDescriptor::get(P.p, P.f_deg);
    auto roots = ff_roots(P.g, F);
    if (roots.empty()) throw DomainError("residue map: g has no root in its residue field");
    return residue_under(x, P, roots.front());
}

std::vector<FFElem> residue_embeddings(const NFElem& x, const PrimeOfField& P, const FieldPtr& F) {
    if (F->p() != P.p || F->k() % P.f_deg) throw DomainError("residue field does not embed");
    std::vector<FFElem> out;
    for (auto& r : ff_roots(P.g, F)) out.push_back(residue_under(x, P, r));
    return out;
}

}  // namespace badred
