#include "badred/fields.hpp"

#include <map>

namespace badred {

FieldDescriptor::FieldDescriptor(long p, int k) : p_(p), k_(k) {
    if (p < 2 || !is_prime(Integer(p))) throw DomainError("field characteristic must be prime");
    if (k < 1) throw DomainError("field degree must be >= 1");
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, k);
    if (q > Integer("1000000000000000000")) throw DomainError("field too large");
    q_ = q.get_si();
    if (k == 1) {
        modulus_ = {0, 1};
        return;
    }
    // least monic irreducible, ordered by c0 + c1 p + ... + c_{k-1} p^{k-1}
    for (long n = 0; n < q_; ++n) {
        PolyFp m(k + 1);
        long t = n;
        for (int i = 0; i < k; ++i) m[i] = t % p, t /= p;
        m[k] = 1;
        if (fp::is_irreducible(m, p)) {
            modulus_ = m;
            return;
        }
    }
    throw DomainError("no irreducible polynomial found");  // unreachable
}

FieldPtr FieldDescriptor::get(long p, int k) {
    static std::mutex mu;
    static std::map<std::pair<long, int>, FieldPtr> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{p, k}];
    if (!slot) slot = std::make_shared<FieldDescriptor>(p, k);
    return slot;
}

std::string FieldDescriptor::name() const {
    if (k_ == 1) return "F_" + std::to_string(p_);
    return "F_" + std::to_string(p_) + "^" + std::to_string(k_) + " = F_" + std::to_string(p_) + "[a]/(" +
           fp::str(modulus_, "a") + ")";
}

void FieldDescriptor::build_tables() const {
    std::call_once(sqrt_once_, [this] {
        auto self = std::shared_ptr<const FieldDescriptor>(this, [](const FieldDescriptor*) {});
        square_.assign(q_, 0);
        sqrt_.assign(q_, -1);
        for (long i = 0; i < q_; ++i) {
            auto x = FFElem::from_index(self, i);
            long s = (x * x).index();
            square_[i] = s;
            if (sqrt_[s] < 0) sqrt_[s] = i;
        }
    });
}

long FieldDescriptor::sqrt_index(long index) const {
    if (q_ > kMaxTableField) throw DomainError("sqrt table: field too large");
    build_tables();
    return sqrt_[index];
}

long FieldDescriptor::square_index(long index) const {
    if (q_ > kMaxTableField) throw DomainError("square table: field too large");
    build_tables();
    return square_[index];
}

FiniteFieldElement::FiniteFieldElement(FieldPtr F, long c0) : F_(std::move(F)) {
    long r = mod(c0, F_->p());
    if (r) c_ = {r};
}

FiniteFieldElement::FiniteFieldElement(FieldPtr F, PolyFp coords) : F_(std::move(F)) {
    long p = F_->p();
    for (auto& c : coords) c = mod(c, p);
    c_ = fp::trim(std::move(coords));
    if (fp::deg(c_) >= F_->k()) c_ = fp::rem(c_, F_->modulus(), p);
}

FiniteFieldElement FiniteFieldElement::from_index(FieldPtr F, long index) {
    PolyFp c(F->k());
    long p = F->p();
    for (int i = 0; i < F->k(); ++i) c[i] = index % p, index /= p;
    FiniteFieldElement r;
    r.F_ = std::move(F);
    r.c_ = fp::trim(std::move(c));
    return r;
}

long FiniteFieldElement::index() const {
    long r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * F_->p() + c_[i];
    return r;
}

std::vector<long> FiniteFieldElement::coordinate_vector() const {
    std::vector<long> v(c_);
    v.resize(F_->k(), 0);
    return v;
}

std::string FiniteFieldElement::str() const {
    if (F_->k() == 1) return std::to_string(c_.empty() ? 0 : c_[0]);
    return c_.empty() ? "0" : fp::str(c_, "a");
}

namespace {

void check_same(const FFElem& a, const FFElem& b) {
    if (a.field() != b.field() &&
        (!a.field() || !b.field() || a.field()->p() != b.field()->p() || a.field()->k() != b.field()->k()))
        throw DomainError("finite field elements from different fields");
}

}  // namespace

FFElem operator+(const FFElem& a, const FFElem& b) {
    check_same(a, b);
    FFElem r;
    r.F_ = a.F_;
    r.c_ = fp::add(a.c_, b.c_, a.F_->p());
    return r;
}

FFElem operator-(const FFElem& a, const FFElem& b) {
    check_same(a, b);
    FFElem r;
    r.F_ = a.F_;
    r.c_ = fp::sub(a.c_, b.c_, a.F_->p());
    return r;
}

FFElem operator-(const FFElem& a) {
    FFElem r;
    r.F_ = a.F_;
    r.c_ = fp::sub({}, a.c_, a.F_->p());
    return r;
}

FFElem operator*(const FFElem& a, const FFElem& b) {
    check_same(a, b);
    FFElem r;
    r.F_ = a.F_;
    long p = a.F_->p();
    if (a.F_->k() == 1) {
        if (!a.c_.empty() && !b.c_.empty()) {
            long v = static_cast<long>(static_cast<__int128>(a.c_[0]) * b.c_[0] % p);
            if (v) r.c_ = {v};
        }
        return r;
    }
    r.c_ = fp::mul(a.c_, b.c_, p);
    if (fp::deg(r.c_) >= a.F_->k()) r.c_ = fp::rem(r.c_, a.F_->modulus(), p);
    return r;
}

FFElem FiniteFieldElement::pow(Integer e) const {
    if (e < 0) return inverse().pow(-e);
    FFElem r(F_, 1);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = r * r;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = r * *this;
    }
    return r;
}

FFElem FiniteFieldElement::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero in " + F_->name());
    if (F_->k() == 1) return FFElem(F_, invmod(c_[0], F_->p()));
    return pow(Integer(F_->size() - 2));
}

FFElem operator/(const FFElem& a, const FFElem& b) { return a * b.inverse(); }

std::optional<FFElem> ff_sqrt(const FFElem& x) {
    const auto& F = x.field();
    if (F->size() <= kMaxTableField) {
        long s = F->sqrt_index(x.index());
        if (s < 0) return std::nullopt;
        return FFElem::from_index(F, s);
    }
    if (F->k() == 1) {
        auto r = sqrt_mod_prime(x.index(), F->p());
        if (!r) return std::nullopt;
        return FFElem(F, *r);
    }
    throw DomainError("ff_sqrt: field too large");
}

FFElem ff_eval(const PolyFp& g, const FFElem& x) {
    FFElem r(x.field(), 0);
    for (size_t i = g.size(); i-- > 0;) r = r * x + FFElem(x.field(), g[i]);
    return r;
}

std::vector<FFElem> ff_roots(const PolyFp& g, const FieldPtr& F) {
    std::vector<FFElem> out;
    if (fp::deg(g) == 1 && F->k() == 1) {
        out.emplace_back(F, mod(-g[0] * invmod(g[1], F->p()), F->p()));
        return out;
    }
    if (F->size() > kMaxTableField) throw DomainError("ff_roots: field too large");
    for (long i = 0; i < F->size(); ++i) {
        auto x = FFElem::from_index(F, i);
        if (ff_eval(g, x).is_zero()) out.push_back(x);
    }
    return out;
}

FFElem ff_from_rational(const Rational& x, const FieldPtr& F) {
    Integer p = F->p();
    Integer d = mod(Integer(x.get_den()), p);
    if (d == 0) throw NonIntegral("rational " + x.get_str() + " not integral at " + p.get_str(),
                                  valuation(x, F->p()));
    long n = mod(Integer(x.get_num()), p).get_si();
    return FFElem(F, static_cast<long>(static_cast<__int128>(n) * invmod(d.get_si(), F->p()) % F->p()));
}

}  // namespace badred
