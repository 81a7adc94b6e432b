#include "badred/modcurves.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>

namespace badred {

namespace {

void check(VerifyReport& r, std::string name, bool ok, std::string detail = "") {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
    r.passed = r.passed && ok;
}

std::vector<long> prime_divisors(const Integer& n) {
    std::vector<long> out;
    for (auto& [q, e] : factor_small(n).factors) out.push_back(q.get_si());
    return out;
}

long coef(const std::vector<Integer>& a, size_t i) { return i < a.size() ? a[i].get_si() : 0; }

NFElem nf_poly(const std::vector<Integer>& a, const NFElem& x) {
    NFElem r(x.field(), Rational(0));
    for (size_t i = a.size(); i-- > 0;) r = r * x + NFElem(x.field(), Rational(a[i]));
    return r;
}

void verify_genus1(const ModularCurveRecord& rec, VerifyReport& r) {
    const auto& E = rec.elliptic();
    bool integral = true;
    for (auto& a : E.coefficients()) integral = integral && a.get_den() == 1;
    check(r, "integral model", integral, E.str());
    if (!integral) return;
    if (rec.label == "X0_20")
        check(r, "model y^2 = x^3+x^2+4x+4", E.str() == "[0,1,0,4,4]", E.str());
    r.bad_primes = prime_divisors(E.disc.get_num());
    bool bad_ok = true;
    for (long q : r.bad_primes) bad_ok = bad_ok && rec.level % q == 0;
    check(r, "bad primes divide level", bad_ok, "disc " + E.disc.get_str());

    auto T = rational_torsion(E);
    r.torsion_order = T.order;
    if (rec.torsion_order)
        check(r, "torsion order", T.order == rec.torsion_order,
              "computed " + std::to_string(T.order) + ", declared " + std::to_string(rec.torsion_order));
    check(r, "torsion order = rational cusp count", T.order == rec.rational_cusp_count,
          std::to_string(T.order) + " vs " + std::to_string(rec.rational_cusp_count));

    std::vector<RationalPoint> rational_cusps;
    for (auto& c : rec.cusps) {
        auto EK = base_change(E, c.field);
        bool on = EK.contains(c.point);
        check(r, "cusp on curve: " + c.orbit, on, c.point.str());
        if (!on) continue;
        long ord = EK.order(c.point, 120);
        check(r, "cusp is torsion: " + c.orbit, ord > 0, "order " + std::to_string(ord));
        if (c.rational)
            rational_cusps.push_back(c.point.inf ? RationalPoint::infinity()
                                                 : RationalPoint::affine(c.point.x.coords()[0],
                                                                         c.point.y.coords()[0]));
    }
    // rational cusps are exactly the rational torsion
    bool same = rational_cusps.size() == T.points.size();
    for (auto& P : rational_cusps)
        same = same && std::find(T.points.begin(), T.points.end(), P) != T.points.end();
    check(r, "rational cusps = rational torsion", same);
}

void verify_genus2(const ModularCurveRecord& rec, VerifyReport& r) {
    const auto& C = *rec.hyperelliptic;
    bool good = true;
    std::string bad;
    for (long q : primes_up_to(50)) {
        if (rec.level % q == 0) continue;
        if (!hyperelliptic_good_reduction(C, q)) good = false, bad += std::to_string(q) + " ";
    }
    check(r, "good reduction away from level (p <= 50)", good, bad);
    long h3 = coef(C.h, 3), g6 = coef(C.g, 6);
    for (auto& c : rec.cusps) {
        if (c.infinity) {
            bool on = c.branch * c.branch + h3 * c.branch - g6 == 0;
            check(r, "cusp on curve: " + c.orbit, on, "branch " + std::to_string(c.branch));
            continue;
        }
        const auto& x = c.point.x;
        const auto& y = c.point.y;
        bool on = y * y + nf_poly(C.h, x) * y == nf_poly(C.g, x);
        check(r, "cusp on curve: " + c.orbit, on, c.point.str());
    }
}

}  // namespace

VerifyReport registry_verify(const ModularCurveRecord& rec) {
    VerifyReport r;
    r.label = rec.label;
    long total = 0, rational = 0;
    for (auto& c : rec.cusps) {
        int d = c.field->degree();
        check(r, "rational flag: " + c.orbit, c.rational == (d == 1));
        check(r, "orbit size = field degree: " + c.orbit, c.orbit_size == d,
              std::to_string(c.orbit_size) + " vs " + std::to_string(d));
        total += c.orbit_size;
        rational += c.rational;
    }
    check(r, "cusp count", total == rec.cusp_count,
          std::to_string(total) + " vs declared " + std::to_string(rec.cusp_count));
    check(r, "rational cusp count", rational == rec.rational_cusp_count,
          std::to_string(rational) + " vs declared " + std::to_string(rec.rational_cusp_count));
    check(r, "at most 16 rational cusps", rational <= 16);
    try {
        if (rec.genus == 1)
            verify_genus1(rec, r);
        else
            verify_genus2(rec, r);
    } catch (const DomainError& e) {
        check(r, "arithmetic", false, e.what());
    }
    return r;
}

CuspReduction cusp_reduction(const ModularCurveRecord& rec, long p, int k) {
    const auto& E = rec.elliptic();
    if (!is_prime(Integer(p))) throw DomainError("p = " + std::to_string(p) + " is not prime");
    if (!has_good_reduction(E, p))
        throw BadReduction(rec.label + " has bad reduction at " + std::to_string(p), p);
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, k);
    if (q > kMaxEnumeration) throw DomainError("cusp_reduction: p^k exceeds 10^6");
    auto F = FieldDescriptor::get(p, k);
    CuspReduction R{F, reduce_curve(E, F), {}, {}};
    for (auto& c : rec.cusps) {
        if (c.infinity) {
            R.images.push_back({FFPoint::infinity(), c.orbit, "infinity", c.rational});
            continue;
        }
        auto EK = base_change(E, c.field);
        for (auto& P : primes_above(c.field, p)) {
            if (k % P.f_deg) continue;
            for (auto& root : ff_roots(P.g, F)) {
                auto pt = reduce_point(c.point, P, root);
                if (!R.curve.contains(pt))
                    throw DomainError("cusp " + c.orbit + " reduces off the curve at " + P.str());
                R.images.push_back({pt, c.orbit, P.str(), c.rational});
            }
        }
    }
    for (auto& im : R.images) R.points.push_back(im.point);
    std::sort(R.points.begin(), R.points.end(), point_less);
    R.points.erase(std::unique(R.points.begin(), R.points.end()), R.points.end());
    return R;
}

std::vector<FFPoint> cusp_reduction_set(const std::string& label, long p, int k) {
    return cusp_reduction(registry_get(label), p, k).points;
}

WeakerCertificate weaker_holds(const ModularCurveRecord& rec, long p, int k) {
    auto R = cusp_reduction(rec, p, k);
    WeakerCertificate c;
    c.label = rec.label;
    c.p = p;
    c.k = k;
    c.field = R.field->name();
    c.points = enumerate_points(R.curve).points;
    c.cusp_points = R.points;
    std::set_difference(c.points.begin(), c.points.end(), c.cusp_points.begin(), c.cusp_points.end(),
                        std::back_inserter(c.missing), point_less);
    c.holds = c.points == c.cusp_points;
    return c;
}

StrongerCertificate stronger_geometric(const ModularCurveRecord& rec, long p) {
    auto w = weaker_holds(rec, p, 1);
    auto R = cusp_reduction(rec, p, 1);
    StrongerCertificate s;
    s.label = rec.label;
    s.p = p;
    s.weaker = w.holds;
    s.x_surjective = x_image_full(R.curve);
    for (auto& im : R.images)
        if (im.rational) s.rational_cusp_points.push_back(im.point);
    std::sort(s.rational_cusp_points.begin(), s.rational_cusp_points.end(), point_less);
    s.rational_cusp_points.erase(std::unique(s.rational_cusp_points.begin(), s.rational_cusp_points.end()),
                                 s.rational_cusp_points.end());
    s.rational_cusps_cover = s.rational_cusp_points == w.points;
    s.holds = s.weaker && s.x_surjective && s.rational_cusps_cover;
    if (p == 2) s.note = "x-line surjectivity at p = 2 checked fibre by fibre on the long Weierstrass model";
    return s;
}

std::vector<Table1Row> table1(long max_p, int jobs) { return table1(Registry::embedded(), max_p, jobs); }

std::vector<Table1Row> table1(const Registry& reg, long max_p, int jobs) {
    if (max_p < 13) throw DomainError("table1: max prime must be at least 13");
    if (max_p > 1000) throw DomainError("table1: max prime must be at most 1000");
    struct Task {
        size_t row;
        long p;
        bool weaker = false, stronger = false;
    };
    std::vector<Table1Row> rows;
    std::vector<Task> tasks;
    for (long N : kTable1Levels) {
        const auto& rec = reg.get("X0_" + std::to_string(N));
        rows.push_back({N, {}, {}});
        for (long p : primes_up_to(max_p))
            if (has_good_reduction(rec.elliptic(), p)) tasks.push_back({rows.size() - 1, p});
    }
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i; (i = next++) < tasks.size();) {
            auto& t = tasks[i];
            const auto& rec = reg.get("X0_" + std::to_string(rows[t.row].level));
            t.weaker = weaker_holds(rec, t.p, 1).holds;
            t.stronger = t.weaker && stronger_geometric(rec, t.p).holds;
        }
    };
    jobs = std::clamp(jobs, 1, 64);
    std::vector<std::thread> th;
    for (int j = 1; j < jobs; ++j) th.emplace_back(work);
    work();
    for (auto& t : th) t.join();
    for (auto& t : tasks) {
        if (t.weaker) rows[t.row].weaker.push_back(t.p);
        if (t.stronger) rows[t.row].stronger.push_back(t.p);
    }
    return rows;
}

bool split_check(const NumberFieldPtr& K, long p) {
    for (auto& P : primes_above(K, p))
        if (P.e != 1 || P.f_deg != 1) return false;
    return true;
}

GeneratorCertificate certify_generators(const ModularCurveRecord& rec, const NumberFieldPtr& K,
                                        const std::vector<NFPoint>& gens, long p,
                                        const std::vector<NFPoint>& torsion) {
    const auto& E = rec.elliptic();
    auto EK = base_change(E, K);
    for (auto& P : gens)
        if (!EK.contains(P)) throw DomainError("certify_generators: " + P.str() + " is not on " + E.str());
    for (auto& P : torsion)
        if (!EK.contains(P)) throw DomainError("certify_generators: " + P.str() + " is not on " + E.str());
    GeneratorCertificate g;
    g.label = rec.label;
    g.p = p;
    g.holds = true;
    g.common_cusp = true;
    for (auto& prime : primes_above(K, p)) {
        auto R = cusp_reduction(rec, p, prime.f_deg);
        auto root = ff_roots(prime.g, R.field).front();
        PrimeCertificate pc;
        pc.prime = prime.str();
        pc.cusp_counts.push_back(static_cast<long>(R.points.size()));
        auto is_cusp = [&](const FFPoint& Q) {
            return std::binary_search(R.points.begin(), R.points.end(), Q, point_less);
        };
        std::optional<FFPoint> first;
        for (auto& P : gens) {
            auto Q = reduce_point(P, prime, root);
            pc.images.push_back(Q.str());
            pc.gens_ok = pc.gens_ok && is_cusp(Q);
            if (!first) first = Q;
            pc.common_cusp = pc.common_cusp && Q == *first;
        }
        pc.common_cusp = pc.common_cusp && pc.gens_ok;
        for (auto& P : torsion) pc.torsion_ok = pc.torsion_ok && is_cusp(reduce_point(P, prime, root));
        g.holds = g.holds && pc.gens_ok;
        g.common_cusp = g.common_cusp && pc.common_cusp;
        g.primes.push_back(std::move(pc));
    }
    if (gens.empty()) g.note = "no generators supplied; the condition holds vacuously";
    return g;
}

HyperellipticCuspReport hyperelliptic_cusp_report(const ModularCurveRecord& rec, long p) {
    if (!rec.hyperelliptic) throw DomainError(rec.label + " is not a genus 2 record");
    const auto& C = *rec.hyperelliptic;
    HyperellipticCuspReport r;
    r.p = p;
    r.count = hyperelliptic_count(C, p);  // throws on bad reduction
    std::set<HyperellipticPoint> pts;
    PolyFp h = fp::reduce(C.h, p), g = fp::reduce(C.g, p);
    for (long x = 0; x < p; ++x)
        for (long y = 0; y < p; ++y)
            if (mod(y * y + fp::eval(h, x, p) * y - fp::eval(g, x, p), p) == 0) pts.insert({false, x, y});
    long h3 = coef(C.h, 3), g6 = coef(C.g, 6);
    for (long b = 0; b < p; ++b)
        if (mod(b * b + h3 * b - g6, p) == 0) pts.insert({true, 0, b});
    if (static_cast<long>(pts.size()) != r.count)
        throw DomainError("hyperelliptic point enumeration disagrees with the count at " + std::to_string(p));
    std::set<HyperellipticPoint> images;
    for (auto& c : rec.cusps) {
        if (!c.rational) continue;
        if (c.infinity) {
            images.insert({true, 0, mod(c.branch, p)});
            continue;
        }
        auto F = FieldDescriptor::get(p);
        long x = ff_from_rational(c.point.x.coords()[0], F).index();
        long y = ff_from_rational(c.point.y.coords()[0], F).index();
        images.insert({false, x, y});
    }
    r.rational_cusp_images = static_cast<long>(images.size());
    r.rational_cusps_cover = images == pts;
    return r;
}

}  // namespace badred
