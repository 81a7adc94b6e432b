#pragma once

// Property checks shared by the property suite and the acceptance binary.

#include "badred/cli.hpp"
#include "oracles.hpp"

#include <cmath>
#include <set>
#include <string>

namespace props {

using namespace badred;

struct Outcome {
    long checked = 0;
    long failed = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failed++ == 0) first_failure = what;
    }
    bool ok() const { return failed == 0 && checked > 0; }
};

inline bool within_hasse(long n, long q) {
    long d = n - (q + 1);
    return static_cast<double>(d) * d <= 4.0 * q;
}

// random curves over random F_{p^k} and the registry curves at their good primes
inline Outcome hasse_bound(std::uint64_t seed = 1, int trials = 150) {
    Outcome o;
    oracle::Gen gen(seed);
    for (int t = 0; t < trials; ++t) {
        long p = gen.prime_in(2, 97);
        int k = p < 10 ? static_cast<int>(gen.range(1, 3)) : 1;
        auto a = gen.curve(20);
        if (oracle::discriminant(a) == 0 || oracle::discriminant(a) % p == 0) continue;
        auto F = FieldDescriptor::get(p, k);
        auto n = enumerate_points(reduce_curve(rational_curve(a), F)).order();
        o.check(within_hasse(n, F->size()), "random curve over F_" + std::to_string(F->size()));
        if (k == 1) o.check(n == oracle::count_points(a, p), "count vs oracle at " + std::to_string(p));
    }
    for (auto& rec : Registry::embedded().records()) {
        for (long p : primes_up_to(50)) {
            if (rec.curve && has_good_reduction(*rec.curve, p)) {
                auto n = enumerate_points(reduce_curve(*rec.curve, FieldDescriptor::get(p))).order();
                o.check(within_hasse(n, p), rec.label + " at " + std::to_string(p));
            }
            if (rec.hyperelliptic && hyperelliptic_good_reduction(*rec.hyperelliptic, p)) {
                long n = hyperelliptic_count(*rec.hyperelliptic, p);
                // genus 2: |N - (p+1)| <= 4 sqrt p
                long d = n - (p + 1);
                o.check(static_cast<double>(d) * d <= 16.0 * p, rec.label + " at " + std::to_string(p));
            }
        }
    }
    return o;
}

// rational torsion reduces injectively at odd good primes p <= 13
inline Outcome torsion_injectivity() {
    Outcome o;
    for (auto& rec : Registry::embedded().records()) {
        if (!rec.curve) continue;
        auto T = rational_torsion(*rec.curve);
        for (long p : {3L, 5L, 7L, 11L, 13L}) {
            if (!has_good_reduction(*rec.curve, p)) continue;
            auto F = FieldDescriptor::get(p);
            std::vector<FFPoint> red;
            for (auto& P : T.points) red.push_back(reduce_point(P, F));
            std::sort(red.begin(), red.end(), point_less);
            bool distinct = std::adjacent_find(red.begin(), red.end()) == red.end();
            o.check(distinct, rec.label + " at " + std::to_string(p));
        }
    }
    return o;
}

// closure under the group law, checked directly on exponent vectors
inline Outcome selmer_closure(const std::vector<long>& qs) {
    Outcome o;
    for (long q : qs) {
        auto S = selmer_group(q);
        std::set<unsigned> m(S.members.begin(), S.members.end());
        o.check(m.count(0) == 1, "identity in Selmer for q = " + std::to_string(q));
        for (unsigned a : m)
            for (unsigned b : m) o.check(m.count(a ^ b) == 1, "closure for q = " + std::to_string(q));
        o.check(is_subgroup(S.members), "is_subgroup for q = " + std::to_string(q));
        o.check(m.size() == (1u << S.dimension), "order 2^dim for q = " + std::to_string(q));
    }
    return o;
}

// global points are everywhere locally solvable
inline Outcome twist_images_in_selmer(const std::vector<long>& qs, long bound) {
    Outcome o;
    for (long q : qs) {
        auto S = selmer_group(q);
        auto pts = twist_point_search(q, bound);
        o.check(pts.size() > 1, "points found for q = " + std::to_string(q));
        for (auto& t : pts) {
            auto c = descent_image(t.point, q);
            o.check(std::binary_search(S.members.begin(), S.members.end(), c.bits),
                    t.point.str() + " for q = " + std::to_string(q));
        }
    }
    return o;
}

// every stored certificate survives JSON and replays to its status
inline Outcome certificate_replay(const std::vector<long>& qs) {
    Outcome o;
    for (long q : qs) {
        auto S = selmer_group(q, true);
        for (auto& A : S.audit) {
            auto C = cover_curve(A.cls, q);
            for (auto& cert : A.certificates) {
                auto back = local_certificate_from_json(Json::parse(to_json(cert).dump()));
                o.check(to_json(back) == to_json(cert), "round trip " + A.cls.name());
                o.check(back.status != LocalStatus::undetermined, "determined " + A.cls.name() + " at " + cert.place);
                o.check(replay_certificate(C, back), "replay " + A.cls.name() + " at " + cert.place);
            }
        }
    }
    return o;
}

inline Outcome search_matches_sweep(std::uint64_t seed = 2, int trials = 12, long bound = 25) {
    Outcome o;
    oracle::Gen gen(seed);
    std::vector<long> ds = {1, -11, 13, 17};
    while (static_cast<int>(ds.size()) < trials) {
        long d = gen.range(-60, 60);
        if (d != 0 && squarefree_part(d) == d) ds.push_back(d);
    }
    for (long d : ds) {
        auto a = twist_point_search(d, bound), b = twist_point_sweep(d, bound);
        bool same = a.size() == b.size();
        for (size_t i = 0; same && i < a.size(); ++i) same = a[i].point == b[i].point && a[i].order == b[i].order;
        o.check(same, "d = " + std::to_string(d));
    }
    return o;
}

// a coarse numeric sampler of the real image: x0 + q = a r^2 needs a > 0 at real points with y != 0
inline Outcome real_place_sampler(std::uint64_t seed = 3, int trials = 100) {
    Outcome o;
    oracle::Gen gen(seed);
    const std::vector<long> qs = {11, 13, 17, 19, 37, 53};
    for (int t = 0; t < trials; ++t) {
        long q = qs[gen.range(0, static_cast<long>(qs.size()) - 1)];
        auto G = ambient_group(q);
        auto cls = G.make(static_cast<unsigned>(gen.range(0, (1L << G.rank()) - 1)));
        bool hit = false;
        // x^3 + q x^2 + 4q^2 x + 4q^3 = (x + q)(x^2 + 4q^2) is positive exactly for x > -q
        for (double x = -3.0 * q; x < 10.0 * q && !hit; x += 0.37) {
            double f = (x + q) * (x * x + 4.0 * q * q);
            if (f <= 0) continue;
            double r2 = (x + q) / cls.a.get_d();
            hit = r2 > 0;
        }
        bool solvable = real_solvable(cover_curve(cls, q)).status == LocalStatus::solvable;
        o.check(hit == solvable, cls.name() + " for q = " + std::to_string(q));
    }
    return o;
}

}  // namespace props
