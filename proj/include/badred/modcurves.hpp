#pragma once

#include "badred/curves.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace badred {

struct CuspRecord {
    std::string orbit;
    NumberFieldPtr field;  // degree 1 for rational cusps
    bool infinity = false;
    long branch = 0;  // genus 2 only: which point at infinity, y/x^3 -> branch
    NFPoint point;    // one representative of the Galois orbit
    int orbit_size = 1;
    bool rational = true;
};

struct ModularCurveRecord {
    std::string label;
    long level = 0;
    std::string group;
    int genus = 1;
    std::optional<RationalCurve> curve;            // genus 1
    std::optional<HyperellipticCurve> hyperelliptic;  // genus 2
    long torsion_order = 0;  // 0 when not declared
    long cusp_count = 0;
    long rational_cusp_count = 0;
    std::vector<CuspRecord> cusps;
    std::string provenance;

    const RationalCurve& elliptic() const;
};

class Registry {
public:
    static const Registry& embedded();
    static Registry load(const std::string& path);
    static Registry parse(const std::string& json_text);

    const ModularCurveRecord& get(const std::string& label) const;
    std::vector<std::string> labels() const;
    const std::vector<ModularCurveRecord>& records() const { return records_; }

private:
    std::vector<ModularCurveRecord> records_;
};

inline const ModularCurveRecord& registry_get(const std::string& label) {
    return Registry::embedded().get(label);
}

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::string label;
    bool passed = true;
    long torsion_order = 0;  // computed, genus 1 only
    std::vector<long> bad_primes;
    std::vector<VerifyCheck> checks;
};

VerifyReport registry_verify(const ModularCurveRecord& rec);
inline VerifyReport registry_verify(const std::string& label) { return registry_verify(registry_get(label)); }

struct CuspImage {
    FFPoint point;
    std::string orbit;
    std::string prime;  // prime of the cusp field the reduction was taken at
    bool rational = true;
};

struct CuspReduction {
    FieldPtr field;
    FFCurve curve;
    std::vector<FFPoint> points;  // distinct, sorted by point_less
    std::vector<CuspImage> images;
};

// reductions of all cusps whose field has a prime over p of residue degree dividing k
CuspReduction cusp_reduction(const ModularCurveRecord& rec, long p, int k = 1);
std::vector<FFPoint> cusp_reduction_set(const std::string& label, long p, int k = 1);

struct WeakerCertificate {
    std::string label;
    long p = 0;
    int k = 1;
    bool holds = false;
    std::string field;
    std::vector<FFPoint> points;        // E(F_{p^k})
    std::vector<FFPoint> cusp_points;   // cusp_reduction_set
    std::vector<FFPoint> missing;       // points not hit by a cusp
};

WeakerCertificate weaker_holds(const ModularCurveRecord& rec, long p, int k = 1);
inline WeakerCertificate weaker_holds(const std::string& label, long p, int k = 1) {
    return weaker_holds(registry_get(label), p, k);
}

struct StrongerCertificate {
    std::string label;
    long p = 0;
    bool holds = false;
    bool weaker = false;
    bool x_surjective = false;
    // every F_p-point is the reduction of a rational cusp, i.e. of E(Q) when the rank is 0
    bool rational_cusps_cover = false;
    std::vector<FFPoint> rational_cusp_points;
    std::string note;
};

StrongerCertificate stronger_geometric(const ModularCurveRecord& rec, long p);
inline StrongerCertificate stronger_geometric(const std::string& label, long p) {
    return stronger_geometric(registry_get(label), p);
}

struct Table1Row {
    long level = 0;
    std::vector<long> weaker, stronger;
};

inline const std::vector<long> kTable1Levels = {20, 24, 32, 36, 49};

std::vector<Table1Row> table1(long max_p, int jobs = 1);
std::vector<Table1Row> table1(const Registry& reg, long max_p, int jobs = 1);

bool split_check(const NumberFieldPtr& K, long p);

struct PrimeCertificate {
    std::string prime;
    bool gens_ok = true;     // every supplied point reduces to some cusp
    bool torsion_ok = true;  // same for the known K-torsion
    bool common_cusp = true; // one cusp receives every supplied point
    std::vector<std::string> images;  // reduction of each supplied point
    std::vector<long> cusp_counts;    // number of cusp reductions at this prime
};

struct GeneratorCertificate {
    std::string label;
    long p = 0;
    bool holds = false;
    bool common_cusp = false;
    std::vector<PrimeCertificate> primes;
    std::string note;
};

// torsion: known K-rational torsion points to be reported alongside gens
GeneratorCertificate certify_generators(const ModularCurveRecord& rec, const NumberFieldPtr& K,
                                        const std::vector<NFPoint>& gens, long p,
                                        const std::vector<NFPoint>& torsion = {});

// genus 2: points of y^2 + h y = g over F_p, with the two points at infinity as (branch, inf)
struct HyperellipticPoint {
    bool inf = false;
    long x = 0, y = 0;  // y is the branch value when inf
    friend auto operator<=>(const HyperellipticPoint&, const HyperellipticPoint&) = default;
};

struct HyperellipticCuspReport {
    long p = 0;
    long count = 0;
    long rational_cusp_images = 0;
    bool rational_cusps_cover = false;
};

HyperellipticCuspReport hyperelliptic_cusp_report(const ModularCurveRecord& rec, long p);

}  // namespace badred
