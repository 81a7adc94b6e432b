#pragma once

#include "badred/curves.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace badred {

// element of norm q with n = 1 mod 2 and n = +-1 mod 2+i, positive real part; q = 13, 17 mod 20
Gaussian nq(const Integer& q);

// y^2 = x^3 + d x^2 + 4 d^2 x + 4 d^3, the twist of y^2 = x^3+x^2+4x+4 by Q(sqrt d)
RationalCurve twist_curve(const Integer& d);

// A class (a, beta) in Q^*/Q^*2 + Q(i)^*/Q(i)^*2 of the ambient group, keyed by its exponent
// vector over the generators g1, g2, ... (bit j <-> g_{j+1}).
struct DescentClass {
    unsigned bits = 0;
    Integer a{1};       // product of the generators' first components
    Gaussian beta{1};   // product of the generators' second components
    std::string name() const;  // "g1g3g6", or "1"
    std::string pair() const;  // "(5, -1+2i)"
};

struct AmbientGroup {
    Integer q;
    bool split = false;  // q = 1 mod 4
    Gaussian n;          // prime over q when split
    std::vector<DescentClass> generators;
    int rank() const { return static_cast<int>(generators.size()); }
    DescentClass make(unsigned bits) const;
    // exponent vector of (a, beta); throws unless supported on {2, 5, q} and norm compatible
    unsigned classify(const Integer& a, const Gaussian& beta) const;
};

AmbientGroup ambient_group(const Integer& q);
std::vector<DescentClass> ambient_basis(const Integer& q);

DescentClass descent_image(const RationalPoint& P, const Integer& q);

// quadratic form in (r, s, t, u); c[i][j] for i <= j is the coefficient of x_i x_j
struct Quadric {
    std::array<std::array<Integer, 4>, 4> c{};
    Integer eval(const std::array<Integer, 4>& x) const;
    std::string str() const;
};

struct CoverCurve {
    Integer q, a, b, c;
    DescentClass cls;
    Quadric F1;  // 2b st + c(s^2 - t^2) - 2q u^2, content removed
    Quadric F2;  // a r^2 - b(s^2 - t^2) + 2c st - q u^2, content removed
    std::optional<std::array<Integer, 4>> point_at_infinity;  // a rational point with u = 0
    std::string str() const;
};

CoverCurve cover_curve(const DescentClass& cls, const Integer& q);
// same class, representative (a, beta) given explicitly
CoverCurve cover_curve(const DescentClass& cls, const Integer& q, const Integer& a, const Gaussian& beta,
                       bool find_infinity = true);
// discriminant of the binary quartic det(x F1 + y F2), with F1, F2 as integral symmetric matrices
Integer pencil_discriminant(const CoverCurve& C);

enum class LocalStatus { solvable, insolvable, undetermined };
std::string to_string(LocalStatus s);
LocalStatus local_status_from_string(const std::string& s);

struct LocalCertificate {
    std::string place;  // "2", "5", "13", ..., or "inf"
    LocalStatus status = LocalStatus::undetermined;
    Integer modulus{0};  // p^k of the witness, or the refutation depth; 0 at the real place
    std::vector<Integer> witness;  // [r, s, t, u] mod modulus when solvable
    long minor_valuation = -1;
    std::string justification;
    // the square-equivalent representative whose cover was searched; empty means the cover's own
    std::optional<std::pair<Integer, Gaussian>> model;
};

struct LocalOptions {
    int max_exponent = 0;       // 0: 8 at p = 2, 4 at odd p
    long node_budget = 4000000; // search nodes before giving up as undetermined
};

LocalCertificate local_solvable(const CoverCurve& cover, long p, const LocalOptions& opt = {});
LocalCertificate real_solvable(const CoverCurve& cover);
// re-verifies a certificate: witness and Hensel minor, re-enumeration, or a fresh search
bool replay_certificate(const CoverCurve& cover, const LocalCertificate& cert, const LocalOptions& opt = {});

struct ClassAudit {
    DescentClass cls;
    std::vector<LocalCertificate> certificates;  // in place order inf, 2, 5, q
    bool in_selmer = false;
    bool undetermined = false;
};

struct SelmerGroup {
    Integer q;
    std::string case_tag;  // "q = 13 mod 20", ...
    AmbientGroup ambient;
    std::vector<unsigned> members;  // sorted
    std::vector<DescentClass> basis;
    int dimension = 0;
    int torsion_dimension = 0;
    int rank_bound = 0;
    bool determined = true;
    std::string undetermined_class;
    std::vector<ClassAudit> audit;
    std::vector<std::string> conditional_notes;
};

// audit_places: run every place on every class instead of stopping at the first failure
SelmerGroup selmer_group(const Integer& q, bool audit_places = false, const LocalOptions& opt = {});

// all classes solvable at one place, by exhaustive search over the ambient group
std::vector<unsigned> local_image(const Integer& q, long p, const LocalOptions& opt = {});
// the subgroup generated by the given exponent vectors, sorted
std::vector<unsigned> span(const std::vector<unsigned>& gens);
bool is_subgroup(const std::vector<unsigned>& members);

struct FourLinesReport {
    Integer q;
    Gaussian n;
    long d = 0, e = 0;
    long i = 0;  // d/e mod q
    bool i_squared_is_minus_one = false;
    long one_plus_2i = 0;
    bool one_plus_2i_square = false;
    long two_over_e = 0;
    bool two_over_e_square = false;
    bool four_lines = false;
    std::vector<long> smooth_point;  // (r, s, 0, 1) on exactly one line
    bool smooth = false;
    LocalCertificate certificate;   // Hensel certificate built from the smooth point
    bool certificate_replays = false;
};

FourLinesReport four_lines_probe(const Integer& q);

struct ResidueSymbolReport {
    Integer q;
    Gaussian n;
    long e = 0;
    int symbol_e = 0;  // kronecker(e, q)
    bool two_over_e_square = false;
    bool one_plus_2i_square = false;
};

ResidueSymbolReport residue_symbol_probe(const Integer& q);

enum class Cor32 { weaker, stronger, none };
std::string to_string(Cor32 c);
Cor32 cor32_classify(const Integer& q);

struct TwistPoint {
    RationalPoint point;
    long order = 0;  // 0 when no multiple up to 12 vanishes
    bool torsion() const { return order > 0; }
};

// points with x = m/e^2, gcd(m, e) = 1, |m| <= bound, 1 <= e <= bound, plus infinity
std::vector<TwistPoint> twist_point_search(const Integer& d, long bound);
// same set by a direct sweep over (m, e); slow, for cross-checking small bounds
std::vector<TwistPoint> twist_point_sweep(const Integer& d, long bound);

// the point of E(Q(sqrt d)) on y^2 = x^3+x^2+4x+4 corresponding to a point of the twist
NFPoint twist_to_field(const RationalPoint& P, const Integer& d, const NumberFieldPtr& K);

}  // namespace badred
