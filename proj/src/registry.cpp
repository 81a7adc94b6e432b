#include "badred/modcurves.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace badred {

namespace detail {
extern const char* const kRegistryJson;
}

using nlohmann::json;

const RationalCurve& ModularCurveRecord::elliptic() const {
    if (!curve) throw DomainError(label + " has genus " + std::to_string(genus) + ", not an elliptic curve");
    return *curve;
}

namespace {

Rational parse_rational(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) throw DomainError("registry: expected a rational, got " + v.dump());
    Rational r;
    if (r.set_str(v.get<std::string>(), 10) != 0) throw DomainError("registry: bad rational " + v.dump());
    r.canonicalize();
    return r;
}

Integer parse_integer(const json& v) {
    Rational r = parse_rational(v);
    if (r.get_den() != 1) throw DomainError("registry: expected an integer, got " + v.dump());
    return r.get_num();
}

std::vector<Integer> parse_integers(const json& v) {
    std::vector<Integer> out;
    for (auto& c : v) out.push_back(parse_integer(c));
    return out;
}

NFElem parse_element(const NumberFieldPtr& K, const json& v) {
    std::vector<Rational> c;
    for (auto& x : v) c.push_back(parse_rational(x));
    if (static_cast<int>(c.size()) > K->degree()) throw DomainError("registry: coordinate longer than field degree");
    return NFElem(K, c);
}

ModularCurveRecord parse_record(const json& j, std::map<std::vector<Integer>, NumberFieldPtr>& fields) {
    ModularCurveRecord rec;
    rec.label = j.at("label").get<std::string>();
    rec.level = j.value("level", 0L);
    rec.group = j.value("group", std::string());
    rec.genus = j.at("genus").get<int>();
    rec.torsion_order = j.value("torsion_order", 0L);
    rec.cusp_count = j.value("cusp_count", 0L);
    rec.rational_cusp_count = j.value("rational_cusp_count", 0L);
    rec.provenance = j.value("provenance", std::string());
    if (rec.genus == 1) {
        auto m = j.at("model");
        if (m.size() != 5) throw DomainError("registry: " + rec.label + " model needs 5 coefficients");
        rec.curve.emplace(parse_rational(m[0]), parse_rational(m[1]), parse_rational(m[2]), parse_rational(m[3]),
                          parse_rational(m[4]));
    } else if (rec.genus == 2) {
        auto& h = j.at("hyperelliptic");
        rec.hyperelliptic = HyperellipticCurve{parse_integers(h.at("h")), parse_integers(h.at("g"))};
    } else {
        throw DomainError("registry: " + rec.label + " has unsupported genus");
    }
    for (auto& c : j.at("cusps")) {
        CuspRecord cusp;
        cusp.orbit = c.value("orbit", std::string());
        auto f = parse_integers(c.at("field_poly"));
        auto& K = fields[f];
        if (!K) K = f.size() == 2 ? NumberField::rationals() : NumberField::make(f);
        cusp.field = K;
        cusp.infinity = c.value("infinity", false);
        cusp.branch = c.value("branch", 0L);
        cusp.orbit_size = c.value("orbit_size", K->degree());
        cusp.rational = c.value("rational", K->degree() == 1);
        if (cusp.infinity)
            cusp.point = NFPoint::infinity();
        else
            cusp.point = NFPoint::affine(parse_element(K, c.at("x")), parse_element(K, c.at("y")));
        rec.cusps.push_back(std::move(cusp));
    }
    return rec;
}

}  // namespace

Registry Registry::parse(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("registry: ") + e.what());
    }
    if (!doc.is_array()) throw DomainError("registry: top level must be an array of records");
    Registry r;
    std::map<std::vector<Integer>, NumberFieldPtr> fields;
    try {
        for (auto& j : doc) r.records_.push_back(parse_record(j, fields));
    } catch (const json::exception& e) {
        throw DomainError(std::string("registry: ") + e.what());
    }
    return r;
}

Registry Registry::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("registry: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

const Registry& Registry::embedded() {
    static const Registry r = parse(detail::kRegistryJson);
    return r;
}

const ModularCurveRecord& Registry::get(const std::string& label) const {
    for (auto& r : records_)
        if (r.label == label) return r;
    throw DomainError("unknown registry label " + label);
}

std::vector<std::string> Registry::labels() const {
    std::vector<std::string> out;
    for (auto& r : records_) out.push_back(r.label);
    return out;
}

}  // namespace badred
