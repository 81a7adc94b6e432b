#include "badred/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace badred {

namespace {

std::string join(const std::vector<long>& v, const char* sep = ",") {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string braces(const std::vector<long>& v) { return "{" + join(v) + "}"; }

std::string point_text(const Json& p) {
    if (p.is_string()) return p.get<std::string>();
    auto coord = [](const Json& c) {
        if (c.size() == 1) return std::to_string(c[0].get<long>());
        std::string s = "[";
        for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i].get<long>());
        return s + "]";
    };
    return "(" + coord(p.at("x")) + ", " + coord(p.at("y")) + ")";
}

std::string points_text(const Json& pts) {
    std::string s;
    for (size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + point_text(pts[i]);
    return s.empty() ? "-" : s;
}

Json points_json(const std::vector<FFPoint>& pts) {
    Json a = Json::array();
    for (auto& P : pts) a.push_back(to_json(P));
    return a;
}

Json class_json(const DescentClass& c) { return {{"name", c.name()}, {"pair", c.pair()}}; }

const char* yes(bool b) { return b ? "yes" : "no"; }

}  // namespace

Json to_json(const FFPoint& P) {
    if (P.inf) return "inf";
    return {{"x", P.x.coordinate_vector()}, {"y", P.y.coordinate_vector()}};
}

Json to_json(const LocalCertificate& c) {
    Json j = {{"place", c.place},
              {"status", to_string(c.status)},
              {"modulus", c.modulus.get_str()},
              {"minor_valuation", c.minor_valuation},
              {"justification", c.justification}};
    Json w = Json::array();
    for (auto& x : c.witness) w.push_back(x.get_str());
    j["witness"] = w;
    if (c.model)
        j["model"] = {c.model->first.get_str(), c.model->second.re.get_str(), c.model->second.im.get_str()};
    return j;
}

LocalCertificate local_certificate_from_json(const Json& j) {
    LocalCertificate c;
    try {
        c.place = j.at("place").get<std::string>();
        c.status = local_status_from_string(j.at("status").get<std::string>());
        c.modulus = Integer(j.at("modulus").get<std::string>());
        c.minor_valuation = j.at("minor_valuation").get<long>();
        c.justification = j.at("justification").get<std::string>();
        for (auto& x : j.at("witness")) c.witness.push_back(Integer(x.get<std::string>()));
        if (j.contains("model")) {
            auto& m = j.at("model");
            c.model = std::pair(Integer(m.at(0).get<std::string>()),
                                Gaussian(Integer(m.at(1).get<std::string>()), Integer(m.at(2).get<std::string>())));
        }
    } catch (const DomainError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw DomainError(std::string("certificate: bad integer: ") + e.what());
    } catch (const Json::exception& e) {
        throw DomainError(std::string("certificate: ") + e.what());
    }
    return c;
}

Json report_to_json(const Report& r) {
    return {{"command", r.command}, {"format", r.format}, {"exit_status", r.exit_status}, {"result", r.result}};
}

Report report_from_json(const Json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.format = j.at("format").get<std::string>();
    r.exit_status = j.at("exit_status").get<int>();
    r.result = j.at("result");
    return r;
}

const std::vector<ExpectedTable1Row>& expected_table1() {
    static const std::vector<ExpectedTable1Row> t = {
        {20, {3, 7}, {3}}, {24, {5, 7, 11}, {5}}, {32, {3, 5}, {3}}, {36, {5, 7}, {}}, {49, {2}, {}}};
    return t;
}

const std::vector<std::pair<long, long>>& expected_x113_counts() {
    static const std::vector<std::pair<long, long>> c = {{2, 6}, {3, 6}, {5, 6}, {7, 8}, {11, 12}};
    return c;
}

// table1

Report cmd_table1(const Registry& reg, long max_prime, int jobs) {
    Report r;
    r.command = "table1 --max-prime " + std::to_string(max_prime);
    auto rows = table1(reg, max_prime, jobs);
    Json jr = Json::array(), je = Json::array(), diff = Json::array();
    auto upto13 = [](std::vector<long> v) {
        v.erase(std::remove_if(v.begin(), v.end(), [](long p) { return p > 13; }), v.end());
        return v;
    };
    for (auto& row : rows) jr.push_back({{"level", row.level}, {"weaker", row.weaker}, {"stronger", row.stronger}});
    for (auto& e : expected_table1()) {
        je.push_back({{"level", e.level}, {"weaker", e.weaker}, {"stronger", e.stronger}});
        auto it = std::find_if(rows.begin(), rows.end(), [&](auto& row) { return row.level == e.level; });
        std::vector<long> w = it == rows.end() ? std::vector<long>{} : upto13(it->weaker);
        std::vector<long> s = it == rows.end() ? std::vector<long>{} : upto13(it->stronger);
        if (w != e.weaker) diff.push_back({{"level", e.level}, {"column", "weaker"}, {"computed", w}, {"expected", e.weaker}});
        if (s != e.stronger)
            diff.push_back({{"level", e.level}, {"column", "stronger"}, {"computed", s}, {"expected", e.stronger}});
    }
    r.result = {{"max_prime", max_prime}, {"rows", jr},  {"expected", je},
                {"diff", diff},           {"matches_expected", diff.empty()}};
    r.exit_status = diff.empty() ? 0 : 1;
    return r;
}

// check

Report cmd_check(const Registry& reg, const std::string& label, long p, int k, const std::string& mode) {
    Report r;
    r.command = "check --curve " + label + " --prime " + std::to_string(p) + " --degree " + std::to_string(k) +
                " --mode " + mode;
    if (mode != "weaker" && mode != "stronger") throw DomainError("check: mode must be weaker or stronger");
    if (mode == "stronger" && k != 1) throw DomainError("check: the stronger hypothesis is defined for degree 1 only");
    const auto& rec = reg.get(label);
    auto w = weaker_holds(rec, p, k);
    Json j = {{"curve", label},          {"prime", p},
              {"degree", k},             {"mode", mode},
              {"field", w.field},        {"points", points_json(w.points)},
              {"cusp_points", points_json(w.cusp_points)}, {"missing", points_json(w.missing)},
              {"weaker", w.holds}};
    bool holds = w.holds;
    if (mode == "stronger") {
        auto s = stronger_geometric(rec, p);
        j["x_surjective"] = s.x_surjective;
        j["rational_cusps_cover"] = s.rational_cusps_cover;
        j["rational_cusp_points"] = points_json(s.rational_cusp_points);
        j["note"] = s.note;
        holds = s.holds;
    }
    j["holds"] = holds;
    r.result = j;
    r.exit_status = holds ? 0 : 1;
    return r;
}

// selmer

Report cmd_selmer(const Integer& q, bool audit_places) {
    Report r;
    r.command = "selmer --q " + q.get_str() + (audit_places ? " --audit-places" : "");
    auto S = selmer_group(q, audit_places);
    Json gens = Json::array(), basis = Json::array(), members = Json::array();
    for (auto& g : S.ambient.generators) gens.push_back(class_json(g));
    for (auto& b : S.basis) basis.push_back(class_json(b));
    for (unsigned m : S.members) members.push_back(S.ambient.make(m).name());
    Json j = {{"q", q.get_str()},
              {"case", S.case_tag},
              {"ambient_generators", gens},
              {"members", members},
              {"basis", basis},
              {"dimension", S.dimension},
              {"torsion_dimension", S.torsion_dimension},
              {"rank_bound", S.rank_bound},
              {"determined", S.determined},
              {"undetermined_class", S.undetermined_class},
              {"conditional_notes", S.conditional_notes}};
    if (audit_places) {
        Json audit = Json::array();
        for (auto& A : S.audit) {
            Json certs = Json::array();
            for (auto& c : A.certificates) certs.push_back(to_json(c));
            audit.push_back({{"class", A.cls.name()},
                             {"pair", A.cls.pair()},
                             {"in_selmer", A.in_selmer},
                             {"undetermined", A.undetermined},
                             {"certificates", certs}});
        }
        j["audit"] = audit;
    }
    r.result = j;
    r.exit_status = S.determined ? 0 : 1;
    return r;
}

// cor32

Report cmd_cor32(long max_q) {
    Report r;
    r.command = "cor32 --max " + std::to_string(max_q);
    if (max_q < 11) throw DomainError("cor32: --max must be at least 11");
    if (max_q > 1000000) throw DomainError("cor32: --max must be at most 10^6");
    Json rows = Json::array();
    bool all = true;
    for (long q : primes_up_to(max_q)) {
        if (q == 2 || q == 3 || q == 5) continue;
        Integer Q(q);
        auto c = cor32_classify(Q);
        // splitting of 3 in Q(sqrt q), read off the factorization of x^2 - q mod 3
        auto fac = poly_factor_mod(std::vector<Integer>{-Q, 0, 1}, 3);
        bool split = fac.size() == 2;
        bool hyp = kronecker(-20, Q) == -1;
        Cor32 oracle = !hyp ? Cor32::none
                       : split ? Cor32::weaker
                       : kronecker(-1, Q) == 1 ? Cor32::stronger
                                                : Cor32::none;
        bool consistent = oracle == c;
        all = all && consistent;
        rows.push_back({{"q", q},
                        {"class", to_string(c)},
                        {"kronecker_m20_q", kronecker(-20, Q)},
                        {"kronecker_m1_q", kronecker(-1, Q)},
                        {"kronecker_q_3", kronecker(Q, 3)},
                        {"split_at_3", split},
                        {"consistent", consistent},
                        {"statement", c == Cor32::none ? "no conclusion"
                                                       : "every elliptic curve over Q(sqrt " + std::to_string(q) +
                                                             ") with a rational cyclic subgroup of order 20 has "
                                                             "bad reduction at 3"}});
    }
    r.result = {{"max", max_q}, {"rows", rows}, {"all_consistent", all}};
    r.exit_status = all ? 0 : 1;
    return r;
}

// x113

Report cmd_x113(const Registry& reg, long max_prime) {
    Report r;
    r.command = "x113 --max-prime " + std::to_string(max_prime);
    if (max_prime < 11) throw DomainError("x113: --max-prime must be at least 11");
    if (max_prime > 2000) throw DomainError("x113: --max-prime must be at most 2000");
    const auto& rec = reg.get("X1_13");
    if (!rec.hyperelliptic) throw DomainError("x113: X1_13 is not a genus 2 record");
    Json counts = Json::array(), bad = Json::array(), diff = Json::array(), flags = Json::array();
    std::map<long, long> computed;
    for (long p : primes_up_to(max_prime)) {
        if (!hyperelliptic_good_reduction(*rec.hyperelliptic, p)) {
            bad.push_back(p);
            continue;
        }
        auto h = hyperelliptic_cusp_report(rec, p);
        computed[p] = h.count;
        counts.push_back({{"p", p},
                          {"count", h.count},
                          {"rational_cusp_images", h.rational_cusp_images},
                          {"rational_cusps_cover", h.rational_cusps_cover}});
    }
    Json expected = Json::object();
    for (auto& [p, n] : expected_x113_counts()) {
        expected[std::to_string(p)] = n;
        auto it = computed.find(p);
        if (it == computed.end()) {
            // the model is bad at p, so only the shipped value is available
            flags.push_back("p = " + std::to_string(p) + ": bad reduction of the model, count not computed");
            diff.push_back({{"p", p}, {"computed", nullptr}, {"expected", n}});
        } else if (it->second != n) {
            diff.push_back({{"p", p}, {"computed", it->second}, {"expected", n}});
        }
    }
    r.result = {{"max_prime", max_prime}, {"counts", counts}, {"bad_primes", bad},           {"expected", expected},
                {"diff", diff},           {"flags", flags},   {"matches_expected", diff.empty()}};
    r.exit_status = diff.empty() ? 0 : 1;
    return r;
}

// registry

Report cmd_registry(const std::string& path, bool verify) {
    Report r;
    r.command = std::string("registry") + (verify ? " --verify" : "") + (path.empty() ? "" : " --registry " + path);
    Json j = {{"source", path.empty() ? "embedded" : path}};
    std::optional<Registry> loaded;
    try {
        if (!path.empty()) loaded = Registry::load(path);
    } catch (const DomainError& e) {
        j["error"] = e.what();
        j["all_passed"] = false;
        r.result = j;
        r.exit_status = 1;
        return r;
    }
    const Registry& reg = loaded ? *loaded : Registry::embedded();
    Json recs = Json::array();
    for (auto& rec : reg.records())
        recs.push_back({{"label", rec.label},
                        {"level", rec.level},
                        {"group", rec.group},
                        {"genus", rec.genus},
                        {"torsion_order", rec.torsion_order},
                        {"cusp_count", rec.cusp_count},
                        {"rational_cusp_count", rec.rational_cusp_count}});
    j["records"] = recs;
    bool all = true;
    if (verify) {
        Json ver = Json::array();
        for (auto& rec : reg.records()) {
            VerifyReport v;
            try {
                v = registry_verify(rec);
            } catch (const DomainError& e) {
                v.label = rec.label;
                v.passed = false;
                v.checks.push_back({"exception", false, e.what()});
            }
            Json checks = Json::array();
            for (auto& c : v.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            ver.push_back({{"label", v.label},
                           {"passed", v.passed},
                           {"torsion_order", v.torsion_order},
                           {"bad_primes", v.bad_primes},
                           {"checks", checks}});
            all = all && v.passed;
        }
        j["verify"] = ver;
    }
    j["all_passed"] = all;
    r.result = j;
    r.exit_status = all ? 0 : 1;
    return r;
}

// intro_demo

Report cmd_intro_demo(const Registry& reg, long bound) {
    Report r;
    r.command = "intro_demo --bound " + std::to_string(bound);
    const long d = -11, p = 3;
    auto K = NumberField::quadratic(d);
    const auto& rec = reg.get("X0_20");
    bool split = split_check(K, p);
    Json primes = Json::array();
    for (auto& P : primes_above(K, p)) primes.push_back({{"prime", P.str()}, {"e", P.e}, {"f", P.f_deg}});
    auto w = weaker_holds(rec, p, 1);
    auto pts = twist_point_search(d, bound);
    Json twist = Json::array();
    std::vector<NFPoint> gens, tors;
    for (auto& t : pts) {
        twist.push_back({{"point", t.point.str()}, {"order", t.order}, {"torsion", t.torsion()}});
        (t.torsion() ? tors : gens).push_back(twist_to_field(t.point, d, K));
    }
    Json gj = Json::array();
    for (auto& P : gens) gj.push_back(P.str());
    auto cert = certify_generators(rec, K, gens, p, tors);
    bool six = !cert.primes.empty();
    Json cp = Json::array();
    for (auto& pc : cert.primes) {
        for (long n : pc.cusp_counts) six = six && n == 6;
        cp.push_back({{"prime", pc.prime},
                      {"gens_ok", pc.gens_ok},
                      {"torsion_ok", pc.torsion_ok},
                      {"common_cusp", pc.common_cusp},
                      {"images", pc.images},
                      {"cusp_counts", pc.cusp_counts}});
    }
    bool ok = split && w.holds && cert.holds && six;
    Json narrative = Json::array();
    narrative.push_back(std::string("3 is ") + (split ? "" : "not ") + "totally split in Q(sqrt -11)");
    narrative.push_back("X0_20 mod 3 has " + std::to_string(w.points.size()) + " points, " +
                        (w.holds ? "all" : "not all") + " reductions of cusps");
    narrative.push_back("the twist by -11 has " + std::to_string(gens.size()) +
                        " non-torsion points of height at most " + std::to_string(bound));
    narrative.push_back(std::string("every supplied point reduces to a cusp at every prime over 3: ") + yes(cert.holds));
    if (ok)
        narrative.push_back("so these curves over Q(sqrt -11) with a rational 20-isogeny have bad reduction at every "
                            "place over 3");
    r.result = {{"field", K->name()},
                {"prime", p},
                {"split", split},
                {"primes_above", primes},
                {"weaker", w.holds},
                {"points_mod_3", points_json(w.points)},
                {"cusp_points_mod_3", points_json(w.cusp_points)},
                {"twist_bound", bound},
                {"twist_points", twist},
                {"generators", gj},
                {"certificate", {{"holds", cert.holds}, {"common_cusp", cert.common_cusp}, {"note", cert.note}, {"primes", cp}}},
                {"six_points_each_prime", six},
                {"narrative", narrative}};
    r.exit_status = ok ? 0 : 1;
    return r;
}

// text rendering, always from the JSON result so both formats carry the same data

std::string render_text(const Report& rep) {
    std::ostringstream o;
    const Json& j = rep.result;
    o << "# " << rep.command << "\n";
    if (j.contains("error")) {
        o << "error: " << j["error"].get<std::string>() << "\n";
        if (!rep.command.starts_with("registry")) return o.str();
    }
    auto vec = [](const Json& a) { return a.get<std::vector<long>>(); };
    if (rep.command.starts_with("table1")) {
        o << "N    weaker            stronger\n";
        for (auto& row : j["rows"]) {
            std::string w = braces(vec(row["weaker"]));
            o << row["level"].get<long>() << std::string(5 - std::to_string(row["level"].get<long>()).size(), ' ') << w
              << std::string(w.size() < 18 ? 18 - w.size() : 1, ' ') << braces(vec(row["stronger"])) << "\n";
        }
        if (j["diff"].empty()) {
            o << "matches the expected table for p <= 13\n";
        } else {
            o << "differences from the expected table for p <= 13:\n";
            for (auto& d : j["diff"])
                o << "  N=" << d["level"].get<long>() << " " << d["column"].get<std::string>() << ": computed "
                  << braces(vec(d["computed"])) << ", expected " << braces(vec(d["expected"])) << "\n";
        }
    } else if (rep.command.starts_with("check")) {
        o << j["curve"].get<std::string>() << " over " << j["field"].get<std::string>() << ", mode "
          << j["mode"].get<std::string>() << "\n";
        o << "points (" << j["points"].size() << "): " << points_text(j["points"]) << "\n";
        o << "cusp reductions (" << j["cusp_points"].size() << "): " << points_text(j["cusp_points"]) << "\n";
        o << "missing: " << points_text(j["missing"]) << "\n";
        o << "weaker: " << yes(j["weaker"].get<bool>()) << "\n";
        if (j.contains("x_surjective")) {
            o << "x surjective: " << yes(j["x_surjective"].get<bool>()) << "\n";
            o << "rational cusps cover: " << yes(j["rational_cusps_cover"].get<bool>()) << "\n";
            o << "rational cusp reductions: " << points_text(j["rational_cusp_points"]) << "\n";
            if (!j["note"].get<std::string>().empty()) o << "note: " << j["note"].get<std::string>() << "\n";
        }
        o << "holds: " << yes(j["holds"].get<bool>()) << "\n";
    } else if (rep.command.starts_with("selmer")) {
        o << "q = " << j["q"].get<std::string>() << " (" << j["case"].get<std::string>() << ")\n";
        o << "ambient generators:";
        for (auto& g : j["ambient_generators"]) o << " " << g["name"].get<std::string>() << "=" << g["pair"].get<std::string>();
        o << "\nbasis:";
        for (auto& b : j["basis"]) o << " " << b["name"].get<std::string>() << "=" << b["pair"].get<std::string>();
        o << "\nmembers:";
        for (auto& m : j["members"]) o << " " << m.get<std::string>();
        o << "\ndimension " << j["dimension"].get<int>() << ", torsion dimension " << j["torsion_dimension"].get<int>()
          << ", rank bound " << j["rank_bound"].get<int>() << "\n";
        if (!j["determined"].get<bool>())
            o << "undetermined: " << j["undetermined_class"].get<std::string>() << "\n";
        for (auto& n : j["conditional_notes"]) o << "note: " << n.get<std::string>() << "\n";
        if (j.contains("audit"))
            for (auto& a : j["audit"]) {
                o << a["class"].get<std::string>() << " " << a["pair"].get<std::string>()
                  << (a["in_selmer"].get<bool>() ? " in Selmer" : a["undetermined"].get<bool>() ? " undetermined" : "")
                  << "\n";
                for (auto& c : a["certificates"]) {
                    o << "  " << c["place"].get<std::string>() << ": " << c["status"].get<std::string>();
                    if (c["modulus"].get<std::string>() != "0") o << " mod " << c["modulus"].get<std::string>();
                    if (!c["witness"].empty()) {
                        o << " at (";
                        for (size_t i = 0; i < c["witness"].size(); ++i)
                            o << (i ? ", " : "") << c["witness"][i].get<std::string>();
                        o << "), minor valuation " << c["minor_valuation"].get<long>();
                    }
                    if (c.contains("model"))
                        o << " on the model (" << c["model"][0].get<std::string>() << ", " << c["model"][1].get<std::string>()
                          << (c["model"][2].get<std::string>().starts_with("-") ? "" : "+") << c["model"][2].get<std::string>()
                          << "i)";
                    o << "\n";
                }
            }
    } else if (rep.command.starts_with("cor32")) {
        o << "q      class      (-20/q) (-1/q) (q/3) split  consistent\n";
        for (auto& row : j["rows"]) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "%-6ld %-10s %7d %6d %5d %-6s %s\n", row["q"].get<long>(),
                          row["class"].get<std::string>().c_str(), row["kronecker_m20_q"].get<int>(),
                          row["kronecker_m1_q"].get<int>(), row["kronecker_q_3"].get<int>(),
                          yes(row["split_at_3"].get<bool>()), yes(row["consistent"].get<bool>()));
            o << buf;
        }
        o << "all consistent: " << yes(j["all_consistent"].get<bool>()) << "\n";
    } else if (rep.command.starts_with("x113")) {
        o << "p     #X(F_p)  rational cusp images  covered\n";
        for (auto& c : j["counts"]) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "%-5ld %-8ld %-21ld %s\n", c["p"].get<long>(), c["count"].get<long>(),
                          c["rational_cusp_images"].get<long>(), yes(c["rational_cusps_cover"].get<bool>()));
            o << buf;
        }
        o << "bad primes: " << braces(vec(j["bad_primes"])) << "\n";
        for (auto& f : j["flags"]) o << "flag: " << f.get<std::string>() << "\n";
        if (j["diff"].empty()) {
            o << "matches the expected counts 6,6,6,8,12 at p = 2,3,5,7,11\n";
        } else {
            for (auto& d : j["diff"])
                o << "p = " << d["p"].get<long>() << ": computed " << (d["computed"].is_null() ? std::string("-") : d["computed"].dump())
                  << ", expected " << d["expected"].get<long>() << "\n";
        }
    } else if (rep.command.starts_with("registry")) {
        o << "source: " << j["source"].get<std::string>() << "\n";
        if (j.contains("records"))
            for (auto& rec : j["records"])
                o << rec["label"].get<std::string>() << "  level " << rec["level"].get<long>() << ", genus "
                  << rec["genus"].get<int>() << ", torsion " << rec["torsion_order"].get<long>() << ", cusps "
                  << rec["cusp_count"].get<long>() << " (" << rec["rational_cusp_count"].get<long>() << " rational)\n";
        if (j.contains("verify"))
            for (auto& v : j["verify"]) {
                o << v["label"].get<std::string>() << ": " << (v["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
                for (auto& c : v["checks"])
                    if (!c["passed"].get<bool>())
                        o << "  failed " << c["name"].get<std::string>() << ": " << c["detail"].get<std::string>() << "\n";
            }
        o << "all passed: " << yes(j["all_passed"].get<bool>()) << "\n";
    } else if (rep.command.starts_with("intro_demo")) {
        o << "field " << j["field"].get<std::string>() << ", p = 3\n";
        for (auto& P : j["primes_above"])
            o << "  prime " << P["prime"].get<std::string>() << " e=" << P["e"].get<int>() << " f=" << P["f"].get<int>() << "\n";
        o << "split: " << yes(j["split"].get<bool>()) << ", weaker: " << yes(j["weaker"].get<bool>()) << "\n";
        o << "points mod 3: " << points_text(j["points_mod_3"]) << "\n";
        o << "twist points:";
        for (auto& t : j["twist_points"]) o << " " << t["point"].get<std::string>();
        o << "\ngenerators over K:";
        for (auto& g : j["generators"]) o << " " << g.get<std::string>();
        o << "\n";
        for (auto& pc : j["certificate"]["primes"]) {
            o << "  at " << pc["prime"].get<std::string>() << ": " << vec(pc["cusp_counts"]).front()
              << " cusp reductions, images";
            for (auto& im : pc["images"]) o << " " << im.get<std::string>();
            o << ", all cusps: " << yes(pc["gens_ok"].get<bool>()) << "\n";
        }
        for (auto& n : j["narrative"]) o << n.get<std::string>() << "\n";
    }
    o << "exit status " << rep.exit_status << "\n";
    return o.str();
}

// argument parsing and dispatch

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"badred: cusp reduction and 2-descent checks"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text", registry_path;
    int jobs = 1;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--registry", registry_path, "modular curve registry (JSON) to use instead of the shipped one");
    app.add_option("--jobs", jobs, "worker threads for sweeps")->check(CLI::Range(1, 64));

    long max_prime = 13;
    auto* t1 = app.add_subcommand("table1", "levels and primes where the hypotheses hold for X0(N)");
    t1->add_option("--max-prime", max_prime, "largest prime to test");

    std::string label, mode = "weaker";
    long prime = 0;
    int degree = 1;
    auto* ck = app.add_subcommand("check", "test one hypothesis for one curve and prime");
    ck->add_option("--curve", label, "registry label")->required();
    ck->add_option("--prime", prime, "prime p")->required();
    ck->add_option("--degree", degree, "residue degree k")->check(CLI::Range(1, 20));
    ck->add_option("--mode", mode, "weaker or stronger")->check(CLI::IsMember({"weaker", "stronger"}));

    std::string q;
    bool audit = false;
    auto* sel = app.add_subcommand("selmer", "2-Selmer group of the twist by q");
    sel->add_option("--q", q, "prime q")->required();
    sel->add_flag("--audit-places", audit, "certificates at every place for every class");

    long max_q = 100;
    auto* c32 = app.add_subcommand("cor32", "classify primes q by which hypothesis applies");
    c32->add_option("--max", max_q, "largest q");

    long x_max = 11;
    auto* x13 = app.add_subcommand("x113", "point counts of the genus 2 curve X1(13)");
    x13->add_option("--max-prime", x_max, "largest prime");

    bool verify = false;
    auto* rg = app.add_subcommand("registry", "list or verify the modular curve registry");
    rg->add_flag("--verify", verify, "run every consistency check");

    long bound = 100;
    auto* intro = app.add_subcommand("intro_demo", "the Q(sqrt -11) example end to end");
    intro->add_option("--bound", bound, "height bound for the twist point search")->check(CLI::Range(1L, 100000L));

    std::vector<const char*> argv = {"badred"};
    for (auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    Report rep;
    std::string echo;
    for (auto& a : args) echo += (echo.empty() ? "" : " ") + a;
    try {
        if (rg->parsed()) {
            rep = cmd_registry(registry_path, verify);
        } else {
            std::optional<Registry> loaded;
            if (!registry_path.empty()) loaded = Registry::load(registry_path);
            const Registry& reg = loaded ? *loaded : Registry::embedded();
            if (t1->parsed())
                rep = cmd_table1(reg, max_prime, jobs);
            else if (ck->parsed())
                rep = cmd_check(reg, label, prime, degree, mode);
            else if (sel->parsed())
                rep = cmd_selmer(Integer(q), audit);
            else if (c32->parsed())
                rep = cmd_cor32(max_q);
            else if (x13->parsed())
                rep = cmd_x113(reg, x_max);
            else
                rep = cmd_intro_demo(reg, bound);
        }
    } catch (const DomainError& e) {
        rep = Report{echo, format, {{"error", e.what()}}, 2};
    } catch (const std::invalid_argument& e) {
        rep = Report{echo, format, {{"error", "not an integer"}}, 2};
    }
    rep.format = format;
    if (rep.exit_status == 2) err << "error: " << rep.result["error"].get<std::string>() << "\n";
    if (format == "json")
        out << report_to_json(rep).dump(2) << "\n";
    else if (rep.exit_status != 2)
        out << render_text(rep);
    return rep.exit_status;
}

}  // namespace badred
