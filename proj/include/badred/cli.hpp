#pragma once

#include "badred/descent.hpp"
#include "badred/modcurves.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace badred {

using Json = nlohmann::json;

struct Report {
    std::string command;   // the command line as echoed back
    std::string format = "text";
    Json result;
    int exit_status = 0;  // 0 ok, 1 completed with failures, 2 usage or domain error

    friend bool operator==(const Report&, const Report&) = default;
};

Json report_to_json(const Report& r);
Report report_from_json(const Json& j);
std::string render_text(const Report& r);

// serialization shared by the reports and the tests
Json to_json(const FFPoint& P);
Json to_json(const LocalCertificate& c);
LocalCertificate local_certificate_from_json(const Json& j);

// published reference values, kept apart from anything computed
struct ExpectedTable1Row {
    long level;
    std::vector<long> weaker, stronger;
};
const std::vector<ExpectedTable1Row>& expected_table1();
const std::vector<std::pair<long, long>>& expected_x113_counts();

Report cmd_table1(const Registry& reg, long max_prime, int jobs = 1);
Report cmd_check(const Registry& reg, const std::string& label, long p, int k, const std::string& mode);
Report cmd_selmer(const Integer& q, bool audit_places);
Report cmd_cor32(long max_q);
Report cmd_x113(const Registry& reg, long max_prime);
Report cmd_registry(const std::string& path, bool verify);  // empty path: embedded registry
Report cmd_intro_demo(const Registry& reg, long bound = 100);

// parses argv (without the program name), runs one command and prints its report
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace badred
