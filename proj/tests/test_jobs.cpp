#include <sstream>

#include "doctest.h"
#include "hirz/jobs.hpp"
#include "json.hpp"

using namespace hirz;
using Json = nlohmann::json;

namespace {

JobOutput run_line(const std::string& line) { return run_job(parse_job_json(line)); }

}  // namespace

TEST_SUITE("jobs") {
  TEST_CASE("seshadri JSON schema") {
    const auto out = run_line(R"({"command":"seshadri","e":2,"alpha":6,"beta":13,"mu":[3,3,3,3,3]})");
    REQUIRE(out.exit_code == 0);
    const auto j = Json::parse(out.out);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["command"] == "seshadri");
    CHECK(j["epsilon"]["num"] == 11);
    CHECK(j["epsilon"]["den"] == 2);
    CHECK(j["epsilon"]["decimal"] == "5.5");
    CHECK(j["branch"] == "B");
    REQUIRE(j["argmin_classes"].size() == 1);
    const auto& c = j["argmin_classes"][0];
    CHECK(c["a"] == 2);
    CHECK(c["b"] == 4);
    CHECK(c["m"] == Json::array({1, 1, 1, 1, 1}));
    CHECK(c["m_x"] == 2);
    CHECK(j["conditional_on_ampleness"] == true);
  }

  TEST_CASE("output is deterministic and keys are sorted") {
    const std::string line = R"({"command":"enumerate","e":2,"r":6,"target":-1})";
    const auto a = run_line(line), b = run_line(line);
    CHECK(a.out == b.out);
    const auto j = Json::parse(a.out);
    CHECK(j.dump(2) + "\n" == a.out);
    CHECK(j["count"] == j["classes"].size());
  }

  TEST_CASE("exit codes") {
    CHECK(run_line(R"({"command":"hzero","e":2,"a":1,"b":2})").exit_code == exit_code::ok);
    CHECK(run_line(R"({"command":"seshadri","e":1,"alpha":1,"beta":3,"mu":[1,1,1]})").exit_code ==
          exit_code::hypothesis);
    CHECK(run_line(R"({"command":"seshadri","e":1,"alpha":1,"beta":3,"mu":[1,1],"very_general":false})")
              .exit_code == exit_code::unsupported);
    CHECK(run_line(R"({"command":"enumerate","e":1,"r":9})").exit_code == exit_code::unsupported);
    CHECK(run_line(R"({"command":"seshadri","e":1,"alpha":3,"beta":8,"mu":[1,1,1],"very_general":false})")
              .exit_code == exit_code::hypothesis);
    CHECK(run_line(R"({"command":"seshadri","genus":3,"e":6,"alpha":2,"beta":15,"mu":[1],"case":1})").exit_code ==
          exit_code::hypothesis);
  }

  TEST_CASE("usage errors name the field") {
    auto check_field = [](const std::string& line, const std::string& field) {
      try {
        const auto out = run_job(parse_job_json(line));
        CHECK(out.exit_code == exit_code::usage);
        CHECK(out.err.find("'" + field + "'") != std::string::npos);
      } catch (const StructuralError& e) {
        CHECK(std::string(e.what()).find("'" + field + "'") != std::string::npos);
      }
    };
    check_field(R"({"command":"seshadri","e":1,"alpha":1,"beta":3})", "mu");
    check_field(R"({"command":"seshadri","e":1,"alpha":1,"beta":3,"mu":[1,1,1],"r":4})", "r");
    check_field(R"({"command":"enumerate","e":1,"r":3,"target":-3})", "target");
    check_field(R"({"command":"hzero","e":1,"a":1,"b":2,"mu":[1]})", "mu");
    check_field(R"({"command":"hzero","e":1,"a":"x","b":2})", "a");
    check_field(R"({"command":"hzero","e":1,"a":1,"b":2,"bogus":1})", "bogus");
    check_field(R"({"command":"seshadri","genus":1,"e":6,"alpha":2,"beta":15,"mu":[1],"case":3})", "point_index");
    check_field(R"({"command":"seshadri","genus":1,"e":6,"alpha":2,"beta":15,"mu":[1],"case":7})", "case");
    check_field(R"({"command":"verify","criterion":10})", "criterion");
    check_field(R"({"command":"frobnicate"})", "command");
  }

  TEST_CASE("csv and human formats") {
    const auto csv = run_line(R"({"command":"enumerate","e":1,"r":5,"target":-1,"format":"csv"})");
    CHECK(csv.out.rfind("class,a,b,m,", 0) == 0);
    CHECK(csv.out.find("2C + 2f - E1 - E2 - E3 - E4 - E5,2,2,1;1;1;1;1,-1,-1,weighted-family") != std::string::npos);
    CHECK(run_line(R"({"command":"hzero","e":2,"a":1,"b":2,"format":"human"})").out == "4\n");
  }

  TEST_CASE("bound command") {
    const auto j = Json::parse(run_line(R"({"command":"bound","e":1,"a":2,"b":2,"m":[1,1,1,1,1]})").out);
    CHECK(j["bound"] == -6);
    CHECK(j["self_intersection"] == -1);
    CHECK(j["satisfied"] == true);
    const auto ex = Json::parse(run_line(R"({"command":"bound","e":1,"a":0,"b":0,"m":[-1,0]})").out);
    CHECK(ex["bound"] == "exempt");
    const auto ce = Json::parse(run_line(R"({"command":"bound","e":1,"a":1,"b":0})").out);
    CHECK(ce["satisfied"] == false);
    CHECK(ce["case_bound"] == -1);
    const auto ruled = Json::parse(run_line(R"({"command":"bound","genus":1,"e":3,"a":1,"b":3,"m":"1,0"})").out);
    CHECK(ruled["bound"] == -3);
    CHECK(ruled["lambda"] == 4);
  }

  TEST_CASE("ruled seshadri through the job layer") {
    const auto j = Json::parse(
        run_line(R"({"command":"seshadri","genus":1,"e":6,"alpha":2,"beta":15,"mu":[1],"case":6,"point_index":1})").out);
    CHECK(j["epsilon"]["num"] == 1);
    CHECK(j["tied_branches"].size() == 2);
  }

  TEST_CASE("batch") {
    std::istringstream in(
        "{\"command\":\"hzero\",\"e\":2,\"a\":1,\"b\":2}\n"
        "\n"
        "not json\n"
        "{\"command\":\"seshadri\",\"e\":0,\"alpha\":2,\"beta\":2,\"mu\":[1,1]}\n");
    std::ostringstream out, err;
    const int code = run_batch(in, out, err);
    CHECK(code == exit_code::usage);
    std::istringstream lines(out.str());
    std::string line;
    std::vector<Json> parsed;
    while (std::getline(lines, line)) parsed.push_back(Json::parse(line));
    REQUIRE(parsed.size() == 3);
    CHECK(parsed[0]["h0"] == 4);
    CHECK(parsed[1]["error"]["kind"] == "usage");
    CHECK(parsed[2]["epsilon"]["num"] == 2);
    CHECK(err.str().find("line 3") != std::string::npos);
  }

  TEST_CASE("quick verify through the job layer") {
    const auto out = run_line(R"({"command":"verify","criterion":1,"quick":true})");
    CHECK(out.exit_code == exit_code::ok);
    CHECK(Json::parse(out.out)["passed"] == true);
  }
}
