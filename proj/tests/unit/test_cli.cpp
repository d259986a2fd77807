#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "jacobiq/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string text;
    json doc;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out;
    int code = jacobiq::cli::run(args, out);
    return {code, out.str(), json::parse(out.str())};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("documented examples") {
    CHECK(run({"rd", "--matrix", "[[2]]"}).text == "{\"rd\":\"1/2\"}\n");
    CHECK(run({"disc", "--matrix", "[[3/2]]"}).text ==
          "{\"order\":6,\"reps\":[\"0\",\"1/2\",\"1\",\"3/2\",\"2\",\"5/2\"]}\n");
    Result c = run({"cycle-generators", "--rank", "2", "--signature", "2", "--denominator", "1"});
    CHECK(c.code == 0);
    CHECK(c.doc["count"] == 2);
    CHECK(c.doc["matrices"].size() == 2);
}

TEST_CASE("lenient JSON") {
    CHECK(json::parse(jacobiq::cli::normalize_lenient_json("[[3/2, -1], [0.25, 2]]")) ==
          json::parse(R"([["3/2","-1"],["0.25","2"]])"));
    CHECK(json::parse(jacobiq::cli::normalize_lenient_json(R"({"a": [1/2], "b": "x"})")) ==
          json::parse(R"({"a":["1/2"],"b":"x"})"));
}

TEST_CASE("decimal input is exact") {
    CHECK(run({"rd", "--matrix", "[[0.5]]"}).doc["rd"] == "1/8");
}

TEST_CASE("parse errors exit with 2") {
    Result r = run({"rd", "--matrix", "[[x]]"});
    CHECK(r.code == 2);
    CHECK(r.doc["error"].contains("code"));
    CHECK(r.doc["error"].contains("message"));
    CHECK(run({"no-such-command"}).code == 2);
    Result ns = run({"rd", "--matrix", "[[1,2],[3,4]]"});
    CHECK(ns.code == 2);
    CHECK(ns.doc["error"]["code"] == "NonSymmetric");
    CHECK(run({"rd", "--matrix", "[[1,2]]"}).doc["error"]["code"] == "DimensionMismatch");
}

TEST_CASE("domain errors exit with 1") {
    Result r = run({"rep", "--family", "rho", "--matrix", "[[3]]", "--gen", "S"});
    CHECK(r.code == 1);
    CHECK(r.doc["error"]["code"] == "NotAdmissible");
    CHECK(run({"cycle-generators", "--rank", "7", "--signature", "1"}).doc["error"]["code"] == "RankOutOfRange");
}

TEST_CASE("input file") {
    std::string path = "jacobiq_cli_input_test.json";
    {
        std::ofstream f(path);
        f << R"({"matrix": [[2, 1], [1, 2]]})";
    }
    Result r = run({"rd", "--input", path});
    std::remove(path.c_str());
    CHECK(r.code == 0);
    CHECK(r.doc["rd"] == "2/3");
}

TEST_CASE("numeric coefficients") {
    Result r = run({"theta", "--matrix", "[[2]]", "--nu", "1", "--prec", "1/2", "--numeric"});
    REQUIRE(r.code == 0);
    for (const auto& t : r.doc["terms"]) {
        REQUIRE(t["coeff"].is_array());
        REQUIRE(t["coeff"].size() == 1);
        CHECK(t["coeff"][0][0].get<double>() == doctest::Approx(1.0));
        CHECK(t["coeff"][0][1].get<double>() == doctest::Approx(0.0));
    }
}

TEST_CASE("repeated runs are byte identical") {
    std::vector<std::string> args{"rep", "--family", "induced", "--matrix", "[[3/2]]", "--alpha", "1/4", "--beta", "0",
                                  "--gen", "S"};
    std::string first = run(args).text;
    for (int i = 0; i < 3; ++i) CHECK(run(args).text == first);
}

}  // TEST_SUITE
