#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"

#include "fht/errors.hpp"
#include "fht/io.hpp"
#include "fht/verify.hpp"

using namespace fht;

namespace {

struct TempCsv {
    std::string path;
    explicit TempCsv(const std::string& content) {
        path = std::string(std::tmpnam(nullptr)) + ".csv";
        std::ofstream(path) << content;
    }
    ~TempCsv() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("CSV functions interpolate linearly between samples") {
    TempCsv csv("x,value\n-0.5,1\n0,2\n0.5,4\n");
    FunctionHandle f = load_csv_function(csv.path);
    CHECK(f.tag == SingularityTag::Jump);
    CHECK(f.breakpoints.size() == 3);
    CHECK(f(-0.5) == doctest::Approx(1.0));
    CHECK(f(-0.25) == doctest::Approx(1.5));
    CHECK(f(0.25) == doctest::Approx(3.0));
    CHECK(f(-0.9) == doctest::Approx(1.0));  // constant extension
    CHECK(f(0.9) == doctest::Approx(4.0));
}

TEST_CASE("CSV validation failures carry the offending line") {
    TempCsv no_header("a,b\n0,1\n0.5,2\n");
    CHECK_THROWS_AS(load_csv_function(no_header.path), ParseError);

    TempCsv not_increasing("x,value\n0.5,1\n0.2,2\n");
    try {
        load_csv_function(not_increasing.path);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }

    TempCsv outside("x,value\n-1.5,0\n0,1\n");
    CHECK_THROWS_AS(load_csv_function(outside.path), ParseError);

    TempCsv garbage("x,value\n0.1,abc\n");
    CHECK_THROWS_AS(load_csv_function(garbage.path), ParseError);

    TempCsv too_short("x,value\n0.1,1\n");
    CHECK_THROWS_AS(load_csv_function(too_short.path), ParseError);

    CHECK_THROWS_AS(load_csv_function("/nonexistent/path.csv"), InvalidInputError);
}

TEST_CASE("report documents follow the schema") {
    VerificationReport rep = verify_lower_bound(3, 2);
    nlohmann::json doc = report_document(rep, "fht verify --suite lowerbound");
    CHECK(doc["tool_version"] == kToolVersion);
    CHECK(doc["command"] == "fht verify --suite lowerbound");
    CHECK(doc["seed"] == 3);
    CHECK(doc["cases"].is_array());
    CHECK(doc["cases"].size() == rep.cases.size());
    CHECK(doc["summary"]["pass"].get<int>() + doc["summary"]["fail"].get<int>() ==
          static_cast<int>(rep.cases.size()));
    for (auto& c : doc["cases"]) {
        CHECK(c.contains("id"));
        CHECK(c.contains("statement"));
        CHECK(c.contains("pass"));
        CHECK((c.contains("residual") || c.contains("margin")));
    }
}

TEST_CASE("serialized reports are reproducible up to the timestamp") {
    auto render = [](VerificationReport rep) {
        nlohmann::json doc = report_document(rep, "cmd");
        doc.erase("wall_time");
        return doc.dump();
    };
    CHECK(render(verify_lower_bound(11, 4)) == render(verify_lower_bound(11, 4)));
    CHECK(render(verify_parseval(2, 3)) == render(verify_parseval(2, 3)));
}

TEST_CASE("CSV report rendering") {
    VerificationReport rep = verify_lower_bound(3, 1);
    std::string csv = report_csv(rep);
    CHECK(csv.rfind("id,value,tolerance,pass\n", 0) == 0);
    CHECK(csv.find("lowerbound-full") != std::string::npos);
}
