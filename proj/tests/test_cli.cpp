#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <fstream>
#include <algorithm>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

std::string cli() {
    const char* p = std::getenv("FHT_CLI");
    REQUIRE_MESSAGE(p != nullptr, "FHT_CLI must point at the fht binary");
    return p;
}

int run(const std::string& args, std::string* output = nullptr) {
    std::string tmp = std::string(std::tmpnam(nullptr)) + ".out";
    int rc = std::system((cli() + " " + args + " > " + tmp + " 2>/dev/null").c_str());
    if (output) {
        std::ifstream in(tmp);
        std::ostringstream os;
        os << in.rdbuf();
        *output = os.str();
    }
    std::remove(tmp.c_str());
    return WEXITSTATUS(rc);
}

nlohmann::json run_json(const std::string& args, int expect_rc = 0) {
    std::string out;
    int rc = run(args, &out);
    CHECK(rc == expect_rc);
    return nlohmann::json::parse(out);
}

}  // namespace

TEST_CASE("eval: quadrature value of T(chi) at 1/2") {
    auto doc = run_json("eval --op T --f \"chi(-1,1)\" --points 0.5 --method quadrature");
    CHECK(doc["values"][0]["value"].get<double>() ==
          doctest::Approx(-0.34969915).epsilon(1e-6));
    CHECK(doc["method_used"] == "quadrature");
}

TEST_CASE("eval: csv output and multiple points") {
    std::string out;
    int rc = run("eval --f \"sin(2*x)\" --points 0.1,0.2,0.3 --format csv", &out);
    CHECK(rc == 0);
    CHECK(out.rfind("x,value\n", 0) == 0);
    CHECK(std::count(out.begin(), out.end(), '\n') == 4);
}

TEST_CASE("norm: closed values of the indicator") {
    auto doc = run_json("norm --f \"chi(-1,1)\" --alpha 1");
    CHECK(doc["lexp_primary"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(doc["lexp_equiv"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(doc["llogl"].get<double>() == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("verify: all suites pass and exit 0") {
    CHECK(run("verify --suite lowerbound --seed 7 --n 10") == 0);
    CHECK(run("verify --suite parseval --seed 7 --n 5") == 0);
    CHECK(run("verify --suite inversion --seed 7 --n 3") == 0);
}

TEST_CASE("verify: identical argv and seed give identical JSON minus wall_time") {
    auto once = [&] {
        auto doc = run_json("verify --suite lowerbound --seed 9 --n 6");
        doc.erase("wall_time");
        return doc.dump();
    };
    CHECK(once() == once());
}

TEST_CASE("invert: non-range input exits 1 with phi = pi") {
    std::string out;
    int rc = run("invert --g \"chi(-1,1)\"", &out);
    CHECK(rc == 1);
    auto doc = nlohmann::json::parse(out);
    CHECK(doc["rejected"] == true);
    CHECK(doc["membership"]["phi_value"].get<double>() ==
          doctest::Approx(3.14159265).epsilon(1e-7));
}

TEST_CASE("probe-domain: certificate for the log profile, decline for chi") {
    std::string out;
    CHECK(run("probe-domain --f \"abs(log((1-x)/(1+x)))\"", &out) == 0);
    CHECK(out.find("divergence-certificate") != std::string::npos);
    CHECK(run("probe-domain --f \"chi(-1,1)\"", &out) == 0);
    CHECK(out.find("bounded-input-decline") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("bogus-subcommand") == 2);
    CHECK(run("eval --points 0.5") == 2);                      // missing --f
    CHECK(run("eval --f \"chi(x,1)\" --points 0.5") == 2);     // parse error
    CHECK(run("eval --f \"1 +\" --points 0.5") == 2);          // parse error
    CHECK(run("verify --suite nosuch") == 2);
    CHECK(run("eval --f x --points 0.5 --format yaml") == 2);
    CHECK(run("eval --f x --points 1.5") == 2);                // point outside domain
}

TEST_CASE("--out writes the document to a file") {
    std::string path = std::string(std::tmpnam(nullptr)) + ".json";
    CHECK(run("norm --f \"chi(0,0.5)\" --out " + path) == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    nlohmann::json doc;
    in >> doc;
    CHECK(doc.contains("lexp_primary"));
    std::remove(path.c_str());
}

TEST_CASE("csv input functions are accepted") {
    std::string path = std::string(std::tmpnam(nullptr)) + ".csv";
    std::ofstream(path) << "x,value\n-0.9,1\n0,1\n0.9,1\n";
    auto doc = run_json("eval --op Q --f csv:" + path);
    CHECK(doc["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
    std::remove(path.c_str());
}
