#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fstruct/cli.hpp"

using fstruct::cli::run;
using Json = nlohmann::json;

namespace {

std::string data(const std::string& name) { return std::string(FSTRUCT_TEST_DATA) + "/" + name; }

struct Result {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("build reports the structure and a passing axiom") {
    const Result r = call({"build", "--spec", data("veronese3.json")});
    CHECK(r.code == 0);
    const Json j = r.json();
    CHECK(j["status"] == "PASS");
    CHECK(j["structure"]["dim"] == 4);
    CHECK(j["curve_degrees"] == Json::array({3, 3, 3}));
}

TEST_CASE("invalid Segre-Veronese data is a validation error with the dimension") {
    const Result r = call({"build", "--spec", data("bad_sv.json")});
    CHECK(r.code == 2);
    const Json j = r.json();
    CHECK(j["error"] == "DimensionMismatch");
    CHECK(j["detail"] == 5);
    CHECK(r.err.find("error: DimensionMismatch") != std::string::npos);
}

TEST_CASE("repeated parameters are rejected") {
    const Result r = call({"cone", "--spec", data("veronese2.json"), "--points", data("repeated.json")});
    CHECK(r.code == 2);
    CHECK(r.json()["error"] == "RepeatedParameter");
}

TEST_CASE("usage errors exit with the validation code") {
    CHECK(call({"facets", "--spec"}).code == 2);
    CHECK(call({"nonsense"}).code == 2);
    CHECK(call({"verify", "--spec", data("veronese2.json")}).code == 2);
    CHECK(call({"verify", "--spec", data("veronese2.json"), "--axiom", "--generalized-vi"}).code == 2);
    CHECK(call({"build", "--spec", data("does_not_exist.json")}).code == 2);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("facets by both methods agree on the cyclic example") {
    const Result r = call({"facets", "--spec", data("veronese3.json"), "--points", data("cyclic5.json"), "--method", "both"});
    CHECK(r.code == 0);
    const Json j = r.json();
    CHECK(j["match"] == true);
    CHECK(j["facets"].size() == 6);
    CHECK(j["oracle"].size() == 6);
    CHECK(j["simplicial"] == true);
    CHECK(j["extremal"] == Json::array({true, true, true, true, true}));
}

TEST_CASE("curves carry verified certificates") {
    const Result r = call({"curve", "--spec", data("sv21.json")});
    CHECK(r.code == 0);
    const Json j = r.json();
    REQUIRE(j["curves"].size() == 3);
    for (const Json& c : j["curves"]) CHECK(c["decomposition"]["verified"] == true);
    CHECK(j["equivalence_classes"].size() == 2);
}

TEST_CASE("cone and polytope in JSON and OFF") {
    const Result c = call({"cone", "--spec", data("veronese2.json"), "--points", data("simplex012.json")});
    CHECK(c.code == 0);
    CHECK(c.json()["pointed"] == true);
    CHECK(c.json()["full_dimensional"] == true);

    const std::vector<std::string> base{"polytope", "--spec", data("veronese2.json"), "--points", data("quad4.json"),
                                        "--beta", "5,-3,3"};
    const Result p = call(base);
    CHECK(p.code == 0);
    CHECK(p.json()["vertices"].size() == 4);

    std::vector<std::string> off = base;
    off.insert(off.end(), {"--format", "off"});
    const Result o = call(off);
    CHECK(o.code == 0);
    CHECK(o.out.rfind("OFF\n4 1 0\n", 0) == 0);

    const Result bad = call({"polytope", "--spec", data("veronese3.json"), "--points", data("cyclic5.json"), "--beta",
                             "1,0,0,0", "--format", "off"});
    CHECK(bad.code == 2);
}

TEST_CASE("verify subcommands") {
    const Result v = call({"verify", "--vandermonde", "0,1/2,3,-4"});
    CHECK(v.code == 0);
    CHECK(v.json()["sum"] == Json::array({"1", "0", "0", "0"}));
    CHECK(v.json()["pass"] == true);
    CHECK(call({"verify", "--vandermonde", "1,2,1"}).code == 2);

    const Result g = call({"verify", "--spec", data("sv21.json"), "--generalized-vi", "--samples", "10"});
    CHECK(g.code == 0);
    CHECK(g.json()["nonzero_values"] == 0);
    const Result f = call({"verify", "--spec", data("veronese3.json"), "--faces", "2", "--samples", "20"});
    CHECK(f.code == 0);
    CHECK(f.json()["generic"].get<int>() >= 18);
    CHECK(call({"verify", "--spec", data("veronese2.json"), "--axiom"}).code == 0);
}

TEST_CASE("Delzant verdicts") {
    const std::vector<std::string> base{"delzant", "--spec", data("veronese2.json"), "--points", data("simplex012.json"),
                                        "--beta"};
    auto with_beta = [&](const std::string& b) {
        std::vector<std::string> a = base;
        a.push_back(b);
        return call(a);
    };
    CHECK(with_beta("5,-3,3").json()["status"] == "Delzant");
    CHECK(with_beta("5,-3,6").json()["status"] == "RationalDelzant");
    CHECK(with_beta("5,-3,6").json()["scales"] == Json::array({"4", "1", "1"}));
    CHECK(with_beta("1,-1,2").json()["status"] == "BetaNotInterior");

    const Result cyc = call({"delzant", "--spec", data("veronese3.json"), "--points", data("cyclic5.json"), "--beta",
                             "225,-55,15,-5"});
    CHECK(cyc.code == 0);
    CHECK(cyc.json()["status"] == "RationalDelzant");
}

TEST_CASE("output is byte identical across runs and honours the output directory") {
    const std::vector<std::string> args{"verify", "--spec", data("sv21.json"), "--faces", "1", "--samples", "10",
                                        "--seed", "7"};
    CHECK(call(args).out == call(args).out);

    const std::filesystem::path dir = std::filesystem::temp_directory_path() / "fstruct_cli_test";
    std::filesystem::create_directories(dir);
    ::setenv("FSTRUCT_OUTPUT_DIR", dir.c_str(), 1);
    const Result r = call({"build", "--spec", data("veronese2.json"), "--out", "build.json"});
    ::unsetenv("FSTRUCT_OUTPUT_DIR");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream file(dir / "build.json");
    REQUIRE(file.good());
    std::stringstream buf;
    buf << file.rdbuf();
    CHECK(buf.str() == call({"build", "--spec", data("veronese2.json")}).out);
}
