#include "helpers.hpp"

#include "mdsgit/cli.hpp"
#include "mdsgit/error.hpp"

#include <doctest.h>

#include <sstream>

using namespace testing;
namespace cli = mdsgit::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::vector<const char*> argv{"mdsgit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MDSGIT_DATA_DIR) + "/" + name; }

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("load_input accepts the P2 fan") {
    cli::InputDocument doc = cli::load_input(data("P2.json"));
    REQUIRE(doc.fan);
    CHECK(doc.name == "P2");
    CHECK(doc.weights.columns() == ivs({{1}, {1}, {1}}));
    CHECK(doc.digest.size() == 16);
}

TEST_CASE("load_input accepts weights by columns or rows") {
    auto a = cli::parse_input(R"({"weights": {"columns": [[1],[1],[-1],[-1]]}})");
    auto b = cli::parse_input(R"({"weights": {"rows": [[1,1,-1,-1]]}})");
    CHECK(!a.fan);
    CHECK(a.weights == b.weights);
    CHECK(a.weights.r() == 4);
    auto bare = cli::parse_input(R"({"rays": [[1,0],[0,1],[-1,-1]], "cones": [[0,1],[1,2],[0,2]]})");
    CHECK(bare.fan);
}

TEST_CASE("load_input errors") {
    CHECK_THROWS_AS(cli::load_input(data("bad_index.json")), ValidationError);
    try {
        cli::load_input(data("bad_index.json"));
    } catch (const ValidationError& e) {
        CHECK(has(e.what(), "fan.cones[1]"));
    }
    CHECK_THROWS_AS(cli::parse_input("{not json"), cli::ParseError);
    CHECK_THROWS_AS(cli::parse_input("[1,2]"), cli::ParseError);
    CHECK_THROWS_AS(cli::parse_input(R"({"name": "x"})"), cli::ParseError);
    CHECK_THROWS_AS(cli::parse_input(R"({"weights": {"columns": [[1,0],[0]]}})"), ValidationError);
    CHECK_THROWS_AS(cli::parse_input(R"({"weights": {"columns": [[1,1],[2,2]]}})"), ValidationError);
    CHECK_THROWS_AS(cli::parse_input(R"({"fan": {"rays": [[1,0],[0,1],[-1,-1]], "cones": [[0,1],[1,2]]}})"),
                    ValidationError);
    CHECK_THROWS_AS(cli::parse_input(R"({"weights": {"columns": [[1.5]]}})"), cli::ParseError);
    CHECK_THROWS_AS(cli::load_input(data("missing.json")), cli::ParseError);
}

TEST_CASE("big integers survive the input format") {
    auto doc = cli::parse_input(R"({"weights": {"columns": [["123456789012345678901234567890"], [1]]}})");
    CHECK(doc.weights.column(0)[0] == Integer("123456789012345678901234567890"));
    CHECK(cli::to_json(Integer("123456789012345678901234567890")).is_string());
    CHECK(cli::to_json(Integer(-5)) == cli::Json(-5));
}

TEST_CASE("torsion is reported as a warning") {
    auto doc = cli::parse_input(R"({"fan": {"rays": [[2,-1],[-1,2],[-1,-1]], "cones": [[0,1],[1,2],[0,2]]}})");
    REQUIRE(doc.warnings.size() == 1);
    CHECK(has(doc.warnings[0], "Z/3"));
}

TEST_CASE("parse_vector") {
    CHECK(cli::parse_vector("2,-1") == rv({2, -1}));
    CHECK(cli::parse_vector("1/2, 3") == RatVector{Rational(1, 2), Rational(3)});
    CHECK_THROWS_AS(cli::parse_vector("a,b"), cli::ParseError);
    CHECK_THROWS_AS(cli::parse_vector(""), cli::ParseError);
    CHECK_THROWS_AS(cli::parse_vector("1/0"), cli::ParseError);
}

TEST_CASE("cones round trip through JSON") {
    std::vector<Cone> cones{cone(2, {{1, -1}, {1, 0}}), Cone(3), Cone::whole_space(2), Cone::halfspace(iv({1, 2, 3})),
                            cone(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}})};
    for (const auto& c : cones) {
        cli::Json j = cli::to_json(c);
        CHECK(cli::cone_from_json(cli::Json::parse(j.dump())) == c);
    }
}

TEST_CASE("chambers command on BlP2") {
    Run r = run({"chambers", data("BlP2.json")});
    CHECK(r.code == 0);
    CHECK(has(r.out, "2 chambers, 1 walls"));
    Run j = run({"chambers", data("BlP2.json"), "--format", "json"});
    REQUIRE(j.code == 0);
    cli::Json body = cli::Json::parse(j.out);
    REQUIRE(body["result"]["chambers"].size() == 2);
    std::vector<Cone> got;
    for (const auto& ch : body["result"]["chambers"]) got.push_back(cli::cone_from_json(ch["cone"]));
    CHECK(std::count(got.begin(), got.end(), cone(2, {{1, -1}, {1, 0}})) == 1);
    CHECK(std::count(got.begin(), got.end(), cone(2, {{1, 0}, {0, 1}})) == 1);
    CHECK(body["result"]["walls"].size() == 1);
}

TEST_CASE("reports are byte deterministic") {
    for (const char* f : {"BlP2.json", "Bl2P2.json", "flop.json"}) {
        for (const char* fmt : {"json", "text"}) {
            Run a = run({"chambers", data(f), "--format", fmt});
            Run b = run({"chambers", data(f), "--format", fmt});
            CHECK(a.code == 0);
            CHECK(a.out == b.out);
        }
    }
}

TEST_CASE("m0n command") {
    Run r = run({"m0n", "--n", "5"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "chambers satisfy rho + e_U = 5"));
    CHECK(run({"m0n", "--n", "3"}).code == 3);
    CHECK(run({"m0n", "--n", "7", "--max-n", "6"}).code == 3);
    CHECK(run({"m0n"}).code == 2);
}

TEST_CASE("factor command") {
    Run r = run({"factor", data("BlP2.json"), "--from", "2,-1", "--to", "1,1", "--format", "json"});
    REQUIRE(r.code == 0);
    cli::Json body = cli::Json::parse(r.out);
    REQUIRE(body["result"]["crossings"].size() == 1);
    CHECK(body["result"]["crossings"][0]["kind"] == "divisorial");
    CHECK(body["result"]["crossings"][0]["picard_delta"] == -1);
    CHECK(run({"factor", data("flop.json"), "--from", "id:0", "--to", "id:1"}).code == 0);
    CHECK(run({"factor", data("BlP2.json"), "--from", "1,0", "--to", "1,1"}).code == 4);
    CHECK(run({"factor", data("BlP2.json"), "--from", "id:7", "--to", "1,1"}).code == 3);
    CHECK(run({"factor", data("BlP2.json"), "--from", "2,-1"}).code == 2);
}

TEST_CASE("quotient command") {
    Run r = run({"quotient", data("BlP2.json"), "--chi", "1,1", "--format", "json"});
    REQUIRE(r.code == 0);
    cli::Json body = cli::Json::parse(r.out);
    CHECK(body["result"]["quotient"]["rays"].size() == 3);
    CHECK(body["result"]["min_codimension"] == 1);
    Run wall = run({"quotient", data("BlP2.json"), "--chi", "1,0"});
    CHECK(wall.code == 4);
    CHECK(has(wall.err, "degenerate linearization on a wall"));
    CHECK(run({"quotient", data("BlP2.json"), "--chi", "-1,0"}).code == 3);
    CHECK(run({"quotient", data("BlP2.json"), "--chi", "1,0,0"}).code == 3);
    CHECK(run({"quotient", data("BlP2.json")}).code == 2);
}

TEST_CASE("remaining commands succeed on the library") {
    for (const char* f : {"P2.json", "P1xP1.json", "P1xP1xP1.json", "F0.json", "F1.json", "F2.json", "F3.json",
                          "BlP2.json", "Bl2P2.json", "P112.json", "flop.json"}) {
        for (const char* cmd : {"nef", "mov", "eff", "walls", "sqms", "check-cover"}) {
            CAPTURE(f);
            CAPTURE(cmd);
            Run r = run({cmd, data(f), "--format", "json"});
            CHECK(r.code == 0);
            CHECK(cli::Json::parse(r.out)["passed"] == true);
        }
    }
}

TEST_CASE("sqms and mov on the flop") {
    Run r = run({"sqms", data("flop.json"), "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(cli::Json::parse(r.out)["result"]["chambers"].size() == 2);
    Run m = run({"walls", data("flop.json")});
    CHECK(has(m.out, "small"));
}

TEST_CASE("usage and parse errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate", data("P2.json")}).code == 2);
    CHECK(run({"chambers"}).code == 2);
    CHECK(run({"chambers", data("P2.json"), "--format", "yaml"}).code == 2);
    CHECK(run({"chambers", data("missing.json")}).code == 2);
    CHECK(run({"chambers", data("bad_index.json")}).code == 3);
    Run help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(has(help.out, "character"));
}

TEST_CASE("check-cover reports sample counts") {
    Run r = run({"check-cover", data("Bl2P2.json"), "--samples", "64", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(cli::Json::parse(r.out)["result"]["samples"] == 64);
}
