#include "doctest.h"

#include <fstream>
#include <sstream>

#include "trig/cli.hpp"
#include "trig/jsonio.hpp"
#include "trig/parse.hpp"

using namespace trig;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("form grammar: worked strings") {
    auto f = parse_form_q("3*x1^3 - 1/2*x1*x2^2", "x1", "x2");
    CHECK(f.degree() == 3);
    CHECK(f.coeff(0) == Rat(3));
    CHECK(f.coeff(2) == Rat(-1, 2));

    // whitespace insignificant, implicit coefficient and exponent
    auto g = parse_form_q("  x1 ^2* x2 ", "x1", "x2");
    CHECK(g == parse_form_q("1*x1^2*x2^1", "x1", "x2"));

    // leading minus and repeated variables multiply out
    auto h = parse_form_q("-x1*x1*x1", "x1", "x2");
    CHECK(h.degree() == 3);
    CHECK(h.coeff(0) == Rat(-1));

    // zero form with declared degree
    auto z = parse_form_q("0", "x1", "x2", 3);
    CHECK(z.degree() == 3);
    CHECK(z.is_zero_form());

    // like terms combine, possibly to zero
    auto c = parse_form_q("x1 - x1 + x2", "x1", "x2");
    CHECK(c.degree() == 1);
    CHECK(is_zero(c.coeff(0)));
    CHECK(c.coeff(1) == Rat(1));

    // base coordinates use the same grammar
    auto t = parse_form_q("t0^2 - 4*t0*t1", "t0", "t1");
    CHECK(t.degree() == 2);
}

TEST_CASE("form grammar: errors carry offsets") {
    CHECK_THROWS_AS(parse_form_q("x1 + ", "x1", "x2"), ParseError);
    CHECK_THROWS_AS(parse_form_q("x3", "x1", "x2"), ParseError);
    CHECK_THROWS_AS(parse_form_q("1/0*x1", "x1", "x2"), ParseError);
    CHECK_THROWS_AS(parse_form_q("x1 + x2^2", "x1", "x2"), ParseError);
    CHECK_THROWS_AS(parse_form_q("x1^2", "x1", "x2", 3), ParseError);
    CHECK_THROWS_AS(parse_form_q("", "x1", "x2"), ParseError);
    try {
        parse_form_q("2*y1", "x1", "x2");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
    }
}

TEST_CASE("forms over a prime field, including denominators") {
    auto f = parse_form_fp("1/2*x1^3 + 6*x2^3", 5, "x1", "x2");
    // 1/2 = 3 mod 5, 6 = 1 mod 5
    CHECK(f.coeff(0).value() == 3);
    CHECK(f.coeff(3).value() == 1);
    CHECK_THROWS_AS(parse_form_fp("1/5*x1", 5, "x1", "x2"), Error);
}

TEST_CASE("cli: picard table matches the published cases") {
    auto r = run_cli({"chow", "picard", "--from", "2", "--to", "12"});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    REQUIRE(j.size() == 11);
    CHECK(j.back()["g"] == 12);
    CHECK(j.back()["group"] == "Z+Z/9");
    CHECK(j.front()["group"] == "Z");

    // byte-identical reruns
    auto r2 = run_cli({"chow", "picard", "--from", "2", "--to", "12"});
    CHECK(r.out == r2.out);

    // csv renders one row per genus
    auto rc = run_cli(
        {"chow", "picard", "--from", "2", "--to", "4", "--format", "csv"});
    CHECK(rc.out ==
          "g,a,b,group\n2,-8,17,Z\n3,-9,9,Z+Z/9\n4,-10,19,Z\n");
}

TEST_CASE("cli: singular verdict in JSON") {
    auto r = run_cli({"cover", "singular", "--f", "x1^2*x2", "--g", "0"});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["in_W"] == true);
    CHECK(j["witness"] == "(0:1)");

    auto r2 = run_cli({"cover", "singular", "--f", "x1^2*x2", "--g",
                       "x2^3", "--field", "p=7"});
    CHECK(r2.code == 0);
    CHECK(Json::parse(r2.out)["in_W"] == false);

    // malformed polynomial: parse error on stderr, exit 2
    auto r3 = run_cli({"cover", "singular", "--f", "x1^2+", "--g", "0"});
    CHECK(r3.code == 2);
    auto e = Json::parse(r3.err);
    CHECK(e["error"]["kind"] == "parse");
    CHECK(e["error"]["message"].get<std::string>().find("offset") !=
          std::string::npos);
}

TEST_CASE("cli: cubic algebra structure constants") {
    auto r = run_cli({"cover", "build", "--cubic", "x1^3 - x2^3"});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["fiber_type"] == "etale");
    CHECK(j["omega_sq"][2] == "-1"); // -a theta with a = 1
    CHECK(j["theta_sq"][1] == "-1"); // d omega with d = -1
}

TEST_CASE("cli: bundle commands round-trip the matrix schema") {
    Json m;
    m["r"] = 2;
    m["d"] = 2;
    m["entries"] = Json::array({
        Json::array({Json::array({"1", "0"}), Json::array({"0", "0"})}),
        Json::array({Json::array({"0", "1"}), Json::array({"0", "0"})}),
        Json::array({Json::array({"0", "0"}), Json::array({"1", "0"})}),
        Json::array({Json::array({"0", "0"}), Json::array({"0", "1"})}),
    });
    std::string path = "/tmp/trig_euler2.json";
    {
        std::ofstream f(path);
        f << m.dump();
    }
    auto r = run_cli({"bundle", "split", "--input", path});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["splitting"] == Json::array({1, 1}));

    auto rd = run_cli({"bundle", "degeneracy", "--input", path});
    CHECK(Json::parse(rd.out)["nondegenerate"] == true);

    // schema survives the structured parser and serializer
    auto parsed = matrix_from_json_q(m);
    CHECK(matrix_to_json(parsed) == m);

    auto rmiss = run_cli({"bundle", "split", "--input", "/nonexistent"});
    CHECK(rmiss.code == 2);
}

TEST_CASE("cli: probe output schema") {
    auto r = run_cli({"bundle", "probe", "--r", "1", "--d", "1", "--p",
                      "5", "--trials", "10", "--exhaustive"});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["trials"] == 625);
    CHECK(j["degenerate"] == 145);
    CHECK(j["degenerate_fraction"] == "145/625");
    CHECK(j["stratum_histogram"]["1"] == 480);

    auto r2 = run_cli({"bundle", "probe", "--r", "2", "--d", "2", "--p",
                       "7", "--trials", "25", "--seed", "3"});
    auto r3 = run_cli({"bundle", "probe", "--r", "2", "--d", "2", "--p",
                       "7", "--trials", "25", "--seed", "3"});
    CHECK(r2.out == r3.out);
}

TEST_CASE("cli: smooth verdict via datum JSON") {
    Json datum;
    datum["m"] = 0;
    datum["n"] = 1;
    datum["phi"] = Json::array({"0", "1", "0", "-t1^2"});
    std::string path = "/tmp/trig_datum.json";
    {
        std::ofstream f(path);
        f << datum.dump();
    }
    auto r = run_cli({"cover", "smooth", "--input", path});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["smooth"] == false);
    REQUIRE(j["singular_points"].size() == 1);
    CHECK(j["singular_points"][0]["base"] == "(1:0)");
    CHECK(j["singular_points"][0]["fiber"][0] == "(0:1)");
}

TEST_CASE("cli: class-y symbolic output") {
    auto r = run_cli({"chow", "class-y", "--symbolic"});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["gamma1"] == "g + 15");
    CHECK(j["delta1"] == "-g - 6");
    CHECK(j["sigma1"] == "1/2*g^2 + 17/2*g + 15");
    CHECK(j["restriction_check"] == "0");
}

TEST_CASE("cli: usage errors exit with 2") {
    CHECK(run_cli({"chow"}).code == 2);
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({"chow", "picard", "--from", "1", "--to", "3"}).code ==
          2);
    CHECK(run_cli({"cover", "singular", "--f", "x1^3", "--field",
                   "p=4"})
              .code != 0);
}

TEST_CASE("cli: verify subset run") {
    auto r = run_cli({"verify", "--only", "sections"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS  sections") != std::string::npos);
    CHECK(r.out.find("picard") == std::string::npos);

    auto r2 = run_cli({"verify", "--only", "nothing-matches"});
    CHECK(r2.code == 2);
}
