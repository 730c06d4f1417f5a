#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <dwstar/cli/format.hpp>
#include <dwstar/cli/jets_file.hpp>
#include <dwstar/cli/parse.hpp>
#include <dwstar/cli/run.hpp>

#include "support.hpp"

using namespace testing;
using dwstar::cli::Format;

namespace
{

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = dwstar::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t error_offset(const std::string &text)
{
    try {
        dwstar::cli::parse(text);
    } catch (const dwstar::cli::ParseError &e) {
        return e.offset();
    }
    return 0;
}

CrossedElement random_element(Rng &rng)
{
    PolySpec spec{3, 9, true, 40};
    CrossedElement e = random_crossed(rng, spec);
    // sprinkle h1, h2 and fractional coefficients
    e.plain *= H1(static_cast<unsigned>(rng.uniform(0, 2)));
    e.gamma *= H2(static_cast<unsigned>(rng.uniform(0, 2)));
    e.plain *= GaussianRational(random_rational(rng, 7, 5, false));
    return e;
}

} // namespace

TEST_CASE("parse examples")
{
    CHECK(dwstar::cli::parse("p^2*x^2") == CrossedElement(X(2) * P(2)));
    CHECK(dwstar::cli::parse("(1 + gamma)") == CrossedElement(MultiPoly(1), MultiPoly(1)));
    CHECK(error_offset("x^") == 3);
    CHECK_THROWS_AS(dwstar::cli::parse("x^"), dwstar::cli::ParseError);
}

TEST_CASE("parse grammar details")
{
    using dwstar::cli::parse;
    CHECK(parse("-x + 3/4*p") == CrossedElement(-X() + Cq(3, 4) * P()));
    CHECK(parse("2^3*i") == CrossedElement(8 * Ip()));
    CHECK(parse("x*gamma*p") == CrossedElement(MultiPoly(), X() * P()));
    CHECK(parse(" h1 * h2 ") == CrossedElement(H1() * H2()));
    CHECK(parse("(x + p)^2") == CrossedElement(pow(X() + P(), 2)));
    CHECK(error_offset("2x") == 2);
    CHECK(error_offset("x + y") == 5);
    CHECK(error_offset("(x") == 3);
    CHECK(error_offset("x/0") == 3);
    CHECK(error_offset("k") == 1);
    CHECK(error_offset("x^300") == 3);
    try {
        parse("x +");
        FAIL("expected a parse error");
    } catch (const dwstar::cli::ParseError &e) {
        CHECK(e.offset() == 4);
        const auto &exp = e.expected();
        CHECK(std::find(exp.begin(), exp.end(), "'gamma'") != exp.end());
        CHECK(std::find(exp.begin(), exp.end(), "number") != exp.end());
    }
    CHECK_THROWS_AS(parse("gamma^2"), dwstar::cli::GammaPlacementError);
    CHECK_THROWS_AS(parse("gamma*x*gamma"), dwstar::cli::GammaPlacementError);
    CHECK_THROWS_AS(parse("(1+gamma)*(1-gamma)"), dwstar::cli::GammaPlacementError);
    CHECK_THROWS_AS(parse("(x*gamma)^2"), dwstar::cli::GammaPlacementError);
}

TEST_CASE("format examples")
{
    using dwstar::cli::format;
    CHECK(format(CrossedElement()) == "0");
    CHECK(format(CrossedElement(-Ip() * H1()), Format::json) == R"({"plain": [[0,0,1,0,[0,1],[-1,1]]], "gamma": []})");
    const CrossedElement worked(X(2) * P(2) - 4 * Ip() * X() * P() * H1() - 2 * H1(2), -4 * H1(2) * H2());
    CHECK(format(worked) == "x^2*p^2 - 4*i*x*p*h1 - 2*h1^2 - 4*h1^2*h2*gamma");
    CHECK(format(worked, Format::latex) ==
          "x^{2} p^{2} - 4 i x p \\hbar_1 - 2 \\hbar_1^{2} - 4 \\hbar_1^{2} \\hbar_2 \\gamma");
    CHECK(format(CrossedElement(Cq(-3, 2) * X(), MultiPoly(1))) == "-3/2*x + gamma");
    CHECK(format(CrossedElement(Cq(1, 2) * X(), MultiPoly(1)), Format::latex) == "\\frac{1}{2} x + \\gamma");
    CHECK(format(CrossedElement(C(1, -2) * P())) == "(1 - 2*i)*p");
    CHECK(format(CrossedElement(MultiPoly(), -Ip())) == "-i*gamma");
    CHECK_THROWS_AS(format(CrossedElement(K())), std::invalid_argument);
}

TEST_CASE("json keeps huge integers exact")
{
    const Integer big = Integer("123456789012345678901234567890");
    const CrossedElement e{MultiPoly(GaussianRational(Rational(big)))};
    CHECK(dwstar::cli::format(e, Format::json) ==
          R"({"plain": [[0,0,0,0,["123456789012345678901234567890",1],[0,1]]], "gamma": []})");
}

TEST_CASE("text format round trips")
{
    Rng rng(2024);
    for (int t = 0; t < 100; ++t) {
        const CrossedElement e = random_element(rng);
        const std::string text = dwstar::cli::format(e);
        CHECK(dwstar::cli::parse(text) == e);
        CHECK(dwstar::cli::format(dwstar::cli::parse(text)) == text);
        CHECK(dwstar::cli::format(e, Format::json) == dwstar::cli::format(dwstar::cli::parse(text), Format::json));
    }
}

TEST_CASE("subcommand examples")
{
    const Outcome star = run_cli({"star", "--a", "p^2", "--b", "x^2"});
    CHECK(star.code == dwstar::cli::exit_ok);
    CHECK(star.out == "x^2*p^2 - 4*i*x*p*h1 - 2*h1^2 - 4*h1^2*h2*gamma\n");

    const Outcome comps = run_cli({"compositions", "--m", "1", "--n", "1"});
    CHECK(comps.code == 0);
    CHECK(comps.out == "(0,1)\n(1,0)\n");

    CHECK(run_cli({"verify-assoc", "--trials", "10", "--degree", "3", "--seed", "7"}).code == 0);
}

TEST_CASE("other subcommands")
{
    CHECK(run_cli({"cterm", "--j", "2", "--l", "1", "--a", "p^2", "--b", "x^2", "--family", "1"}).out == "-4\n");
    CHECK(run_cli({"cterm", "--j", "1", "--l", "0", "--a", "p", "--b", "x", "--family", "0"}).out == "-i\n");
    CHECK(run_cli({"cnu", "--nu", "0,0", "--s", "4"}).out == "1\n");
    CHECK(run_cli({"cnu", "--nu", "2", "--s", "3"}).out == "10\n");
    CHECK(run_cli({"weights", "--expr", "x^2*p + x*gamma"}).out == "plain: 1\ngamma: 1\n");
    CHECK(run_cli({"weights", "--expr", "x + p"}).out == "plain: mixed\ngamma: zero\n");
    const Outcome oracle = run_cli({"verify-oracle", "--max-degree", "2"});
    CHECK(oracle.code == 0);
    CHECK(oracle.out == "ok: 81 monomial pairs, max degree 2\n");
    CHECK(run_cli({"star", "--a", "p", "--b", "x", "--format", "json"}).out ==
          R"({"plain": [[1,1,0,0,[1,1],[0,1]],[0,0,1,0,[0,1],[-1,1]]], "gamma": [[0,0,1,1,[0,1],[-2,1]]]})"
          "\n");
}

TEST_CASE("exit codes")
{
    CHECK(run_cli({}).code == dwstar::cli::exit_usage);
    CHECK(run_cli({"star", "--a", "x"}).code == dwstar::cli::exit_usage);
    CHECK(run_cli({"star", "--a", "x", "--b", "p", "--bogus", "1"}).code == dwstar::cli::exit_usage);
    CHECK(run_cli({"star", "--a", "x", "--b", "p", "--format", "xml"}).code == dwstar::cli::exit_usage);
    CHECK(run_cli({"cterm", "--j", "1", "--l", "0", "--a", "p", "--b", "x", "--family", "2"}).code ==
          dwstar::cli::exit_usage);
    CHECK(run_cli({"cnu", "--nu", "0", "--s", "-1"}).code == dwstar::cli::exit_usage);
    CHECK(run_cli({"--help"}).code == dwstar::cli::exit_ok);

    const Outcome bad = run_cli({"star", "--a", "x^", "--b", "p"});
    CHECK(bad.code == dwstar::cli::exit_parse);
    CHECK(bad.err.find("offset 3") != std::string::npos);
    CHECK(run_cli({"star", "--a", "gamma^2", "--b", "p"}).code == dwstar::cli::exit_parse);
    CHECK(run_cli({"cterm", "--j", "1", "--l", "0", "--a", "p*h1", "--b", "x", "--family", "0"}).code ==
          dwstar::cli::exit_parse);
    CHECK(run_cli({"cnu", "--nu", "1,0,1", "--s", "1"}).code == dwstar::cli::exit_parse);
}

TEST_CASE("jets file and jet-match")
{
    const MultiPoly f = X(3) * P() - 2 * P(2) + Cq(1, 3) * X();
    const JetData data = jets_of(f, make_rational(1, 2), Rational(-1), 1, 1);
    const std::string json = dwstar::cli::jets_to_json(data);
    const JetData back = dwstar::cli::jets_from_json(json);
    CHECK(back.x0 == data.x0);
    CHECK(back.p0 == data.p0);
    CHECK(back.values == data.values);
    CHECK_THROWS_AS(dwstar::cli::jets_from_json("{"), dwstar::cli::JetsFileError);
    CHECK_THROWS_AS(dwstar::cli::jets_from_json(R"({"point": [1,0,1,1], "m": 0, "n": 0, "values": []})"),
                    dwstar::cli::JetsFileError);

    const auto path = std::filesystem::temp_directory_path() / "dwstar_test_jets.json";
    {
        std::ofstream file(path);
        file << json;
    }
    const Outcome ok = run_cli({"jet-match", "--point", "1/2,-1", "--m", "1", "--n", "1", "--jets", path.string()});
    CHECK(ok.code == 0);
    const MultiPoly g = dwstar::cli::parse(ok.out.substr(0, ok.out.size() - 1)).plain;
    CHECK(jets_agree(g, data));
    CHECK(run_cli({"jet-match", "--point", "1,-1", "--m", "1", "--n", "1", "--jets", path.string()}).code ==
          dwstar::cli::exit_parse);
    CHECK(run_cli({"jet-match", "--point", "1/2", "--m", "1", "--n", "1", "--jets", path.string()}).code ==
          dwstar::cli::exit_usage);
    std::filesystem::remove(path);
    CHECK(run_cli({"jet-match", "--point", "1/2,-1", "--m", "1", "--n", "1", "--jets", path.string()}).code ==
          dwstar::cli::exit_parse);
}

TEST_CASE("check-star reports mismatches with exit code 3")
{
    CHECK(run_cli({"check-star", "--a", "p", "--b", "x", "--expect", "x*p - i*h1 - 2*i*h1*h2*gamma"}).code == 0);
    const Outcome bad = run_cli({"check-star", "--a", "p", "--b", "x", "--expect", "x*p - i*h1"});
    CHECK(bad.code == dwstar::cli::exit_verification);
    CHECK(bad.out.find("difference -2*i*h1*h2*gamma") != std::string::npos);
}
