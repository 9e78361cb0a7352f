#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "polyfunc/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = polyfunc::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("count subcommand") {
    Run r = cli({"count", "--ring", "z", "-n", "4", "-m", "4"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "64");

    Run g = cli({"count", "--ring", "gf", "-p", "2", "-f", "t^2", "-g", "t^2"});
    CHECK(g.code == 0);
    CHECK(first_line(g.out) == "64");

    Run multi = cli({"count", "--ring", "z", "-n", "3,2", "-m", "6"});
    CHECK(first_line(multi.out) == "11664");
}

TEST_CASE("json output is stable and consistent with the human output") {
    std::vector<std::string> args = {"count", "--ring", "z", "-n", "4", "-m", "4", "--json"};
    Run a = cli(args);
    Run b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);  // byte-identical

    json doc = json::parse(a.out);
    CHECK(doc["command"] == "count");
    CHECK(doc["result"]["count"] == "64");
    CHECK(doc["spec"]["target"] == "4");
    CHECK(doc["cross_checks"]["chen"] == "64");
    CHECK(doc["cross_checks"]["prime_power"] == "64");
    CHECK(doc["witnesses"].empty());

    Run human = cli({"count", "--ring", "z", "-n", "4", "-m", "4"});
    CHECK(first_line(human.out) == doc["result"]["count"].get<std::string>());
}

TEST_CASE("interp subcommand") {
    Run bad = cli({"interp", "--ring", "z", "-n", "4", "-m", "4", "--values", "0,0,1,0"});
    CHECK(bad.code == 0);
    CHECK(bad.out.find("NotPolynomial") != std::string::npos);
    CHECK(bad.out.find("2*b = 1 (mod 4)") != std::string::npos);
    CHECK(bad.out.find("k=(2)") != std::string::npos);

    Run good = cli({"interp", "--ring", "z", "-n", "4", "-m", "4", "--values", "0,1,0,1",
                    "--json"});
    json doc = json::parse(good.out);
    CHECK(doc["result"]["realizable"] == true);
    CHECK(doc["result"]["monomial"] == "x^2");
}

TEST_CASE("canonical, equiv and table") {
    Run c = cli({"canonical", "--ring", "z", "-n", "4", "-m", "4", "--poly", "x^2", "--json"});
    json doc = json::parse(c.out);
    CHECK(doc["result"]["monomial"] == "x^2");
    CHECK(doc["result"]["falling"].size() == 2);
    CHECK(doc["result"]["falling"][0]["coeff"] == "1");
    CHECK(doc["result"]["falling"][0]["modulus"] == "4");
    CHECK(doc["result"]["falling"][1]["modulus"] == "2");

    Run e = cli({"equiv", "--ring", "z", "-n", "2", "-m", "2", "--lhs", "x^2", "--rhs", "x"});
    CHECK(first_line(e.out) == "true");
    Run ne = cli({"equiv", "--ring", "z", "-n", "4", "-m", "4", "--lhs", "x^2", "--rhs", "x"});
    CHECK(first_line(ne.out) == "false");

    Run t = cli({"table", "--ring", "z", "-n", "4", "-m", "4", "--poly", "x^2"});
    CHECK(first_line(t.out) == "0, 1, 0, 1");
}

TEST_CASE("ordering and factorial") {
    Run o = cli({"ordering", "--ring", "gf", "-p", "2", "-K", "t^2", "-L", "6"});
    CHECK(o.code == 0);
    CHECK(o.out.find("0, 1, t, t + 1, t^2, t^2 + 1") != std::string::npos);
    CHECK(o.out.find("inf") != std::string::npos);  // exponents beyond |X| are infinite

    Run f = cli({"factorial", "--ring", "z", "-k", "3", "-I", "4"});
    CHECK(f.out.find("w_3 = 6") != std::string::npos);
    CHECK(f.out.find("v_3(D/4) = <6>") != std::string::npos);
}

TEST_CASE("selfcheck") {
    Run s = cli({"selfcheck", "--ring", "z", "-n", "4", "-m", "4"});
    CHECK(s.code == 0);
    CHECK(s.out.find("selfcheck: OK") != std::string::npos);
}

TEST_CASE("POLYFUNC_BUDGET environment variable sets the default budget") {
    setenv("POLYFUNC_BUDGET", "10", 1);
    CHECK(cli({"selfcheck", "--ring", "z", "-n", "4", "-m", "4"}).code == 3);
    // an explicit flag overrides the environment
    CHECK(cli({"selfcheck", "--ring", "z", "-n", "4", "-m", "4", "--budget", "100000"}).code == 0);
    unsetenv("POLYFUNC_BUDGET");
    CHECK(cli({"selfcheck", "--ring", "z", "-n", "4", "-m", "4"}).code == 0);
}

TEST_CASE("exit codes") {
    CHECK(cli({"count", "--ring", "z", "-n", "1", "-m", "4"}).code == 1);   // unit ideal
    CHECK(cli({"count", "--ring", "z", "-n", "4"}).code == 2);              // missing -m
    CHECK(cli({"canonical", "--ring", "z", "-n", "4", "-m", "4", "--poly", "x^^2"}).code == 2);
    CHECK(cli({"nonsense"}).code == 2);
    CHECK(cli({"selfcheck", "--ring", "z", "-n", "4", "-m", "4", "--budget", "10"}).code == 3);
    Run err = cli({"count", "--ring", "z", "-n", "0", "-m", "4"});
    CHECK(err.code == 1);
    CHECK(!err.err.empty());
}
