#include <doctest.h>

#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef SCFFD_CLI_PATH
#error "SCFFD_CLI_PATH must point at the CLI binary"
#endif

namespace {

using json = nlohmann::json;

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(SCFFD_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    CliResult r;
    r.out = out;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json parse_doc(const CliResult& r) {
    CAPTURE(r.out);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("cli: divisor listing") {
    CliResult r = run_cli("divisors --ring 'Quad(5)' --elem 6");
    CHECK(r.code == 0);
    json doc = parse_doc(r);
    CHECK(doc["command"] == "divisors");
    CHECK(doc["signature"] == "Quad(5)");
    CHECK(doc["count"] == 12);
    CHECK(doc["divisors"] ==
          json::array({"1", "-1", "2", "-2", "1 + s", "-1 + s", "1 - s", "-1 - s", "3", "-3", "6",
                       "-6"}));
}

TEST_CASE("cli: units and predicates") {
    json u = parse_doc(run_cli("units --ring 'Quad(5)'"));
    CHECK(u["units"] == json::array({"1", "-1"}));

    json p = parse_doc(run_cli("prime --ring 'Quad(5)' --elem 2"));
    CHECK(p["value"] == "false");
    json i = parse_doc(run_cli("irreducible --ring 'Quad(5)' --elem 2"));
    CHECK(i["value"] == "true");
    json x = parse_doc(run_cli("prime --ring 'Destroy(Z,2,x)' --elem x"));
    CHECK(x["value"] == "unsupported");

    json a = parse_doc(run_cli("associates --ring 'Quad(5)' --elem '1+s' --elem2 '-1-s'"));
    CHECK(a["value"] == true);

    json f = parse_doc(run_cli("factor --ring Z --elem 12"));
    CHECK(f["unit"] == "1");
    CHECK(f["factors"] == json::array({"2", "2", "3"}));

    json rd = parse_doc(run_cli("reduce --ring Z --elem 6 --elem2 4"));
    CHECK(rd["num"] == "3");
    CHECK(rd["den"] == "2");
}

TEST_CASE("cli: staged queries and modes") {
    CliResult lim = run_cli("prime --ring 'Staged(primes=[0,2],vars=[x0,x1])' --elem 3 --mode limit");
    CHECK(lim.code == 0);
    CHECK(parse_doc(lim)["value"] == "true");

    CHECK(parse_doc(run_cli("prime --ring 'Staged(primes=[0,2],vars=[x0,x1])' --elem 5 "
                            "--mode at-stage:1"))["value"] == "true");
    CHECK(parse_doc(run_cli("prime --ring 'Staged(primes=[0,2],vars=[x0,x1])' --elem 5 "
                            "--mode at-stage:2"))["value"] == "false");

    CHECK(parse_doc(run_cli("irreducible --ring 'Fringe(StagedIrred(primes=[0],vars=[x0]),y)' "
                            "--elem 2 --mode limit"))["value"] == "false");
    CHECK(parse_doc(run_cli("irreducible --ring 'StagedIrred(primes=[0,2],vars=[x0,x1])' "
                            "--elem 2 --mode at-stage:0"))["value"] == "true");

    CliResult bad = run_cli("prime --ring Z --elem 3 --mode limit");
    CHECK(bad.code == 1);
    CHECK(parse_doc(bad)["error"]["kind"] == "ValidationError");

    CliResult over = run_cli("prime --ring 'Staged(primes=[0],vars=[x0])' --elem 3 --mode at-stage:5");
    CHECK(over.code == 1);
    CHECK(parse_doc(over)["error"]["kind"] == "StageMismatch");
}

TEST_CASE("cli: stage-trace renders both coding dynamics") {
    CliResult r = run_cli("stage-trace --ring 'Staged(primes=[0,2],vars=[x0,x1])'");
    CHECK(r.code == 0);
    json doc = parse_doc(r);
    CHECK(doc["destroys"] == "primality");
    CHECK(doc["schedule"] == json::array({0, 2}));
    REQUIRE(doc["stages"].size() == 3);
    CHECK(doc["stages"][0]["ring"] == "Z");
    CHECK(doc["stages"][0]["primes"][0]["prime"] == "true");
    CHECK(doc["stages"][1]["primes"][0]["prime"] == "false");
    CHECK(doc["stages"][2]["primes"][1]["prime"] == "false");
    for (const auto& row : doc["stages"])
        for (const auto& cell : row["primes"]) CHECK(cell["irreducible"] == "true");

    json irr = parse_doc(run_cli("stage-trace --ring 'StagedIrred(primes=[0],vars=[x0])'"));
    CHECK(irr["destroys"] == "irreducibility");
    CHECK(irr["stages"][0]["primes"][0]["irreducible"] == "true");
    CHECK(irr["stages"][1]["primes"][0]["irreducible"] == "false");
    CHECK(irr["stages"][1]["primes"][0]["prime"] == "unsupported");

    CliResult plain = run_cli("stage-trace --ring Z");
    CHECK(plain.code == 1);
}

TEST_CASE("cli: membership vs parse") {
    CliResult m = run_cli("member --ring 'Destroy(Z,2,x)' --elem 'x/2'");
    CHECK(m.code == 0);  // a definite negative answer is still an answer
    json md = parse_doc(m);
    CHECK(md["member"] == false);
    CHECK(md["element"].is_null());

    json yes = parse_doc(run_cli("member --ring 'Destroy(Z,2,x)' --elem '(x^2)/2'"));
    CHECK(yes["member"] == true);
    CHECK(yes["element"] == "(2/4)*x^2");

    CliResult p = run_cli("parse --ring 'Destroy(Z,2,x)' --elem 'x/2'");
    CHECK(p.code == 1);
    CHECK(parse_doc(p)["error"]["kind"] == "NotInRing");

    json ok = parse_doc(run_cli("parse --ring 'StagedIrred(primes=[0],vars=[x0])' --elem '2/x0'"));
    CHECK(ok["element"] == "2*x0^-1");
}

TEST_CASE("cli: exit-code table") {
    CHECK(run_cli("divisors --ring 'Quad(5)' --elem 6").code == 0);
    CHECK(run_cli("parse --ring Z --elem '1/2'").code == 1);         // NotInRing
    CHECK(run_cli("divisors --ring 'Quad(7)' --elem 0").code == 1);  // ZeroArgument -> validation class
    CHECK(run_cli("units --ring 'StagedIrred(primes=[0],vars=[x0])'").code == 0);  // units stay computable
    CHECK(run_cli("divisors --ring Z").code == 1);                   // missing --elem
    CHECK(run_cli("parse --ring 'Frob(Z)'").code == 2);              // SyntaxError (descriptor)
    CHECK(run_cli("parse --ring Z --elem '2 +'").code == 2);         // SyntaxError (expression)
    CHECK(run_cli("bogus --ring Z").code == 2);                      // unknown subcommand
    CliResult cap = run_cli("divisors --ring 'Poly(Z,x)' --elem 'x^2-1' --max-tuples 1");
    CHECK(cap.code == 3);
    CHECK(parse_doc(cap)["error"]["kind"] == "SearchCapExceeded");

    CliResult nd = run_cli("divisors --ring 'StagedIrred(primes=[0],vars=[x0])' --elem 2");
    CHECK(nd.code == 1);
    CHECK(parse_doc(nd)["error"]["kind"] == "UnsupportedRing");

    json su = parse_doc(run_cli("units --ring 'StagedIrred(primes=[0],vars=[x0])'"));
    CHECK(su["units"] == json::array({"1", "-1"}));
}

TEST_CASE("cli: identical invocations are byte-identical") {
    for (const char* args :
         {"divisors --ring 'Quad(5)' --elem 6",
          "stage-trace --ring 'Staged(primes=[0,2],vars=[x0,x1])'",
          "factor --ring 'Poly(Z,x)' --elem 'x^2-1'",
          "prime --ring 'Fringe(Z,y)' --elem 'y-1'"}) {
        CliResult a = run_cli(args);
        CliResult b = run_cli(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
        CHECK(a.out.back() == '\n');
    }
}
