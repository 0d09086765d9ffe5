#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "support/subprocess.hpp"

using nlohmann::json;
using testutil::CommandResult;

namespace {

CommandResult cli(const std::vector<std::string>& args) {
    return testutil::run(POLYCAT_CLI_PATH, args);
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

// The coefficient lists of the two degree-10 reference roots for
// t + x + x^2 = 0 over F_10007 (c0..c9, balanced signs folded in).
const std::string kRoot1Corrected = "[0,-1,-1,-2,-5,-14,-42,-132,-429,-1430]";
const std::string kRoot2Corrected = "[-1,1,1,2,5,14,42,132,429,1430]";
// The same list with the two plausible transcriptions of a corrupted
// fifth/sixth coefficient pair.
const std::string kRoot1CorruptedMerged = "[0,-1,-1,-2,-5,-56,0,-132,-429,-1430]";
const std::string kRoot1CorruptedShifted = "[0,-1,-1,-2,-5,-42,0,-132,-429,-1430]";

} // namespace

TEST_CASE("catalan prints the first ten values") {
    CommandResult r = cli({"catalan", "--count", "9"});
    CHECK(r.exitCode == 0);
    CHECK(r.out == "1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862\n");
}

TEST_CASE("catalan count zero prints the base case") {
    CommandResult r = cli({"catalan", "--count", "0"});
    CHECK(r.exitCode == 0);
    CHECK(r.out == "1\n");
}

TEST_CASE("catalan ratio falls back for small primes and says so") {
    CommandResult r = cli({"catalan", "--count", "10", "--mod", "7", "--method", "ratio"});
    CHECK(r.exitCode == 0);
    CHECK(r.out == "1, 1, 2, 5, 0, 0, 6, 2, 2, 4, 3\n");
    CHECK(contains(r.err, "fallback: exact-reduce"));

    CommandResult big = cli({"catalan", "--count", "10", "--mod", "101", "--method", "ratio"});
    CHECK(big.exitCode == 0);
    CHECK_FALSE(contains(big.err, "fallback"));
}

TEST_CASE("catalan json output carries decimal strings") {
    CommandResult r = cli({"catalan", "--count", "40", "--json"});
    CHECK(r.exitCode == 0);
    json j = json::parse(r.out);
    CHECK(j["values"].size() == 41);
    CHECK(j["values"][40] == "2622127042276492108820"); // exceeds 64 bits
}

TEST_CASE("catalan rejects bad usage") {
    CHECK(cli({"catalan"}).exitCode == 2);
    CHECK(cli({"catalan", "--count", "5", "--method", "ratio"}).exitCode == 2);
    CHECK(cli({"catalan", "--count", "5", "--method", "nope"}).exitCode == 2);
    CHECK(cli({"catalan", "--count", "5", "--mod", "6"}).exitCode == 2); // not prime
}

TEST_CASE("solve reproduces the degree-10 reference output") {
    CommandResult r = cli({"solve", "--p", "10007", "--n", "10", "--a", "1", "--balanced"});
    CHECK(r.exitCode == 0);
    CHECK(contains(r.out,
                   "x1 = -t - t^2 - 2*t^3 - 5*t^4 - 14*t^5 - 42*t^6 - 132*t^7 - 429*t^8 - 1430*t^9"));
    CHECK(contains(r.out,
                   "x2 = -1 + t + t^2 + 2*t^3 + 5*t^4 + 14*t^5 + 42*t^6 + 132*t^7 + 429*t^8 + 1430*t^9"));
    CHECK(contains(r.out, "verified: true"));
}

TEST_CASE("solve json matches the frozen schema") {
    CommandResult r = cli({"solve", "--p", "10007", "--n", "10", "--a", "1", "--json"});
    CHECK(r.exitCode == 0);
    json j = json::parse(r.out);
    CHECK(j["p"] == "10007");
    CHECK(j["n"] == 10);
    CHECK(j["a"] == "1");
    CHECK(j["form"] == "plus-a");
    CHECK(j["verified"] == true);
    CHECK(j["oracles"]["fixed_point"] == true);
    CHECK(j["oracles"]["hensel"] == true);
    CHECK(j["oracles"]["brute_force"] == "skipped"); // 10007^10 over the cap
    CHECK(j["numeric"].is_null());

    std::vector<std::string> expected{"0"};
    for (int c : {1, 1, 2, 5, 14, 42, 132, 429, 1430})
        expected.push_back(std::to_string(10007 - c));
    CHECK(j["roots"][0]["coeffs"] == json(expected));
}

TEST_CASE("solve json round-trips through verify") {
    for (const std::string& form : {"plus-a", "minus-a"}) {
        CommandResult solved =
            cli({"solve", "--p", "101", "--n", "8", "--a", "3", "--form", form, "--json"});
        CHECK(solved.exitCode == 0);
        json j = json::parse(solved.out);
        for (int root = 0; root < 2; ++root) {
            CommandResult verified = cli({"verify", "--p", "101", "--n", "8", "--a", "3",
                                          "--form", form,
                                          "--coeffs", j["roots"][root]["coeffs"].dump()});
            CHECK(verified.exitCode == 0);
        }
    }
}

TEST_CASE("solve numeric instantiation") {
    CommandResult r = cli({"solve", "--p", "5", "--n", "4", "--a", "1", "--numeric"});
    CHECK(r.exitCode == 0);
    CHECK(contains(r.out, "numeric (mod 625): x1 = 345, x2 = 279"));

    CommandResult j = cli({"solve", "--p", "5", "--n", "4", "--a", "1", "--numeric", "--json"});
    json parsed = json::parse(j.out);
    CHECK(parsed["numeric"]["modulus"] == "625");
    CHECK(parsed["numeric"]["x1"] == "345");
    CHECK(parsed["numeric"]["x2"] == "279");
    CHECK(parsed["oracles"]["hensel"] == true);
    CHECK(parsed["oracles"]["brute_force"] == true);
}

TEST_CASE("solve rejects a non-invertible linear coefficient") {
    CommandResult r = cli({"solve", "--p", "7", "--n", "4", "--a", "0"});
    CHECK(r.exitCode == 2);
    CHECK(contains(r.err, "a must be invertible"));
}

TEST_CASE("solve minus-a form") {
    CommandResult r = cli({"solve", "--p", "101", "--n", "6", "--a", "1", "--form", "minus-a",
                           "--balanced"});
    CHECK(r.exitCode == 0);
    // root1 of t - x + x^2 is the plain Catalan series
    CHECK(contains(r.out, "x1 = t + t^2 + 2*t^3 + 5*t^4 + 14*t^5"));
    CHECK(contains(r.out, "verified: true"));
}

TEST_CASE("verify accepts the corrected reference roots and rejects corruptions") {
    CommandResult good = cli({"verify", "--p", "10007", "--n", "10", "--a", "1",
                              "--coeffs", kRoot1Corrected});
    CHECK(good.exitCode == 0);
    CHECK(contains(good.out, "residual = 0"));

    CommandResult good2 = cli({"verify", "--p", "10007", "--n", "10", "--a", "1",
                               "--coeffs", kRoot2Corrected});
    CHECK(good2.exitCode == 0);

    for (const std::string& corrupted : {kRoot1CorruptedMerged, kRoot1CorruptedShifted}) {
        CommandResult bad = cli({"verify", "--p", "10007", "--n", "10", "--a", "1",
                                 "--coeffs", corrupted});
        CHECK(bad.exitCode == 1);
        CHECK_FALSE(contains(bad.out, "residual = 0"));
    }
}

TEST_CASE("verify prints the nonzero residual for the zero series") {
    CommandResult r = cli({"verify", "--p", "7", "--n", "2", "--a", "1", "--coeffs", "[0]"});
    CHECK(r.exitCode == 1);
    CHECK(r.out == "residual = t\n");
}

TEST_CASE("verify rejects malformed input") {
    CHECK(cli({"verify", "--p", "10007", "--n", "2", "--a", "1",
               "--coeffs", "[0,1,2]"}).exitCode == 2); // longer than n
    CHECK(cli({"verify", "--p", "10007", "--n", "4", "--a", "1",
               "--coeffs", "not json"}).exitCode == 2);
    CHECK(cli({"verify", "--p", "10007", "--n", "4", "--a", "1",
               "--coeffs", "[1.5]"}).exitCode == 2);
}

TEST_CASE("primes prints the stream and checks the axioms") {
    CommandResult r = cli({"primes", "--count", "5"});
    CHECK(r.exitCode == 0);
    CHECK(r.out == "2 3 5 7 11\n");

    CommandResult axioms = cli({"primes", "--count", "200", "--check-axioms"});
    CHECK(axioms.exitCode == 0);
    CHECK(contains(axioms.out, "Prime1: pass, Prime2: pass"));

    CHECK(cli({"primes", "--count", "0"}).exitCode == 2);
}

TEST_CASE("seq operations") {
    CHECK(cli({"seq", "sorted", "[3,1,2]"}).out == "[1,2,3]\n");
    CHECK(cli({"seq", "permutad", "[3,1,2]", "[2,3,1]"}).out == "true\n");
    CHECK(cli({"seq", "permutad", "[1,1,2]", "[1,2,2]"}).out == "false\n");
    CHECK(cli({"seq", "index", "[2,3,5]", "4"}).out == "-1\n");
    CHECK(cli({"seq", "index", "[2,3,5]", "5"}).out == "3\n");
    CHECK(cli({"seq", "value", "[5,9,1]", "3"}).out == "1\n");
    CHECK(cli({"seq", "length", "[5,9,1]"}).out == "3\n");
    CHECK(cli({"seq", "length", "[]"}).out == "0\n");
    CHECK(cli({"seq", "permutad", "[]", "[]"}).out == "true\n");
    CHECK(cli({"seq", "tailmin", "[3,1,2]", "2"}).out == "1\n");
    CHECK(cli({"seq", "issorted", "[1,1,2]"}).out == "false\n");
    CHECK(cli({"seq", "next", "[2,3,5]", "3"}).out == "5\n");
    CHECK(cli({"seq", "next", "[2,3,5]", "5"}).out == "not-found\n");
    CHECK(cli({"seq", "previous", "[9,4,6]", "6"}).out == "4\n");

    json indexResult = json::parse(cli({"--json", "seq", "index", "[2,3,5]", "4"}).out);
    CHECK(indexResult["result"] == -1);
    json sortedResult = json::parse(cli({"--json", "seq", "sorted", "[3,1,2]"}).out);
    CHECK(sortedResult["result"] == json::array({"1", "2", "3"}));
}

TEST_CASE("seq carries big integers without precision loss") {
    CommandResult r = cli({"seq", "sorted", "[\"123456789012345678901234567890\",\"5\"]"});
    CHECK(r.exitCode == 0);
    CHECK(r.out == "[5,123456789012345678901234567890]\n");
    CHECK(cli({"seq", "index", "[\"123456789012345678901234567890\"]",
               "123456789012345678901234567890"}).out == "1\n");
}

TEST_CASE("seq rejects malformed input") {
    CHECK(cli({"seq", "value", "[5,9,1]", "4"}).exitCode == 2);  // out of range
    CHECK(cli({"seq", "value", "[5,9,1]", "0"}).exitCode == 2);  // 1-based
    CHECK(cli({"seq", "value", "[5,9,1]", "18446744073709551617"}).exitCode == 2); // 2^64 + 1
    CHECK(cli({"seq", "sorted", "[3,1,-2]"}).exitCode == 2);     // negative term
    CHECK(cli({"seq", "frobnicate", "[1]"}).exitCode == 2);
    CHECK(cli({"seq", "permutad", "[1]"}).exitCode == 2);        // missing argument
}

TEST_CASE("global json flag works before or after the subcommand") {
    CHECK(json::parse(cli({"--json", "primes", "--count", "3"}).out)["primes"] ==
          json::array({"2", "3", "5"}));
    CHECK(json::parse(cli({"primes", "--count", "3", "--json"}).out)["primes"] ==
          json::array({"2", "3", "5"}));
}

TEST_CASE("unknown subcommands and flags exit 2") {
    CHECK(cli({"frobnicate"}).exitCode == 2);
    CHECK(cli({"solve", "--p", "7"}).exitCode == 2); // missing required flags
    CHECK(cli({}).exitCode == 2);
}
