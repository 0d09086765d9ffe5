// polycat: exact arithmetic for truncated power series over prime
// fields, Catalan number generation, and Catalan-series solving of the
// quadratic congruence t + a*x + x^2 = 0 in F_p[t]/(t^n).
//
// Exit codes: 0 verified success, 1 mathematical verification failure,
// 2 invalid input or usage.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polycat/catalan.hpp"
#include "polycat/json_io.hpp"
#include "polycat/polyseries.hpp"
#include "polycat/primes.hpp"
#include "polycat/solver.hpp"

namespace {

using nlohmann::json;
using namespace polycat;

constexpr int kExitVerified = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct GlobalFlags {
    bool json = false;
    bool balanced = false;
};

QuadraticForm parseForm(const std::string& name) {
    if (name == "plus-a") return QuadraticForm::PlusA;
    if (name == "minus-a") return QuadraticForm::MinusA;
    throw ParseError("unknown form '" + name + "' (expected plus-a or minus-a)");
}

json listToJson(const std::vector<BigInt>& values) {
    json arr = json::array();
    for (const BigInt& v : values) arr.push_back(v.str());
    return arr;
}

void printList(const std::vector<BigInt>& values, const std::string& sep) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) std::cout << sep;
        std::cout << values[i].str();
    }
    std::cout << "\n";
}

// --- catalan ---------------------------------------------------------

struct CatalanArgs {
    std::uint64_t count = 0;
    std::string mod;
    std::string method = "binomial";
};

int cmdCatalan(const CatalanArgs& args, const GlobalFlags& flags) {
    std::vector<BigInt> values;
    bool usedFallback = false;

    if (args.method == "ratio" && args.mod.empty())
        throw ParseError("--method ratio needs --mod");

    if (args.mod.empty()) {
        if (args.method == "binomial") {
            for (std::uint64_t k = 0; k <= args.count; ++k) values.push_back(catalanBinomial(k));
        } else if (args.method == "convolution") {
            values = catalanConvolution(args.count);
        } else {
            throw ParseError("unknown method '" + args.method + "'");
        }
    } else {
        Prime p(parseBigInt(args.mod));
        if (args.method == "ratio") {
            CatalanModResult r = catalanRatioModP(args.count, p);
            usedFallback = r.usedFallback;
            for (const Residue& v : r.values) values.push_back(v.value());
        } else if (args.method == "binomial") {
            for (std::uint64_t k = 0; k <= args.count; ++k)
                values.push_back(catalanBinomial(k) % p.value());
        } else if (args.method == "convolution") {
            for (const BigInt& v : catalanConvolution(args.count)) values.push_back(v % p.value());
        } else {
            throw ParseError("unknown method '" + args.method + "'");
        }
    }

    if (flags.json) {
        json out{{"method", args.method}, {"values", listToJson(values)}};
        if (!args.mod.empty()) out["mod"] = parseBigInt(args.mod).str();
        if (usedFallback) out["fallback"] = "exact-reduce";
        std::cout << out.dump() << "\n";
    } else {
        printList(values, ", ");
        if (usedFallback) std::cerr << "fallback: exact-reduce\n";
    }
    return kExitVerified;
}

// --- solve -----------------------------------------------------------

struct SolveArgs {
    std::string p;
    std::uint64_t n = 0;
    std::string a = "1";
    std::string form = "plus-a";
    bool numeric = false;
    std::string bruteCap = "1000000";
};

int cmdSolve(const SolveArgs& args, const GlobalFlags& flags) {
    Prime p(parseBigInt(args.p));
    Residue a(parseBigInt(args.a), p);
    QuadraticProblem prob(p, args.n, a);

    SolveOptions options;
    options.form = parseForm(args.form);
    options.wantNumeric = args.numeric;
    options.bruteCap = parseBigInt(args.bruteCap);

    SolveReport report = solveQuadratic(prob, options);
    int exit = report.verified && report.allOraclesAgree() ? kExitVerified : kExitVerifyFailed;

    if (flags.json) {
        std::cout << toJson(report, prob, args.numeric).dump() << "\n";
        return exit;
    }

    auto flag = [](const std::optional<bool>& f) {
        return !f ? "skipped" : (*f ? "agree" : "DISAGREE");
    };
    std::cout << "p = " << p.value() << ", n = " << args.n << ", a = " << a.value()
              << ", form = " << formName(options.form) << "\n";
    std::cout << "x1 = " << report.root1.toText(flags.balanced) << "\n";
    std::cout << "x2 = " << report.root2.toText(flags.balanced) << "\n";
    std::cout << "residual x1: " << (report.residual1.isZero() ? "0" : report.residual1.toText(flags.balanced))
              << "\n";
    std::cout << "residual x2: " << (report.residual2.isZero() ? "0" : report.residual2.toText(flags.balanced))
              << "\n";
    std::cout << "oracles: fixed_point " << (report.fixedPointAgrees ? "agree" : "DISAGREE")
              << ", hensel " << flag(report.henselAgrees) << ", brute_force "
              << flag(report.bruteForceAgrees) << "\n";
    if (args.numeric && report.numeric) {
        std::cout << "numeric (mod " << report.numeric->x1.modulus() << "): x1 = "
                  << report.numeric->x1.value() << ", x2 = " << report.numeric->x2.value()
                  << "\n";
    }
    std::cout << "verified: " << (report.verified ? "true" : "false") << "\n";
    return exit;
}

// --- verify ----------------------------------------------------------

struct VerifyArgs {
    std::string p;
    std::uint64_t n = 0;
    std::string a;
    std::string coeffs;
    std::string form = "plus-a";
};

int cmdVerify(const VerifyArgs& args, const GlobalFlags& flags) {
    Prime p(parseBigInt(args.p));
    Residue a(parseBigInt(args.a), p);
    json parsed = json::parse(args.coeffs, nullptr, false);
    if (parsed.is_discarded()) throw ParseError("coefficients must be a JSON array");
    TruncSeries x = TruncSeries::fromCoeffs(p, args.n, bigIntsFromJson(parsed));
    TruncSeries residual = quadraticResidual(x, a, parseForm(args.form));
    bool ok = residual.isZero();

    if (flags.json) {
        std::cout << json{{"verified", ok}, {"residual", toJson(residual)}}.dump() << "\n";
    } else {
        std::cout << "residual = " << residual.toText(flags.balanced) << "\n";
    }
    return ok ? kExitVerified : kExitVerifyFailed;
}

// --- primes ----------------------------------------------------------

struct PrimesArgs {
    std::uint64_t count = 0;
    bool checkAxioms = false;
};

int cmdPrimes(const PrimesArgs& args, const GlobalFlags& flags) {
    if (args.count == 0) throw ParseError("--count must be >= 1");
    Polyseries primes = primePolyseries().truncation(args.count);

    PrimeAxiomReport axioms{};
    if (args.checkAxioms) axioms = checkPrimeAxioms(args.count);

    if (flags.json) {
        json out{{"primes", listToJson(primes.terms())}};
        if (args.checkAxioms)
            out["axioms"] = json{{"prime1", axioms.strictlySorted},
                                 {"prime2", axioms.pairwiseNonDivisible}};
        std::cout << out.dump() << "\n";
    } else {
        printList(primes.terms(), " ");
        if (args.checkAxioms)
            std::cout << "Prime1: " << (axioms.strictlySorted ? "pass" : "fail")
                      << ", Prime2: " << (axioms.pairwiseNonDivisible ? "pass" : "fail") << "\n";
    }
    if (args.checkAxioms && !axioms.pass()) return kExitVerifyFailed;
    return kExitVerified;
}

// --- seq -------------------------------------------------------------

Polyseries listArg(const std::string& text) {
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) throw ParseError("list arguments must be JSON arrays");
    return Polyseries::fromTerms(bigIntsFromJson(parsed));
}

void requireArgs(const std::vector<std::string>& args, std::size_t n, const std::string& usage) {
    if (args.size() != n) throw ParseError("usage: seq " + usage);
}

int cmdSeq(const std::string& op, const std::vector<std::string>& args,
           const GlobalFlags& flags) {
    json result;
    std::string text;

    if (op == "value") {
        requireArgs(args, 2, "value <list> <index>");
        BigInt idx = parseBigInt(args[1]);
        if (idx < 0 || !fitsUint64(idx)) throw InvalidIndex("index out of range: " + idx.str());
        BigInt v = listArg(args[0]).value(idx.convert_to<std::uint64_t>());
        result = v.str();
        text = v.str();
    } else if (op == "length") {
        requireArgs(args, 1, "length <list>");
        std::uint64_t len = *listArg(args[0]).length();
        result = len;
        text = std::to_string(len);
    } else if (op == "index") {
        requireArgs(args, 2, "index <list> <term>");
        Polyseries a = listArg(args[0]);
        auto i = indexOf(a, parseBigInt(args[1]));
        // The sequence surface encodes NotFound as -1.
        result = i ? static_cast<std::int64_t>(*i) : -1;
        text = i ? std::to_string(*i) : "-1";
    } else if (op == "next" || op == "previous") {
        requireArgs(args, 2, op + " <list> <term>");
        Polyseries a = listArg(args[0]);
        std::uint64_t bound = *a.length();
        auto v = op == "next" ? next(a, parseBigInt(args[1]), bound)
                              : previous(a, parseBigInt(args[1]), bound);
        result = v ? json(v->str()) : json(nullptr);
        text = v ? v->str() : "not-found";
    } else if (op == "sorted") {
        requireArgs(args, 1, "sorted <list>");
        const std::vector<BigInt> terms = sorted(listArg(args[0])).terms();
        result = listToJson(terms);
        text = "[";
        for (std::size_t i = 0; i < terms.size(); ++i)
            text += (i ? "," : "") + terms[i].str();
        text += "]";
    } else if (op == "tailmin") {
        requireArgs(args, 2, "tailmin <list> <start>");
        BigInt idx = parseBigInt(args[1]);
        if (idx < 0 || !fitsUint64(idx)) throw InvalidIndex("index out of range: " + idx.str());
        BigInt v = tailmin(listArg(args[0]), idx.convert_to<std::uint64_t>());
        result = v.str();
        text = v.str();
    } else if (op == "issorted") {
        requireArgs(args, 1, "issorted <list>");
        bool b = issorted(listArg(args[0]));
        result = b;
        text = b ? "true" : "false";
    } else if (op == "permutad") {
        requireArgs(args, 2, "permutad <list> <list>");
        bool b = permutad(listArg(args[0]), listArg(args[1]));
        result = b;
        text = b ? "true" : "false";
    } else {
        throw ParseError("unknown seq operation '" + op + "'");
    }

    if (flags.json)
        std::cout << json{{"result", result}}.dump() << "\n";
    else
        std::cout << text << "\n";
    return kExitVerified;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Truncated power series over F_p and Catalan-series quadratic congruence solving"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags flags;
    app.add_flag("--json", flags.json, "machine-readable JSON output");
    app.add_flag("--balanced", flags.balanced,
                 "render coefficients as signed balanced values");

    CatalanArgs catalanArgs;
    CLI::App* catalan = app.add_subcommand("catalan", "print C_0..C_count");
    catalan->add_option("--count", catalanArgs.count, "largest index to print")->required();
    catalan->add_option("--mod", catalanArgs.mod, "reduce mod this prime");
    catalan->add_option("--method", catalanArgs.method,
                        "binomial | convolution | ratio (ratio needs --mod)");

    SolveArgs solveArgs;
    CLI::App* solve = app.add_subcommand("solve", "solve t +- a*x + x^2 = 0 in F_p[t]/(t^n)");
    solve->add_option("--p", solveArgs.p, "prime modulus")->required();
    solve->add_option("--n", solveArgs.n, "truncation order (>= 2)")->required();
    solve->add_option("--a", solveArgs.a, "linear coefficient, a unit mod p (default 1)");
    solve->add_option("--form", solveArgs.form, "plus-a | minus-a");
    solve->add_flag("--numeric", solveArgs.numeric, "include the mod p^n instantiation");
    solve->add_option("--brute-cap", solveArgs.bruteCap,
                      "run the exhaustive oracle when p^n is at most this");

    VerifyArgs verifyArgs;
    CLI::App* verify = app.add_subcommand("verify", "check a candidate root's residual");
    verify->add_option("--p", verifyArgs.p, "prime modulus")->required();
    verify->add_option("--n", verifyArgs.n, "truncation order (>= 2)")->required();
    verify->add_option("--a", verifyArgs.a, "linear coefficient")->required();
    verify->add_option("--coeffs", verifyArgs.coeffs,
                       "JSON array of coefficients c0..c_k (signed or decimal strings)")
        ->required();
    verify->add_option("--form", verifyArgs.form, "plus-a | minus-a");

    PrimesArgs primesArgs;
    CLI::App* primes = app.add_subcommand("primes", "print the prime stream");
    primes->add_option("--count", primesArgs.count, "how many primes")->required();
    primes->add_flag("--check-axioms", primesArgs.checkAxioms,
                     "verify strict sortedness and pairwise non-divisibility");

    std::string seqOp;
    std::string seqArg1, seqArg2;
    CLI::App* seq = app.add_subcommand("seq", "sequence operations on JSON lists");
    seq->add_option("op", seqOp,
                    "value | length | index | next | previous | sorted | tailmin | issorted | permutad")
        ->required();
    // two scalar slots: a vector positional would re-tokenize [1,2,3]
    CLI::Option* seqArg1Opt = seq->add_option("arg1", seqArg1, "first argument");
    CLI::Option* seqArg2Opt = seq->add_option("arg2", seqArg2, "second argument");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (catalan->parsed()) return cmdCatalan(catalanArgs, flags);
        if (solve->parsed()) return cmdSolve(solveArgs, flags);
        if (verify->parsed()) return cmdVerify(verifyArgs, flags);
        if (primes->parsed()) return cmdPrimes(primesArgs, flags);
        if (seq->parsed()) {
            std::vector<std::string> seqArgs;
            if (seqArg1Opt->count()) seqArgs.push_back(seqArg1);
            if (seqArg2Opt->count()) seqArgs.push_back(seqArg2);
            return cmdSeq(seqOp, seqArgs, flags);
        }
    } catch (const polycat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
