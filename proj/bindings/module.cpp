// Python bindings for the polycat core: Catalan generators, the series
// solver with its oracles, and the sequence operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "polycat/catalan.hpp"
#include "polycat/polyseries.hpp"
#include "polycat/primes.hpp"
#include "polycat/solver.hpp"

namespace py = pybind11;
using namespace polycat;

namespace pybind11::detail {

// BigInt <-> Python int, both directions through decimal strings so no
// precision is ever lost.
template <>
struct type_caster<BigInt> {
    PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        // PyNumber_Long normalizes int subtypes (bool) to an exact int
        py::object normalized = py::reinterpret_steal<py::object>(PyNumber_Long(src.ptr()));
        if (!normalized) {
            PyErr_Clear();
            return false;
        }
        value = BigInt(py::str(normalized).cast<std::string>());
        return true;
    }

    static handle cast(const BigInt& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

} // namespace pybind11::detail

namespace {

QuadraticForm formFromName(const std::string& name) {
    if (name == "plus-a") return QuadraticForm::PlusA;
    if (name == "minus-a") return QuadraticForm::MinusA;
    throw ParseError("unknown form '" + name + "' (expected plus-a or minus-a)");
}

QuadraticProblem makeProblem(const BigInt& p, std::uint64_t n, const BigInt& a) {
    Prime prime(p);
    return QuadraticProblem(prime, n, Residue(a, prime));
}

std::vector<BigInt> seriesCoeffs(const TruncSeries& s) { return s.coeffs(); }

py::object optFlag(const std::optional<bool>& f) {
    if (!f) return py::str("skipped");
    return py::bool_(*f);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact truncated power series over F_p and Catalan-series "
              "solving of t + a*x + x^2 = 0 mod t^n";

    m.def("is_prime", [](const BigInt& n) { return isPrime(n); }, py::arg("n"));

    m.def("classify", [](const BigInt& x, const BigInt& p) {
        return classifyName(Residue(x, Prime(p)).classify());
    }, py::arg("x"), py::arg("p"), "zero / positive-half / negative-half");
    m.def("balanced_value", [](const BigInt& x, const BigInt& p) {
        return Residue(x, Prime(p)).balancedValue();
    }, py::arg("x"), py::arg("p"));
    m.def("inverse_mod", [](const BigInt& x, const BigInt& p) {
        return Residue(x, Prime(p)).inverse().value();
    }, py::arg("x"), py::arg("p"));

    m.def("catalan_binomial", [](std::size_t n) { return catalanBinomial(n); }, py::arg("n"));
    m.def("catalan_convolution", [](std::size_t up_to) { return catalanConvolution(up_to); },
          py::arg("up_to"));
    m.def("catalan_ratio_mod_p", [](std::size_t up_to, const BigInt& p) {
        CatalanModResult r = catalanRatioModP(up_to, Prime(p));
        std::vector<BigInt> values;
        values.reserve(r.values.size());
        for (const Residue& v : r.values) values.push_back(v.value());
        return py::make_tuple(values, r.usedFallback);
    }, py::arg("up_to"), py::arg("p"), "returns (values, used_fallback)");
    m.def("gf_fixed_point_check", [](std::uint64_t n, const BigInt& p) {
        return gfFixedPointCheck(n, Prime(p));
    }, py::arg("n"), py::arg("p"));

    m.def("catalan_h", [](std::uint64_t n, const BigInt& p) {
        return seriesCoeffs(catalanH(n, Prime(p)));
    }, py::arg("n"), py::arg("p"));
    m.def("lemma_check", [](std::uint64_t n, const BigInt& p) {
        return lemmaCheck(n, Prime(p));
    }, py::arg("n"), py::arg("p"));

    m.def("series_root", [](const BigInt& p, std::uint64_t n, const BigInt& a,
                            const std::string& form) {
        return seriesCoeffs(seriesRoot(makeProblem(p, n, a), formFromName(form)));
    }, py::arg("p"), py::arg("n"), py::arg("a"), py::arg("form") = "plus-a");
    m.def("quadratic_residual", [](const BigInt& p, std::uint64_t n, const BigInt& a,
                                   const std::vector<BigInt>& coeffs, const std::string& form) {
        Prime prime(p);
        TruncSeries x = TruncSeries::fromCoeffs(prime, n, coeffs);
        return seriesCoeffs(quadraticResidual(x, Residue(a, prime), formFromName(form)));
    }, py::arg("p"), py::arg("n"), py::arg("a"), py::arg("coeffs"), py::arg("form") = "plus-a");
    m.def("hensel_root", [](const BigInt& p, std::uint64_t n, const BigInt& a,
                            const std::string& form) {
        Prime prime(p);
        return henselOracle(prime, n, Residue(a, prime), formFromName(form)).value();
    }, py::arg("p"), py::arg("n"), py::arg("a"), py::arg("form") = "plus-a");
    m.def("brute_force_roots", [](const BigInt& p, std::uint64_t n, const BigInt& a,
                                  const BigInt& cap, const std::string& form) {
        return bruteForceOracle(makeProblem(p, n, a), cap, formFromName(form));
    }, py::arg("p"), py::arg("n"), py::arg("a"), py::arg("cap") = BigInt(1000000),
       py::arg("form") = "plus-a");
    m.def("numeric_roots", [](const BigInt& p, std::uint64_t n, const BigInt& a,
                              const std::string& form) {
        NumericRoots r = numericRoots(makeProblem(p, n, a), formFromName(form));
        return py::make_tuple(r.x1.value(), r.x2.value());
    }, py::arg("p"), py::arg("n"), py::arg("a"), py::arg("form") = "plus-a");
    m.def("eval_at_p", [](const BigInt& p, std::uint64_t n, const std::vector<BigInt>& coeffs) {
        Prime prime(p);
        return TruncSeries::fromCoeffs(prime, n, coeffs).evalAtP().value();
    }, py::arg("p"), py::arg("n"), py::arg("coeffs"));

    m.def("solve", [](const BigInt& p, std::uint64_t n, const BigInt& a, const std::string& form,
                      bool numeric, const BigInt& brute_cap) {
        SolveOptions opt;
        opt.form = formFromName(form);
        opt.wantNumeric = numeric;
        opt.bruteCap = brute_cap;
        QuadraticProblem prob = makeProblem(p, n, a);
        SolveReport r = solveQuadratic(prob, opt);
        py::dict out;
        out["p"] = p;
        out["n"] = n;
        out["a"] = prob.a.value();
        out["form"] = formName(r.form);
        out["root1"] = seriesCoeffs(r.root1);
        out["root2"] = seriesCoeffs(r.root2);
        out["verified"] = r.verified;
        py::dict oracles;
        oracles["fixed_point"] = py::bool_(r.fixedPointAgrees);
        oracles["hensel"] = optFlag(r.henselAgrees);
        oracles["brute_force"] = optFlag(r.bruteForceAgrees);
        out["oracles"] = oracles;
        if (numeric && r.numeric) {
            py::dict num;
            num["modulus"] = r.numeric->x1.modulus();
            num["x1"] = r.numeric->x1.value();
            num["x2"] = r.numeric->x2.value();
            out["numeric"] = num;
        } else {
            out["numeric"] = py::none();
        }
        return out;
    }, py::arg("p"), py::arg("n"), py::arg("a"), py::arg("form") = "plus-a",
       py::arg("numeric") = false, py::arg("brute_cap") = BigInt(1000000));

    m.def("primes", [](std::uint64_t count) {
        return primePolyseries().truncation(count).terms();
    }, py::arg("count"));
    m.def("check_prime_axioms", [](std::uint64_t count) {
        PrimeAxiomReport r = checkPrimeAxioms(count);
        return py::make_tuple(r.strictlySorted, r.pairwiseNonDivisible);
    }, py::arg("count"));

    m.def("seq_sorted", [](std::vector<BigInt> terms) {
        return sorted(Polyseries::fromTerms(std::move(terms))).terms();
    }, py::arg("terms"));
    m.def("seq_issorted", [](std::vector<BigInt> terms) {
        return issorted(Polyseries::fromTerms(std::move(terms)));
    }, py::arg("terms"));
    m.def("seq_permutad", [](std::vector<BigInt> a, std::vector<BigInt> b) {
        return permutad(Polyseries::fromTerms(std::move(a)), Polyseries::fromTerms(std::move(b)));
    }, py::arg("a"), py::arg("b"));
    m.def("seq_tailmin", [](std::vector<BigInt> terms, std::uint64_t n) {
        return tailmin(Polyseries::fromTerms(std::move(terms)), n);
    }, py::arg("terms"), py::arg("n"));
    m.def("seq_index", [](std::vector<BigInt> terms, const BigInt& term) -> std::int64_t {
        auto i = indexOf(Polyseries::fromTerms(std::move(terms)), term);
        return i ? static_cast<std::int64_t>(*i) : -1;
    }, py::arg("terms"), py::arg("term"), "1-based position of the first occurrence, -1 if absent");
    m.def("seq_next", [](std::vector<BigInt> terms, const BigInt& term) -> py::object {
        Polyseries a = Polyseries::fromTerms(std::move(terms));
        auto v = next(a, term, *a.length());
        return v ? py::cast(*v) : py::none();
    }, py::arg("terms"), py::arg("term"));
    m.def("seq_previous", [](std::vector<BigInt> terms, const BigInt& term) -> py::object {
        Polyseries a = Polyseries::fromTerms(std::move(terms));
        auto v = previous(a, term, *a.length());
        return v ? py::cast(*v) : py::none();
    }, py::arg("terms"), py::arg("term"));

    py::register_exception<Error>(m, "PolycatError");
}
