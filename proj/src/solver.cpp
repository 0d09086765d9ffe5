#include "polycat/solver.hpp"

#include <algorithm>

namespace polycat {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Sign s of the linear term: t + s*a*x + x^2.
int linearSign(QuadraticForm f) { return f == QuadraticForm::PlusA ? 1 : -1; }

// p^n as long as it stays <= cap; nullopt once it would exceed it.
std::optional<BigInt> powWithin(const BigInt& p, std::uint64_t n, const BigInt& cap) {
    BigInt m = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        m *= p;
        if (m > cap) return std::nullopt;
    }
    return m;
}

std::uint64_t bitLength(const BigInt& x) {
    return x == 0 ? 0 : boost::multiprecision::msb(x) + 1;
}

} // namespace

const char* formName(QuadraticForm f) {
    return f == QuadraticForm::PlusA ? "plus-a" : "minus-a";
}

QuadraticProblem::QuadraticProblem(Prime prime, std::uint64_t degree, Residue coeff)
    : p(std::move(prime)), n(degree), a(std::move(coeff)) {
    if (n < 2) throw DegreeTooSmall("solver needs truncation order n >= 2");
    if (a.modulus() != p) throw ModulusMismatch("coefficient a is not a residue mod p");
    if (a.isZero()) throw NonInvertibleA("a must be invertible mod p");
}

bool SolveReport::allOraclesAgree() const {
    return fixedPointAgrees && henselAgrees.value_or(true) && bruteForceAgrees.value_or(true);
}

TruncSeries catalanH(std::uint64_t n, const Prime& p) {
    if (n < 2) throw DegreeTooSmall("catalanH needs n >= 2");
    std::vector<BigInt> coeffs(n, BigInt(0));
    CatalanModResult cat = catalanRatioModP(n - 2, p);
    for (std::uint64_t k = 1; k < n; ++k) coeffs[k] = cat.values[k - 1].value();
    return TruncSeries::fromCoeffs(p, n, coeffs);
}

bool lemmaCheck(std::uint64_t n, const Prime& p) {
    TruncSeries h = catalanH(n, p);
    TruncSeries residual = h * h - h + TruncSeries::indeterminate(p, n);
    return residual.isZero();
}

TruncSeries seriesRoot(const QuadraticProblem& prob, QuadraticForm form) {
    const Prime& p = prob.p;
    CatalanModResult cat = catalanRatioModP(prob.n - 2, p);
    Residue ai = prob.a.inverse();
    Residue ai2 = ai * ai;
    Residue w = ai; // a^{-(2k-1)}
    std::vector<BigInt> coeffs(prob.n, BigInt(0));
    for (std::uint64_t k = 1; k < prob.n; ++k) {
        Residue c = cat.values[k - 1] * w;
        if (form == QuadraticForm::PlusA) c = -c;
        coeffs[k] = c.value();
        w = w * ai2;
    }
    return TruncSeries::fromCoeffs(p, prob.n, coeffs);
}

TruncSeries secondRoot(const TruncSeries& root1, const Residue& a, QuadraticForm form) {
    BigInt sum = linearSign(form) > 0 ? -a.value() : a.value(); // root1 + root2
    return TruncSeries::constant(root1.field(), root1.degreeBound(), sum) - root1;
}

TruncSeries quadraticResidual(const TruncSeries& x, const Residue& a, QuadraticForm form) {
    Residue b = linearSign(form) > 0 ? a : -a;
    return TruncSeries::indeterminate(x.field(), x.degreeBound()) + b * x + x * x;
}

TruncSeries fixedPointOracle(const QuadraticProblem& prob, QuadraticForm form) {
    // The contraction x <- -+a^{-1}(t + x^2) freezes coefficient m once
    // every pass beyond m-1 has run, and coefficient m of the image only
    // reads frozen coefficients 1..m-1. One triangular sweep therefore
    // reproduces the limit of n passes exactly, without Catalan numbers.
    const std::uint64_t n = prob.n;
    const BigInt& p = prob.p.value();
    Residue factor = -prob.a.inverse();
    if (form == QuadraticForm::MinusA) factor = -factor;

    std::vector<BigInt> c(n, BigInt(0));
    if (fitsUint64(p)) {
        const u64 pm = p.convert_to<u64>();
        const u64 f = factor.value().convert_to<u64>();
        std::vector<u64> cc(n, 0);
        cc[1] = f; // image of the t term
        for (std::uint64_t m = 2; m < n; ++m) {
            u64 acc = 0;
            for (std::uint64_t i = 1; i < m; ++i)
                acc = static_cast<u64>((static_cast<u128>(cc[i]) * cc[m - i] +
                                        static_cast<u128>(acc)) %
                                       pm);
            cc[m] = static_cast<u64>(static_cast<u128>(acc) * f % pm);
        }
        for (std::uint64_t k = 1; k < n; ++k) c[k] = cc[k];
    } else {
        c[1] = factor.value();
        for (std::uint64_t m = 2; m < n; ++m) {
            BigInt acc = 0;
            for (std::uint64_t i = 1; i < m; ++i) acc += c[i] * c[m - i];
            c[m] = acc % p * factor.value() % p;
        }
    }
    return TruncSeries::fromCoeffs(prob.p, n, c);
}

TruncSeries fixedPointIterate(const QuadraticProblem& prob, TruncSeries start,
                              std::uint64_t steps, QuadraticForm form) {
    if (start.field() != prob.p || start.degreeBound() != prob.n)
        throw ShapeMismatch("start series does not match the problem shape");
    Residue factor = -prob.a.inverse();
    if (form == QuadraticForm::MinusA) factor = -factor;
    TruncSeries t = TruncSeries::indeterminate(prob.p, prob.n);
    TruncSeries x = std::move(start);
    for (std::uint64_t i = 0; i < steps; ++i) x = factor * (t + x * x);
    return x;
}

PrimePowerInt henselOracle(const Prime& p, std::uint64_t n, const Residue& a,
                           QuadraticForm form) {
    if (a.modulus() != p) throw ModulusMismatch("coefficient a is not a residue mod p");
    if (a.isZero()) throw NonInvertibleDerivative("f'(0) = +-a must be invertible mod p");
    if (n == 0) throw DegreeTooSmall("prime-power degree must be >= 1");

    const BigInt& pv = p.value();
    BigInt b = linearSign(form) > 0 ? a.value() : -a.value(); // f(x) = x^2 + b x + p
    BigInt ia = invMod(b, pv);                                 // 1 / f'(x), constant mod p

    BigInt x = 0;   // root mod p^k
    BigInt pk = pv; // p^k
    for (std::uint64_t k = 1; k < n; ++k) {
        BigInt pk1 = pk * pv;
        BigInt fx = (x * x + b * x + pv) % pk1;
        if (fx < 0) fx += pk1;
        BigInt g = (fx / pk) % pv;           // f(x) = g * p^k mod p^{k+1}
        BigInt delta = (pv - g * ia % pv) % pv;
        x += delta * pk;
        pk = std::move(pk1);
    }
    return PrimePowerInt(std::move(x), p, n);
}

std::vector<BigInt> bruteForceOracle(const QuadraticProblem& prob, const BigInt& cap,
                                     QuadraticForm form) {
    auto m = powWithin(prob.p.value(), prob.n, cap);
    if (!m || !fitsUint64(*m))
        throw CapExceeded("p^n exceeds the brute-force cap " + cap.str());
    const u64 mod = m->convert_to<u64>();
    const u64 pm = prob.p.value().convert_to<u64>();
    u64 b = prob.a.value().convert_to<u64>();
    if (linearSign(form) < 0) b = mod - b % mod;
    std::vector<BigInt> roots;
    for (u64 x = 0; x < mod; ++x) {
        u128 v = (static_cast<u128>(x) * x + static_cast<u128>(b) * x + pm) % mod;
        if (v == 0) roots.emplace_back(x);
    }
    return roots;
}

NumericRoots numericRoots(const QuadraticProblem& prob, QuadraticForm form) {
    // The closed form with all arithmetic mod p^n: a^{-1} taken in
    // Z/p^n, Catalan numbers reduced mod p^n. Carries propagate, so the
    // value solves x^2 +- a x + p = 0 mod p^n; reducing each coefficient
    // mod p recovers the mod-p series root.
    const BigInt& pv = prob.p.value();
    const BigInt modulus = boost::multiprecision::pow(pv, static_cast<unsigned>(prob.n));
    CatalanModSeq cat = catalanMod(prob.n - 2, modulus, pv);
    BigInt ai = invMod(prob.a.value(), modulus);
    BigInt ai2 = ai * ai % modulus;
    BigInt w = ai;
    BigInt x = 0;
    BigInt pk = pv;
    for (std::uint64_t k = 1; k < prob.n; ++k) {
        x = (x + cat.values[k - 1] * w % modulus * pk) % modulus;
        w = w * ai2 % modulus;
        pk = pk * pv % modulus;
    }
    if (linearSign(form) > 0) x = (modulus - x) % modulus;
    BigInt sum = linearSign(form) > 0 ? modulus - prob.a.value() : prob.a.value();
    BigInt x2 = ((sum - x) % modulus + modulus) % modulus;
    return NumericRoots{PrimePowerInt(std::move(x), prob.p, prob.n),
                        PrimePowerInt(std::move(x2), prob.p, prob.n)};
}

SolveReport solveQuadratic(const QuadraticProblem& prob, const SolveOptions& options) {
    TruncSeries root1 = seriesRoot(prob, options.form);
    TruncSeries root2 = secondRoot(root1, prob.a, options.form);
    TruncSeries residual1 = quadraticResidual(root1, prob.a, options.form);
    TruncSeries residual2 = quadraticResidual(root2, prob.a, options.form);

    SolveReport report{options.form,
                       root1,
                       root2,
                       residual1,
                       residual2,
                       residual1.isZero() && residual2.isZero(),
                       false,
                       std::nullopt,
                       std::nullopt,
                       std::nullopt};

    report.fixedPointAgrees = fixedPointOracle(prob, options.form) == report.root1;

    const bool henselRuns = prob.n * bitLength(prob.p.value()) <= options.henselMaxBits;
    const auto bruteModulus = powWithin(prob.p.value(), prob.n, options.bruteCap);

    if (henselRuns || bruteModulus || options.wantNumeric)
        report.numeric = numericRoots(prob, options.form);

    if (henselRuns) {
        PrimePowerInt lifted = henselOracle(prob.p, prob.n, prob.a, options.form);
        report.henselAgrees = lifted == report.numeric->x1;
    }
    if (bruteModulus) {
        std::vector<BigInt> roots = bruteForceOracle(prob, options.bruteCap, options.form);
        std::vector<BigInt> expected{report.numeric->x1.value(), report.numeric->x2.value()};
        std::sort(expected.begin(), expected.end());
        expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
        report.bruteForceAgrees = roots == expected;
    }
    return report;
}

} // namespace polycat
