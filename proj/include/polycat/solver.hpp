#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polycat/catalan.hpp"
#include "polycat/modfield.hpp"
#include "polycat/truncseries.hpp"

namespace polycat {

// Which quadratic is being solved for x in F_p[t]/(t^n):
//   PlusA:  t + a*x + x^2 = 0
//   MinusA: t - a*x + x^2 = 0
enum class QuadraticForm { PlusA, MinusA };

const char* formName(QuadraticForm f);

// The instance (p, n, a) with n >= 2 and a a unit, so that every
// 1/a^{2k-1} coefficient exists.
struct QuadraticProblem {
    QuadraticProblem(Prime prime, std::uint64_t degree, Residue coeff);

    Prime p;
    std::uint64_t n;
    Residue a;
};

struct NumericRoots {
    PrimePowerInt x1; // the branch congruent to 0 mod p
    PrimePowerInt x2; // the unit branch
};

struct SolveOptions {
    QuadraticForm form = QuadraticForm::PlusA;
    bool wantNumeric = false;
    BigInt bruteCap = BigInt(1000000);  // brute force skipped when p^n exceeds this
    std::uint64_t henselMaxBits = 4096; // Hensel skipped when p^n needs more bits
};

// Emitted only after both residuals are computed; `verified` is the
// mathematical ground truth, oracle flags are the cross-checks.
struct SolveReport {
    QuadraticForm form;
    TruncSeries root1;     // zero-constant-term branch
    TruncSeries root2;     // unit branch, root1 + root2 = -(+-a)
    TruncSeries residual1; // t +- a*x + x^2 at root1, expected zero
    TruncSeries residual2;
    bool verified;

    bool fixedPointAgrees;
    std::optional<bool> henselAgrees;     // nullopt = skipped
    std::optional<bool> bruteForceAgrees; // nullopt = skipped
    std::optional<NumericRoots> numeric;

    bool allOraclesAgree() const;
};

// H(t) = sum_{k=1}^{n-1} C_{k-1} t^k over F_p: the zero-constant-term
// solution of H^2 - H + t = 0 in F_p[t]/(t^n).
TruncSeries catalanH(std::uint64_t n, const Prime& p);

// True iff catalanH(n, p) has zero residual under H^2 - H + t.
bool lemmaCheck(std::uint64_t n, const Prime& p);

// Closed-form series root: -+ sum_{k=1}^{n-1} C_{k-1} a^{-(2k-1)} t^k
// (minus for PlusA, plus for MinusA). The sign is fixed by requiring the
// substitution residual to vanish, which solveQuadratic re-checks.
TruncSeries seriesRoot(const QuadraticProblem& prob,
                       QuadraticForm form = QuadraticForm::PlusA);

// The conjugate root: root1 + root2 = -a (PlusA) or +a (MinusA).
TruncSeries secondRoot(const TruncSeries& root1, const Residue& a,
                       QuadraticForm form = QuadraticForm::PlusA);

// t +- a*x + x^2 evaluated at a candidate root; the zero series
// certifies a solution.
TruncSeries quadraticResidual(const TruncSeries& x, const Residue& a,
                              QuadraticForm form = QuadraticForm::PlusA);

// Independent oracle #1: the t-adic contraction x <- -+a^{-1} (t + x^2)
// gains one order per pass, so its limit is computed by a single
// triangular sweep over frozen coefficients. Never touches Catalan
// machinery.
TruncSeries fixedPointOracle(const QuadraticProblem& prob,
                             QuadraticForm form = QuadraticForm::PlusA);

// One literal contraction pass per step from an arbitrary start; used to
// exhibit convergence (and uniqueness of the zero-constant-term root).
TruncSeries fixedPointIterate(const QuadraticProblem& prob, TruncSeries start,
                              std::uint64_t steps,
                              QuadraticForm form = QuadraticForm::PlusA);

// Independent oracle #2: linear Hensel lifting of the root of
// x^2 +- a*x + p that is congruent to 0 mod p, one digit per step, up to
// Z/p^n. Accepts n >= 1.
PrimePowerInt henselOracle(const Prime& p, std::uint64_t n, const Residue& a,
                           QuadraticForm form = QuadraticForm::PlusA);

// Independent oracle #3: exhaustive scan for all roots of x^2 +- a*x + p
// in Z/p^n. Throws CapExceeded when p^n > cap.
std::vector<BigInt> bruteForceOracle(const QuadraticProblem& prob, const BigInt& cap,
                                     QuadraticForm form = QuadraticForm::PlusA);

// The series root instantiated at t = p: the same Catalan closed form
// evaluated with arithmetic carried out mod p^n (a inverted mod p^n), so
// carries propagate and the result genuinely solves x^2 +- a*x + p = 0
// in Z/p^n. Digit-wise evaluation of the mod-p coefficients would not.
NumericRoots numericRoots(const QuadraticProblem& prob,
                          QuadraticForm form = QuadraticForm::PlusA);

SolveReport solveQuadratic(const QuadraticProblem& prob, const SolveOptions& options = {});

} // namespace polycat
