#pragma once

#include <cstddef>
#include <vector>

#include "polycat/bigint.hpp"
#include "polycat/modfield.hpp"

namespace polycat {

enum class CatalanMethod { Binomial, Convolution, Ratio };

// Memoizing stream of exact Catalan numbers. C_n outgrows 64 bits near
// n = 33, so everything here is arbitrary precision.
class CatalanStream {
public:
    explicit CatalanStream(CatalanMethod method = CatalanMethod::Convolution);

    const BigInt& at(std::size_t n);
    CatalanMethod method() const noexcept { return method_; }

private:
    CatalanMethod method_;
    std::vector<BigInt> values_;
};

// C_n = binom(2n, n) / (n + 1); the division is checked exact.
BigInt catalanBinomial(std::size_t n);

// [C_0 .. C_upTo] by the convolution recurrence C_{n+1} = sum C_k C_{n-k}.
std::vector<BigInt> catalanConvolution(std::size_t upTo);

struct CatalanModResult {
    std::vector<Residue> values;
    bool usedFallback; // exact-reduce taken because p <= upTo + 2
};

// [C_0 mod p .. C_upTo mod p] by the ratio recurrence
// C_{n+1} = 2(2n+1)/(n+2) C_n when every divisor is a unit, otherwise by
// exact computation reduced mod p.
CatalanModResult catalanRatioModP(std::size_t upTo, const Prime& p);

struct CatalanModSeq {
    std::vector<BigInt> values;
    bool usedFallback;
};

// Same recurrence mod an arbitrary modulus whose only prime factor is
// `primeFactor` (used for the mod p^n numeric instantiation).
CatalanModSeq catalanMod(std::size_t upTo, const BigInt& modulus, const BigInt& primeFactor);

// True iff S = sum_{k<n} C_k t^k satisfies S = 1 + t S^2 in F_p[t]/(t^n).
bool gfFixedPointCheck(std::uint64_t n, const Prime& p);

} // namespace polycat
