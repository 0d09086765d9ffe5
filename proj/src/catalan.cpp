#include "polycat/catalan.hpp"

#include "polycat/errors.hpp"
#include "polycat/truncseries.hpp"

namespace polycat {

BigInt catalanBinomial(std::size_t n) {
    // binom(2n, n) built multiplicatively; each intermediate step is a
    // whole binomial coefficient, so every division is exact.
    BigInt b = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        b *= BigInt(n + k);
        b /= BigInt(k);
    }
    BigInt q = b / BigInt(n + 1);
    if (q * BigInt(n + 1) != b)
        throw Error("catalanBinomial: (n+1) does not divide binom(2n, n) at n = " +
                    std::to_string(n));
    return q;
}

std::vector<BigInt> catalanConvolution(std::size_t upTo) {
    std::vector<BigInt> c;
    c.reserve(upTo + 1);
    c.push_back(1);
    for (std::size_t n = 0; n < upTo; ++n) {
        BigInt s = 0;
        for (std::size_t k = 0; k <= n; ++k) s += c[k] * c[n - k];
        c.push_back(std::move(s));
    }
    return c;
}

CatalanStream::CatalanStream(CatalanMethod method) : method_(method) {}

const BigInt& CatalanStream::at(std::size_t n) {
    while (values_.size() <= n) {
        std::size_t k = values_.size();
        switch (method_) {
            case CatalanMethod::Binomial:
                values_.push_back(catalanBinomial(k));
                break;
            case CatalanMethod::Convolution: {
                if (k == 0) {
                    values_.push_back(1);
                } else {
                    BigInt s = 0;
                    for (std::size_t i = 0; i < k; ++i) s += values_[i] * values_[k - 1 - i];
                    values_.push_back(std::move(s));
                }
                break;
            }
            case CatalanMethod::Ratio: {
                if (k == 0) {
                    values_.push_back(1);
                } else {
                    // C_k = 2(2k-1)/(k+1) C_{k-1}, exact over Z.
                    BigInt t = values_[k - 1] * BigInt(2 * (2 * k - 1));
                    BigInt q = t / BigInt(k + 1);
                    if (q * BigInt(k + 1) != t)
                        throw Error("catalan ratio recurrence: inexact division at k = " +
                                    std::to_string(k));
                    values_.push_back(std::move(q));
                }
                break;
            }
        }
    }
    return values_[n];
}

CatalanModSeq catalanMod(std::size_t upTo, const BigInt& modulus, const BigInt& primeFactor) {
    CatalanModSeq out;
    out.values.reserve(upTo + 1);
    // Ratio path needs every divisor k+2 <= upTo+1 to be a unit, i.e.
    // coprime to p; p > upTo + 2 guarantees that.
    out.usedFallback = !(primeFactor > BigInt(upTo) + 2);
    if (out.usedFallback) {
        CatalanStream exact(CatalanMethod::Ratio);
        for (std::size_t k = 0; k <= upTo; ++k) out.values.push_back(exact.at(k) % modulus);
        return out;
    }
    BigInt c = 1 % modulus;
    out.values.push_back(c);
    for (std::size_t k = 0; k < upTo; ++k) {
        c = c * (BigInt(2 * (2 * k + 1)) % modulus) % modulus;
        c = c * invMod(BigInt(k + 2), modulus) % modulus;
        out.values.push_back(c);
    }
    return out;
}

CatalanModResult catalanRatioModP(std::size_t upTo, const Prime& p) {
    CatalanModSeq seq = catalanMod(upTo, p.value(), p.value());
    CatalanModResult out;
    out.usedFallback = seq.usedFallback;
    out.values.reserve(seq.values.size());
    for (BigInt& v : seq.values) out.values.emplace_back(std::move(v), p);
    return out;
}

bool gfFixedPointCheck(std::uint64_t n, const Prime& p) {
    if (n == 0) throw DegreeTooSmall("truncation order must be >= 1");
    if (n == 1) return true; // S = C_0 = 1 and 1 + t S^2 = 1 mod t
    std::vector<BigInt> coeffs;
    coeffs.reserve(n);
    for (Residue& r : catalanRatioModP(n - 1, p).values) coeffs.push_back(r.value());
    TruncSeries s = TruncSeries::fromCoeffs(p, n, coeffs);
    TruncSeries rhs = TruncSeries::constant(p, n, 1) +
                      TruncSeries::indeterminate(p, n) * s * s;
    return s == rhs;
}

} // namespace polycat
