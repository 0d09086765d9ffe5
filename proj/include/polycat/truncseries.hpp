#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polycat/bigint.hpp"
#include "polycat/errors.hpp"
#include "polycat/modfield.hpp"

namespace polycat {

// Element of Z/p^n, the target of the numeric reading t = p.
class PrimePowerInt {
public:
    PrimePowerInt(BigInt value, Prime p, std::uint64_t n);

    const BigInt& value() const noexcept { return value_; }
    const Prime& prime() const noexcept { return p_; }
    std::uint64_t degree() const noexcept { return n_; }
    const BigInt& modulus() const noexcept { return modulus_; } // p^n

    friend bool operator==(const PrimePowerInt& a, const PrimePowerInt& b);
    friend bool operator!=(const PrimePowerInt& a, const PrimePowerInt& b) { return !(a == b); }

private:
    BigInt value_;
    Prime p_;
    std::uint64_t n_;
    BigInt modulus_;
};

// Element of F_p[t]/(t^n): exactly n coefficients (index k holds the t^k
// coefficient), all canonical residues mod p, n >= 2. t is literally
// nilpotent here, which makes every "mod t^n" congruence an exact
// identity. Values are immutable; all operations are pure.
class TruncSeries {
public:
    TruncSeries(Prime p, std::uint64_t n); // zero series

    // Reduces raw coefficients (signed allowed) mod p and zero-pads to
    // length n. Throws TruncateInput when more than n are given and
    // DegreeTooSmall when n < 2.
    static TruncSeries fromCoeffs(const Prime& p, std::uint64_t n, const std::vector<BigInt>& raw);

    static TruncSeries constant(const Prime& p, std::uint64_t n, const BigInt& c);
    static TruncSeries indeterminate(const Prime& p, std::uint64_t n); // the series t

    std::uint64_t degreeBound() const noexcept { return n_; }
    const Prime& field() const noexcept { return p_; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    Residue coeff(std::uint64_t k) const;

    bool isZero() const;

    // Index of the lowest nonzero coefficient, or n for the zero series.
    std::uint64_t valuation() const;

    // sum coeffs[k] * p^k with canonical representatives; the result is
    // automatically inside [0, p^n - 1].
    PrimePowerInt evalAtP() const;

    // "c0 + c1*t + c2*t^2 + ..." omitting zero terms; balanced mode
    // renders each coefficient as sign + balanced magnitude.
    std::string toText(bool balanced = false) const;

    friend TruncSeries operator+(const TruncSeries& x, const TruncSeries& y);
    friend TruncSeries operator-(const TruncSeries& x, const TruncSeries& y);
    TruncSeries operator-() const;

    // Truncated Cauchy product, coefficients reduced mod p.
    friend TruncSeries operator*(const TruncSeries& x, const TruncSeries& y);

    // Coefficient-wise scalar multiple.
    friend TruncSeries operator*(const Residue& c, const TruncSeries& x);

    friend bool operator==(const TruncSeries& x, const TruncSeries& y);
    friend bool operator!=(const TruncSeries& x, const TruncSeries& y) { return !(x == y); }

private:
    Prime p_;
    std::uint64_t n_;
    std::vector<BigInt> coeffs_;

    static void requireSameShape(const TruncSeries& x, const TruncSeries& y);
};

// The substitution t -> c*t: coefficient k gains a factor c^k.
TruncSeries scaleT(const TruncSeries& x, const Residue& c);

// Truncated Cauchy product over Z with canonical representatives and no
// mod-p reduction, so carries survive: evaluating these coefficients at
// t = p matches the product of the factors' evalAtP values mod p^n.
std::vector<BigInt> mulExactCoeffs(const TruncSeries& x, const TruncSeries& y);

} // namespace polycat
