#pragma once

#include <string>

#include "polycat/bigint.hpp"
#include "polycat/errors.hpp"

namespace polycat {

// Miller-Rabin primality test: deterministic witness set below 2^64,
// 64 fixed-seed pseudo-random witnesses above.
bool isPrime(const BigInt& n);

// A validated prime modulus with p > 2.
class Prime {
public:
    explicit Prime(BigInt p);

    const BigInt& value() const noexcept { return p_; }

    // (p-1)/2, the top of the positive half-range.
    BigInt halfRange() const { return (p_ - 1) / 2; }

    friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Prime& a, const Prime& b) { return a.p_ != b.p_; }

private:
    BigInt p_;
};

enum class ResidueClass { Zero, PositiveHalf, NegativeHalf };

// Element of F_p, always stored in canonical form [0, p-1]. The
// balanced form is a view (balancedValue / balancedSigned), not the
// stored representation, so there is a single normalization site.
class Residue {
public:
    Residue(BigInt value, Prime modulus);

    const BigInt& value() const noexcept { return value_; }
    const Prime& modulus() const noexcept { return modulus_; }

    bool isZero() const noexcept { return value_ == 0; }

    // Zero / [1, (p-1)/2] / [(p+1)/2, p-1].
    ResidueClass classify() const;

    // The magnitude |a|_p in [0, (p-1)/2].
    BigInt balancedValue() const;

    // Signed representative in [-(p-1)/2, (p-1)/2].
    BigInt balancedSigned() const;

    Residue inverse() const;          // extended Euclid; throws NotInvertible on 0
    Residue pow(const BigInt& e) const; // e >= 0

    friend Residue operator+(const Residue& a, const Residue& b);
    friend Residue operator-(const Residue& a, const Residue& b);
    friend Residue operator*(const Residue& a, const Residue& b);
    Residue operator-() const;

    friend bool operator==(const Residue& a, const Residue& b);
    friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

    static Residue zero(const Prime& p) { return Residue(0, p); }
    static Residue one(const Prime& p) { return Residue(1, p); }

private:
    BigInt value_;
    Prime modulus_;

    static void requireSameModulus(const Residue& a, const Residue& b);
};

std::string classifyName(ResidueClass c);

} // namespace polycat
