#include "polycat/modfield.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <random>

namespace polycat {

namespace {

constexpr std::array<unsigned, 12> kSmallPrimes = {2,  3,  5,  7,  11, 13,
                                                   17, 19, 23, 29, 31, 37};

// True when `a` witnesses compositeness of odd n = d * 2^s + 1.
bool witnessesComposite(const BigInt& a, const BigInt& n, const BigInt& d, unsigned s) {
    BigInt x = boost::multiprecision::powm(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;
}

} // namespace

bool isPrime(const BigInt& n) {
    if (n < 2) return false;
    for (unsigned q : kSmallPrimes) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }

    BigInt d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }

    static const BigInt kU64Max = BigInt(std::numeric_limits<std::uint64_t>::max());
    if (n <= kU64Max) {
        // This witness set decides primality for every n < 2^64.
        for (unsigned a : kSmallPrimes)
            if (witnessesComposite(a, n, d, s)) return false;
        return true;
    }

    // Above 64 bits: 64 rounds with fixed-seed witnesses, error < 4^-64.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    for (int round = 0; round < 64; ++round) {
        BigInt a = 0;
        for (int limb = 0; limb < 4; ++limb) a = (a << 64) | rng();
        a = a % (n - 3) + 2;
        if (witnessesComposite(a, n, d, s)) return false;
    }
    return true;
}

Prime::Prime(BigInt p) : p_(std::move(p)) {
    if (p_ <= 2)
        throw NotPrime("modulus must be a prime > 2, got " + p_.str());
    if (!isPrime(p_))
        throw NotPrime("modulus is not prime: " + p_.str());
}

Residue::Residue(BigInt value, Prime modulus) : value_(std::move(value)), modulus_(std::move(modulus)) {
    const BigInt& p = modulus_.value();
    value_ %= p;
    if (value_ < 0) value_ += p;
}

ResidueClass Residue::classify() const {
    if (value_ == 0) return ResidueClass::Zero;
    return value_ <= modulus_.halfRange() ? ResidueClass::PositiveHalf
                                          : ResidueClass::NegativeHalf;
}

BigInt Residue::balancedValue() const {
    switch (classify()) {
        case ResidueClass::Zero: return 0;
        case ResidueClass::PositiveHalf: return value_;
        case ResidueClass::NegativeHalf: return modulus_.value() - value_;
    }
    return 0; // unreachable
}

BigInt Residue::balancedSigned() const {
    return classify() == ResidueClass::NegativeHalf ? value_ - modulus_.value() : value_;
}

Residue Residue::inverse() const {
    if (value_ == 0)
        throw NotInvertible("zero has no inverse mod " + modulus_.value().str());
    return Residue(invMod(value_, modulus_.value()), modulus_);
}

Residue Residue::pow(const BigInt& e) const {
    return Residue(boost::multiprecision::powm(value_, e, modulus_.value()), modulus_);
}

void Residue::requireSameModulus(const Residue& a, const Residue& b) {
    if (a.modulus_ != b.modulus_)
        throw ModulusMismatch("residues have different moduli: " + a.modulus_.value().str() +
                              " vs " + b.modulus_.value().str());
}

Residue operator+(const Residue& a, const Residue& b) {
    Residue::requireSameModulus(a, b);
    BigInt v = a.value_ + b.value_;
    if (v >= a.modulus_.value()) v -= a.modulus_.value();
    return Residue(std::move(v), a.modulus_);
}

Residue operator-(const Residue& a, const Residue& b) {
    Residue::requireSameModulus(a, b);
    BigInt v = a.value_ - b.value_;
    if (v < 0) v += a.modulus_.value();
    return Residue(std::move(v), a.modulus_);
}

Residue operator*(const Residue& a, const Residue& b) {
    Residue::requireSameModulus(a, b);
    return Residue((a.value_ * b.value_) % a.modulus_.value(), a.modulus_);
}

Residue Residue::operator-() const {
    return Residue(value_ == 0 ? BigInt(0) : modulus_.value() - value_, modulus_);
}

bool operator==(const Residue& a, const Residue& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
}

std::string classifyName(ResidueClass c) {
    switch (c) {
        case ResidueClass::Zero: return "zero";
        case ResidueClass::PositiveHalf: return "positive-half";
        case ResidueClass::NegativeHalf: return "negative-half";
    }
    return "?";
}

} // namespace polycat
