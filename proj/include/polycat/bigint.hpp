#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace polycat {

using BigInt = boost::multiprecision::cpp_int;

// Parses an optionally signed decimal integer. Throws ParseError on
// anything else; all integers cross the external surfaces as decimal
// strings, never through floating point.
BigInt parseBigInt(const std::string& text);

std::string toDecimal(const BigInt& x);

bool fitsUint64(const BigInt& x);

// a^{-1} (mod m) by extended Euclid; m > 1, gcd(a, m) = 1.
// Works for any modulus, not just primes (the numeric instantiation
// needs inverses mod p^n).
BigInt invMod(const BigInt& a, const BigInt& m);

} // namespace polycat
