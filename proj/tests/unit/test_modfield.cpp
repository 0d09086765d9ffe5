#include <doctest.h>

#include <random>

#include "polycat/modfield.hpp"
#include "support/helpers.hpp"

using namespace polycat;
using testutil::P;
using testutil::R;

TEST_CASE("primality testing") {
    CHECK(isPrime(BigInt(2)));
    CHECK(isPrime(BigInt(3)));
    CHECK(isPrime(BigInt(101)));
    CHECK(isPrime(BigInt(10007)));
    CHECK(isPrime(BigInt(testutil::kMersenne61)));
    CHECK_FALSE(isPrime(BigInt(1)));
    CHECK_FALSE(isPrime(BigInt(561)));  // Carmichael
    CHECK_FALSE(isPrime(BigInt(10005)));
    CHECK_FALSE(isPrime(BigInt("147573952589676412927"))); // 2^67 - 1 = 193707721 * 761838257287
    CHECK(isPrime(BigInt("170141183460469231731687303715884105727"))); // 2^127 - 1

    CHECK_THROWS_AS(Prime(BigInt(4)), NotPrime);
    CHECK_THROWS_AS(Prime(BigInt(2)), NotPrime); // p > 2 required
    CHECK_THROWS_AS(Prime(BigInt(1)), NotPrime);
}

TEST_CASE("classification splits F_p into zero and two half-ranges") {
    Prime p7 = P(7);
    CHECK(R(3, p7).classify() == ResidueClass::PositiveHalf);
    CHECK(R(4, p7).classify() == ResidueClass::NegativeHalf);
    CHECK(R(0, p7).classify() == ResidueClass::Zero);

    for (std::uint64_t pv : {5ull, 7ull, 101ull}) {
        Prime p = P(pv);
        std::uint64_t positives = 0, negatives = 0, zeros = 0;
        for (std::uint64_t v = 0; v < pv; ++v) {
            switch (R(static_cast<std::int64_t>(v), p).classify()) {
                case ResidueClass::Zero: ++zeros; break;
                case ResidueClass::PositiveHalf: ++positives; break;
                case ResidueClass::NegativeHalf: ++negatives; break;
            }
        }
        CHECK(zeros == 1);
        CHECK(positives == (pv - 1) / 2);
        CHECK(negatives == (pv - 1) / 2);
    }
}

TEST_CASE("balanced value folds into [0, (p-1)/2]") {
    Prime p7 = P(7);
    CHECK(R(3, p7).balancedValue() == 3);
    CHECK(R(5, p7).balancedValue() == 2);
    CHECK(R(0, p7).balancedValue() == 0);
    CHECK(R(5, p7).balancedSigned() == -2);

    // |a| = |b| exactly when a = b or a = p - b
    for (std::uint64_t pv : {5ull, 7ull, 101ull}) {
        Prime p = P(pv);
        for (std::uint64_t a = 0; a < pv; ++a)
            for (std::uint64_t b = 0; b < pv; ++b) {
                bool sameMagnitude = R(a, p).balancedValue() == R(b, p).balancedValue();
                bool expected = (a == b) || (a == (pv - b) % pv);
                CHECK(sameMagnitude == expected);
            }
    }
}

TEST_CASE("field operations stay canonical") {
    Prime p7 = P(7);
    CHECK(R(5, p7) + R(4, p7) == R(2, p7));
    CHECK(R(3, p7) * R(5, p7) == R(1, p7));
    CHECK(-R(0, p7) == R(0, p7));
    CHECK(R(2, p7) - R(5, p7) == R(4, p7));
    CHECK(R(-3, p7) == R(4, p7)); // canonicalization of signed input

    Prime p5 = P(5);
    CHECK_THROWS_AS(R(1, p5) + R(1, p7), ModulusMismatch);
}

TEST_CASE("inverse by extended Euclid, checked against Fermat") {
    Prime p101 = P(101);
    CHECK(R(2, p101).inverse() == R(51, p101));
    CHECK(R(1, P(7)).inverse() == R(1, P(7)));
    CHECK_THROWS_AS(R(0, P(7)).inverse(), NotInvertible);

    for (std::uint64_t pv : {3ull, 5ull, 7ull, 101ull}) {
        Prime p = P(pv);
        for (std::uint64_t v = 1; v < pv; ++v) {
            Residue x = R(static_cast<std::int64_t>(v), p);
            Residue inv = x.inverse();
            CHECK(x * inv == Residue::one(p));
            CHECK(inv == x.pow(BigInt(pv - 2))); // Fermat oracle
            CHECK(inv.inverse() == x);           // involution
        }
    }
}

TEST_CASE("ring axioms on random triples") {
    std::vector<Prime> primes{P(5), P(7), P(101), P(10007), P(testutil::kMersenne61)};
    std::mt19937_64 rng(23);
    for (const Prime& p : primes) {
        for (int trial = 0; trial < 10000; ++trial) {
            BigInt pv = p.value();
            Residue a(BigInt(rng()) % pv, p);
            Residue b(BigInt(rng()) % pv, p);
            Residue c(BigInt(rng()) % pv, p);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == Residue::zero(p));
            CHECK(a + (-a) == Residue::zero(p));
        }
    }
}
