#include <doctest.h>

#include "polycat/catalan.hpp"
#include "support/helpers.hpp"

using namespace polycat;
using testutil::P;

namespace {

// Independent binomial oracle: factorial quotient over exact integers.
BigInt binomFactorial(unsigned n, unsigned k) {
    BigInt num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= BigInt(n - i);
        den *= BigInt(i + 1);
    }
    return num / den;
}

const std::vector<BigInt> kFirstTen{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};

} // namespace

TEST_CASE("binomial formula values") {
    CHECK(catalanBinomial(0) == 1);
    CHECK(catalanBinomial(9) == 4862);
    CHECK(catalanBinomial(10) == binomFactorial(20, 10) / 11);
    CHECK(catalanBinomial(10) == 16796);
}

TEST_CASE("convolution recurrence values") {
    CHECK(catalanConvolution(2) == std::vector<BigInt>{1, 1, 2});
    CHECK(catalanConvolution(0) == std::vector<BigInt>{1});
    CHECK(catalanConvolution(9) == kFirstTen);
}

TEST_CASE("ratio recurrence mod p") {
    auto r101 = catalanRatioModP(4, P(101));
    CHECK_FALSE(r101.usedFallback);
    std::vector<BigInt> got;
    for (const Residue& v : r101.values) got.push_back(v.value());
    CHECK(got == std::vector<BigInt>{1, 1, 2, 5, 14});

    // p = 7 <= upTo + 2 forces the exact-reduce fallback
    auto r7 = catalanRatioModP(9, P(7));
    CHECK(r7.usedFallback);
    got.clear();
    for (const Residue& v : r7.values) got.push_back(v.value());
    CHECK(got == std::vector<BigInt>{1, 1, 2, 5, 0, 0, 6, 2, 2, 4});

    auto r5 = catalanRatioModP(0, P(5));
    CHECK_FALSE(r5.usedFallback);
    CHECK(r5.values.size() == 1);
    CHECK(r5.values[0].value() == 1);
}

TEST_CASE("all three methods agree, exactly and mod p") {
    CatalanStream ratio(CatalanMethod::Ratio);
    CatalanStream convolution(CatalanMethod::Convolution);
    Prime p1 = P(10007);
    Prime p2 = P(testutil::kMersenne61);
    auto mod1 = catalanRatioModP(150, p1);
    auto mod2 = catalanRatioModP(150, p2);
    CHECK_FALSE(mod1.usedFallback);
    CHECK_FALSE(mod2.usedFallback);
    for (std::size_t n = 0; n <= 150; ++n) {
        BigInt exact = catalanBinomial(n);
        CHECK(exact == convolution.at(n));
        CHECK(exact == ratio.at(n));
        CHECK(mod1.values[n].value() == exact % p1.value());
        CHECK(mod2.values[n].value() == exact % p2.value());
    }
}

TEST_CASE("ratio recurrence identity holds exactly") {
    CatalanStream c(CatalanMethod::Convolution);
    for (std::size_t n = 0; n <= 500; ++n)
        CHECK(BigInt(n + 2) * c.at(n + 1) == BigInt(2 * (2 * n + 1)) * c.at(n));
}

TEST_CASE("catalan values grow strictly from n = 2") {
    CatalanStream c(CatalanMethod::Ratio);
    CHECK(c.at(0) == 1);
    for (std::size_t n = 2; n <= 100; ++n) CHECK(c.at(n) < c.at(n + 1));
}

TEST_CASE("generating function fixed point in the truncated ring") {
    CHECK(gfFixedPointCheck(1, P(7)));
    CHECK(gfFixedPointCheck(10, P(10007)));
    CHECK(gfFixedPointCheck(100, P(testutil::kMersenne61)));
    for (std::uint64_t n = 1; n <= 60; ++n) {
        CHECK(gfFixedPointCheck(n, P(10007)));
        CHECK(gfFixedPointCheck(n, P(7))); // exercises the small-prime fallback
    }
}
