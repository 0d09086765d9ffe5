#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "polycat/bigint.hpp"
#include "polycat/modfield.hpp"
#include "polycat/polyseries.hpp"
#include "polycat/truncseries.hpp"

namespace testutil {

inline polycat::Prime P(const std::string& s) { return polycat::Prime(polycat::BigInt(s)); }
inline polycat::Prime P(std::uint64_t v) { return polycat::Prime(polycat::BigInt(v)); }

inline polycat::Residue R(std::int64_t v, const polycat::Prime& p) {
    return polycat::Residue(polycat::BigInt(v), p);
}

inline polycat::Polyseries list(std::vector<std::int64_t> values) {
    std::vector<polycat::BigInt> terms(values.begin(), values.end());
    return polycat::Polyseries::fromTerms(std::move(terms));
}

inline polycat::TruncSeries series(const polycat::Prime& p, std::uint64_t n,
                                   std::vector<std::int64_t> raw) {
    std::vector<polycat::BigInt> coeffs(raw.begin(), raw.end());
    return polycat::TruncSeries::fromCoeffs(p, n, coeffs);
}

inline std::vector<std::uint64_t> coeffsU64(const polycat::TruncSeries& s) {
    std::vector<std::uint64_t> out;
    for (const polycat::BigInt& c : s.coeffs()) out.push_back(c.convert_to<std::uint64_t>());
    return out;
}

// 2^61 - 1, the larger test prime.
inline const char* kMersenne61 = "2305843009213693951";

} // namespace testutil
