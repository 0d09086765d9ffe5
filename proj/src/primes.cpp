#include "polycat/primes.hpp"

#include <algorithm>
#include <memory>

namespace polycat {

void PrimeSieve::extendTo(std::uint64_t limit) {
    if (limit <= limit_) return;
    const std::uint64_t lo = limit_ + 1;
    std::vector<char> composite(limit - lo + 1, 0);

    if (primes_.empty()) {
        // Bootstrap block starting at 2: plain in-block Eratosthenes.
        for (std::uint64_t q = 2; q * q <= limit; ++q) {
            if (q >= lo && composite[q - lo]) continue;
            for (std::uint64_t m = q * q; m <= limit; m += q)
                if (m >= lo) composite[m - lo] = 1;
        }
    } else {
        // Doubling growth keeps sqrt(limit) <= limit_, so the known
        // primes suffice to mark the new segment.
        for (std::uint64_t q : primes_) {
            if (q * q > limit) break;
            std::uint64_t start = std::max(q * q, ((lo + q - 1) / q) * q);
            for (std::uint64_t m = start; m <= limit; m += q) composite[m - lo] = 1;
        }
    }

    for (std::uint64_t v = std::max<std::uint64_t>(lo, 2); v <= limit; ++v)
        if (!composite[v - lo]) primes_.push_back(v);
    limit_ = limit;
}

void PrimeSieve::ensureCount(std::uint64_t k) {
    while (primes_.size() < k) extendTo(limit_ < 32 ? 64 : limit_ * 2);
}

std::uint64_t PrimeSieve::nth(std::uint64_t k) {
    if (k == 0) throw InvalidIndex("prime indices are 1-based");
    ensureCount(k);
    return primes_[k - 1];
}

Polyseries primePolyseries() {
    auto sieve = std::make_shared<PrimeSieve>();
    return Polyseries::unbounded([sieve](std::uint64_t k) { return BigInt(sieve->nth(k)); });
}

PrimeAxiomReport checkPrimeAxioms(std::uint64_t count) {
    Polyseries trunc = primePolyseries().truncation(count);
    PrimeAxiomReport report{true, true};
    report.strictlySorted = issorted(trunc);
    for (std::uint64_t u = 1; u <= count && report.pairwiseNonDivisible; ++u)
        for (std::uint64_t v = u + 1; v <= count; ++v)
            if (trunc.value(v) % trunc.value(u) == 0) {
                report.pairwiseNonDivisible = false;
                break;
            }
    return report;
}

} // namespace polycat
