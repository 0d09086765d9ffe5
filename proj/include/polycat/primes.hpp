#pragma once

#include <cstdint>
#include <vector>

#include "polycat/polyseries.hpp"

namespace polycat {

// Incremental Eratosthenes sieve: extends by doubling the sieved range
// and keeps every prime found so far.
class PrimeSieve {
public:
    std::uint64_t nth(std::uint64_t k); // 1-based: nth(1) = 2
    void ensureCount(std::uint64_t k);
    const std::vector<std::uint64_t>& known() const noexcept { return primes_; }

private:
    void extendTo(std::uint64_t limit);

    std::vector<std::uint64_t> primes_;
    std::uint64_t limit_ = 1; // sieved through limit_
};

// The unbounded stream 2, 3, 5, 7, ... backed by its own sieve.
Polyseries primePolyseries();

struct PrimeAxiomReport {
    bool strictlySorted;        // consecutive primes strictly increase
    bool pairwiseNonDivisible;  // value(v) mod value(u) != 0 for u < v
    bool pass() const { return strictlySorted && pairwiseNonDivisible; }
};

PrimeAxiomReport checkPrimeAxioms(std::uint64_t count);

} // namespace polycat
