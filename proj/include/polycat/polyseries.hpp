#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "polycat/bigint.hpp"
#include "polycat/errors.hpp"

namespace polycat {

// A potentially unbounded sequence of natural numbers with 1-based
// indexing, a deterministic generator rule, and a memoized prefix.
//
// Handles are single-thread confined: value() fills the memo table in
// place and is not synchronized. Bounded handles produced by
// truncation() or fromTerms() are fully materialized and immutable, so
// they may be shared freely.
class Polyseries {
public:
    using Generator = std::function<BigInt(std::uint64_t)>; // 1-based index

    static Polyseries unbounded(Generator gen);
    static Polyseries fromTerms(std::vector<BigInt> terms);

    // n-th term, memoizing everything up to n. Throws InvalidIndex for
    // n = 0 and OutOfRange past a finite bound.
    const BigInt& value(std::uint64_t n) const;

    // The finite bound, or nullopt for an unbounded sequence.
    std::optional<std::uint64_t> length() const noexcept { return bound_; }
    bool isBounded() const noexcept { return bound_.has_value(); }

    // Bounded sequence whose terms 1..k agree with this one; the result
    // is fully materialized.
    Polyseries truncation(std::uint64_t k) const;

    // All terms of a bounded sequence. Throws UnboundedOperand otherwise.
    const std::vector<BigInt>& terms() const;

private:
    Polyseries() = default;

    Generator gen_;
    mutable std::vector<BigInt> prefix_;
    std::optional<std::uint64_t> bound_;
};

// Position of the first occurrence of `term` among terms 1..searchBound,
// or nullopt. The search horizon keeps every lookup total; it is clamped
// to the bound for bounded sequences.
std::optional<std::uint64_t> indexOf(const Polyseries& a, const BigInt& term,
                                     std::uint64_t searchBound);
std::optional<std::uint64_t> indexOf(const Polyseries& a, const BigInt& term); // bounded only

// Term after / before the first occurrence of `term`; nullopt when the
// term is absent or the neighbour falls outside the sequence.
std::optional<BigInt> next(const Polyseries& a, const BigInt& term, std::uint64_t searchBound);
std::optional<BigInt> previous(const Polyseries& a, const BigInt& term, std::uint64_t searchBound);

// min{ value(a, k) : k >= n } for a bounded sequence.
BigInt tailmin(const Polyseries& a, std::uint64_t n);

// Multiset sort: same length, terms in non-decreasing order.
Polyseries sorted(const Polyseries& a);

// Strictly increasing terms (1..bound, or 1..horizon).
bool issorted(const Polyseries& a);
bool issorted(const Polyseries& a, std::uint64_t horizon);

// Multiset equality: sorted(a) = sorted(b) term by term.
bool permutad(const Polyseries& a, const Polyseries& b);

} // namespace polycat
