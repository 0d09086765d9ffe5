#include "polycat/polyseries.hpp"

#include <algorithm>
#include <utility>

namespace polycat {

Polyseries Polyseries::unbounded(Generator gen) {
    Polyseries a;
    a.gen_ = std::move(gen);
    return a;
}

Polyseries Polyseries::fromTerms(std::vector<BigInt> terms) {
    for (const BigInt& t : terms)
        if (t < 0) throw InvalidTerm("polyseries terms are naturals, got " + t.str());
    Polyseries a;
    a.bound_ = terms.size();
    a.prefix_ = std::move(terms);
    return a;
}

const BigInt& Polyseries::value(std::uint64_t n) const {
    if (n == 0) throw InvalidIndex("indices are 1-based");
    if (bound_ && n > *bound_)
        throw OutOfRange("index " + std::to_string(n) + " exceeds bound " + std::to_string(*bound_));
    if (prefix_.size() < n) {
        prefix_.reserve(n);
        for (std::uint64_t k = prefix_.size() + 1; k <= n; ++k) prefix_.push_back(gen_(k));
    }
    return prefix_[n - 1];
}

Polyseries Polyseries::truncation(std::uint64_t k) const {
    if (bound_ && k > *bound_)
        throw OutOfRange("truncation length " + std::to_string(k) + " exceeds bound " +
                         std::to_string(*bound_));
    std::vector<BigInt> terms;
    terms.reserve(k);
    for (std::uint64_t i = 1; i <= k; ++i) terms.push_back(value(i));
    return fromTerms(std::move(terms));
}

const std::vector<BigInt>& Polyseries::terms() const {
    if (!bound_) throw UnboundedOperand("operation needs a bounded polyseries");
    if (*bound_ > 0) value(*bound_); // materialize
    return prefix_;
}

std::optional<std::uint64_t> indexOf(const Polyseries& a, const BigInt& term,
                                     std::uint64_t searchBound) {
    if (auto b = a.length()) searchBound = std::min(searchBound, *b);
    for (std::uint64_t i = 1; i <= searchBound; ++i)
        if (a.value(i) == term) return i;
    return std::nullopt;
}

std::optional<std::uint64_t> indexOf(const Polyseries& a, const BigInt& term) {
    if (!a.isBounded()) throw UnboundedOperand("index over an unbounded polyseries needs a horizon");
    return indexOf(a, term, *a.length());
}

std::optional<BigInt> next(const Polyseries& a, const BigInt& term, std::uint64_t searchBound) {
    auto i = indexOf(a, term, searchBound);
    if (!i) return std::nullopt;
    if (a.length() && *i == *a.length()) return std::nullopt; // last term
    return a.value(*i + 1);
}

std::optional<BigInt> previous(const Polyseries& a, const BigInt& term, std::uint64_t searchBound) {
    auto i = indexOf(a, term, searchBound);
    if (!i || *i == 1) return std::nullopt;
    return a.value(*i - 1);
}

BigInt tailmin(const Polyseries& a, std::uint64_t n) {
    if (!a.isBounded()) throw UnboundedOperand("tailmin needs a bounded polyseries");
    std::uint64_t b = *a.length();
    if (n == 0 || n > b)
        throw OutOfRange("tailmin start " + std::to_string(n) + " outside 1.." + std::to_string(b));
    BigInt m = a.value(n);
    for (std::uint64_t i = n + 1; i <= b; ++i) m = std::min(m, a.value(i));
    return m;
}

Polyseries sorted(const Polyseries& a) {
    std::vector<BigInt> terms = a.terms();
    std::sort(terms.begin(), terms.end());
    return Polyseries::fromTerms(std::move(terms));
}

bool issorted(const Polyseries& a) {
    if (!a.isBounded()) throw UnboundedOperand("issorted over an unbounded polyseries needs a horizon");
    return issorted(a, *a.length());
}

bool issorted(const Polyseries& a, std::uint64_t horizon) {
    if (auto b = a.length()) horizon = std::min(horizon, *b);
    for (std::uint64_t i = 2; i <= horizon; ++i)
        if (!(a.value(i - 1) < a.value(i))) return false;
    return true;
}

bool permutad(const Polyseries& a, const Polyseries& b) {
    return sorted(a).terms() == sorted(b).terms();
}

} // namespace polycat
