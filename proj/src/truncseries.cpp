#include "polycat/truncseries.hpp"

#include <sstream>

namespace polycat {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::vector<u64> toU64(const std::vector<BigInt>& v) {
    std::vector<u64> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].convert_to<u64>();
    return out;
}

} // namespace

PrimePowerInt::PrimePowerInt(BigInt value, Prime p, std::uint64_t n)
    : value_(std::move(value)), p_(std::move(p)), n_(n) {
    if (n_ == 0) throw DegreeTooSmall("prime-power degree must be >= 1");
    modulus_ = boost::multiprecision::pow(p_.value(), static_cast<unsigned>(n_));
    value_ %= modulus_;
    if (value_ < 0) value_ += modulus_;
}

bool operator==(const PrimePowerInt& a, const PrimePowerInt& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.value_ == b.value_;
}

TruncSeries::TruncSeries(Prime p, std::uint64_t n) : p_(std::move(p)), n_(n) {
    if (n_ < 2) throw DegreeTooSmall("truncation order must be >= 2");
    coeffs_.assign(n_, BigInt(0));
}

TruncSeries TruncSeries::fromCoeffs(const Prime& p, std::uint64_t n,
                                    const std::vector<BigInt>& raw) {
    if (n < 2) throw DegreeTooSmall("truncation order must be >= 2");
    if (raw.size() > n)
        throw TruncateInput("got " + std::to_string(raw.size()) +
                            " coefficients for truncation order " + std::to_string(n));
    TruncSeries s(p, n);
    const BigInt& pv = p.value();
    for (std::size_t k = 0; k < raw.size(); ++k) {
        BigInt c = raw[k] % pv;
        if (c < 0) c += pv;
        s.coeffs_[k] = std::move(c);
    }
    return s;
}

TruncSeries TruncSeries::constant(const Prime& p, std::uint64_t n, const BigInt& c) {
    return fromCoeffs(p, n, {c});
}

TruncSeries TruncSeries::indeterminate(const Prime& p, std::uint64_t n) {
    return fromCoeffs(p, n, {0, 1});
}

Residue TruncSeries::coeff(std::uint64_t k) const {
    if (k >= n_) throw OutOfRange("coefficient index " + std::to_string(k) +
                                  " outside degree bound " + std::to_string(n_));
    return Residue(coeffs_[k], p_);
}

bool TruncSeries::isZero() const {
    for (const BigInt& c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::uint64_t TruncSeries::valuation() const {
    for (std::uint64_t k = 0; k < n_; ++k)
        if (coeffs_[k] != 0) return k;
    return n_;
}

PrimePowerInt TruncSeries::evalAtP() const {
    // Horner at t = p; with canonical digits the sum is already < p^n.
    BigInt v = 0;
    for (std::uint64_t k = n_; k-- > 0;) v = v * p_.value() + coeffs_[k];
    return PrimePowerInt(std::move(v), p_, n_);
}

void TruncSeries::requireSameShape(const TruncSeries& x, const TruncSeries& y) {
    if (x.p_ != y.p_ || x.n_ != y.n_)
        throw ShapeMismatch("series shapes differ: (p=" + x.p_.value().str() + ", n=" +
                            std::to_string(x.n_) + ") vs (p=" + y.p_.value().str() + ", n=" +
                            std::to_string(y.n_) + ")");
}

TruncSeries operator+(const TruncSeries& x, const TruncSeries& y) {
    TruncSeries::requireSameShape(x, y);
    TruncSeries z(x.p_, x.n_);
    const BigInt& p = x.p_.value();
    for (std::uint64_t k = 0; k < x.n_; ++k) {
        BigInt c = x.coeffs_[k] + y.coeffs_[k];
        if (c >= p) c -= p;
        z.coeffs_[k] = std::move(c);
    }
    return z;
}

TruncSeries operator-(const TruncSeries& x, const TruncSeries& y) {
    TruncSeries::requireSameShape(x, y);
    TruncSeries z(x.p_, x.n_);
    const BigInt& p = x.p_.value();
    for (std::uint64_t k = 0; k < x.n_; ++k) {
        BigInt c = x.coeffs_[k] - y.coeffs_[k];
        if (c < 0) c += p;
        z.coeffs_[k] = std::move(c);
    }
    return z;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries z(p_, n_);
    const BigInt& p = p_.value();
    for (std::uint64_t k = 0; k < n_; ++k)
        z.coeffs_[k] = coeffs_[k] == 0 ? BigInt(0) : p - coeffs_[k];
    return z;
}

TruncSeries operator*(const TruncSeries& x, const TruncSeries& y) {
    TruncSeries::requireSameShape(x, y);
    TruncSeries z(x.p_, x.n_);
    const std::size_t n = x.n_;
    const BigInt& p = x.p_.value();

    if (p <= BigInt(0xffffffffULL)) {
        // Products fit u64 and a u128 accumulator absorbs 2^64 of them,
        // so each output coefficient reduces once.
        const u64 pm = p.convert_to<u64>();
        std::vector<u64> a = toU64(x.coeffs_), b = toU64(y.coeffs_);
        for (std::size_t m = 0; m < n; ++m) {
            u128 acc = 0;
            for (std::size_t i = 0; i <= m; ++i) acc += static_cast<u128>(a[i]) * b[m - i];
            z.coeffs_[m] = static_cast<u64>(acc % pm);
        }
        return z;
    }
    if (fitsUint64(p)) {
        const u64 pm = p.convert_to<u64>();
        std::vector<u64> a = toU64(x.coeffs_), b = toU64(y.coeffs_);
        for (std::size_t m = 0; m < n; ++m) {
            u64 acc = 0;
            for (std::size_t i = 0; i <= m; ++i)
                acc = static_cast<u64>((static_cast<u128>(a[i]) * b[m - i] +
                                        static_cast<u128>(acc)) %
                                       pm);
            z.coeffs_[m] = acc;
        }
        return z;
    }
    for (std::size_t m = 0; m < n; ++m) {
        BigInt acc = 0;
        for (std::size_t i = 0; i <= m; ++i) acc += x.coeffs_[i] * y.coeffs_[m - i];
        z.coeffs_[m] = acc % p;
    }
    return z;
}

TruncSeries operator*(const Residue& c, const TruncSeries& x) {
    if (c.modulus() != x.p_)
        throw ShapeMismatch("scalar modulus " + c.modulus().value().str() +
                            " does not match series field " + x.p_.value().str());
    TruncSeries z(x.p_, x.n_);
    const BigInt& p = x.p_.value();
    for (std::uint64_t k = 0; k < x.n_; ++k) z.coeffs_[k] = c.value() * x.coeffs_[k] % p;
    return z;
}

bool operator==(const TruncSeries& x, const TruncSeries& y) {
    return x.p_ == y.p_ && x.n_ == y.n_ && x.coeffs_ == y.coeffs_;
}

TruncSeries scaleT(const TruncSeries& x, const Residue& c) {
    if (c.modulus() != x.field())
        throw ShapeMismatch("scalar modulus does not match series field");
    const BigInt& p = x.field().value();
    BigInt power = 1; // c^k
    std::vector<BigInt> coeffs(x.coeffs());
    for (std::uint64_t k = 0; k < x.degreeBound(); ++k) {
        coeffs[k] = coeffs[k] * power % p;
        power = power * c.value() % p;
    }
    return TruncSeries::fromCoeffs(x.field(), x.degreeBound(), coeffs);
}

std::vector<BigInt> mulExactCoeffs(const TruncSeries& x, const TruncSeries& y) {
    if (x.field() != y.field() || x.degreeBound() != y.degreeBound())
        throw ShapeMismatch("series shapes differ");
    const std::size_t n = x.degreeBound();
    std::vector<BigInt> out(n, BigInt(0));
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t i = 0; i <= m; ++i) out[m] += x.coeffs()[i] * y.coeffs()[m - i];
    return out;
}

std::string TruncSeries::toText(bool balanced) const {
    std::ostringstream out;
    bool first = true;
    for (std::uint64_t k = 0; k < n_; ++k) {
        if (coeffs_[k] == 0) continue;
        bool negative = false;
        BigInt mag = coeffs_[k];
        if (balanced) {
            Residue r(coeffs_[k], p_);
            negative = r.classify() == ResidueClass::NegativeHalf;
            mag = r.balancedValue();
        }
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (k == 0) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str() << "*";
            out << "t";
            if (k > 1) out << "^" << k;
        }
    }
    if (first) out << "0";
    return out.str();
}

} // namespace polycat
