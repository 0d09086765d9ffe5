#include "polycat/bigint.hpp"

#include <cctype>
#include <limits>

#include "polycat/errors.hpp"

namespace polycat {

BigInt parseBigInt(const std::string& text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (i == text.size())
        throw ParseError("not a decimal integer: '" + text + "'");
    for (; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("not a decimal integer: '" + text + "'");
    return BigInt(text);
}

std::string toDecimal(const BigInt& x) {
    return x.str();
}

bool fitsUint64(const BigInt& x) {
    return x >= 0 && x <= BigInt(std::numeric_limits<std::uint64_t>::max());
}

BigInt invMod(const BigInt& a, const BigInt& m) {
    // Iterative extended Euclid on (a mod m, m).
    BigInt r0 = ((a % m) + m) % m;
    BigInt r1 = m;
    BigInt s0 = 1, s1 = 0; // s-coefficients: r = s*a (mod m)
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1)
        throw NotInvertible("no inverse: gcd(" + a.str() + ", " + m.str() + ") = " + r0.str());
    return ((s0 % m) + m) % m;
}

} // namespace polycat
