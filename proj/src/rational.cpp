#include "boolspec/rational.hpp"

#include <limits>
#include <stdexcept>

namespace boolspec {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(__int128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() + 1 &&
           v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational Rational::from_wide(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n == 0) d = 1;
    if (!fits(n) || !fits(d)) throw std::overflow_error("rational overflow");
    return raw(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
}

Rational::Rational(std::int64_t n, std::int64_t d) { *this = from_wide(n, d); }

Rational Rational::dyadic(std::int64_t n, int log2_den) {
    if (log2_den < 0 || log2_den > 62) throw std::overflow_error("dyadic exponent out of range");
    return from_wide(n, __int128(1) << log2_den);
}

Rational pow2(int e) {
    if (e >= 0) {
        if (e > 62) throw std::overflow_error("pow2 exponent out of range");
        return Rational(std::int64_t(1) << e);
    }
    return Rational::dyadic(1, -e);
}

Rational Rational::inverse() const {
    if (num_ == 0) throw std::domain_error("inverse of zero");
    return from_wide(den_, num_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational::from_wide(__int128(a.num_) + b.num_, a.den_);
    return Rational::from_wide(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_,
                               __int128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::from_wide(__int128(a.num_) * b.num_, __int128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return Rational::from_wide(__int128(a.num_) * b.den_, __int128(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = __int128(a.num_) * b.den_;
    __int128 r = __int128(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace boolspec
