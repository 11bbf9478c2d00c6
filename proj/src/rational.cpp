#include "pbmo/rational.hpp"

#include "pbmo/error.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <fmt/format.h>

namespace pbmo {

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw DomainError("rational with zero denominator");
    // boost rejects a negative denominator, so move the sign up first.
    value_ = denominator < 0 ? Value(-numerator, -denominator) : Value(numerator, denominator);
}

BigInt ExactRational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt ExactRational::denominator() const { return boost::multiprecision::denominator(value_); }

std::string ExactRational::to_string() const {
    return numerator().str() + "/" + denominator().str();
}

long double ExactRational::to_long_double() const {
    BigInt num = numerator();
    const BigInt den = denominator();
    if (num == 0) return 0.0L;
    const bool negative = num < 0;
    if (negative) num = -num;
    // Scale so the integer quotient carries about 64 significant bits.
    const long shift = static_cast<long>(boost::multiprecision::msb(den)) -
                       static_cast<long>(boost::multiprecision::msb(num)) + 64;
    BigInt q = shift >= 0 ? BigInt(num << static_cast<unsigned>(shift)) / den
                          : num / BigInt(den << static_cast<unsigned>(-shift));
    const long double mag = std::ldexp(q.convert_to<long double>(), static_cast<int>(-shift));
    return negative ? -mag : mag;
}

std::string ExactRational::to_decimal(int significant_digits) const {
    // fmt drops trailing zeros for long double under '#', so use printf.
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.*Lg", significant_digits, to_long_double());
    return buf;
}

ExactRational operator+(const ExactRational& a, const ExactRational& b) {
    return ExactRational(ExactRational::Value(a.value_ + b.value_));
}
ExactRational operator-(const ExactRational& a, const ExactRational& b) {
    return ExactRational(ExactRational::Value(a.value_ - b.value_));
}
ExactRational operator*(const ExactRational& a, const ExactRational& b) {
    return ExactRational(ExactRational::Value(a.value_ * b.value_));
}
ExactRational operator/(const ExactRational& a, const ExactRational& b) {
    if (b.value_ == 0) throw DomainError("division by zero rational");
    return ExactRational(ExactRational::Value(a.value_ / b.value_));
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    // Each partial product r * (n-k+i) / i is itself a binomial, so the
    // division is exact.
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt pow2(int exponent) {
    if (exponent < 0) throw std::domain_error("negative exponent");
    return BigInt(1) << static_cast<unsigned>(exponent);
}

}  // namespace pbmo
