#pragma once

#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pbmo {

using BigInt = boost::multiprecision::cpp_int;

// Canonical exact rational: reduced, positive denominator. Thin value wrapper
// over boost's cpp_rational so equality is structural.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long long value) : value_(value) {}  // NOLINT(implicit)
    ExactRational(const BigInt& numerator, const BigInt& denominator);

    BigInt numerator() const;
    BigInt denominator() const;

    // "p/q", always with an explicit denominator ("1/1").
    std::string to_string() const;
    long double to_long_double() const;
    // printf "%#.{digits}g" rendering: display only, never compared.
    std::string to_decimal(int significant_digits = 6) const;

    friend ExactRational operator+(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator-(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator/(const ExactRational& a, const ExactRational& b);
    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

private:
    using Value = boost::multiprecision::cpp_rational;
    explicit ExactRational(Value v) : value_(std::move(v)) {}
    Value value_{0};
};

BigInt binomial(int n, int k);  // 0 outside 0 <= k <= n
BigInt pow2(int exponent);      // exponent >= 0

}  // namespace pbmo
