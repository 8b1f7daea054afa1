#ifndef BVMS_RATIONAL_HPP
#define BVMS_RATIONAL_HPP

#include <cctype>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include "bvms/errors.hpp"

namespace bvms {

/// Exact rational number on 64-bit integers.
///
/// Always stored reduced with a positive denominator. Arithmetic goes
/// through 128-bit intermediates and throws RationalOverflowError if the
/// reduced result leaves the 64-bit range; comparisons never overflow.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) throw RationalParseError(std::to_string(num) + "/0", "zero denominator");
        normalize(num, den);
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_integer() const { return den_ == 1; }

    /// Grammar: optional sign, digits, then optionally "/" digits or "." digits.
    static Rational parse(std::string_view text) {
        std::size_t pos = 0;
        bool negative = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            negative = text[pos] == '-';
            ++pos;
        }
        const auto digits = [&](std::string_view what) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) throw RationalParseError(std::string(text), "expected digits for " + std::string(what));
            return text.substr(start, pos - start);
        };
        const std::string_view whole = digits("the numerator");
        std::string_view frac, denom;
        bool decimal = false;
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            denom = digits("the denominator");
        } else if (pos < text.size() && text[pos] == '.') {
            ++pos;
            decimal = true;
            frac = digits("the fractional part");
        }
        if (pos != text.size()) throw RationalParseError(std::string(text), "trailing characters");

        std::int64_t num = accumulate_digits(whole, text);
        std::int64_t den = 1;
        if (decimal) {
            for (char c : frac) {
                num = checked_mul_add(num, 10, c - '0', text);
                den = checked_mul_add(den, 10, 0, text);
            }
        } else if (!denom.empty()) {
            den = accumulate_digits(denom, text);
            if (den == 0) throw RationalParseError(std::string(text), "zero denominator");
        }
        if (negative) num = -num;
        return Rational(num, den);
    }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw RationalParseError(a.to_string() + " / 0", "division by zero");
        return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const i128 lhs = i128(a.num_) * b.den_;
        const i128 rhs = i128(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    using i128 = __int128;

    static std::int64_t accumulate_digits(std::string_view digits, std::string_view full) {
        std::int64_t value = 0;
        for (char c : digits) value = checked_mul_add(value, 10, c - '0', full);
        return value;
    }

    static std::int64_t checked_mul_add(std::int64_t value, std::int64_t mul, std::int64_t add,
                                        std::string_view full) {
        i128 r = i128(value) * mul + add;
        if (r > std::numeric_limits<std::int64_t>::max())
            throw RationalParseError(std::string(full), "value outside 64-bit range");
        return static_cast<std::int64_t>(r);
    }

    static Rational from_i128(i128 num, i128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const i128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num > std::numeric_limits<std::int64_t>::max() || num < std::numeric_limits<std::int64_t>::min() ||
            den > std::numeric_limits<std::int64_t>::max())
            throw RationalOverflowError();
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void normalize(std::int64_t num, std::int64_t den) { *this = from_i128(i128(num), i128(den)); }

    std::int64_t num_;
    std::int64_t den_;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

}  // namespace bvms

#endif
