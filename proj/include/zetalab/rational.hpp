#pragma once

#include <cstdint>
#include <string>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace detail {

using int128 = __int128;
using uint128 = unsigned __int128;

inline uint128 uabs128(int128 x) {
    return x < 0 ? static_cast<uint128>(-(x + 1)) + 1 : static_cast<uint128>(x);
}

inline uint128 gcd128(uint128 a, uint128 b) {
    while (b != 0) {
        const uint128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::string to_string128(int128 x) {
    if (x == 0) return "0";
    const bool neg = x < 0;
    uint128 u = uabs128(x);
    std::string out;
    while (u != 0) {
        out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) out.insert(out.begin(), '-');
    return out;
}

} // namespace detail

/// Exact rational with 128-bit components, kept reduced with positive
/// denominator. Wide enough for every identity exercised here (numerators
/// up to ~n^4 with n <= 10^4).
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(detail::int128 num, detail::int128 den) { assign(num, den); }
    explicit Rational(std::int64_t value) : num_(value), den_(1) {}

    detail::int128 numerator() const { return num_; }
    detail::int128 denominator() const { return den_; }

    Rational operator+(const Rational& o) const {
        return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
    }
    Rational operator-(const Rational& o) const {
        return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
    }
    Rational operator*(const Rational& o) const {
        return {num_ * o.num_, den_ * o.den_};
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw precondition_error("Rational: division by zero");
        return {num_ * o.den_, den_ * o.num_};
    }
    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// "20/3", or just "7" when the denominator is 1.
    std::string to_string() const {
        if (den_ == 1) return detail::to_string128(num_);
        return detail::to_string128(num_) + "/" + detail::to_string128(den_);
    }

private:
    void assign(detail::int128 num, detail::int128 den) {
        if (den == 0) throw precondition_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num == 0) {
            num_ = 0;
            den_ = 1;
            return;
        }
        const detail::uint128 g =
            detail::gcd128(detail::uabs128(num), detail::uabs128(den));
        num_ = num / static_cast<detail::int128>(g);
        den_ = den / static_cast<detail::int128>(g);
    }

    detail::int128 num_;
    detail::int128 den_;
};

/// Exact binomial coefficient; valid for the ranges used here (a <= 62).
inline std::uint64_t binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    detail::uint128 r = 1;
    for (int i = 1; i <= b; ++i) {
        r = r * static_cast<detail::uint128>(a - b + i) /
            static_cast<detail::uint128>(i);
    }
    return static_cast<std::uint64_t>(r);
}

} // namespace zetalab
