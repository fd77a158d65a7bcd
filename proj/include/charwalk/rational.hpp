#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace charwalk {

using int128 = __int128;
using uint128 = unsigned __int128;

inline std::string to_string_u128(uint128 v) {
    if (v == 0) return "0";
    char buf[48];
    int i = 48;
    while (v != 0) {
        buf[--i] = static_cast<char>('0' + static_cast<unsigned>(v % 10));
        v /= 10;
    }
    return std::string(buf + i, 48 - i);
}

inline std::string to_string_i128(int128 v) {
    if (v < 0) return "-" + to_string_u128(static_cast<uint128>(-(v + 1)) + 1);
    return to_string_u128(static_cast<uint128>(v));
}

inline uint128 gcd_u128(uint128 a, uint128 b) {
    while (b != 0) {
        uint128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

namespace detail {

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("rational: 128-bit multiply overflow");
    return r;
}

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("rational: 128-bit add overflow");
    return r;
}

} // namespace detail

// Exact rational with 128-bit components, always normalized: den > 0,
// gcd(|num|, den) == 1. All comparisons and arithmetic are exact; anything
// that would overflow 128 bits throws instead of wrapping.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}

    Rational(int128 num, int128 den) : num_(num), den_(den) { normalize(); }

    // NOLINTNEXTLINE(google-explicit-constructor) integers convert exactly
    Rational(std::int64_t n) : num_(n), den_(1) {}

    static Rational of(std::int64_t num, std::int64_t den) { return Rational(num, den); }

    // Parses "a/b" or a bare integer "a".
    static Rational parse(std::string_view s) {
        auto bad = [&] { throw std::invalid_argument("rational: cannot parse '" + std::string(s) + "'"); };
        if (s.empty()) bad();
        auto slash = s.find('/');
        std::string_view ns = s.substr(0, slash);
        std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
        auto parse_int = [&](std::string_view t) -> int128 {
            if (t.empty()) bad();
            bool neg = false;
            std::size_t i = 0;
            if (t[0] == '-' || t[0] == '+') {
                neg = t[0] == '-';
                i = 1;
                if (t.size() == 1) bad();
            }
            int128 v = 0;
            for (; i < t.size(); ++i) {
                if (t[i] < '0' || t[i] > '9') bad();
                v = detail::checked_add(detail::checked_mul(v, 10), t[i] - '0');
            }
            return neg ? -v : v;
        };
        return Rational(parse_int(ns), parse_int(ds));
    }

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational operator+(const Rational& o) const {
        using detail::checked_add;
        using detail::checked_mul;
        int128 g = static_cast<int128>(gcd_u128(static_cast<uint128>(den_), static_cast<uint128>(o.den_)));
        int128 l = checked_mul(den_ / g, o.den_);
        int128 n = checked_add(checked_mul(num_, o.den_ / g), checked_mul(o.num_, den_ / g));
        return Rational(n, l);
    }

    Rational operator-(const Rational& o) const { return *this + (-o); }

    Rational operator*(const Rational& o) const {
        // cross-reduce before multiplying to keep components small
        int128 g1 = static_cast<int128>(gcd_u128(uabs(num_), static_cast<uint128>(o.den_)));
        int128 g2 = static_cast<int128>(gcd_u128(uabs(o.num_), static_cast<uint128>(den_)));
        Rational r;
        r.num_ = detail::checked_mul(num_ / g1, o.num_ / g2);
        r.den_ = detail::checked_mul(den_ / g2, o.den_ / g1);
        return r;
    }

    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational: division by zero");
        Rational inv;
        inv.num_ = o.den_;
        inv.den_ = o.num_;
        if (inv.den_ < 0) {
            inv.num_ = -inv.num_;
            inv.den_ = -inv.den_;
        }
        return *this * inv;
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    bool operator<(const Rational& o) const {
        return detail::checked_mul(num_, o.den_) < detail::checked_mul(o.num_, den_);
    }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // Canonical "num/den" form, e.g. "7/3", "2/1", "-1/4".
    std::string to_fraction_string() const {
        return to_string_i128(num_) + "/" + to_string_i128(den_);
    }

    // Shortest exact decimal when the expansion terminates within `sig`
    // digits, otherwise the value correctly rounded to `sig` significant
    // digits. Pure integer long division; no floating point involved.
    std::string to_decimal_string(int sig = 12) const;

private:
    static uint128 uabs(int128 v) {
        return v < 0 ? static_cast<uint128>(-(v + 1)) + 1 : static_cast<uint128>(v);
    }

    void normalize() {
        if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        int128 g = static_cast<int128>(gcd_u128(uabs(num_), static_cast<uint128>(den_)));
        num_ /= g;
        den_ /= g;
    }

    int128 num_;
    int128 den_;
};

inline std::string Rational::to_decimal_string(int sig) const {
    if (sig < 1) throw std::invalid_argument("rational: need at least one significant digit");
    if (num_ == 0) return "0";

    uint128 a = uabs(num_);
    uint128 b = static_cast<uint128>(den_);
    std::string int_part = to_string_u128(a / b);
    uint128 rem = a % b;

    std::string digits;     // significant digits, without the decimal point
    int point_pos;          // digits before the decimal point (may be <= 0)
    bool exact = false;

    if (int_part != "0") {
        digits = int_part;
        point_pos = static_cast<int>(int_part.size());
        while (static_cast<int>(digits.size()) < sig + 1 && rem != 0) {
            rem *= 10;
            digits.push_back(static_cast<char>('0' + static_cast<unsigned>(rem / b)));
            rem %= b;
        }
        exact = rem == 0 && static_cast<int>(digits.size()) <= sig;
    } else {
        // skip leading zeros of the fraction; they are not significant
        point_pos = 0;
        while (rem != 0) {
            rem *= 10;
            unsigned d = static_cast<unsigned>(rem / b);
            rem %= b;
            if (d == 0 && digits.empty()) {
                --point_pos;
                continue;
            }
            digits.push_back(static_cast<char>('0' + d));
            if (static_cast<int>(digits.size()) >= sig + 1) break;
        }
        exact = rem == 0 && static_cast<int>(digits.size()) <= sig;
    }

    if (!exact && static_cast<int>(digits.size()) > sig) {
        // round half up at digit `sig`
        bool up = digits[sig] >= '5';
        digits.resize(sig);
        if (up) {
            int i = sig - 1;
            while (i >= 0 && digits[i] == '9') digits[i--] = '0';
            if (i < 0) {
                digits.insert(digits.begin(), '1');
                ++point_pos;
            } else {
                ++digits[i];
            }
        }
    }

    // strip trailing zeros after the decimal point
    while (static_cast<int>(digits.size()) > point_pos && !digits.empty() && digits.back() == '0')
        digits.pop_back();

    std::string out;
    if (num_ < 0) out.push_back('-');
    if (point_pos <= 0) {
        out += "0.";
        out.append(static_cast<std::size_t>(-point_pos), '0');
        out += digits;
    } else if (static_cast<int>(digits.size()) <= point_pos) {
        out += digits;
        out.append(static_cast<std::size_t>(point_pos) - digits.size(), '0');
    } else {
        out += digits.substr(0, static_cast<std::size_t>(point_pos));
        out.push_back('.');
        out += digits.substr(static_cast<std::size_t>(point_pos));
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_fraction_string();
}

} // namespace charwalk
