#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace critgraph {

class RationalOverflow : public std::overflow_error {
public:
    RationalOverflow() : std::overflow_error("rational arithmetic overflowed 64 bits") {}
};

/// Exact fraction num/den with den > 0 and gcd(num, den) = 1.
///
/// Arithmetic is carried out in 128 bits and reduced; a result that does not
/// fit back into 64 bits throws RationalOverflow instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {} // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend Rational operator+(const Rational &a, const Rational &b) {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from_wide(n, d);
    }
    friend Rational operator-(const Rational &a, const Rational &b) { return a + (-b); }
    friend Rational operator*(const Rational &a, const Rational &b) {
        return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational &a, const Rational &b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational &operator+=(const Rational &o) { return *this = *this + o; }
    Rational &operator-=(const Rational &o) { return *this = *this - o; }
    Rational &operator*=(const Rational &o) { return *this = *this * o; }
    Rational &operator/=(const Rational &o) { return *this = *this / o; }

    friend bool operator==(const Rational &, const Rational &) = default;
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l <=> r;
    }

    /// Smallest integer not below this value.
    std::int64_t ceil() const {
        std::int64_t q = num_ / den_;
        return (num_ % den_ != 0 && num_ > 0) ? q + 1 : q;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "p/q", with "/1" kept for integers so the format is uniform.
    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;

    void assign(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        *this = from_wide(n, d);
    }

    static __int128 gcd_wide(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational from_wide(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd_wide(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr __int128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim) throw RationalOverflow();
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
};

} // namespace critgraph

namespace Eigen {

template <> struct NumTraits<critgraph::Rational> : GenericNumTraits<critgraph::Rational> {
    using Real = critgraph::Rational;
    using NonInteger = critgraph::Rational;
    using Nested = critgraph::Rational;
    using Literal = critgraph::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 8,
        MulCost = 8
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen
