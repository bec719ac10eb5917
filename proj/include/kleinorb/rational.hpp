// Exact arithmetic over Q and Q(sqrt(-1)), the coefficient fields for
// everything else in this library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace kleinorb {

using BigInt = boost::multiprecision::cpp_int;

// Reduced fraction with positive denominator; zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    // True when the value lies in Z + 1/2.
    bool is_half_integer() const { return den_ == 2; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    // Serialized as "p/q" with "/q" omitted when q = 1.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

private:
    void reduce() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        num_ /= g;
        den_ /= g;
    }

    BigInt num_;
    BigInt den_;
};

inline Rational abs(const Rational& a) { return a < Rational(0) ? -a : a; }

// Element of Q(sqrt(-1)), componentwise normalized.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long long n) : re_(n) {}
    GaussRational(Rational re) : re_(std::move(re)) {}
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_rational() const { return im_.is_zero(); }

    GaussRational conj() const { return GaussRational(re_, -im_); }
    // |z|^2, a nonnegative rational, zero iff z = 0.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        if (b.is_zero()) throw std::domain_error("GaussRational: division by zero");
        Rational n = b.norm2();
        GaussRational p = a * b.conj();
        return GaussRational(p.re_ / n, p.im_ / n);
    }
    GaussRational operator-() const { return GaussRational(-re_, -im_); }
    GaussRational& operator+=(const GaussRational& b) { return *this = *this + b; }
    GaussRational& operator-=(const GaussRational& b) { return *this = *this - b; }
    GaussRational& operator*=(const GaussRational& b) { return *this = *this * b; }
    GaussRational& operator/=(const GaussRational& b) { return *this = *this / b; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
    friend bool operator<(const GaussRational& a, const GaussRational& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    // Serialized as "p/q+r/s*I" (imaginary part omitted when zero).
    std::string str() const {
        if (im_.is_zero()) return re_.str();
        return re_.str() + "+" + im_.str() + "*I";
    }

private:
    Rational re_;
    Rational im_;
};

// Field-element concept shared by the templated engines: both Rational and
// GaussRational provide it.
template <class F>
concept ExactField = requires(F a, F b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a* b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
};

inline Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    Rational r(1);
    for (long t = 1; t <= k; ++t) r = r * Rational(n - t + 1) / Rational(t);
    return r;
}

}  // namespace kleinorb

template <>
struct std::hash<kleinorb::Rational> {
    size_t operator()(const kleinorb::Rational& r) const {
        return std::hash<std::string>{}(r.str());
    }
};

template <>
struct std::hash<kleinorb::GaussRational> {
    size_t operator()(const kleinorb::GaussRational& z) const {
        return std::hash<std::string>{}(z.str());
    }
};
