#pragma once

#include <compare>
#include <complex>
#include <string>

#include "formwell/bigint.hpp"

namespace formwell {

/// Exact rational number in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) == 1. Canonicalized eagerly so structural
/// equality is valid everywhere downstream.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt num, BigInt den);
    static Rational of(long long num, long long den) { return Rational(BigInt(num), BigInt(den)); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int signum() const { return num_.signum(); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "p/q", with "/q" omitted when q == 1.
    std::string to_string() const;
    double to_double() const { return num_.to_double() / den_.to_double(); }

    static bool sqrt_exact(const Rational& a, Rational& root);

private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

/// Complex number with exact rational real and imaginary parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }
    static GaussianRational of(long long re_n, long long re_d, long long im_n, long long im_d) {
        return GaussianRational(Rational::of(re_n, re_d), Rational::of(im_n, im_d));
    }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }
    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Rendering in the expression grammar: "3", "-1/2", "i", "-2*i",
    /// "1/2+1/3*i", "1-2*i". Reparses to the same value.
    std::string to_string() const;

    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

private:
    Rational re_;
    Rational im_;
};

GaussianRational gr_conj(const GaussianRational& a);

}  // namespace formwell
