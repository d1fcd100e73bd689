#include "formwell/scalar.hpp"

#include "formwell/errors.hpp"

namespace formwell {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Rational::normalize() {
    if (den_.is_zero()) throw ZeroDenominator();
    if (den_.signum() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero();
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string Rational::to_string() const {
    std::string s = num_.to_string();
    if (!den_.is_one()) s += "/" + den_.to_string();
    return s;
}

bool Rational::sqrt_exact(const Rational& a, Rational& root) {
    BigInt rn, rd;
    if (!BigInt::sqrt_exact(a.num(), rn)) return false;
    if (!BigInt::sqrt_exact(a.den(), rd)) return false;
    root = Rational(rn, rd);
    return true;
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.re() * b.re() + b.im() * b.im();
    if (n.is_zero()) throw DivisionByZero();
    GaussianRational num = a * b.conj();
    return GaussianRational(num.re() / n, num.im() / n);
}

GaussianRational gr_conj(const GaussianRational& a) { return a.conj(); }

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string imag;
    if (im_.is_one())
        imag = "i";
    else if ((-im_).is_one())
        imag = "-i";
    else
        imag = im_.to_string() + "*i";
    if (re_.is_zero()) return imag;
    if (im_.signum() > 0) return re_.to_string() + "+" + imag;
    // imag already starts with '-'
    return re_.to_string() + imag;
}

}  // namespace formwell
