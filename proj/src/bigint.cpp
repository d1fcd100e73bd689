#include "formwell/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "formwell/errors.hpp"

namespace formwell {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    // Avoid overflow on LLONG_MIN by working in unsigned space.
    std::uint64_t u = v > 0 ? static_cast<std::uint64_t>(v) : 0ull - static_cast<std::uint64_t>(v);
    while (u != 0) {
        mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
        u >>= 32;
    }
}

BigInt BigInt::from_string(std::string_view text) {
    BigInt out;
    bool neg = false;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw Error("empty integer literal");
    BigInt ten(10);
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') throw Error("invalid integer literal");
        out = out * ten + BigInt(c - '0');
    }
    if (neg) out = -out;
    return out;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(static_cast<std::uint32_t>(d));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Bitwise long division. Slow but obviously correct; operands here are tiny.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    q.assign(a.size(), 0);
    r.clear();
    if (cmp_mag(a, b) < 0) {
        q.clear();
        r = a;
        return;
    }
    for (std::size_t bit = a.size() * 32; bit-- > 0;) {
        // r <<= 1
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint32_t next = r[i] >> 31;
            r[i] = (r[i] << 1) | carry;
            carry = next;
        }
        if (carry) r.push_back(carry);
        // bring down bit
        if ((a[bit / 32] >> (bit % 32)) & 1u) {
            if (r.empty()) r.push_back(0);
            r[0] |= 1u;
        }
        if (cmp_mag(r, b) >= 0) {
            r = sub_mag(r, b);
            q[bit / 32] |= 1u << (bit % 32);
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    } else {
        int c = BigInt::cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = a.sign_;
            r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
        } else {
            r.sign_ = b.sign_;
            r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
        }
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    r.trim();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw DivisionByZero();
    std::vector<std::uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q = BigInt();
    r = BigInt();
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    q.trim();
    r.trim();
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        BigInt q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

BigInt BigInt::pow(unsigned e) const {
    BigInt base = *this, acc(1);
    while (e != 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    if (a.sign_ >= 0) return c <=> 0;
    return 0 <=> c;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> m = mag_;
    std::string digits;
    const std::vector<std::uint32_t> billion = {1000000000u};
    while (!m.empty()) {
        std::vector<std::uint32_t> q, r;
        divmod_mag(m, billion, q, r);
        std::uint32_t chunk = r.empty() ? 0 : r[0];
        std::string part = std::to_string(chunk);
        if (!q.empty()) part = std::string(9 - part.size(), '0') + part;
        digits = part + digits;
        m = std::move(q);
    }
    return (sign_ < 0 ? "-" : "") + digits;
}

double BigInt::to_double() const {
    double v = 0.0;
    for (std::size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -v : v;
}

bool BigInt::sqrt_exact(const BigInt& a, BigInt& root) {
    if (a.sign_ < 0) return false;
    if (a.sign_ == 0) {
        root = BigInt();
        return true;
    }
    // Binary search on the root.
    BigInt lo(0), hi(1);
    while (hi * hi < a) hi = hi * BigInt(2);
    while (lo < hi) {
        BigInt mid = (lo + hi + BigInt(1)) / BigInt(2);
        if (mid * mid <= a)
            lo = mid;
        else
            hi = mid - BigInt(1);
    }
    if (lo * lo == a) {
        root = lo;
        return true;
    }
    return false;
}

}  // namespace formwell
