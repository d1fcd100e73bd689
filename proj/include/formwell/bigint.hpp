#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace formwell {

/// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs.
/// Canonical form: no leading zero limbs; sign() == 0 iff magnitude empty.
/// Sized for exactness, not speed; coefficient chains in this engine stay
/// small but must never overflow.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT(google-explicit-constructor)

    static BigInt from_string(std::string_view text);

    int signum() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const;

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    // Truncated division: q rounds toward zero, r has the sign of a.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    static BigInt gcd(const BigInt& a, const BigInt& b);

    BigInt pow(unsigned e) const;

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    std::string to_string() const;
    double to_double() const;

    // Exact integer square root when the value is a perfect square.
    static bool sqrt_exact(const BigInt& a, BigInt& root);

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;  // little-endian

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

}  // namespace formwell
