#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "formwell/scalar.hpp"

namespace formwell {

/// The four commuting symbols of the coordinate ring, in exponent-tuple order.
enum class Var : std::uint8_t { Z1 = 0, ZB1 = 1, Z2 = 2, ZB2 = 3 };

const char* var_name(Var v);

/// Exponent tuple (e1, eb1, e2, eb2).
struct Monomial {
    std::array<std::uint32_t, 4> e{0, 0, 0, 0};

    unsigned total_degree() const {
        return static_cast<unsigned>(e[0]) + e[1] + e[2] + e[3];
    }
    bool is_identity() const { return total_degree() == 0; }

    std::uint32_t exp(Var v) const { return e[static_cast<std::size_t>(v)]; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

/// Canonical term order: descending total degree, then descending
/// lexicographic on (e1, eb1, e2, eb2).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        return a.e > b.e;
    }
};

/// Evaluation point: (z1, z2) as complex doubles. Barred symbols evaluate to
/// the conjugates of these values.
struct ComplexPoint {
    std::complex<double> z1;
    std::complex<double> z2;

    static ComplexPoint from_reals(double x0, double x1, double x2, double x3) {
        return ComplexPoint{{x0, x1}, {x2, x3}};
    }
};

/// Multivariate polynomial in z1, zb1, z2, zb2 over GaussianRational.
/// No stored zero coefficients; equality is structural.
class Poly {
public:
    using TermMap = std::map<Monomial, GaussianRational, MonomialOrder>;

    Poly() = default;
    static Poly constant(GaussianRational c);
    static Poly constant(long long c) { return constant(GaussianRational(c)); }
    static Poly variable(Var v);
    static Poly monomial(Monomial m, GaussianRational c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    unsigned degree() const;  // 0 for the zero polynomial

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }
    friend Poly operator*(const GaussianRational& c, const Poly& p);

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    void add_term(const Monomial& m, const GaussianRational& c);

    /// Canonical rendering in the expression grammar; round-trips through the
    /// parser. The zero polynomial renders as "0".
    std::string to_string() const;

private:
    TermMap terms_;
};

/// Formal partial derivative treating the four symbols as independent.
Poly wirtinger(const Poly& p, Var v);

/// Swaps z <-> zb exponents and conjugates coefficients; an involution.
Poly conjugate(const Poly& p);

/// Coefficient of the identity monomial when no other term exists (the zero
/// polynomial counts as constant 0); nullopt otherwise.
std::optional<GaussianRational> is_constant(const Poly& p);

/// Euclidean Laplacian 4(d1 db1 + d2 db2).
Poly laplace4(const Poly& p);

/// Minkowski wave operator 2(d1^2 + db1^2 - 2 d2 db2).
Poly dalembert(const Poly& p);

std::complex<double> eval(const Poly& p, const ComplexPoint& at);

}  // namespace formwell
