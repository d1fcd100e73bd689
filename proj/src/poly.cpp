#include "formwell/poly.hpp"

namespace formwell {

const char* var_name(Var v) {
    switch (v) {
        case Var::Z1: return "z1";
        case Var::ZB1: return "zb1";
        case Var::Z2: return "z2";
        case Var::ZB2: return "zb2";
    }
    return "?";
}

Poly Poly::constant(GaussianRational c) {
    Poly p;
    p.add_term(Monomial{}, c);
    return p;
}

Poly Poly::variable(Var v) {
    Monomial m;
    m.e[static_cast<std::size_t>(v)] = 1;
    return monomial(m, GaussianRational(1));
}

Poly Poly::monomial(Monomial m, GaussianRational c) {
    Poly p;
    p.add_term(m, c);
    return p;
}

unsigned Poly::degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

void Poly::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            for (int k = 0; k < 4; ++k)
                m.e[k] = ma.e[k] + mb.e[k];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly operator*(const GaussianRational& c, const Poly& p) {
    Poly r;
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms()) r.add_term(m, c * pc);
    return r;
}

Poly wirtinger(const Poly& p, Var v) {
    Poly r;
    std::size_t k = static_cast<std::size_t>(v);
    for (const auto& [m, c] : p.terms()) {
        if (m.e[k] == 0) continue;
        Monomial d = m;
        d.e[k] -= 1;
        r.add_term(d, GaussianRational(Rational(m.e[k])) * c);
    }
    return r;
}

Poly conjugate(const Poly& p) {
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        Monomial cm;
        cm.e[0] = m.e[1];
        cm.e[1] = m.e[0];
        cm.e[2] = m.e[3];
        cm.e[3] = m.e[2];
        r.add_term(cm, c.conj());
    }
    return r;
}

std::optional<GaussianRational> is_constant(const Poly& p) {
    if (p.is_zero()) return GaussianRational(0);
    if (p.terms().size() == 1 && p.terms().begin()->first.is_identity())
        return p.terms().begin()->second;
    return std::nullopt;
}

Poly laplace4(const Poly& p) {
    Poly r = wirtinger(wirtinger(p, Var::Z1), Var::ZB1) +
             wirtinger(wirtinger(p, Var::Z2), Var::ZB2);
    return GaussianRational(4) * r;
}

Poly dalembert(const Poly& p) {
    Poly r = wirtinger(wirtinger(p, Var::Z1), Var::Z1) +
             wirtinger(wirtinger(p, Var::ZB1), Var::ZB1);
    Poly mixed = wirtinger(wirtinger(p, Var::Z2), Var::ZB2);
    return GaussianRational(2) * r - GaussianRational(4) * mixed;
}

namespace {

std::complex<double> cpow(std::complex<double> base, unsigned e) {
    std::complex<double> acc{1.0, 0.0};
    while (e != 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace

std::complex<double> eval(const Poly& p, const ComplexPoint& at) {
    std::complex<double> total{0.0, 0.0};
    std::complex<double> zb1 = std::conj(at.z1), zb2 = std::conj(at.z2);
    for (const auto& [m, c] : p.terms()) {
        std::complex<double> v = c.to_complex();
        v *= cpow(at.z1, m.e[0]);
        v *= cpow(zb1, m.e[1]);
        v *= cpow(at.z2, m.e[2]);
        v *= cpow(zb2, m.e[3]);
        total += v;
    }
    return total;
}

namespace {

// One monomial factor chain: "z1^2*zb2". Empty for the identity monomial.
std::string monomial_string(const Monomial& m) {
    std::string s;
    static constexpr Var order[4] = {Var::Z1, Var::ZB1, Var::Z2, Var::ZB2};
    for (Var v : order) {
        std::uint32_t e = m.exp(v);
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += var_name(v);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

// Coefficient prefix that can stand in front of a monomial factor chain.
// Complex coefficients with both parts nonzero go in parentheses so the
// term reparses unambiguously.
std::string coeff_string(const GaussianRational& c) {
    if (c.is_real() || c.re().is_zero()) return c.to_string();
    return "(" + c.to_string() + ")";
}

// In the grammar '^' applies to the whole preceding atom, unary minus
// included, so "-z1^2" would reparse as (-z1)^2. True when a bare leading
// '-' in front of this monomial is unsafe.
bool leading_factor_has_power(const Monomial& m) {
    static constexpr Var order[4] = {Var::Z1, Var::ZB1, Var::Z2, Var::ZB2};
    for (Var v : order) {
        std::uint32_t e = m.exp(v);
        if (e > 0) return e > 1;
    }
    return false;
}

}  // namespace

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string term;
        std::string mono = monomial_string(m);
        if (mono.empty()) {
            term = coeff_string(c);
        } else if (c.is_one()) {
            term = mono;
        } else if ((-c).is_one()) {
            term = (leading_factor_has_power(m) ? "-1*" : "-") + mono;
        } else {
            term = coeff_string(c) + "*" + mono;
        }
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

}  // namespace formwell
