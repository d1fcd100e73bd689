#include "formwell/maxwell.hpp"

#include "formwell/errors.hpp"

namespace formwell {

const char* duality_name(DualityClass d) {
    switch (d) {
        case DualityClass::SelfDual: return "SelfDual";
        case DualityClass::AntiSelfDual: return "AntiSelfDual";
        case DualityClass::Both: return "Both";
        case DualityClass::Neither: return "Neither";
    }
    return "?";
}

Form Potential::to_form() const {
    Form w;
    w.add_term(BasisIndex::of({Gen::DZ1}), f1);
    w.add_term(BasisIndex::of({Gen::DZ2}), f2);
    w.add_term(BasisIndex::of({Gen::DZB1}), fb1);
    w.add_term(BasisIndex::of({Gen::DZB2}), fb2);
    return w;
}

Form curvature(const Potential& w) { return ext_d(w.to_form()); }

namespace {

void require_2form(const Form& f, const char* who) {
    if (f.is_zero()) return;
    auto deg = f.homogeneous_degree();
    if (!deg || *deg != 2) throw DegreeMismatch(std::string(who) + " requires a 2-form");
}

const BasisIndex kI12 = BasisIndex::of({Gen::DZ1, Gen::DZ2});
const BasisIndex kI1b2b = BasisIndex::of({Gen::DZB1, Gen::DZB2});
const BasisIndex kI11b = BasisIndex::of({Gen::DZ1, Gen::DZB1});
const BasisIndex kI12b = BasisIndex::of({Gen::DZ1, Gen::DZB2});
const BasisIndex kI21b = BasisIndex::of({Gen::DZ2, Gen::DZB1});
const BasisIndex kI22b = BasisIndex::of({Gen::DZ2, Gen::DZB2});

Poly abs2(const Poly& p) { return p * conjugate(p); }

}  // namespace

FaradayComponents faraday_components(const Form& f) {
    require_2form(f, "faraday_components");
    return FaradayComponents{f.coeff(kI12),  f.coeff(kI1b2b), f.coeff(kI11b),
                             f.coeff(kI12b), f.coeff(kI21b),  f.coeff(kI22b)};
}

EBFields eb_fields(const Form& f) {
    require_2form(f, "eb_fields");
    RealForm r = to_real(f);
    auto rx = [](unsigned a, unsigned b) {
        return RealIndex(static_cast<std::uint8_t>((1u << a) | (1u << b)));
    };
    EBFields out;
    out.e1 = -r.coeff(rx(0, 1));
    out.e2 = -r.coeff(rx(0, 2));
    out.e3 = -r.coeff(rx(0, 3));
    out.b1 = -r.coeff(rx(2, 3));
    out.b2 = r.coeff(rx(1, 3));
    out.b3 = -r.coeff(rx(1, 2));

    // Closed-form component list from the complex coefficients; both routes
    // must agree by construction.
    FaradayComponents c = faraday_components(f);
    GaussianRational i = GaussianRational::i(), two_i = GaussianRational(2) * i;
    Poly e1 = two_i * c.f11b;
    Poly e2 = -(c.f12 + c.f1b2b + c.f12b - c.f21b);
    Poly e3 = -(i * (c.f12 - c.f1b2b - c.f12b - c.f21b));
    Poly b1 = two_i * c.f22b;
    Poly b2 = -c.f12 - c.f1b2b + c.f12b - c.f21b;
    Poly b3 = -(i * (c.f12 - c.f1b2b + c.f12b + c.f21b));
    if (!(out.e1 == e1 && out.e2 == e2 && out.e3 == e3 && out.b1 == b1 && out.b2 == b2 &&
          out.b3 == b3))
        throw InternalError("eb_fields: real-basis decomposition disagrees with component list");
    return out;
}

Poly eb_inner(const Form& f) {
    FaradayComponents c = faraday_components(f);
    GaussianRational two(2), four(4);
    Poly mixed = (c.f12 - c.f21b) * conjugate(c.f12 + c.f21b) +
                 (c.f1b2b + c.f12b) * conjugate(c.f1b2b - c.f12b);
    return four * (c.f11b * conjugate(c.f22b)) + two * mixed;
}

Poly energy(const Form& f) {
    FaradayComponents c = faraday_components(f);
    Poly sum = abs2(c.f12) + abs2(c.f1b2b) + abs2(c.f11b) + abs2(c.f12b) + abs2(c.f21b) +
               abs2(c.f22b);
    return GaussianRational(2) * sum;
}

DualityClass duality_class(const Form& f, const Metric& m) {
    require_2form(f, "duality_class");
    if (f.is_zero()) return DualityClass::Both;
    Form sf = star(f, m);
    if (m.kind() == MetricKind::Euclidean) {
        if (sf == f) return DualityClass::SelfDual;
        if (sf == -f) return DualityClass::AntiSelfDual;
    } else {
        Form i_f = GaussianRational::i() * f;
        if (sf == i_f) return DualityClass::SelfDual;
        if (sf == -i_f) return DualityClass::AntiSelfDual;
    }
    return DualityClass::Neither;
}

CurrentForm current(const Potential& w, const Metric& m) {
    Form j = star(ext_d(star(curvature(w), m)), m);
    CurrentForm out;
    out.p1 = j.coeff(BasisIndex::of({Gen::DZ1}));
    out.pb1 = j.coeff(BasisIndex::of({Gen::DZB1}));
    out.p2 = j.coeff(BasisIndex::of({Gen::DZ2}));
    out.pb2 = j.coeff(BasisIndex::of({Gen::DZB2}));
    GaussianRational i = GaussianRational::i();
    out.rho = out.p1 + out.pb1;
    out.j1 = i * (out.p1 - out.pb1);
    out.j2 = out.p2 + out.pb2;
    out.j3 = i * (out.p2 - out.pb2);
    return out;
}

std::pair<Poly, std::optional<GaussianRational>> condition_euclid(const Potential& w) {
    Poly s = wirtinger(w.f1, Var::ZB1) + wirtinger(w.f2, Var::ZB2) +
             wirtinger(w.fb1, Var::Z1) + wirtinger(w.fb2, Var::Z2);
    return {s, is_constant(s)};
}

MinkCondition condition_mink(const Potential& w) {
    Poly s = wirtinger(w.f1, Var::Z1) - wirtinger(w.f2, Var::ZB2) +
             wirtinger(w.fb1, Var::ZB1) - wirtinger(w.fb2, Var::Z2);
    return {s, is_constant(s), wavelike_potential(w)};
}

std::pair<Poly, bool> holo_condition(const Potential& w) {
    auto holomorphic = [](const Poly& p) {
        for (const auto& [m, c] : p.terms())
            if (m.exp(Var::ZB1) != 0 || m.exp(Var::ZB2) != 0) return false;
        return true;
    };
    if (!holomorphic(w.f1) || !holomorphic(w.f2))
        throw NotHolomorphicCase("holo_condition: f1 and f2 must be holomorphic");
    if (!(w.fb1 == conjugate(w.f1)) || !(w.fb2 == conjugate(w.f2)))
        throw NotHolomorphicCase("holo_condition: fb1, fb2 must be the conjugates of f1, f2");
    Poly q = wirtinger(w.f1, Var::Z2) - wirtinger(w.f2, Var::Z1);
    bool independent = wirtinger(q, Var::Z1).is_zero() && wirtinger(q, Var::ZB1).is_zero();
    return {q, independent};
}

bool wavelike_field(const Form& f) {
    require_2form(f, "wavelike_field");
    FaradayComponents c = faraday_components(f);
    for (const Poly* p : {&c.f12, &c.f1b2b, &c.f11b, &c.f12b, &c.f21b, &c.f22b})
        if (!dalembert(*p).is_zero()) return false;
    return true;
}

bool wavelike_potential(const Potential& w) {
    for (const Poly* p : {&w.f1, &w.f2, &w.fb1, &w.fb2})
        if (!dalembert(*p).is_zero()) return false;
    return true;
}

bool harmonic_potential(const Potential& w) {
    for (const Poly* p : {&w.f1, &w.f2, &w.fb1, &w.fb2})
        if (!laplace4(*p).is_zero()) return false;
    return true;
}

Potential gauge_transform(const Potential& w, const Poly& u) {
    return Potential{w.f1 + wirtinger(u, Var::Z1), w.f2 + wirtinger(u, Var::Z2),
                     w.fb1 + wirtinger(u, Var::ZB1), w.fb2 + wirtinger(u, Var::ZB2)};
}

std::pair<Poly, std::optional<GaussianRational>> lorenz(const Potential& w, const Metric& m) {
    Form d_star = codiff(w.to_form(), m);
    Poly value = d_star.coeff(BasisIndex());
    // codiff of a 1-form is a 0-form; anything else is a broken invariant.
    if (!(grade(d_star, 0) == d_star)) throw InternalError("codiff of 1-form not a 0-form");
    return {value, is_constant(value)};
}

Potential lorenz_normalize(const Potential& w, const Metric& m) {
    auto [value, constant] = lorenz(w, m);
    if (!constant)
        throw NotConstantLorenz("lorenz_normalize requires d*omega constant, got " +
                                value.to_string());
    GaussianRational k = *constant;
    Poly u;
    if (m.kind() == MetricKind::Euclidean) {
        // S_E shifts by (1/2) laplace4(u); u = (k/4) z1 zb1 moves S_E by k/2 = -S_E.
        Monomial z1zb1;
        z1zb1.e[0] = 1;
        z1zb1.e[1] = 1;
        u = Poly::monomial(z1zb1, k * GaussianRational(Rational::of(1, 4)));
    } else {
        // S_M shifts by (1/2) dalembert(u); u = -(k/4) z1^2 moves S_M by -k/2 = -S_M.
        Monomial z1sq;
        z1sq.e[0] = 2;
        u = Poly::monomial(z1sq, -k * GaussianRational(Rational::of(1, 4)));
    }
    Potential out = gauge_transform(w, u);
    auto [nvalue, nconstant] = lorenz(out, m);
    if (!nvalue.is_zero()) throw InternalError("lorenz_normalize failed to zero d*omega");
    return out;
}

VerificationReport verify_vacuum(const Potential& w, const Metric& m) {
    VerificationReport r;
    r.metric = m.kind();
    r.faraday = curvature(w);
    r.d_faraday = ext_d(r.faraday);
    if (!r.d_faraday.is_zero()) throw InternalError("Bianchi identity violated");
    r.d_star_f = ext_d(star(r.faraday, m));
    r.is_vacuum_solution = r.d_star_f.is_zero();
    r.duality = r.faraday.is_zero() ? DualityClass::Both : duality_class(r.faraday, m);
    if (m.kind() == MetricKind::Euclidean) {
        auto [sum, konst] = condition_euclid(w);
        r.condition_sum = sum;
        r.condition_constant = konst;
    } else {
        MinkCondition c = condition_mink(w);
        r.condition_sum = c.sum;
        r.condition_constant = c.constant;
    }
    auto [lv, lc] = lorenz(w, m);
    r.lorenz_value = lv;
    r.lorenz_constant = lc;
    r.wavelike_potential = wavelike_potential(w);
    r.harmonic_potential = harmonic_potential(w);
    r.wavelike_field = wavelike_field(r.faraday);
    r.eb = eb_fields(r.faraday);
    r.eb_inner = eb_inner(r.faraday);
    r.energy = energy(r.faraday);
    r.table_discrepancies = star_table_discrepancies(m);
    return r;
}

}  // namespace formwell
