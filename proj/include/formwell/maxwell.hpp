#pragma once

#include <optional>
#include <string>
#include <vector>

#include "formwell/hodge.hpp"

namespace formwell {

/// Potential 1-form w = f1 dz1 + f2 dz2 + fb1 dzb1 + fb2 dzb2.
struct Potential {
    Poly f1, f2, fb1, fb2;

    Form to_form() const;
    friend bool operator==(const Potential& a, const Potential& b) = default;
};

/// The six coefficients of a 2-form over the complex basis.
struct FaradayComponents {
    Poly f12;    // dz1/\dz2
    Poly f1b2b;  // dzb1/\dzb2
    Poly f11b;   // dz1/\dzb1
    Poly f12b;   // dz1/\dzb2
    Poly f21b;   // dz2/\dzb1
    Poly f22b;   // dz2/\dzb2
};

struct EBFields {
    Poly e1, e2, e3, b1, b2, b3;
};

/// Current 1-form J = star d star F, with its real components
/// rho = P1 + Pb1, J1 = i(P1 - Pb1), J2 = P2 + Pb2, J3 = i(P2 - Pb2).
struct CurrentForm {
    Poly p1, pb1, p2, pb2;
    Poly rho, j1, j2, j3;

    bool is_zero() const {
        return p1.is_zero() && pb1.is_zero() && p2.is_zero() && pb2.is_zero();
    }
};

enum class DualityClass { SelfDual, AntiSelfDual, Both, Neither };

const char* duality_name(DualityClass d);

struct VerificationReport {
    MetricKind metric;
    Form faraday;
    Form d_faraday;  // identically zero for F = d omega
    Form d_star_f;
    bool is_vacuum_solution;
    DualityClass duality;
    Poly condition_sum;  // S_E or S_M depending on the metric
    std::optional<GaussianRational> condition_constant;
    Poly lorenz_value;  // d* omega
    std::optional<GaussianRational> lorenz_constant;
    bool wavelike_potential;
    bool harmonic_potential;
    bool wavelike_field;
    EBFields eb;
    Poly eb_inner;
    Poly energy;
    std::vector<TableDiscrepancy> table_discrepancies;
};

/// F = d(omega). The curvature of a scalar-valued potential.
Form curvature(const Potential& w);

FaradayComponents faraday_components(const Form& f);

/// E and B read off the real-basis decomposition
/// F = -dx0/\(E1 dx1 + E2 dx2 + E3 dx3) - B1 dx2/\dx3 + B2 dx1/\dx3 - B3 dx1/\dx2.
/// Cross-checked against the closed component formulas; a mismatch is an
/// internal error.
EBFields eb_fields(const Form& f);

/// <E, B> = sum E_k conj(B_k), computed from the component coefficients.
Poly eb_inner(const Form& f);

/// Energy density: 2(|F12|^2 + |F1b2b|^2 + sum |Fjkb|^2).
Poly energy(const Form& f);

DualityClass duality_class(const Form& f, const Metric& m);

CurrentForm current(const Potential& w, const Metric& m);

/// S_E = db1 f1 + db2 f2 + d1 fb1 + d2 fb2, with its constancy.
std::pair<Poly, std::optional<GaussianRational>> condition_euclid(const Potential& w);

struct MinkCondition {
    Poly sum;  // S_M = d1 f1 - db2 f2 + db1 fb1 - d2 fb2
    std::optional<GaussianRational> constant;
    bool wavelike;
};
MinkCondition condition_mink(const Potential& w);

/// Holomorphic Minkowski case: requires f1, f2 free of barred symbols and
/// fb_j = conjugate(f_j). Returns q = d2 f1 - d1 f2 and whether q is
/// independent of z1.
std::pair<Poly, bool> holo_condition(const Potential& w);

bool wavelike_field(const Form& f);
bool wavelike_potential(const Potential& w);
bool harmonic_potential(const Potential& w);

Potential gauge_transform(const Potential& w, const Poly& u);

/// (d* omega, its constancy).
std::pair<Poly, std::optional<GaussianRational>> lorenz(const Potential& w, const Metric& m);

/// Gauge shift that sets d* omega to zero while leaving the curvature
/// untouched; requires d* omega constant.
Potential lorenz_normalize(const Potential& w, const Metric& m);

VerificationReport verify_vacuum(const Potential& w, const Metric& m);

}  // namespace formwell
