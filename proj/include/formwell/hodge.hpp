#pragma once

#include <array>
#include <string>
#include <vector>

#include "formwell/form.hpp"

namespace formwell {

enum class MetricKind { Euclidean, Minkowski };

const char* metric_name(MetricKind k);

using Mat4 = std::array<std::array<Rational, 4>, 4>;

/// Constant metric on C^2 ~ R^4 with its precomputed star table.
///
/// Table entries marked from_paper are fixed reference values and are the
/// ground truth for star; the remaining Minkowski entries of degree 0 and 1
/// are populated from the definitional star_oracle, and the 4-form entry is
/// pinned to star(dx0/\dx1/\dx2/\dx3) = -1. star_table_report compares every
/// entry against the oracle so a divergence can never pass silently.
class Metric {
public:
    static const Metric& euclidean();
    static const Metric& minkowski();

    MetricKind kind() const { return kind_; }
    /// Entries of g^{-1} over the real basis (both metrics are involutive,
    /// so this equals g).
    const Mat4& gram_inv() const { return gram_inv_; }
    const Form& vol() const { return vol_; }

    const Form& star_entry(BasisIndex idx) const { return table_[idx.mask()].value; }
    bool entry_from_paper(BasisIndex idx) const { return table_[idx.mask()].from_paper; }

private:
    struct Entry {
        Form value;
        bool from_paper = false;
    };
    MetricKind kind_;
    Mat4 gram_inv_;
    Form vol_;
    std::array<Entry, 16> table_;

    Metric(MetricKind kind);
};

/// Sesquilinear pairing of generator 1-forms: bilinear expansion over g^{-1}
/// with conjugation on the second slot.
GaussianRational pair_1forms(Gen a, Gen b, const Metric& m);
GaussianRational pair_1forms_g(Gen a, Gen b, const Mat4& gram_inv);

/// Determinant extension to equal-degree homogeneous forms; coefficient
/// polynomials multiply as p * conjugate(q).
Poly pair_forms(const Form& a, const Form& b, const Metric& m);

/// Table-driven Hodge star, extended C-linearly over coefficients.
Form star(const Form& f, const Metric& m);

/// Definitional star: solves eta /\ conj(star xi) = <eta, xi> vol_g on every
/// basis index and extends linearly. Independent check of the tables.
/// Requires |det g| to have a rational square root.
Form star_oracle(const Form& f, const Mat4& g);

/// All 16 definitional star values for a metric matrix.
std::array<Form, 16> star_oracle_table(const Mat4& g);

/// Codifferential d* = -star d star, both metrics. With the tables above,
/// d star omega = (1/2) S e_full for a potential 1-form omega (S the metric's
/// condition sum), so the uniform minus sign yields d* omega = -2 S_E in the
/// Euclidean metric and +2 S_M in the Minkowski metric.
Form codiff(const Form& f, const Metric& m);

/// dd* + d*d.
Form hodge_laplacian(const Form& f, const Metric& m);

struct StarTableRow {
    BasisIndex input;
    Form table_value;
    bool from_paper;
    Form oracle_value;
    bool matches;
};

/// Entry-by-entry comparison of the metric's star table against the
/// definitional oracle run on the metric's own Gram matrix.
std::vector<StarTableRow> star_table_report(const Metric& m);

struct TableDiscrepancy {
    BasisIndex basis;
    Form table_value;
    Form oracle_value;
};

std::vector<TableDiscrepancy> star_table_discrepancies(const Metric& m);

}  // namespace formwell
