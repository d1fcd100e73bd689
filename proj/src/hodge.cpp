#include "formwell/hodge.hpp"

#include "formwell/errors.hpp"

namespace formwell {

const char* metric_name(MetricKind k) {
    return k == MetricKind::Euclidean ? "euclidean" : "minkowski";
}

namespace {

// Generator coordinates over the real basis: dz1 = dx0 + i dx1, etc.
const std::array<GaussianRational, 4>& gen_real_coords(Gen g) {
    static const std::array<std::array<GaussianRational, 4>, 4> coords = [] {
        GaussianRational one(1), i = GaussianRational::i(), zero(0);
        return std::array<std::array<GaussianRational, 4>, 4>{{
            {one, i, zero, zero},    // dz1
            {zero, zero, one, i},    // dz2
            {one, -i, zero, zero},   // dzb1
            {zero, zero, one, -i},   // dzb2
        }};
    }();
    return coords[static_cast<std::size_t>(g)];
}

Mat4 identity_mat() {
    Mat4 m{};
    for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t) m[s][t] = Rational(s == t ? 1 : 0);
    return m;
}

Mat4 minkowski_mat() {
    Mat4 m = identity_mat();
    for (int s = 1; s < 4; ++s) m[s][s] = Rational(-1);
    return m;
}

Rational det4(const Mat4& g) {
    // Laplace expansion; exact and plenty fast for a 4x4.
    std::array<int, 4> cols{0, 1, 2, 3};
    Rational det(0);
    // Permutations of column indices with signs.
    std::array<int, 4> perm = cols;
    std::sort(perm.begin(), perm.end());
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational prod(1);
        for (int r = 0; r < 4; ++r) prod *= g[r][perm[r]];
        det += (inversions % 2 == 0) ? prod : -prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

Mat4 invert4(const Mat4& g) {
    // Gauss-Jordan over exact rationals.
    std::array<std::array<Rational, 8>, 4> a{};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) a[r][c] = g[r][c];
        for (int c = 0; c < 4; ++c) a[r][4 + c] = Rational(r == c ? 1 : 0);
    }
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int r = col; r < 4; ++r) {
            if (!a[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw SingularMetric();
        std::swap(a[col], a[pivot]);
        Rational inv = Rational(1) / a[col][col];
        for (int c = 0; c < 8; ++c) a[col][c] *= inv;
        for (int r = 0; r < 4; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rational factor = a[r][col];
            for (int c = 0; c < 8; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    Mat4 out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r][c] = a[r][4 + c];
    return out;
}

// vol_g = (i/2)^2 sqrt|det g| dz1/\dzb1/\dz2/\dzb2
//       = 1/4 sqrt|det g| dz1/\dz2/\dzb1/\dzb2.
GaussianRational vol_scalar(const Mat4& g) {
    Rational det = det4(g);
    if (det.is_zero()) throw SingularMetric();
    Rational abs_det = det.signum() < 0 ? -det : det;
    Rational root;
    if (!Rational::sqrt_exact(abs_det, root))
        throw Error("star_oracle: |det g| has no rational square root");
    return GaussianRational(root * Rational::of(1, 4));
}

GaussianRational det_pairing(const std::vector<Gen>& a, const std::vector<Gen>& b,
                             const Mat4& gram_inv);

// Pairing of two basis indices of equal degree.
GaussianRational pair_indices(BasisIndex a, BasisIndex b, const Mat4& gram_inv) {
    return det_pairing(a.gens(), b.gens(), gram_inv);
}

GaussianRational det_pairing(const std::vector<Gen>& a, const std::vector<Gen>& b,
                             const Mat4& gram_inv) {
    std::size_t n = a.size();
    if (n == 0) return GaussianRational(1);
    // Laplace expansion along the first row.
    GaussianRational total(0);
    for (std::size_t c = 0; c < n; ++c) {
        GaussianRational entry = pair_1forms_g(a[0], b[c], gram_inv);
        if (entry.is_zero()) continue;
        std::vector<Gen> suba(a.begin() + 1, a.end());
        std::vector<Gen> subb = b;
        subb.erase(subb.begin() + static_cast<std::ptrdiff_t>(c));
        GaussianRational minor = det_pairing(suba, subb, gram_inv);
        GaussianRational contrib = entry * minor;
        if (c % 2 == 1) contrib = -contrib;
        total += contrib;
    }
    return total;
}


// e_I /\ conj(e_K) as a multiple of the full 4-form; zero when they overlap.
GaussianRational wedge_conj_scalar(BasisIndex i, BasisIndex k) {
    auto [ck, cs] = conj_index(k);
    int s = wedge_sign(i, ck);
    if (s == 0) return GaussianRational(0);
    return GaussianRational(s * cs);
}

}  // namespace

GaussianRational pair_1forms_g(Gen a, Gen b, const Mat4& gram_inv) {
    const auto& ca = gen_real_coords(a);
    const auto& cb = gen_real_coords(b);
    GaussianRational total(0);
    for (int s = 0; s < 4; ++s) {
        if (ca[s].is_zero()) continue;
        for (int t = 0; t < 4; ++t) {
            if (cb[t].is_zero() || gram_inv[s][t].is_zero()) continue;
            total += ca[s] * cb[t].conj() * GaussianRational(gram_inv[s][t]);
        }
    }
    return total;
}

GaussianRational pair_1forms(Gen a, Gen b, const Metric& m) {
    return pair_1forms_g(a, b, m.gram_inv());
}

Poly pair_forms(const Form& a, const Form& b, const Metric& m) {
    if (a.is_zero() || b.is_zero()) return Poly();
    auto da = a.homogeneous_degree();
    auto db = b.homogeneous_degree();
    if (!da || !db || *da != *db)
        throw DegreeMismatch("pair_forms requires homogeneous forms of equal degree");
    Poly total;
    for (const auto& [ia, pa] : a.coeffs()) {
        for (const auto& [ib, pb] : b.coeffs()) {
            GaussianRational g = pair_indices(ia, ib, m.gram_inv());
            if (g.is_zero()) continue;
            total += g * (pa * conjugate(pb));
        }
    }
    return total;
}

std::array<Form, 16> star_oracle_table(const Mat4& g) {
    Mat4 gram_inv = invert4(g);
    GaussianRational vol = vol_scalar(g);

    std::array<Form, 16> table;
    for (int p = 0; p <= 4; ++p) {
        std::vector<BasisIndex> rows = basis_indices_of_degree(p);      // eta
        std::vector<BasisIndex> cols = basis_indices_of_degree(4 - p);  // unknowns
        std::size_t n = rows.size();
        for (BasisIndex xi : basis_indices_of_degree(p)) {
            // Solve W d = rhs for d_K = conj(c_K), where star(xi) = sum c_K e_K.
            std::vector<std::vector<GaussianRational>> w(n,
                                                         std::vector<GaussianRational>(n + 1));
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < n; ++c)
                    w[r][c] = wedge_conj_scalar(rows[r], cols[c]);
                w[r][n] = pair_indices(rows[r], xi, gram_inv) * vol;
            }
            // Gaussian elimination, exact.
            for (std::size_t col = 0; col < n; ++col) {
                std::size_t pivot = col;
                while (pivot < n && w[pivot][col].is_zero()) ++pivot;
                if (pivot == n) throw SingularMetric();
                std::swap(w[col], w[pivot]);
                GaussianRational inv = GaussianRational(1) / w[col][col];
                for (std::size_t c = col; c <= n; ++c) w[col][c] *= inv;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == col || w[r][col].is_zero()) continue;
                    GaussianRational f = w[r][col];
                    for (std::size_t c = col; c <= n; ++c) w[r][c] -= f * w[col][c];
                }
            }
            Form value;
            for (std::size_t c = 0; c < n; ++c) {
                GaussianRational coeff = w[c][n].conj();
                if (!coeff.is_zero())
                    value.add_term(cols[c], Poly::constant(coeff));
            }
            table[xi.mask()] = std::move(value);
        }
    }
    return table;
}

Form star_oracle(const Form& f, const Mat4& g) {
    std::array<Form, 16> table = star_oracle_table(g);
    Form out;
    for (const auto& [idx, p] : f.coeffs()) {
        for (const auto& [tidx, tp] : table[idx.mask()].coeffs()) {
            out.add_term(tidx, p * tp);
        }
    }
    return out;
}

Form star(const Form& f, const Metric& m) {
    Form out;
    for (const auto& [idx, p] : f.coeffs()) {
        for (const auto& [tidx, tp] : m.star_entry(idx).coeffs()) {
            out.add_term(tidx, p * tp);
        }
    }
    return out;
}

Form codiff(const Form& f, const Metric& m) {
    return -star(ext_d(star(f, m)), m);
}

Form hodge_laplacian(const Form& f, const Metric& m) {
    return ext_d(codiff(f, m)) + codiff(ext_d(f), m);
}

namespace {

Form const_term(BasisIndex idx, long long num, long long den = 1) {
    return Form::term(idx, Poly::constant(GaussianRational(Rational::of(num, den))));
}

BasisIndex bi(std::initializer_list<Gen> gens) { return BasisIndex::of(gens); }

}  // namespace

Metric::Metric(MetricKind kind) : kind_(kind) {
    using enum Gen;
    gram_inv_ = kind == MetricKind::Euclidean ? identity_mat() : minkowski_mat();
    vol_ = const_term(BasisIndex::full(), 1, 4);

    auto set = [&](BasisIndex idx, Form value, bool from_paper) {
        table_[idx.mask()] = Entry{std::move(value), from_paper};
    };

    if (kind == MetricKind::Euclidean) {
        set(bi({}), vol_, false);
        set(bi({DZ1}), const_term(bi({DZ1, DZ2, DZB2}), 1, 2), true);
        set(bi({DZ2}), const_term(bi({DZ1, DZ2, DZB1}), -1, 2), true);
        set(bi({DZB1}), const_term(bi({DZ2, DZB1, DZB2}), 1, 2), true);
        set(bi({DZB2}), const_term(bi({DZ1, DZB1, DZB2}), -1, 2), true);
        set(bi({DZ1, DZ2}), const_term(bi({DZ1, DZ2}), 1), true);
        set(bi({DZB1, DZB2}), const_term(bi({DZB1, DZB2}), 1), true);
        set(bi({DZ1, DZB1}), const_term(bi({DZ2, DZB2}), 1), true);
        set(bi({DZ2, DZB2}), const_term(bi({DZ1, DZB1}), 1), true);
        set(bi({DZ1, DZB2}), const_term(bi({DZ1, DZB2}), -1), true);
        set(bi({DZ2, DZB1}), const_term(bi({DZ2, DZB1}), -1), true);
        set(bi({DZ1, DZ2, DZB1}), const_term(bi({DZ2}), 2), true);
        set(bi({DZ1, DZ2, DZB2}), const_term(bi({DZ1}), -2), true);
        set(bi({DZ1, DZB1, DZB2}), const_term(bi({DZB2}), 2), true);
        set(bi({DZ2, DZB1, DZB2}), const_term(bi({DZB1}), -2), true);
        set(BasisIndex::full(), const_term(bi({}), 4), true);
    } else {
        // Degrees 0 and 1 have no fixed reference values; take them from the
        // definitional oracle.
        std::array<Form, 16> oracle = star_oracle_table(gram_inv_);
        set(bi({}), oracle[bi({}).mask()], false);
        for (Gen g : {DZ1, DZ2, DZB1, DZB2})
            set(bi({g}), oracle[bi({g}).mask()], false);
        set(bi({DZ1, DZ2}), const_term(bi({DZ2, DZB1}), -1), true);
        set(bi({DZ1, DZB2}), const_term(bi({DZB1, DZB2}), -1), true);
        set(bi({DZ2, DZB1}), const_term(bi({DZ1, DZ2}), 1), true);
        set(bi({DZB1, DZB2}), const_term(bi({DZ1, DZB2}), 1), true);
        set(bi({DZ1, DZB1}), const_term(bi({DZ2, DZB2}), -1), true);
        set(bi({DZ2, DZB2}), const_term(bi({DZ1, DZB1}), 1), true);
        set(bi({DZ1, DZ2, DZB1}), const_term(bi({DZ2}), 2), true);
        // The dzb1 reading of this entry is the one forced by star^2 = +1 on
        // 3-forms and confirmed by the oracle.
        set(bi({DZ1, DZ2, DZB2}), const_term(bi({DZB1}), 2), true);
        set(bi({DZ1, DZB1, DZB2}), const_term(bi({DZB2}), 2), true);
        set(bi({DZ2, DZB1, DZB2}), const_term(bi({DZ1}), 2), true);
        // star(dx0/\dx1/\dx2/\dx3) = -1, i.e. -4 on dz1/\dz2/\dzb1/\dzb2.
        set(BasisIndex::full(), const_term(bi({}), -4), true);
    }
}

const Metric& Metric::euclidean() {
    static const Metric m(MetricKind::Euclidean);
    return m;
}

const Metric& Metric::minkowski() {
    static const Metric m(MetricKind::Minkowski);
    return m;
}

std::vector<StarTableRow> star_table_report(const Metric& m) {
    std::array<Form, 16> oracle = star_oracle_table(m.gram_inv());
    std::vector<StarTableRow> rows;
    for (BasisIndex idx : all_basis_indices()) {
        const Form& table = m.star_entry(idx);
        const Form& orc = oracle[idx.mask()];
        rows.push_back({idx, table, m.entry_from_paper(idx), orc, table == orc});
    }
    return rows;
}

std::vector<TableDiscrepancy> star_table_discrepancies(const Metric& m) {
    std::vector<TableDiscrepancy> out;
    for (const StarTableRow& row : star_table_report(m)) {
        if (!row.matches) out.push_back({row.input, row.table_value, row.oracle_value});
    }
    return out;
}

}  // namespace formwell
