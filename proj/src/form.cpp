#include "formwell/form.hpp"

#include <bit>

#include "formwell/errors.hpp"

namespace formwell {

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::DZ1: return "dz1";
        case Gen::DZ2: return "dz2";
        case Gen::DZB1: return "dzb1";
        case Gen::DZB2: return "dzb2";
    }
    return "?";
}

Gen gen_for_var(Var v) {
    switch (v) {
        case Var::Z1: return Gen::DZ1;
        case Var::ZB1: return Gen::DZB1;
        case Var::Z2: return Gen::DZ2;
        case Var::ZB2: return Gen::DZB2;
    }
    return Gen::DZ1;
}

Gen gen_conj(Gen g) {
    switch (g) {
        case Gen::DZ1: return Gen::DZB1;
        case Gen::DZ2: return Gen::DZB2;
        case Gen::DZB1: return Gen::DZ1;
        case Gen::DZB2: return Gen::DZ2;
    }
    return Gen::DZ1;
}

BasisIndex BasisIndex::of(std::initializer_list<Gen> gens) {
    std::uint8_t m = 0;
    for (Gen g : gens) m |= static_cast<std::uint8_t>(1u << static_cast<unsigned>(g));
    return BasisIndex(m);
}

int BasisIndex::degree() const { return std::popcount(mask_); }

std::vector<Gen> BasisIndex::gens() const {
    std::vector<Gen> out;
    for (unsigned k = 0; k < 4; ++k)
        if (mask_ & (1u << k)) out.push_back(static_cast<Gen>(k));
    return out;
}

std::string BasisIndex::to_string() const {
    if (mask_ == 0) return "1";
    std::string s;
    for (Gen g : gens()) {
        if (!s.empty()) s += "/\\";
        s += gen_name(g);
    }
    return s;
}

bool BasisOrder::operator()(BasisIndex a, BasisIndex b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Ascending generator lists compare lexicographically; with equal
    // popcount that matches ascending mask order read from the low bit.
    auto ga = a.gens(), gb = b.gens();
    return ga < gb;
}

const std::vector<BasisIndex>& all_basis_indices() {
    static const std::vector<BasisIndex> all = [] {
        std::vector<BasisIndex> v;
        for (std::uint8_t m = 0; m < 16; ++m) v.emplace_back(m);
        std::sort(v.begin(), v.end(), [](BasisIndex a, BasisIndex b) {
            return BasisOrder()(a, b);
        });
        return v;
    }();
    return all;
}

std::vector<BasisIndex> basis_indices_of_degree(int k) {
    std::vector<BasisIndex> out;
    for (BasisIndex idx : all_basis_indices())
        if (idx.degree() == k) out.push_back(idx);
    return out;
}

int wedge_sign(BasisIndex a, BasisIndex b) {
    if (a.mask() & b.mask()) return 0;
    // Inversions: pairs (x in a, y in b) with x > y.
    int inversions = 0;
    for (unsigned j = 0; j < 4; ++j) {
        if (!(b.mask() & (1u << j))) continue;
        inversions += std::popcount(static_cast<unsigned>(a.mask() >> (j + 1)));
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

std::pair<BasisIndex, int> conj_index(BasisIndex a) {
    std::vector<Gen> gens;
    for (Gen g : a.gens()) gens.push_back(gen_conj(g));
    // Sign of the permutation sorting the conjugated list ascending.
    int inversions = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (gens[i] > gens[j]) ++inversions;
    std::uint8_t m = 0;
    for (Gen g : gens) m |= static_cast<std::uint8_t>(1u << static_cast<unsigned>(g));
    return {BasisIndex(m), inversions % 2 == 0 ? 1 : -1};
}

Form Form::from_poly(const Poly& p) { return term(BasisIndex(), p); }

Form Form::generator(Gen g) {
    return term(BasisIndex::of({g}), Poly::constant(1));
}

Form Form::term(BasisIndex idx, const Poly& p) {
    Form f;
    f.add_term(idx, p);
    return f;
}

const Poly& Form::coeff(BasisIndex idx) const {
    static const Poly zero;
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? zero : it->second;
}

std::optional<int> Form::homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& [idx, p] : coeffs_) {
        if (!deg)
            deg = idx.degree();
        else if (*deg != idx.degree())
            return std::nullopt;
    }
    return deg;
}

void Form::add_term(BasisIndex idx, const Poly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(idx, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

Form Form::operator-() const {
    Form r;
    for (const auto& [idx, p] : coeffs_) r.coeffs_.emplace(idx, -p);
    return r;
}

Form operator+(const Form& a, const Form& b) {
    Form r = a;
    for (const auto& [idx, p] : b.coeffs_) r.add_term(idx, p);
    return r;
}

Form operator-(const Form& a, const Form& b) {
    Form r = a;
    for (const auto& [idx, p] : b.coeffs_) r.add_term(idx, -p);
    return r;
}

Form operator*(const Poly& p, const Form& f) {
    Form r;
    for (const auto& [idx, q] : f.coeffs()) r.add_term(idx, p * q);
    return r;
}

Form operator*(const GaussianRational& c, const Form& f) {
    Form r;
    for (const auto& [idx, q] : f.coeffs()) r.add_term(idx, c * q);
    return r;
}

std::string Form::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [idx, p] : coeffs_) {
        std::string term;
        if (idx.degree() == 0) {
            term = "(" + p.to_string() + ")";
        } else if (auto c = is_constant(p); c && c->is_one()) {
            term = idx.to_string();
        } else {
            term = "(" + p.to_string() + ")*" + idx.to_string();
        }
        out += out.empty() ? term : " + " + term;
    }
    return out;
}

Form wedge(const Form& a, const Form& b) {
    Form r;
    for (const auto& [ia, pa] : a.coeffs()) {
        for (const auto& [ib, pb] : b.coeffs()) {
            int s = wedge_sign(ia, ib);
            if (s == 0) continue;
            Poly p = pa * pb;
            if (s < 0) p = -p;
            r.add_term(BasisIndex(ia.mask() | ib.mask()), p);
        }
    }
    return r;
}

namespace {

Form derive_with(const Form& f, std::initializer_list<Var> vars) {
    Form r;
    for (const auto& [idx, p] : f.coeffs()) {
        for (Var v : vars) {
            Poly dp = wirtinger(p, v);
            if (dp.is_zero()) continue;
            BasisIndex g = BasisIndex::of({gen_for_var(v)});
            int s = wedge_sign(g, idx);
            if (s == 0) continue;
            if (s < 0) dp = -dp;
            r.add_term(BasisIndex(g.mask() | idx.mask()), dp);
        }
    }
    return r;
}

}  // namespace

Form ext_d(const Form& f) {
    return derive_with(f, {Var::Z1, Var::Z2, Var::ZB1, Var::ZB2});
}

Form dolbeault(const Form& f, Dolbeault which) {
    if (which == Dolbeault::Holo) return derive_with(f, {Var::Z1, Var::Z2});
    return derive_with(f, {Var::ZB1, Var::ZB2});
}

Form grade(const Form& f, int k) {
    Form r;
    for (const auto& [idx, p] : f.coeffs())
        if (idx.degree() == k) r.add_term(idx, p);
    return r;
}

int RealIndex::degree() const { return std::popcount(mask_); }

std::string RealIndex::to_string() const {
    if (mask_ == 0) return "1";
    std::string s;
    for (unsigned k = 0; k < 4; ++k) {
        if (!(mask_ & (1u << k))) continue;
        if (!s.empty()) s += "/\\";
        s += "dx" + std::to_string(k);
    }
    return s;
}

bool RealOrder::operator()(RealIndex a, RealIndex b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    std::uint8_t ra = 0, rb = 0;  // reverse bits so low dx dominates
    for (unsigned k = 0; k < 4; ++k) {
        ra = static_cast<std::uint8_t>((ra << 1) | ((a.mask() >> k) & 1u));
        rb = static_cast<std::uint8_t>((rb << 1) | ((b.mask() >> k) & 1u));
    }
    return ra > rb;
}

int wedge_sign_real(RealIndex a, RealIndex b) {
    if (a.mask() & b.mask()) return 0;
    int inversions = 0;
    for (unsigned j = 0; j < 4; ++j) {
        if (!(b.mask() & (1u << j))) continue;
        inversions += std::popcount(static_cast<unsigned>(a.mask() >> (j + 1)));
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

RealForm RealForm::term(RealIndex idx, const Poly& p) {
    RealForm f;
    f.add_term(idx, p);
    return f;
}

const Poly& RealForm::coeff(RealIndex idx) const {
    static const Poly zero;
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? zero : it->second;
}

RealForm RealForm::operator-() const {
    RealForm r;
    for (const auto& [idx, p] : coeffs_) r.coeffs_.emplace(idx, -p);
    return r;
}

RealForm operator+(const RealForm& a, const RealForm& b) {
    RealForm r = a;
    for (const auto& [idx, p] : b.coeffs_) r.add_term(idx, p);
    return r;
}

void RealForm::add_term(RealIndex idx, const Poly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(idx, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

std::string RealForm::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [idx, p] : coeffs_) {
        std::string term = idx.degree() == 0 ? "(" + p.to_string() + ")"
                                             : "(" + p.to_string() + ")*" + idx.to_string();
        out += out.empty() ? term : " + " + term;
    }
    return out;
}

namespace {

struct RealTermRef {
    unsigned dx;
    GaussianRational coeff;
};

// dz1 = dx0 + i dx1, dz2 = dx2 + i dx3, dzb1 = dx0 - i dx1, dzb2 = dx2 - i dx3
const std::array<std::array<RealTermRef, 2>, 4>& gen_to_real_table() {
    static const std::array<std::array<RealTermRef, 2>, 4> table = [] {
        GaussianRational one(1), i = GaussianRational::i();
        return std::array<std::array<RealTermRef, 2>, 4>{{
            {{{0, one}, {1, i}}},
            {{{2, one}, {3, i}}},
            {{{0, one}, {1, -i}}},
            {{{2, one}, {3, -i}}},
        }};
    }();
    return table;
}

struct CplxTermRef {
    Gen g;
    GaussianRational coeff;
};

// dx0 = (dz1 + dzb1)/2, dx1 = -i/2 (dz1 - dzb1), and the z2 pair likewise.
const std::array<std::array<CplxTermRef, 2>, 4>& real_to_gen_table() {
    static const std::array<std::array<CplxTermRef, 2>, 4> table = [] {
        GaussianRational half(Rational::of(1, 2));
        GaussianRational ih(Rational(0), Rational::of(1, 2));  // i/2
        return std::array<std::array<CplxTermRef, 2>, 4>{{
            {{{Gen::DZ1, half}, {Gen::DZB1, half}}},
            {{{Gen::DZ1, -ih}, {Gen::DZB1, ih}}},
            {{{Gen::DZ2, half}, {Gen::DZB2, half}}},
            {{{Gen::DZ2, -ih}, {Gen::DZB2, ih}}},
        }};
    }();
    return table;
}

}  // namespace

RealForm to_real(const Form& f) {
    RealForm out;
    for (const auto& [idx, p] : f.coeffs()) {
        // Expand the generator product one factor at a time.
        std::vector<std::pair<RealIndex, GaussianRational>> acc = {
            {RealIndex(0), GaussianRational(1)}};
        for (Gen g : idx.gens()) {
            std::vector<std::pair<RealIndex, GaussianRational>> next;
            for (const auto& [ridx, c] : acc) {
                for (const RealTermRef& t : gen_to_real_table()[static_cast<std::size_t>(g)]) {
                    RealIndex factor(static_cast<std::uint8_t>(1u << t.dx));
                    int s = wedge_sign_real(ridx, factor);
                    if (s == 0) continue;
                    GaussianRational c2 = c * t.coeff;
                    if (s < 0) c2 = -c2;
                    next.emplace_back(RealIndex(ridx.mask() | factor.mask()), c2);
                }
            }
            acc = std::move(next);
        }
        for (const auto& [ridx, c] : acc) out.add_term(ridx, c * p);
    }
    return out;
}

Form to_complex(const RealForm& f) {
    Form out;
    for (const auto& [idx, p] : f.coeffs()) {
        std::vector<std::pair<BasisIndex, GaussianRational>> acc = {
            {BasisIndex(), GaussianRational(1)}};
        for (unsigned k = 0; k < 4; ++k) {
            if (!(idx.mask() & (1u << k))) continue;
            std::vector<std::pair<BasisIndex, GaussianRational>> next;
            for (const auto& [cidx, c] : acc) {
                for (const CplxTermRef& t : real_to_gen_table()[k]) {
                    BasisIndex factor = BasisIndex::of({t.g});
                    int s = wedge_sign(cidx, factor);
                    if (s == 0) continue;
                    GaussianRational c2 = c * t.coeff;
                    if (s < 0) c2 = -c2;
                    next.emplace_back(BasisIndex(cidx.mask() | factor.mask()), c2);
                }
            }
            acc = std::move(next);
        }
        for (const auto& [cidx, c] : acc) out.add_term(cidx, c * p);
    }
    return out;
}

RealForm ext_d(const RealForm& f) {
    RealForm r;
    for (const auto& [idx, p] : f.coeffs()) {
        for (unsigned k = 0; k < 4; ++k) {
            Poly dp;
            switch (k) {
                case 0: dp = wirtinger(p, Var::Z1) + wirtinger(p, Var::ZB1); break;
                case 1: {
                    Poly d = wirtinger(p, Var::Z1) - wirtinger(p, Var::ZB1);
                    dp = GaussianRational::i() * d;
                    break;
                }
                case 2: dp = wirtinger(p, Var::Z2) + wirtinger(p, Var::ZB2); break;
                case 3: {
                    Poly d = wirtinger(p, Var::Z2) - wirtinger(p, Var::ZB2);
                    dp = GaussianRational::i() * d;
                    break;
                }
            }
            if (dp.is_zero()) continue;
            RealIndex g(static_cast<std::uint8_t>(1u << k));
            int s = wedge_sign_real(g, idx);
            if (s == 0) continue;
            if (s < 0) dp = -dp;
            r.add_term(RealIndex(g.mask() | idx.mask()), dp);
        }
    }
    return r;
}

}  // namespace formwell
