#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "formwell/poly.hpp"

namespace formwell {

/// Cotangent generators in canonical order dz1 < dz2 < dzb1 < dzb2, chosen so
/// the written products dz1/\dz2/\dzb1/\dzb2 carry no hidden signs.
enum class Gen : std::uint8_t { DZ1 = 0, DZ2 = 1, DZB1 = 2, DZB2 = 3 };

const char* gen_name(Gen g);
Gen gen_for_var(Var v);
Gen gen_conj(Gen g);

/// Strictly ascending subset of the four generators, stored as a bitmask.
class BasisIndex {
public:
    BasisIndex() = default;
    explicit BasisIndex(std::uint8_t mask) : mask_(mask) {}
    static BasisIndex of(std::initializer_list<Gen> gens);
    static BasisIndex full() { return BasisIndex(0xF); }

    std::uint8_t mask() const { return mask_; }
    int degree() const;
    bool contains(Gen g) const { return mask_ & (1u << static_cast<unsigned>(g)); }
    std::vector<Gen> gens() const;

    /// "dz1/\dz2"; the empty index renders as "1".
    std::string to_string() const;

    friend bool operator==(BasisIndex a, BasisIndex b) { return a.mask_ == b.mask_; }

private:
    std::uint8_t mask_ = 0;
};

/// Degree first, then lexicographic on the ascending generator list.
struct BasisOrder {
    bool operator()(BasisIndex a, BasisIndex b) const;
};

/// All 2^4 basis indices in canonical order.
const std::vector<BasisIndex>& all_basis_indices();
std::vector<BasisIndex> basis_indices_of_degree(int k);

/// Wedge of two disjoint index sets: sign (+1/-1) from sorting the
/// concatenation into ascending order, or 0 when they intersect.
int wedge_sign(BasisIndex a, BasisIndex b);

/// Conjugate of a basis product: bars swap and the factors re-sort.
/// Returns the sorted index and the sign picked up.
std::pair<BasisIndex, int> conj_index(BasisIndex a);

/// Complex differential form on C^2: mapping of basis indices to polynomial
/// coefficients. Mixed degrees are allowed in one value.
class Form {
public:
    using CoeffMap = std::map<BasisIndex, Poly, BasisOrder>;

    Form() = default;
    static Form from_poly(const Poly& p);          // 0-form
    static Form generator(Gen g);                  // basis 1-form
    static Form term(BasisIndex idx, const Poly& p);

    bool is_zero() const { return coeffs_.empty(); }
    const CoeffMap& coeffs() const { return coeffs_; }
    const Poly& coeff(BasisIndex idx) const;  // zero polynomial when absent

    /// Degree when homogeneous; nullopt for mixed degrees and for the zero
    /// form (which is homogeneous of every degree).
    std::optional<int> homogeneous_degree() const;

    Form operator-() const;
    friend Form operator+(const Form& a, const Form& b);
    friend Form operator-(const Form& a, const Form& b);
    Form& operator+=(const Form& b) { return *this = *this + b; }
    Form& operator-=(const Form& b) { return *this = *this - b; }
    friend Form operator*(const Poly& p, const Form& f);
    friend Form operator*(const GaussianRational& c, const Form& f);

    friend bool operator==(const Form& a, const Form& b) { return a.coeffs_ == b.coeffs_; }

    void add_term(BasisIndex idx, const Poly& p);

    /// "(p)*dz1/\dzb2" terms joined with " + ", sorted by degree then basis
    /// index; coefficient 1 prints bare generators; a 0-form term prints as
    /// "(p)". Round-trips through the form parser.
    std::string to_string() const;

private:
    CoeffMap coeffs_;
};

Form wedge(const Form& a, const Form& b);
Form ext_d(const Form& f);

enum class Dolbeault { Holo, Anti };
Form dolbeault(const Form& f, Dolbeault which);

Form grade(const Form& f, int k);

/// Real cotangent basis dx0..dx3.
class RealIndex {
public:
    RealIndex() = default;
    explicit RealIndex(std::uint8_t mask) : mask_(mask) {}
    std::uint8_t mask() const { return mask_; }
    int degree() const;
    std::string to_string() const;
    friend bool operator==(RealIndex a, RealIndex b) { return a.mask_ == b.mask_; }

private:
    std::uint8_t mask_ = 0;
};

struct RealOrder {
    bool operator()(RealIndex a, RealIndex b) const;
};

int wedge_sign_real(RealIndex a, RealIndex b);

/// Form over the real basis dx0..dx3; coefficients remain polynomials in the
/// z-symbols.
class RealForm {
public:
    using CoeffMap = std::map<RealIndex, Poly, RealOrder>;

    RealForm() = default;
    static RealForm term(RealIndex idx, const Poly& p);

    bool is_zero() const { return coeffs_.empty(); }
    const CoeffMap& coeffs() const { return coeffs_; }
    const Poly& coeff(RealIndex idx) const;

    RealForm operator-() const;
    friend RealForm operator+(const RealForm& a, const RealForm& b);
    friend bool operator==(const RealForm& a, const RealForm& b) {
        return a.coeffs_ == b.coeffs_;
    }

    void add_term(RealIndex idx, const Poly& p);
    std::string to_string() const;

private:
    CoeffMap coeffs_;
};

/// Basis change dz1 = dx0 + i dx1, dz2 = dx2 + i dx3 and conjugates.
RealForm to_real(const Form& f);
/// Exact inverse of to_real.
Form to_complex(const RealForm& f);

/// Exterior derivative in the real basis; d/dx_k combinations of the
/// Wirtinger derivatives via d/dx0 = d1 + db1, d/dx1 = i(d1 - db1), etc.
RealForm ext_d(const RealForm& f);

}  // namespace formwell
