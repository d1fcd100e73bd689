#include "formwell/numeric.hpp"

#include <cmath>

#include "formwell/errors.hpp"

namespace formwell {

std::complex<double> fd_partial(const Poly& p, int k, const RealPoint& at, double h) {
    RealPoint plus = at, minus = at;
    double* coords_plus[4] = {&plus.x0, &plus.x1, &plus.x2, &plus.x3};
    double* coords_minus[4] = {&minus.x0, &minus.x1, &minus.x2, &minus.x3};
    *coords_plus[k] += h;
    *coords_minus[k] -= h;
    std::complex<double> value =
        (eval(p, plus.to_complex()) - eval(p, minus.to_complex())) / (2.0 * h);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) throw NonFiniteResult();
    return value;
}

bool check_wirtinger(const Poly& p, const RealPoint& at, double h, double tol) {
    const std::complex<double> i{0.0, 1.0};
    std::complex<double> d0 = fd_partial(p, 0, at, h);
    std::complex<double> d1 = fd_partial(p, 1, at, h);
    std::complex<double> d2 = fd_partial(p, 2, at, h);
    std::complex<double> d3 = fd_partial(p, 3, at, h);

    struct Check {
        Var v;
        std::complex<double> expected;
    };
    const Check checks[4] = {
        {Var::Z1, 0.5 * (d0 - i * d1)},
        {Var::ZB1, 0.5 * (d0 + i * d1)},
        {Var::Z2, 0.5 * (d2 - i * d3)},
        {Var::ZB2, 0.5 * (d2 + i * d3)},
    };
    ComplexPoint z = at.to_complex();
    for (const Check& c : checks) {
        std::complex<double> symbolic = eval(wirtinger(p, c.v), z);
        double err = std::abs(symbolic - c.expected);
        double bound = std::max(tol * std::abs(symbolic), 1e-9);
        if (err > bound) return false;
    }
    return true;
}

}  // namespace formwell
