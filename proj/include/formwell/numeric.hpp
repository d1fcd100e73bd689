#pragma once

#include <complex>

#include "formwell/poly.hpp"

namespace formwell {

struct RealPoint {
    double x0 = 0, x1 = 0, x2 = 0, x3 = 0;

    ComplexPoint to_complex() const { return ComplexPoint::from_reals(x0, x1, x2, x3); }
};

/// Central difference (p(x + h e_k) - p(x - h e_k)) / (2h).
std::complex<double> fd_partial(const Poly& p, int k, const RealPoint& at, double h);

/// True when all four symbolic Wirtinger derivatives match their
/// finite-difference combinations d1 = (dx0 - i dx1)/2 etc. at the point,
/// within relative tolerance tol (absolute floor 1e-9 near zero).
bool check_wirtinger(const Poly& p, const RealPoint& at, double h, double tol);

}  // namespace formwell
