#include <doctest.h>

#include "formwell/poly.hpp"
#include "support/generators.hpp"
#include "support/xpoly.hpp"

using namespace formwell;
using namespace formwell::testsupport;

namespace {

Poly z1() { return Poly::variable(Var::Z1); }
Poly zb1() { return Poly::variable(Var::ZB1); }
Poly z2() { return Poly::variable(Var::Z2); }
Poly zb2() { return Poly::variable(Var::ZB2); }

}  // namespace

TEST_CASE("poly arithmetic examples") {
    CHECK((z1() + zb1()) * (z1() - zb1()) == z1() * z1() - zb1() * zb1());
    Rng rng(7u);
    Poly p = random_poly(rng);
    CHECK(Poly() + p == p);
    CHECK(z1() * z1() * z2() * z2() == (z1() * z1() * z2()) * z2());
}

TEST_CASE("wirtinger examples") {
    CHECK(wirtinger(z1() * z1(), Var::Z1) == GaussianRational(2) * z1());

    GaussianRational half(Rational::of(1, 2));
    CHECK(wirtinger(half * zb1(), Var::ZB1) == Poly::constant(half));

    GaussianRational third(Rational::of(1, 3));
    Poly f2 = third * (z1() * z1() * z1());
    CHECK(wirtinger(f2, Var::Z2).is_zero());
    CHECK(wirtinger(f2, Var::Z1) == z1() * z1());
}

TEST_CASE("conjugate examples") {
    CHECK(conjugate(z1()) == zb1());
    CHECK(conjugate(GaussianRational::i() * z1() * z2()) ==
          -GaussianRational::i() * zb1() * zb2());
    Poly p = z1() * z1() * z2() + z2() * z2();
    CHECK(conjugate(p) == zb1() * zb1() * zb2() + zb2() * zb2());
    CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("is_constant examples") {
    CHECK(is_constant(Poly::constant(6)) == GaussianRational(6));
    CHECK(is_constant(Poly()) == GaussianRational(0));
    GaussianRational two(2);
    Poly p = two * z1() * z2() + two * zb1() * zb2();
    CHECK(!is_constant(p).has_value());
    CHECK(!is_constant(z1()).has_value());
}

TEST_CASE("laplace4 examples") {
    CHECK(laplace4(z1() * zb1()) == Poly::constant(4));
    CHECK(laplace4(z1() * zb1() - z2() * zb2()).is_zero());
    GaussianRational half(Rational::of(1, 2));
    CHECK(laplace4(half * zb1()).is_zero());
}

TEST_CASE("dalembert examples") {
    CHECK(dalembert(z1() + zb1()).is_zero());
    // box(z1^2 z2 + z2^2) = 4 z2: the 2 d1^2 term fires twice.
    CHECK(dalembert(z1() * z1() * z2() + z2() * z2()) == GaussianRational(4) * z2());
    CHECK(dalembert(z1() * zb1()).is_zero());
}

TEST_CASE("eval examples") {
    CHECK(eval(z1() * zb1(), ComplexPoint{{3, 4}, {0, 0}}) ==
          std::complex<double>(25.0, 0.0));
    CHECK(eval(zb1(), ComplexPoint::from_reals(1, 2, 0, 0)) == std::complex<double>(1.0, -2.0));
    auto v = eval(z1() * z1() * z2(), ComplexPoint{{1, 1}, {2, 0}});
    CHECK(std::abs(v - std::complex<double>(0.0, 4.0)) < 1e-12);
}

TEST_CASE("leibniz rule on randomized pairs") {
    Rng rng(101u);
    for (int k = 0; k < 200; ++k) {
        Poly p = random_poly(rng), q = random_poly(rng);
        for (Var v : {Var::Z1, Var::ZB1, Var::Z2, Var::ZB2}) {
            CHECK(wirtinger(p * q, v) == wirtinger(p, v) * q + p * wirtinger(q, v));
        }
    }
}

TEST_CASE("mixed wirtinger derivatives commute") {
    Rng rng(102u);
    for (int k = 0; k < 200; ++k) {
        Poly p = random_poly(rng, 4);
        for (Var a : {Var::Z1, Var::ZB1, Var::Z2, Var::ZB2})
            for (Var b : {Var::Z1, Var::ZB2}) {
                CHECK(wirtinger(wirtinger(p, a), b) == wirtinger(wirtinger(p, b), a));
            }
    }
}

TEST_CASE("conjugation intertwines the derivative pairs") {
    Rng rng(103u);
    const std::pair<Var, Var> pairs[] = {{Var::Z1, Var::ZB1},
                                         {Var::ZB1, Var::Z1},
                                         {Var::Z2, Var::ZB2},
                                         {Var::ZB2, Var::Z2}};
    for (int k = 0; k < 200; ++k) {
        Poly p = random_poly(rng);
        for (auto [v, vc] : pairs)
            CHECK(conjugate(wirtinger(p, v)) == wirtinger(conjugate(p), vc));
    }
}

TEST_CASE("laplace4 equals the real-coordinate laplacian") {
    Rng rng(104u);
    for (int k = 0; k < 150; ++k) {
        Poly p = random_poly(rng, 4);
        XPoly expected = real_laplacian(expand_to_real(p));
        CHECK(expand_to_real(laplace4(p)) == expected);
        CHECK(laplace4(p) == collapse_to_z(expected));
    }
}

TEST_CASE("dalembert equals the real-coordinate d'alembertian") {
    Rng rng(105u);
    for (int k = 0; k < 150; ++k) {
        Poly p = random_poly(rng, 4);
        XPoly expected = real_dalembertian(expand_to_real(p));
        CHECK(expand_to_real(dalembert(p)) == expected);
        CHECK(dalembert(p) == collapse_to_z(expected));
    }
}

TEST_CASE("eval is a ring homomorphism within 1e-12") {
    Rng rng(106u);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (int k = 0; k < 100; ++k) {
        Poly p = random_poly(rng), q = random_poly(rng);
        ComplexPoint at{{coord(rng), coord(rng)}, {coord(rng), coord(rng)}};
        std::complex<double> lhs = eval(p * q, at);
        std::complex<double> rhs = eval(p, at) * eval(q, at);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
        std::complex<double> lhs2 = eval(p + q, at);
        std::complex<double> rhs2 = eval(p, at) + eval(q, at);
        CHECK(std::abs(lhs2 - rhs2) <= 1e-12 * std::max(1.0, std::abs(rhs2)));
    }
}

TEST_CASE("generator families are annihilated by their operators") {
    Rng rng(107u);
    for (int k = 0; k < 100; ++k) {
        CHECK(laplace4(random_harmonic(rng)).is_zero());
        CHECK(dalembert(random_wavelike(rng)).is_zero());
    }
}

TEST_CASE("canonical term order") {
    Poly p = z1() + z2() * z2() + Poly::constant(1) + zb1() * z2();
    // descending degree, then lexicographic on (e1, eb1, e2, eb2)
    CHECK(p.to_string() == "zb1*z2 + z2^2 + z1 + 1");
}
