#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torlie/der.hpp"
#include "torlie/verify.hpp"

using namespace torlie;

TEST_CASE("bracket of basis derivations") {
    // [D(e1,e2), D(e2,e1)] = D(e2 - e1, e1 + e2)
    DerElement x = DerElement::basis(2, 0, LatticeVector::unit(2, 1));
    DerElement y = DerElement::basis(2, 1, LatticeVector::unit(2, 0));
    RationalVector w(2);
    w[0] = Rational(-1);
    w[1] = Rational(1);
    CHECK(bracket_der(x, y) == DerElement::single(w, LatticeVector{1, 1}));
}

TEST_CASE("bracket is antisymmetric and vanishes on the Cartan part") {
    Sampler s(SplitMix64(17), 2, 3);
    for (int t = 0; t < 100; ++t) {
        DerElement x = random_der(s);
        CHECK(bracket_der(x, x).is_zero());
    }
    DerElement h1 = DerElement::basis(2, 0, LatticeVector(2));
    DerElement h2 = DerElement::basis(2, 1, LatticeVector(2));
    CHECK(bracket_der(h1, h2).is_zero());
}

TEST_CASE("derivations of different dimension do not mix") {
    CHECK_THROWS_AS(bracket_der(DerElement::zero(2), DerElement::zero(3)),
                    std::invalid_argument);
}

TEST_CASE("action on monomials") {
    // D(e1,(1,1)) . t^(2,0) = 2 t^(3,1)
    DerElement x = DerElement::basis(2, 0, LatticeVector{1, 1});
    LaurentPoly f = LaurentPoly::monomial({2, 0}, Rational(1));
    CHECK(act_on_poly(x, f) == LaurentPoly::monomial({3, 1}, Rational(2)));

    // constants are killed
    Sampler s(SplitMix64(2), 2, 3);
    for (int t = 0; t < 50; ++t)
        CHECK(act_on_poly(random_der(s), LaurentPoly::one(2)).is_zero());
}

TEST_CASE("action satisfies Leibniz and represents the bracket") {
    for (std::size_t d : {2u, 3u}) {
        Sampler s(SplitMix64(1000 + d), d, 3);
        auto report = verify_der_action(s, 200);
        INFO(report.witness);
        CHECK(report.ok);
    }
}

TEST_CASE("mixed bracket in the semidirect sum") {
    // [t^(1,0), t^(0,1)] = 0
    ADerElement a(LaurentPoly::monomial({1, 0}, Rational(1)), DerElement::zero(2));
    ADerElement b(LaurentPoly::monomial({0, 1}, Rational(1)), DerElement::zero(2));
    CHECK(bracket_a_der(a, b).is_zero());

    // [D(e1,(0,1)), t^(2,0)] = 2 t^(2,1)
    ADerElement x(LaurentPoly::zero(2), DerElement::basis(2, 0, LatticeVector{0, 1}));
    ADerElement f(LaurentPoly::monomial({2, 0}, Rational(1)), DerElement::zero(2));
    ADerElement expect(LaurentPoly::monomial({2, 1}, Rational(2)), DerElement::zero(2));
    CHECK(bracket_a_der(x, f) == expect);

    // r = 0 case: [D(u,0), t^m] = (u,m) t^m
    Sampler s(SplitMix64(9), 2, 3);
    for (int t = 0; t < 50; ++t) {
        RationalVector u = s.rational_vector();
        LatticeVector m = s.lattice();
        ADerElement h(LaurentPoly::zero(2), DerElement::single(u, LatticeVector(2)));
        ADerElement tm(LaurentPoly::monomial(m, Rational(1)), DerElement::zero(2));
        ADerElement expect2(LaurentPoly::monomial(m, dot(u, m)), DerElement::zero(2));
        CHECK(bracket_a_der(h, tm) == expect2);
    }
}

TEST_CASE("Jacobi holds exactly in Der A and in the semidirect sum") {
    for (std::size_t d : {2u, 3u, 4u}) {
        Sampler s1(SplitMix64::stream(99, "der"), d, 3);
        auto der_report = verify_jacobi_der(s1, 300);
        INFO(der_report.witness);
        CHECK(der_report.ok);

        Sampler s2(SplitMix64::stream(99, "ader"), d, 3);
        auto ader_report = verify_jacobi_a_der(s2, 300);
        INFO(ader_report.witness);
        CHECK(ader_report.ok);
    }
}

TEST_CASE("degenerate triples vanish by antisymmetry") {
    Sampler s(SplitMix64(31), 3, 3);
    for (int t = 0; t < 60; ++t) {
        DerElement x = random_der(s);
        DerElement y = random_der(s);
        DerElement jac = bracket_der(x, bracket_der(x, y)) + bracket_der(x, bracket_der(y, x)) +
                         bracket_der(y, bracket_der(x, x));
        CHECK(jac.is_zero());
    }
}
