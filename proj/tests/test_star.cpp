#include <doctest.h>

#include <dwstar/dunkl.hpp>
#include <dwstar/star.hpp>

#include "support.hpp"

using namespace testing;

namespace
{

CrossedElement G() { return CrossedElement::gamma_unit(); }
CrossedElement E(const MultiPoly &f, const MultiPoly &g = {}) { return {f, g}; }

// Direct operator-free second opinion on the Moyal series.
MultiPoly moyal_by_hand(const MultiPoly &a, const MultiPoly &b, unsigned max_j)
{
    MultiPoly sum;
    for (unsigned j = 0; j <= max_j; ++j) {
        const GaussianRational coeff = GaussianRational::i_pow(-static_cast<long>(j)) *
                                       GaussianRational(Rational(1, factorial(j)));
        sum += H1(j) * (differentiate(a, kP, j) * differentiate(b, kX, j)) * coeff;
    }
    return sum;
}

} // namespace

TEST_CASE("c0 examples")
{
    const MultiPoly a = X(2) * P() + 3, b = P(2) - X();
    CHECK(c0(0, 0, a, b) == a * b);
    CHECK(c0(1, 0, P(), X()) == -Ip());
    CHECK(c0(2, 0, P(2), X(2)) == MultiPoly(-2));
    CHECK_THROWS_AS(c0(1, 0, P() * H1(), X()), std::invalid_argument);
}

TEST_CASE("c1 examples")
{
    CHECK(c1(1, 1, P(), X()) == -2 * Ip());
    CHECK(c1(1, 1, X(), P()).is_zero());
    CHECK(c1(2, 1, P(2), X(2)) == MultiPoly(-4));
}

TEST_CASE("star examples")
{
    Rng rng(9);
    for (int t = 0; t < 10; ++t) {
        const CrossedElement a = random_crossed(rng, {3, 5, true, 60});
        CHECK(star(CrossedElement::one(), a) == a);
        CHECK(star(a, CrossedElement::one()) == a);
    }
    CHECK(star(P(), X()) == E(X() * P() - Ip() * H1(), -2 * Ip() * H1() * H2()));
    CHECK(star(X(), P()) == E(X() * P()));
    CHECK(star(P(2), X(2)) ==
          E(X(2) * P(2) - 4 * Ip() * X() * P() * H1() - 2 * H1(2), -4 * H1(2) * H2()));
}

TEST_CASE("gamma acts by the point reflection")
{
    const CrossedElement g = G();
    CHECK(star(g, g) == CrossedElement::one());
    CHECK(star(CrossedElement::one(), g) == g);
    CHECK(star(g, E(X())) == E({}, -X()));
    CHECK(star(E(X()), g) == E({}, X()));
    CHECK(star(star(g, E(X(2) * P() + P(3))), g) == E(-(X(2) * P() + P(3))));
    const CrossedElement proj = CrossedElement::projector();
    CHECK(star(proj, proj) == proj);
}

TEST_CASE("moyal examples")
{
    CHECK(moyal(P(), X()) - moyal(X(), P()) == -Ip() * H1());
    const MultiPoly a = X(3) * P(2) - 2 * Ip() * P();
    CHECK(moyal(a, MultiPoly(1)) == a);
    CHECK(moyal(X(2), P(2)) == X(2) * P(2));
    CHECK(moyal(a, X(3) + X() * P()) == moyal_by_hand(a, X(3) + X() * P(), 6));
}

TEST_CASE("star at h2 = 0 is the Moyal product")
{
    Rng rng(31);
    for (int t = 0; t < 25; ++t) {
        const MultiPoly a = random_poly(rng, {4, 5, true, 50});
        const MultiPoly b = random_poly(rng, {4, 5, true, 50});
        const CrossedElement s = star(a, b);
        CHECK(evaluate(s.plain, kH2, 0) == moyal_by_hand(a, b, 4));
        CHECK(evaluate(s.gamma, kH2, 0).is_zero());
    }
}

TEST_CASE("commutator examples")
{
    Rng rng(4);
    const CrossedElement a = random_crossed(rng, {3, 5, true, 60});
    CHECK(commutator(a, a).is_zero());
    CHECK(commutator(E(P()), E(X())) == E(-Ip() * H1(), -2 * Ip() * H1() * H2()));
    for (int t = 0; t < 10; ++t) {
        const MultiPoly f = random_invariant_poly(rng, {6, 5, true, 50});
        const MultiPoly xp = X() * P();
        const MultiPoly bracket =
            -Ip() * H1() * (differentiate(xp, kP) * differentiate(f, kX) - differentiate(f, kP) * differentiate(xp, kX));
        CHECK(commutator(E(xp), E(f)) == E(bracket));
    }
}

TEST_CASE("spherical subalgebra")
{
    const SphericalElement u(X(2) - 3 * P(2) * X(2) + X() * P());
    CHECK(spherical(SphericalElement(MultiPoly(1)), u) == u);
    CHECK(spherical(u, SphericalElement(MultiPoly(1))) == u);
    CHECK_THROWS_AS(SphericalElement{X()}, std::invalid_argument);

    const SphericalElement w = spherical(SphericalElement(X(2)), SphericalElement(P(2)));
    CHECK(gamma_twist(w.value()) == w.value());
    const CrossedElement s = star(X(2), P(2));
    CHECK(w.value() == s.plain + s.gamma);
    // (uP) ⋆ (vP) computed in the full crossed product lands on wP
    CHECK(star(SphericalElement(X(2)).embed(), SphericalElement(P(2)).embed()) == w.embed());
}

TEST_CASE("weight examples")
{
    CHECK(weight(X(2) * P()) == 1);
    CHECK(weight(X() * P()) == 0);
    CHECK(weight(X() + P()) == std::nullopt);
    CHECK_THROWS_AS(weight(MultiPoly()), std::invalid_argument);
}

TEST_CASE("structural vanishing of the bilinear operators")
{
    Rng rng(8);
    for (int t = 0; t < 6; ++t) {
        const MultiPoly a = random_poly(rng, {4, 3, true, 60});
        const MultiPoly b = random_poly(rng, {4, 3, true, 60});
        for (unsigned j = 0; j <= 5; ++j) {
            for (unsigned l = 0; l <= 5; ++l) {
                if (l % 2 == 1) {
                    CHECK(c0(j, l, a, b).is_zero());
                } else {
                    CHECK(c1(j, l, a, b).is_zero());
                }
                if (l > j || static_cast<int>(j) < 2 * static_cast<int>(l) - 1) {
                    CHECK(c0(j, l, a, b).is_zero());
                    CHECK(c1(j, l, a, b).is_zero());
                }
            }
        }
    }
}

TEST_CASE("associativity on a few random triples")
{
    Rng rng(77);
    for (int t = 0; t < 5; ++t) {
        const CrossedElement a = random_crossed(rng, {3, 5, true, 60});
        const CrossedElement b = random_crossed(rng, {3, 5, true, 60});
        const CrossedElement c = random_crossed(rng, {3, 5, true, 60});
        CHECK(star(star(a, b), c) == star(a, star(b, c)));
    }
}
