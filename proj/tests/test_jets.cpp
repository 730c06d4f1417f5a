#include <doctest.h>

#include <dwstar/jets.hpp>

#include "support.hpp"

using namespace testing;

namespace
{

// Independent jet evaluation: differentiate symbolically, then substitute.
GaussianRational jet_by_hand(const MultiPoly &f, const Rational &x, const Rational &p, unsigned i, unsigned j)
{
    return value_at(differentiate(differentiate(f, kX, i), kP, j), {{kX, x}, {kP, p}});
}

void check_match(const JetData &data)
{
    const MultiPoly g = jet_match(data);
    CHECK(g.only_uses({kX, kP}));
    CHECK(g.degree(kX) <= 2 * data.m + 1);
    CHECK(g.degree(kP) <= 2 * data.n + 1);
    const auto pts = data.points();
    for (const auto &[key, value] : data.values) {
        CHECK(jet_by_hand(g, pts[key.point].first, pts[key.point].second, key.i, key.j) == value);
    }
}

} // namespace

TEST_CASE("jet_value agrees with symbolic differentiation")
{
    Rng rng(2);
    for (int t = 0; t < 20; ++t) {
        const MultiPoly f = random_poly(rng, {5, 6, true, 60});
        const Rational x = random_rational(rng, 5, 4, true), p = random_rational(rng, 5, 4, true);
        for (unsigned i = 0; i <= 2; ++i) {
            for (unsigned j = 0; j <= 2; ++j) {
                CHECK(jet_value(f, x, p, i, j) == jet_by_hand(f, x, p, i, j));
            }
        }
    }
}

TEST_CASE("classification of base points")
{
    CHECK(classify(jets_of(X(), 0, 0, 0, 0)) == JetCase::origin);
    CHECK(classify(jets_of(X(), 1, 0, 0, 0)) == JetCase::x_axis);
    CHECK(classify(jets_of(X(), 0, 1, 0, 0)) == JetCase::p_axis);
    CHECK(classify(jets_of(X(), 1, 1, 0, 0)) == JetCase::generic);
}

TEST_CASE("jet_match examples")
{
    const MultiPoly g = 3 + 2 * X() + 5 * X() * P();
    CHECK(jet_match(jets_of(g, 0, 0, 1, 1)) == g);

    check_match(jets_of(X(3), 1, 0, 1, 1));

    Rng rng(12);
    const MultiPoly f = random_poly(rng, {5, 7, true, 70});
    const JetData data = jets_of(f, 1, 2, 2, 2);
    check_match(data);
    CHECK(jets_agree(jet_match(data), data));
}

TEST_CASE("random instances in every case")
{
    Rng rng(99);
    for (int t = 0; t < 8; ++t) {
        const MultiPoly f = random_poly(rng, {7, 9, true, 60});
        const auto m = static_cast<unsigned>(rng.uniform(0, 2));
        const auto n = static_cast<unsigned>(rng.uniform(0, 2));
        const Rational x0 = random_rational(rng, 5, 3, false), p0 = random_rational(rng, 5, 3, false);
        check_match(jets_of(f, 0, 0, m, n));
        check_match(jets_of(f, x0, 0, m, n));
        check_match(jets_of(f, 0, p0, m, n));
        check_match(jets_of(f, x0, p0, m, n));
    }
}

TEST_CASE("inconsistent or missing jets are rejected")
{
    JetData data = jets_of(X(2) * P(), 0, 1, 1, 1);
    // (0,1) and (-0,1) coincide
    data.values[{1, 0, 0}] += GaussianRational(1);
    CHECK_THROWS_AS(jet_match(data), InconsistentJets);

    JetData missing = jets_of(X(2) * P(), 1, 1, 1, 1);
    missing.values.erase({3, 1, 0});
    CHECK_THROWS_AS(jet_match(missing), InconsistentJets);

    // at the origin all four entries name one point; a single copy suffices
    JetData sparse = jets_of(X() * P() + 1, 0, 0, 1, 1);
    for (unsigned point = 1; point < 4; ++point) {
        for (unsigned i = 0; i <= 1; ++i) {
            for (unsigned j = 0; j <= 1; ++j) {
                sparse.values.erase({point, i, j});
            }
        }
    }
    CHECK(jet_match(sparse) == X() * P() + 1);
}
