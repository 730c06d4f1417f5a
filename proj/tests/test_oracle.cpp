#include <doctest.h>

#include <string>
#include <vector>

#include <dwstar/dunkl.hpp>
#include <dwstar/oracle.hpp>

#include "support.hpp"

using namespace testing;

namespace
{

NormalForm Xn() { return NormalForm::X(); }
NormalForm Pn() { return NormalForm::P(); }
NormalForm Gn() { return NormalForm::G(); }
NormalForm B(unsigned a, unsigned b, bool g, const MultiPoly &c = MultiPoly(1)) { return NormalForm::basis({a, b, g}, c); }

NormalForm random_normal_form(Rng &rng, unsigned max_x, unsigned max_p, unsigned max_k)
{
    NormalForm n;
    for (int t = 0; t < 4; ++t) {
        MultiPoly c;
        for (unsigned e = 0; e <= max_k; ++e) {
            c += K(e) * C(rng.uniform(-3, 3), rng.uniform(-3, 3));
        }
        n.add_term({static_cast<unsigned>(rng.uniform(0, max_x)), static_cast<unsigned>(rng.uniform(0, max_p)),
                    rng.chance(50)},
                   c);
    }
    return n;
}

std::string random_word(Rng &rng, std::size_t max_len)
{
    const auto len = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_len)));
    std::string w;
    for (std::size_t i = 0; i < len; ++i) {
        w += "XPG"[rng.uniform(0, 2)];
    }
    return w;
}

NormalForm word_product(const std::string &w)
{
    NormalForm acc = NormalForm::one();
    for (char c : w) {
        acc = acc * (c == 'X' ? Xn() : c == 'P' ? Pn() : Gn());
    }
    return acc;
}

} // namespace

TEST_CASE("defining relations")
{
    CHECK(Pn() * Xn() - Xn() * Pn() == NormalForm::one() * (-Ip()) + Gn() * (-2 * Ip() * K()));
    CHECK(Gn() * Xn() == B(1, 0, true, -1));
    CHECK(Gn() * Pn() == B(0, 1, true, -1));
    CHECK(Gn() * Gn() == NormalForm::one());
    CHECK_THROWS_AS(NormalForm::one().add_term({0, 0, false}, X()), std::invalid_argument);
}

TEST_CASE("from_symbol examples")
{
    CHECK(from_symbol(CrossedElement(X() * P())) == B(1, 1, false));
    CHECK(from_symbol(CrossedElement(MultiPoly(1), MultiPoly(1))) == NormalForm::one() + Gn());
    CHECK(from_symbol(CrossedElement(P(2))) == B(0, 2, false));
    CHECK(from_symbol(CrossedElement(K() * X(), X())) == B(1, 0, false, K()) + B(1, 0, true));
}

TEST_CASE("multiply examples")
{
    CHECK(Pn() * Xn() == B(1, 1, false) - NormalForm::one() * Ip() + Gn() * (-2 * Ip() * K()));
    CHECK(Gn() * Xn() == B(1, 0, true, -1));
    const NormalForm pp = Pn() * Pn(), xx = Xn() * Xn();
    CHECK(pp * xx == B(2, 2, false) + B(1, 1, false, -4 * Ip()) + B(0, 0, false, -2) + B(0, 0, true, -4 * K()));
}

TEST_CASE("to_symbol_layers examples")
{
    const SymbolLayers xp = to_symbol_layers(Xn() * Pn());
    CHECK(xp.size() == 1);
    CHECK(xp.at(0) == CrossedElement(X() * P()));
    const SymbolLayers px = to_symbol_layers(Pn() * Xn());
    CHECK(px.size() == 2);
    CHECK(px.at(0) == CrossedElement(X() * P() - Ip()));
    CHECK(px.at(1) == CrossedElement(MultiPoly(), -2 * Ip()));
    Rng rng(1);
    for (int t = 0; t < 10; ++t) {
        const MultiPoly f = random_poly(rng, {4, 5, true, 50});
        const SymbolLayers layers = to_symbol_layers(from_symbol(CrossedElement(f)));
        if (f.is_zero()) {
            CHECK(layers.empty());
        } else {
            CHECK(layers.at(0) == CrossedElement(f));
        }
    }
}

TEST_CASE("apply examples")
{
    CHECK(apply(Xn() * Xn(), X()) == X(3));
    CHECK(apply(Pn(), X()) == -Ip() * (1 + 2 * K()));
    CHECK(apply(Gn(), X(3) + X(2)) == -X(3) + X(2));
}

TEST_CASE("multiplication is composition of actions")
{
    Rng rng(19);
    for (int t = 0; t < 30; ++t) {
        const NormalForm l = random_normal_form(rng, 3, 3, 1);
        const NormalForm r = random_normal_form(rng, 3, 3, 1);
        MultiPoly g;
        for (unsigned d = 0; d <= 5; ++d) {
            g += X(d) * C(rng.uniform(-4, 4), rng.uniform(-4, 4));
        }
        CHECK(apply(l * r, g) == apply(l, apply(r, g)));
    }
}

TEST_CASE("rewriting is confluent")
{
    Rng rng(44);
    for (int t = 0; t < 40; ++t) {
        const std::string w = random_word(rng, 7);
        const NormalForm left = reduce_word(w, RewriteOrder::leftmost);
        CHECK(reduce_word(w, RewriteOrder::rightmost) == left);
        CHECK(reduce_word(w, RewriteOrder::random, 1000 + t) == left);
        CHECK(word_product(w) == left);
    }
    CHECK_THROWS_AS(reduce_word("XQ", RewriteOrder::leftmost), std::invalid_argument);
}

TEST_CASE("expansion_product examples")
{
    const SymbolLayers px = expansion_product(P(), X());
    CHECK(px == to_symbol_layers(Pn() * Xn()));
    const MultiPoly a = X(3) + 2 * X() - 1, b = X(2) * P(3) + P();
    const SymbolLayers plain = expansion_product(a, b);
    CHECK(plain.size() == 1);
    CHECK(plain.at(0) == CrossedElement(a * b));
    CHECK(expansion_product(P(2), X(2)) == to_symbol_layers((Pn() * Pn()) * (Xn() * Xn())));
}

TEST_CASE("word census counts match c_nu")
{
    for (unsigned alpha = 0; alpha <= 7; ++alpha) {
        for (const auto &[key, count] : word_census(alpha)) {
            const auto &[nu, s] = key;
            CHECK(nu.m() + nu.n() + s == alpha);
            CHECK(c_nu(nu, s) == count);
        }
    }
}

TEST_CASE("verify_pair examples")
{
    CHECK(verify_pair(P(), X()).ok());
    const MultiPoly b = X(2) * P() - 3 * P(3);
    const PairReport unit = verify_pair(MultiPoly(1), b);
    CHECK(unit.ok());
    CHECK(unit.star_layers.size() == 1);
    CHECK(unit.star_layers.at(0) == CrossedElement(b));
    for (unsigned a1 = 0; a1 <= 3; ++a1) {
        for (unsigned b1 = 0; b1 <= 3; ++b1) {
            for (unsigned a2 = 0; a2 <= 3; ++a2) {
                for (unsigned b2 = 0; b2 <= 3; ++b2) {
                    CHECK(verify_pair(xp_monomial(a1, b1), xp_monomial(a2, b2)).ok());
                }
            }
        }
    }
}

TEST_CASE("action at three k values determines the normal form")
{
    Rng rng(61);
    const std::vector<Rational> ks{make_rational(1, 3), Rational(2), make_rational(-5, 2)};
    for (int t = 0; t < 15; ++t) {
        const NormalForm n = random_normal_form(rng, 3, 3, 2);
        std::vector<ActionSample> samples;
        for (const Rational &k : ks) {
            samples.push_back(sample_action(n, k, 2 * 3 + 1));
        }
        CHECK(recover_from_action(samples, 3, 3) == n);
    }
    std::vector<ActionSample> zero;
    for (const Rational &k : ks) {
        zero.push_back(sample_action(NormalForm(), k, 7));
    }
    CHECK(recover_from_action(zero, 3, 3).is_zero());
    std::vector<ActionSample> short_data{sample_action(Pn(), Rational(1), 1)};
    CHECK_THROWS_AS(recover_from_action(short_data, 1, 0), std::domain_error);
}
