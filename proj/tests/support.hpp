#ifndef DWSTAR_TESTS_SUPPORT_HPP
#define DWSTAR_TESTS_SUPPORT_HPP

#include <dwstar/multipoly.hpp>
#include <dwstar/random.hpp>
#include <dwstar/star.hpp>

namespace testing
{

using namespace dwstar;

inline MultiPoly X(unsigned e = 1) { return MultiPoly::var(kX, e); }
inline MultiPoly P(unsigned e = 1) { return MultiPoly::var(kP, e); }
inline MultiPoly K(unsigned e = 1) { return MultiPoly::var(kK, e); }
inline MultiPoly H1(unsigned e = 1) { return MultiPoly::var(kH1, e); }
inline MultiPoly H2(unsigned e = 1) { return MultiPoly::var(kH2, e); }
inline MultiPoly Q(std::size_t slot, unsigned e = 1) { return MultiPoly::var(VarId::aux(slot), e); }
inline MultiPoly C(long re, long im = 0) { return MultiPoly(GaussianRational(Rational(re), Rational(im))); }
inline MultiPoly Cq(long num, long den) { return MultiPoly(GaussianRational(make_rational(num, den))); }
inline const GaussianRational I = GaussianRational::i();
inline MultiPoly Ip() { return MultiPoly(GaussianRational::i()); }

inline MultiPoly xp_monomial(unsigned a, unsigned b) { return MultiPoly::term(Monomial{{kX, a}, {kP, b}}, 1); }

// Value of f at rational points for the listed variables; every variable
// of f must be listed.
inline GaussianRational value_at(MultiPoly f, std::initializer_list<std::pair<VarId, Rational>> at)
{
    for (const auto &[v, q] : at) {
        f = evaluate(f, v, GaussianRational(q));
    }
    return f.coefficient(Monomial{});
}

} // namespace testing

#endif
