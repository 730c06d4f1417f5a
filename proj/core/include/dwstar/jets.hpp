#ifndef DWSTAR_JETS_HPP
#define DWSTAR_JETS_HPP

#include <array>
#include <compare>
#include <map>
#include <stdexcept>
#include <utility>

#include <dwstar/multipoly.hpp>

namespace dwstar
{

struct InconsistentJets : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Point index into ((x0,p0), (-x0,p0), (x0,-p0), (-x0,-p0)).
struct JetKey {
    unsigned point = 0;
    unsigned i = 0; // x-derivative order
    unsigned j = 0; // p-derivative order

    friend auto operator<=>(const JetKey &, const JetKey &) = default;
};

struct JetData {
    Rational x0;
    Rational p0;
    unsigned m = 0;
    unsigned n = 0;
    std::map<JetKey, GaussianRational> values; // ∂_x^i ∂_p^j f at the indexed point

    std::array<std::pair<Rational, Rational>, 4> points() const;
};

enum class JetCase { origin, x_axis, p_axis, generic };

JetCase classify(const JetData &data);

// ∂_x^i ∂_p^j f at (x, p).
GaussianRational jet_value(const MultiPoly &f, const Rational &x, const Rational &p, unsigned i, unsigned j);

// Every jet of f up to (m, n) at all four points.
JetData jets_of(const MultiPoly &f, const Rational &x0, const Rational &p0, unsigned m, unsigned n);

// True when g reproduces every prescribed jet.
bool jets_agree(const MultiPoly &g, const JetData &data);

// Polynomial in x, p matching all prescribed jets at the distinct points among
// (±x0, ±p0). Built as a Taylor polynomial at (x0, p0) followed by one
// correction per remaining point, each of the form M·h with M vanishing to
// the required order at the points already fixed. Bidegree <= (2m+1, 2n+1).
//
// Throws InconsistentJets when coinciding points carry different values or a
// distinct point is missing a jet.
MultiPoly jet_match(const JetData &data);

} // namespace dwstar

#endif
