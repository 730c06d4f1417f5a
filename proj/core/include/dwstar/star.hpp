#ifndef DWSTAR_STAR_HPP
#define DWSTAR_STAR_HPP

#include <optional>
#include <string>

#include <dwstar/multipoly.hpp>

namespace dwstar
{

// plain + gamma * γ in the crossed product Poly(R^2) ⋊ Z2, with components
// polynomial in x, p, h1, h2.
struct CrossedElement {
    MultiPoly plain;
    MultiPoly gamma;

    CrossedElement() = default;
    CrossedElement(MultiPoly plain_part, MultiPoly gamma_part = {})
        : plain(std::move(plain_part)), gamma(std::move(gamma_part))
    {
    }

    static CrossedElement one() { return {MultiPoly(1)}; }
    static CrossedElement gamma_unit() { return {MultiPoly(), MultiPoly(1)}; }
    // (1 + γ) / 2
    static CrossedElement projector();

    bool is_zero() const { return plain.is_zero() && gamma.is_zero(); }

    CrossedElement operator-() const { return {-plain, -gamma}; }
    CrossedElement &operator+=(const CrossedElement &o);
    CrossedElement &operator-=(const CrossedElement &o);
    CrossedElement &operator*=(const GaussianRational &c);

    friend CrossedElement operator+(CrossedElement a, const CrossedElement &b) { return a += b; }
    friend CrossedElement operator-(CrossedElement a, const CrossedElement &b) { return a -= b; }
    friend CrossedElement operator*(CrossedElement a, const GaussianRational &c) { return a *= c; }
    friend CrossedElement operator*(const GaussianRational &c, CrossedElement a) { return a *= c; }
    friend bool operator==(const CrossedElement &, const CrossedElement &) = default;

    std::string to_string() const;
};

// f(x, p) -> f(-x, -p)
MultiPoly gamma_twist(const MultiPoly &f);
CrossedElement gamma_twist(const CrossedElement &a);

// The bilinear operators C^0_{j,l} and C^1_{j,l} on polynomials in x and p:
//
//   C^0_{j,l}(a, b) = (-i)^j sum_{ν ∈ P_{j-l,l}} A_ν(a)(x, p) B_ν̄(b)(x, p)     (l even)
//   C^1_{j,l}(a, b) = (-i)^j sum_{ν ∈ P_{j-l,l}} A_ν(a)(x, p) B_ν̄(b)(x, -p)    (l odd)
//
// A_ν acts in p, B in x, and ν̄ is ν reversed: y_0 counts the derivatives that
// act last on b, matching the word order of the operator expansion. For even
// l the reversal is immaterial; for odd l it is what makes the product agree
// with operator composition.
//
// Throws std::invalid_argument if a or b involves variables other than x, p.
MultiPoly c0(unsigned j, unsigned l, const MultiPoly &a, const MultiPoly &b);
MultiPoly c1(unsigned j, unsigned l, const MultiPoly &a, const MultiPoly &b);

// a ⋆ b = sum_{j,l} h1^j h2^l (C^0_{j,l}(a,b) + C^1_{j,l}(a,b) γ) for a, b over x, p, h1, h2.
CrossedElement star(const MultiPoly &a, const MultiPoly &b);

// Extension to the crossed product through γ f γ = γ(f):
//   u ⋆ (vγ)    = S^1(u,v)   + S^0(u,v) γ
//   (uγ) ⋆ v    = S^1(u,γv)  + S^0(u,γv) γ
//   (uγ) ⋆ (vγ) = S^0(u,γv)  + S^1(u,γv) γ
CrossedElement star(const CrossedElement &a, const CrossedElement &b);

// sum_j h1^j (-i)^j / j! ∂_p^j a ∂_x^j b, computed directly.
MultiPoly moyal(const MultiPoly &a, const MultiPoly &b);

CrossedElement commutator(const CrossedElement &a, const CrossedElement &b);

// γ-invariant polynomial, identified with aP in the spherical subalgebra.
class SphericalElement
{
public:
    // Throws std::invalid_argument when value is not fixed by (x,p) -> (-x,-p).
    explicit SphericalElement(MultiPoly value);

    const MultiPoly &value() const { return value_; }
    CrossedElement embed() const; // value * (1 + γ)/2

    friend bool operator==(const SphericalElement &, const SphericalElement &) = default;

private:
    MultiPoly value_;
};

// (uP) ⋆ (vP) = wP; returns w = S^0(u,v) + S^1(u,v).
SphericalElement spherical(const SphericalElement &u, const SphericalElement &v);

// deg_x - deg_p shared by every monomial, or nullopt when the weights differ.
// Throws std::invalid_argument on the zero polynomial.
std::optional<int> weight(const MultiPoly &f);

} // namespace dwstar

#endif
