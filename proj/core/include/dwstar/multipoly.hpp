#ifndef DWSTAR_MULTIPOLY_HPP
#define DWSTAR_MULTIPOLY_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <dwstar/gaussian_rational.hpp>

namespace dwstar
{

// Named variables occupy the first five slots of a fixed global order; the
// remaining slots are auxiliary divided-difference variables q0, q1, ...
inline constexpr std::size_t kMaxVars = 24;
inline constexpr std::size_t kNamedVars = 5;
inline constexpr std::size_t kMaxAuxSlots = kMaxVars - kNamedVars;

struct UnknownVariable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotDivisible : std::domain_error {
    using std::domain_error::domain_error;
};

class VarId
{
public:
    constexpr explicit VarId(std::size_t index) : index_(static_cast<std::uint8_t>(index))
    {
        if (index >= kMaxVars) {
            throw UnknownVariable("variable index out of range");
        }
    }

    static constexpr VarId aux(std::size_t slot)
    {
        if (slot >= kMaxAuxSlots) {
            throw UnknownVariable("auxiliary slot out of range");
        }
        return VarId(kNamedVars + slot);
    }

    // Accepts x, p, k, h1, h2 and q<N>.
    static VarId from_name(std::string_view name);

    constexpr std::size_t index() const { return index_; }
    constexpr bool is_aux() const { return index_ >= kNamedVars; }
    std::string name() const;

    friend constexpr auto operator<=>(VarId, VarId) = default;

private:
    std::uint8_t index_;
};

inline constexpr VarId kX{0};
inline constexpr VarId kP{1};
inline constexpr VarId kK{2};
inline constexpr VarId kH1{3};
inline constexpr VarId kH2{4};

// Exponent vector indexed by VarId.
class Monomial
{
public:
    using Exponent = std::uint8_t;

    Monomial() = default;
    Monomial(std::initializer_list<std::pair<VarId, unsigned>> powers);

    unsigned exponent(VarId v) const { return exps_[v.index()]; }
    void set_exponent(VarId v, unsigned e);
    unsigned total_degree() const;
    bool is_one() const;

    bool divides(const Monomial &other) const;
    // Precondition: divides(other).
    Monomial quotient_of(const Monomial &other) const;

    friend Monomial operator*(const Monomial &a, const Monomial &b);
    friend auto operator<=>(const Monomial &, const Monomial &) = default;

private:
    std::array<Exponent, kMaxVars> exps_{};
};

// Sparse polynomial over GaussianRational. Terms are keyed by exponent vector
// and zero coefficients are never stored.
class MultiPoly
{
public:
    using Terms = std::map<Monomial, GaussianRational>;

    MultiPoly() = default;
    MultiPoly(GaussianRational c);
    MultiPoly(long c) : MultiPoly(GaussianRational(c)) {}

    static MultiPoly var(VarId v, unsigned power = 1);
    static MultiPoly term(const Monomial &m, GaussianRational c);

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // Largest exponent of v over all terms; 0 for the zero polynomial.
    unsigned degree(VarId v) const;
    unsigned total_degree() const;
    bool depends_on(VarId v) const { return degree(v) > 0; }
    // True when every variable with a nonzero exponent is in `allowed`.
    bool only_uses(std::initializer_list<VarId> allowed) const;

    GaussianRational coefficient(const Monomial &m) const;
    // Coefficient of v^power viewed as a polynomial in v.
    MultiPoly coefficient_in(VarId v, unsigned power) const;

    void add_term(const Monomial &m, const GaussianRational &c);

    MultiPoly operator-() const;
    MultiPoly &operator+=(const MultiPoly &o);
    MultiPoly &operator-=(const MultiPoly &o);
    MultiPoly &operator*=(const MultiPoly &o);
    MultiPoly &operator*=(const GaussianRational &c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
    friend MultiPoly operator*(MultiPoly a, const GaussianRational &c) { return a *= c; }
    friend MultiPoly operator*(const GaussianRational &c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(MultiPoly a, long c) { return a *= GaussianRational(c); }
    friend MultiPoly operator*(long c, MultiPoly a) { return a *= GaussianRational(c); }
    friend bool operator==(const MultiPoly &, const MultiPoly &) = default;

    // Debug rendering; the CLI has its own canonical formatter.
    std::string to_string() const;

private:
    Terms terms_;
};

MultiPoly pow(const MultiPoly &f, unsigned e);

// Formal partial derivative.
MultiPoly differentiate(const MultiPoly &f, VarId v, unsigned times = 1);

// Substitutes v -> -v for every listed variable.
MultiPoly reflect(const MultiPoly &f, std::span<const VarId> flipped);
MultiPoly reflect(const MultiPoly &f, std::initializer_list<VarId> flipped);

// Replaces v by the polynomial g.
MultiPoly substitute(const MultiPoly &f, VarId v, const MultiPoly &g);
// Replaces v by sign*to; `to` may already occur in f.
MultiPoly merge_var(const MultiPoly &f, VarId from, VarId to, int sign = 1);
MultiPoly evaluate(const MultiPoly &f, VarId v, const GaussianRational &value);

// Quotient q with q*g == f. Throws NotDivisible when g does not divide f
// and std::domain_error when g is zero.
MultiPoly divide_exact(const MultiPoly &f, const MultiPoly &g);

} // namespace dwstar

#endif
