#include <dwstar/star.hpp>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include <dwstar/dunkl.hpp>

namespace dwstar
{

namespace
{

void require_phase_space(const MultiPoly &f, const char *what)
{
    if (!f.only_uses({kX, kP})) {
        throw std::invalid_argument(std::string(what) + ": inputs must be polynomials in x and p");
    }
}

MultiPoly bilinear_term(unsigned j, unsigned l, const MultiPoly &a, const MultiPoly &b, bool twisted)
{
    if (l > j) {
        return {};
    }
    MultiPoly sum;
    for (const Composition &nu : enumerate_compositions(static_cast<int>(j - l), static_cast<int>(l))) {
        MultiPoly left = a_nu(nu, a, kP);
        if (left.is_zero()) {
            continue;
        }
        MultiPoly right = b_nu(nu.reversed(), b, kX);
        if (right.is_zero()) {
            continue;
        }
        if (twisted) {
            right = reflect(right, {kP});
        }
        sum += left * right;
    }
    sum *= GaussianRational::i_pow(-static_cast<long>(j));
    return sum;
}

// Σ_{j,l} h1^j h2^l C^i_{j,l}(p^a, x^b) for i = 0, 1.
struct Kernel {
    MultiPoly plain;
    MultiPoly gamma;
};

Kernel compute_kernel(unsigned p_power, unsigned x_power)
{
    const MultiPoly a = MultiPoly::var(kP, p_power);
    const MultiPoly b = MultiPoly::var(kX, x_power);
    Kernel k;
    const unsigned jmax = std::min(p_power, x_power);
    for (unsigned j = 0; j <= jmax; ++j) {
        for (unsigned l = 0; l <= j; ++l) {
            MultiPoly term = (l % 2 == 0) ? c0(j, l, a, b) : c1(j, l, a, b);
            if (term.is_zero()) {
                continue;
            }
            term *= MultiPoly::term(Monomial{{kH1, j}, {kH2, l}}, GaussianRational(1));
            (l % 2 == 0 ? k.plain : k.gamma) += term;
        }
    }
    return k;
}

// Kernels depend only on two exponents and are reused across products.
const Kernel &kernel(unsigned p_power, unsigned x_power)
{
    static std::mutex mutex;
    static std::map<std::pair<unsigned, unsigned>, Kernel> cache;
    const auto key = std::make_pair(p_power, x_power);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) {
            return it->second;
        }
    }
    Kernel computed = compute_kernel(p_power, x_power);
    std::lock_guard lock(mutex);
    return cache.try_emplace(key, std::move(computed)).first->second;
}

void add_shifted(MultiPoly &target, const MultiPoly &source, const Monomial &shift, const GaussianRational &scale)
{
    for (const auto &[m, c] : source.terms()) {
        target.add_term(m * shift, c * scale);
    }
}

} // namespace

CrossedElement CrossedElement::projector()
{
    const GaussianRational half(Rational(1, 2));
    return {MultiPoly(half), MultiPoly(half)};
}

CrossedElement &CrossedElement::operator+=(const CrossedElement &o)
{
    plain += o.plain;
    gamma += o.gamma;
    return *this;
}

CrossedElement &CrossedElement::operator-=(const CrossedElement &o)
{
    plain -= o.plain;
    gamma -= o.gamma;
    return *this;
}

CrossedElement &CrossedElement::operator*=(const GaussianRational &c)
{
    plain *= c;
    gamma *= c;
    return *this;
}

std::string CrossedElement::to_string() const
{
    return plain.to_string() + " + (" + gamma.to_string() + ")*gamma";
}

MultiPoly gamma_twist(const MultiPoly &f)
{
    return reflect(f, {kX, kP});
}

CrossedElement gamma_twist(const CrossedElement &a)
{
    return {gamma_twist(a.plain), gamma_twist(a.gamma)};
}

MultiPoly c0(unsigned j, unsigned l, const MultiPoly &a, const MultiPoly &b)
{
    require_phase_space(a, "c0");
    require_phase_space(b, "c0");
    if (l % 2 == 1) {
        return {};
    }
    return bilinear_term(j, l, a, b, false);
}

MultiPoly c1(unsigned j, unsigned l, const MultiPoly &a, const MultiPoly &b)
{
    require_phase_space(a, "c1");
    require_phase_space(b, "c1");
    if (l % 2 == 0) {
        return {};
    }
    return bilinear_term(j, l, a, b, true);
}

CrossedElement star(const MultiPoly &a, const MultiPoly &b)
{
    if (!a.only_uses({kX, kP, kH1, kH2}) || !b.only_uses({kX, kP, kH1, kH2})) {
        throw std::invalid_argument("star: components must be polynomials in x, p, h1, h2");
    }
    CrossedElement result;
    for (const auto &[ma, ca] : a.terms()) {
        for (const auto &[mb, cb] : b.terms()) {
            // x^{ax} p^{ap} ⋆ x^{bx} p^{bp} = x^{ax} K(ap, bx) p^{bp}, with p -> -p on the γ part.
            const unsigned bp = mb.exponent(kP);
            const Kernel &k = kernel(ma.exponent(kP), mb.exponent(kX));
            Monomial shift = ma * mb;
            shift.set_exponent(kP, bp);
            shift.set_exponent(kX, ma.exponent(kX));
            const GaussianRational scale = ca * cb;
            add_shifted(result.plain, k.plain, shift, scale);
            add_shifted(result.gamma, k.gamma, shift, (bp % 2 == 1) ? -scale : scale);
        }
    }
    return result;
}

CrossedElement star(const CrossedElement &a, const CrossedElement &b)
{
    CrossedElement result;
    if (!a.plain.is_zero()) {
        if (!b.plain.is_zero()) {
            result += star(a.plain, b.plain);
        }
        if (!b.gamma.is_zero()) {
            const CrossedElement s = star(a.plain, b.gamma);
            result += CrossedElement(s.gamma, s.plain);
        }
    }
    if (!a.gamma.is_zero()) {
        if (!b.plain.is_zero()) {
            const CrossedElement s = star(a.gamma, gamma_twist(b.plain));
            result += CrossedElement(s.gamma, s.plain);
        }
        if (!b.gamma.is_zero()) {
            result += star(a.gamma, gamma_twist(b.gamma));
        }
    }
    return result;
}

MultiPoly moyal(const MultiPoly &a, const MultiPoly &b)
{
    const unsigned jmax = std::min(a.degree(kP), b.degree(kX));
    MultiPoly sum;
    for (unsigned j = 0; j <= jmax; ++j) {
        const GaussianRational scale =
            GaussianRational::i_pow(-static_cast<long>(j)) / GaussianRational(Rational(factorial(j)));
        sum += differentiate(a, kP, j) * differentiate(b, kX, j) * MultiPoly::var(kH1, j) * scale;
    }
    return sum;
}

CrossedElement commutator(const CrossedElement &a, const CrossedElement &b)
{
    return star(a, b) - star(b, a);
}

SphericalElement::SphericalElement(MultiPoly value) : value_(std::move(value))
{
    if (gamma_twist(value_) != value_) {
        throw std::invalid_argument("spherical element must be invariant under (x,p) -> (-x,-p)");
    }
}

CrossedElement SphericalElement::embed() const
{
    return star(CrossedElement(value_), CrossedElement::projector());
}

SphericalElement spherical(const SphericalElement &u, const SphericalElement &v)
{
    const CrossedElement s = star(u.value(), v.value());
    return SphericalElement(s.plain + s.gamma);
}

std::optional<int> weight(const MultiPoly &f)
{
    if (f.is_zero()) {
        throw std::invalid_argument("weight of the zero polynomial");
    }
    std::optional<int> common;
    for (const auto &[m, c] : f.terms()) {
        const int w = static_cast<int>(m.exponent(kX)) - static_cast<int>(m.exponent(kP));
        if (common && *common != w) {
            return std::nullopt;
        }
        common = w;
    }
    return common;
}

} // namespace dwstar
