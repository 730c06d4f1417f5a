#include <dwstar/random.hpp>

#include <stdexcept>

namespace dwstar
{

long Rng::uniform(long lo, long hi)
{
    if (hi < lo) {
        throw std::invalid_argument("empty range");
    }
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

namespace
{

GaussianRational random_coeff(Rng &rng, const PolySpec &spec)
{
    while (true) {
        const long re = rng.uniform(-spec.coeff_bound, spec.coeff_bound);
        const long im = spec.gaussian ? rng.uniform(-spec.coeff_bound, spec.coeff_bound) : 0;
        if (re != 0 || im != 0) {
            return {Rational(re), Rational(im)};
        }
    }
}

MultiPoly random_poly_impl(Rng &rng, const PolySpec &spec, bool invariant_only)
{
    MultiPoly f;
    for (unsigned a = 0; a <= spec.max_degree; ++a) {
        for (unsigned b = 0; a + b <= spec.max_degree; ++b) {
            if (invariant_only && (a + b) % 2 == 1) {
                continue;
            }
            if (rng.chance(spec.density)) {
                f.add_term(Monomial{{kX, a}, {kP, b}}, random_coeff(rng, spec));
            }
        }
    }
    return f;
}

} // namespace

MultiPoly random_poly(Rng &rng, const PolySpec &spec)
{
    return random_poly_impl(rng, spec, false);
}

MultiPoly random_invariant_poly(Rng &rng, const PolySpec &spec)
{
    return random_poly_impl(rng, spec, true);
}

CrossedElement random_crossed(Rng &rng, const PolySpec &spec)
{
    MultiPoly plain = random_poly(rng, spec);
    MultiPoly gamma = random_poly(rng, spec);
    return {std::move(plain), std::move(gamma)};
}

Rational random_rational(Rng &rng, long num_bound, long den_bound, bool allow_zero)
{
    while (true) {
        const long num = rng.uniform(-num_bound, num_bound);
        if (num == 0 && !allow_zero) {
            continue;
        }
        const long den = rng.uniform(1, den_bound);
        return make_rational(num, den);
    }
}

} // namespace dwstar
