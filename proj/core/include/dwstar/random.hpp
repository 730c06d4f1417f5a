#ifndef DWSTAR_RANDOM_HPP
#define DWSTAR_RANDOM_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

#include <dwstar/multipoly.hpp>
#include <dwstar/star.hpp>

namespace dwstar
{

// Seeded generator whose draws depend only on the seed (no distribution
// objects, whose output is implementation-defined), so failures replay exactly.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    // Uniform in [lo, hi].
    long uniform(long lo, long hi);
    bool chance(unsigned percent) { return uniform(0, 99) < percent; }

private:
    std::mt19937_64 engine_;
};

struct PolySpec {
    unsigned max_degree = 4; // total degree in x and p
    long coeff_bound = 5;    // real and imaginary parts in [-bound, bound]
    bool gaussian = true;    // allow imaginary parts
    unsigned density = 60;   // percent chance that each monomial is present
};

// Random polynomial in x and p.
MultiPoly random_poly(Rng &rng, const PolySpec &spec);
// Keeps only monomials of even total degree, i.e. invariant under (x,p) -> (-x,-p).
MultiPoly random_invariant_poly(Rng &rng, const PolySpec &spec);
CrossedElement random_crossed(Rng &rng, const PolySpec &spec);

Rational random_rational(Rng &rng, long num_bound, long den_bound, bool allow_zero);

} // namespace dwstar

#endif
