#include <dwstar/verify.hpp>

#include <dwstar/random.hpp>

namespace dwstar
{

AssocReport verify_associativity(unsigned trials, unsigned degree, std::uint64_t seed)
{
    AssocReport report;
    report.seed = seed;
    Rng rng(seed);
    const PolySpec spec{degree, 5, true, 60};
    for (unsigned t = 0; t < trials; ++t) {
        CrossedElement a = random_crossed(rng, spec);
        CrossedElement b = random_crossed(rng, spec);
        CrossedElement c = random_crossed(rng, spec);
        CrossedElement left = star(star(a, b), c);
        CrossedElement right = star(a, star(b, c));
        ++report.trials_run;
        if (left != right) {
            report.failure = AssocFailure{t, std::move(a), std::move(b), std::move(c), std::move(left), std::move(right)};
            break;
        }
    }
    return report;
}

SweepReport verify_oracle_sweep(unsigned max_degree)
{
    SweepReport report;
    for (unsigned a = 0; a <= max_degree; ++a) {
        for (unsigned b = 0; b <= max_degree; ++b) {
            const MultiPoly left = MultiPoly::term(Monomial{{kX, a}, {kP, b}}, GaussianRational(1));
            for (unsigned c = 0; c <= max_degree; ++c) {
                for (unsigned d = 0; d <= max_degree; ++d) {
                    const MultiPoly right = MultiPoly::term(Monomial{{kX, c}, {kP, d}}, GaussianRational(1));
                    PairReport pair = verify_pair(left, right);
                    ++report.pairs_checked;
                    if (!pair.ok()) {
                        report.failures.push_back({left, right, std::move(pair)});
                    }
                }
            }
        }
    }
    return report;
}

} // namespace dwstar
