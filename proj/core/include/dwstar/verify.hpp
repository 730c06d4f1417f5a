#ifndef DWSTAR_VERIFY_HPP
#define DWSTAR_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <dwstar/oracle.hpp>
#include <dwstar/star.hpp>

namespace dwstar
{

struct AssocFailure {
    unsigned trial = 0;
    CrossedElement a, b, c;
    CrossedElement left;  // (a ⋆ b) ⋆ c
    CrossedElement right; // a ⋆ (b ⋆ c)
};

struct AssocReport {
    std::uint64_t seed = 0;
    unsigned trials_run = 0;
    std::optional<AssocFailure> failure;
    bool ok() const { return !failure.has_value(); }
};

// Random triples with component degree <= degree and Gaussian-integer
// coefficients in [-5, 5]. Stops at the first failing trial.
AssocReport verify_associativity(unsigned trials, unsigned degree, std::uint64_t seed);

struct SweepFailure {
    MultiPoly a, b;
    PairReport report;
};

struct SweepReport {
    unsigned pairs_checked = 0;
    std::vector<SweepFailure> failures;
    bool ok() const { return failures.empty(); }
};

// verify_pair on every x^a p^b × x^c p^d with a, b, c, d <= max_degree.
SweepReport verify_oracle_sweep(unsigned max_degree);

} // namespace dwstar

#endif
