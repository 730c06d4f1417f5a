#ifndef DWSTAR_ORACLE_HPP
#define DWSTAR_ORACLE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <dwstar/dunkl.hpp>
#include <dwstar/multipoly.hpp>
#include <dwstar/star.hpp>

namespace dwstar
{

// Basis element X^a P^b G^e of the rank-one Cherednik algebra.
struct PbwIndex {
    unsigned x_power = 0;
    unsigned p_power = 0;
    bool gamma = false;

    friend auto operator<=>(const PbwIndex &, const PbwIndex &) = default;
};

// Element of the algebra generated by X, P = -i T_k and G subject to
//   PX - XP = -i(1 + 2kG),  GX = -XG,  GP = -PG,  G^2 = 1,
// written in the PBW basis with coefficients polynomial in k.
class NormalForm
{
public:
    using Terms = std::map<PbwIndex, MultiPoly>;

    NormalForm() = default;

    static NormalForm basis(PbwIndex index, MultiPoly coeff = MultiPoly(1));
    static NormalForm X() { return basis({1, 0, false}); }
    static NormalForm P() { return basis({0, 1, false}); }
    static NormalForm G() { return basis({0, 0, true}); }
    static NormalForm one() { return basis({0, 0, false}); }

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    MultiPoly coefficient(PbwIndex index) const;

    // coeff must be a polynomial in k only.
    void add_term(PbwIndex index, const MultiPoly &coeff);

    NormalForm &operator+=(const NormalForm &o);
    NormalForm &operator-=(const NormalForm &o);
    NormalForm &operator*=(const MultiPoly &scalar);

    friend NormalForm operator+(NormalForm a, const NormalForm &b) { return a += b; }
    friend NormalForm operator-(NormalForm a, const NormalForm &b) { return a -= b; }
    friend NormalForm operator*(NormalForm a, const MultiPoly &s) { return a *= s; }
    friend bool operator==(const NormalForm &, const NormalForm &) = default;

    std::string to_string() const;

private:
    Terms terms_;
};

NormalForm multiply(const NormalForm &left, const NormalForm &right);
inline NormalForm operator*(const NormalForm &a, const NormalForm &b)
{
    return multiply(a, b);
}

// Naive rewriting of a word over {X, P, G} by the four relations, choosing
// which misordered pair to rewrite next by the given strategy. Any strategy
// must land on the same normal form.
enum class RewriteOrder { leftmost, rightmost, random };
NormalForm reduce_word(std::string_view word, RewriteOrder order, std::uint64_t seed = 0);

// h1 -> 1, h2 -> k.
CrossedElement specialize(const CrossedElement &a);

// x^a p^b k^c -> k^c X^a P^b; the γ part gains G on the right.
// Components must be polynomials in x, p, k.
NormalForm from_symbol(const CrossedElement &a);

// Symbol pair per power of k, zero layers omitted.
using SymbolLayers = std::map<unsigned, CrossedElement>;
SymbolLayers to_symbol_layers(const NormalForm &n);

// Splits a specialized symbol (polynomial in x, p, k) by powers of k.
SymbolLayers split_layers(const CrossedElement &specialized);

// Action on polynomials in x: X multiplies, P = -i T_k, G reflects x.
MultiPoly apply(const NormalForm &n, const MultiPoly &g);

// Σ_α (1/α!) ∂_p^α a(x,0) [p1 - i∂_y - ik σ2 D~_y γ]^α b(y, p1)|_{y=x, p1=p},
// expanded word by word (3^α words per α) and split by powers of k.
SymbolLayers expansion_product(const MultiPoly &a, const MultiPoly &b);

// Signed multiplicity of each (D/D~ pattern, p1-power) among the 3^α words of
// [p1 + A + B]^α, after moving every p1 to the far left. Patterns are read in
// word order: y_0 counts the A letters before the first B. Words with two B
// letters not separated by an A are skipped (D~ o D~ = 0).
std::map<std::pair<Composition, unsigned>, Integer> word_census(unsigned alpha);

struct Mismatch {
    std::string route;  // "normal-form" or "expansion"
    unsigned layer = 0; // power of k (h2)
    bool gamma = false;
    MultiPoly expected; // from the closed-form star product
    MultiPoly actual;
    // Order in h1 of the offending terms; only meaningful for monomial inputs.
    std::vector<unsigned> j_values;
};

struct PairReport {
    SymbolLayers star_layers;
    std::vector<Mismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// Three-way comparison of the closed-form product, the Cherednik normal form
// and the word expansion, layer by layer.
PairReport verify_pair(const MultiPoly &a, const MultiPoly &b);

// Action of a normal form, with k specialized, on 1, x, ..., x^degree.
struct ActionSample {
    Rational k;
    std::vector<MultiPoly> images;
};

ActionSample sample_action(const NormalForm &n, const Rational &k, unsigned degree);

// Rebuilds a normal form from its action at several k values: an exact
// linear solve for each k followed by Lagrange interpolation in k. The samples
// must cover x^0 .. x^(2*max_p_power + 1) and the k-degree of the answer is at
// most samples.size() - 1. Throws std::domain_error if the data does not
// determine the coefficients.
NormalForm recover_from_action(std::span<const ActionSample> samples, unsigned max_p_power,
                               unsigned max_x_power);

} // namespace dwstar

#endif
