#ifndef DWSTAR_DUNKL_HPP
#define DWSTAR_DUNKL_HPP

#include <compare>
#include <span>
#include <string>
#include <vector>

#include <dwstar/multipoly.hpp>

namespace dwstar
{

// (f(v) - f(-v)) / v. v must be x or p.
MultiPoly d_tilde(const MultiPoly &f, VarId v);

// Rank-one Dunkl operator T_k = d/dv + k*d_tilde, with k the polynomial variable kK.
MultiPoly dunkl(const MultiPoly &f, VarId v);

// Divided difference (f(s) - f(t)) / (s - t) where f(s) means v -> s.
// `second` must not occur in f; `first` may be v itself.
MultiPoly delta(const MultiPoly &f, VarId v, VarId first, VarId second);

// r-fold iterate of delta, always splitting the first slot. The result lives
// in auxiliary slots q0..qr and is symmetric in them. f must not already use
// auxiliary slots.
MultiPoly delta_iter(const MultiPoly &f, VarId v, unsigned r);

// Telescoping divided difference of n functions of n variables:
//   prod_i (f_i(y_1..y_{i-1}, x_i, ..x_n) - f_i(y_1..y_i, x_{i+1}..x_n)) / (x_i - y_i).
MultiPoly delta_n(std::span<const MultiPoly> fs, std::span<const VarId> xs, std::span<const VarId> ys);

// Tuple (y0, ..., yn) with y0, yn >= 0, interior entries >= 1.
class Composition
{
public:
    Composition() = default;
    // Throws std::invalid_argument when an interior entry is zero or the tuple is empty.
    explicit Composition(std::vector<unsigned> entries);

    const std::vector<unsigned> &entries() const { return entries_; }
    unsigned m() const;
    unsigned n() const { return static_cast<unsigned>(entries_.size()) - 1; }
    Composition reversed() const;
    std::string to_string() const;

    friend auto operator<=>(const Composition &, const Composition &) = default;

private:
    std::vector<unsigned> entries_{0};
};

struct CompositionStats {
    unsigned lambda0 = 0; // y0 + sum of y_i over even i > 0
    unsigned lambda1 = 0; // sum of y_i over odd i
    unsigned n0 = 0;      // number of positive even integers <= n
    unsigned n1 = 0;      // number of positive odd integers <= n

    friend bool operator==(const CompositionStats &, const CompositionStats &) = default;
};

// All of P_{m,n} in lexicographic order; empty when infeasible.
std::vector<Composition> enumerate_compositions(int m, int n);

CompositionStats stats(const Composition &nu);

// D^{y_n} o D~ o ... o D^{y_1} o D~ o D^{y_0}, applied starting from D^{y_0}.
MultiPoly b_nu(const Composition &nu, const MultiPoly &f, VarId v);

// delta_iter(f, v, m+n) with lambda0+n0+1 slots at v and lambda1+n1 slots at -v.
MultiPoly a_nu(const Composition &nu, const MultiPoly &f, VarId v);

// Coefficient of t^s in 1 / ((1-t)^(lambda0+n0+1) (1+t)^(lambda1+n1)).
// Throws std::invalid_argument for negative s.
Integer c_nu(const Composition &nu, long s);

} // namespace dwstar

#endif
