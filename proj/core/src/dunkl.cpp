#include <dwstar/dunkl.hpp>

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dwstar
{

namespace
{

void require_phase_var(VarId v, const char *what)
{
    if (v != kX && v != kP) {
        throw std::invalid_argument(std::string(what) + ": variable must be x or p");
    }
}

// Lexicographic enumeration of (y0..yn) with the given lower bounds and sum.
void enumerate_rec(std::vector<unsigned> &current, std::size_t pos, unsigned remaining, unsigned n,
                   std::vector<Composition> &out)
{
    if (pos == n) {
        current[pos] = remaining;
        out.emplace_back(current);
        return;
    }
    const unsigned lower = (pos == 0) ? 0 : 1;
    // Interior slots still to fill after this one each need at least 1.
    const unsigned interior_after = (pos + 1 < n) ? static_cast<unsigned>(n - pos - 1) : 0;
    if (remaining < lower + interior_after) {
        return;
    }
    for (unsigned y = lower; y + interior_after <= remaining; ++y) {
        current[pos] = y;
        enumerate_rec(current, pos + 1, remaining - y, n, out);
    }
}

} // namespace

MultiPoly d_tilde(const MultiPoly &f, VarId v)
{
    require_phase_var(v, "d_tilde");
    return divide_exact(f - reflect(f, {v}), MultiPoly::var(v));
}

MultiPoly dunkl(const MultiPoly &f, VarId v)
{
    require_phase_var(v, "dunkl");
    return differentiate(f, v) + MultiPoly::var(kK) * d_tilde(f, v);
}

MultiPoly delta(const MultiPoly &f, VarId v, VarId first, VarId second)
{
    if (second == v || second == first || f.depends_on(second)) {
        throw std::invalid_argument("delta: second output slot must be fresh");
    }
    if (first != v && f.depends_on(first)) {
        throw std::invalid_argument("delta: first output slot must be fresh or equal to the input variable");
    }
    const MultiPoly at_first = merge_var(f, v, first);
    const MultiPoly at_second = merge_var(f, v, second);
    return divide_exact(at_first - at_second, MultiPoly::var(first) - MultiPoly::var(second));
}

MultiPoly delta_iter(const MultiPoly &f, VarId v, unsigned r)
{
    if (r + 1 > kMaxAuxSlots) {
        throw std::invalid_argument("delta_iter: too many slots");
    }
    for (std::size_t s = 0; s < kMaxAuxSlots; ++s) {
        if (f.depends_on(VarId::aux(s))) {
            throw std::invalid_argument("delta_iter: input already uses auxiliary slots");
        }
    }
    const VarId head = VarId::aux(0);
    MultiPoly current = merge_var(f, v, head);
    for (unsigned s = 1; s <= r; ++s) {
        if (current.is_zero()) {
            break;
        }
        current = delta(current, head, head, VarId::aux(s));
    }
    return current;
}

MultiPoly delta_n(std::span<const MultiPoly> fs, std::span<const VarId> xs, std::span<const VarId> ys)
{
    const std::size_t n = fs.size();
    if (xs.size() != n || ys.size() != n) {
        throw std::invalid_argument("delta_n: need n functions, n x-variables and n y-variables");
    }
    MultiPoly result(1);
    for (std::size_t i = 0; i < n; ++i) {
        // Left point: y_1..y_{i-1}, x_i..x_n. Right point: y_1..y_i, x_{i+1}..x_n.
        MultiPoly left = fs[i];
        for (std::size_t t = 0; t < i; ++t) {
            left = merge_var(left, xs[t], ys[t]);
        }
        const MultiPoly right = merge_var(left, xs[i], ys[i]);
        result *= divide_exact(left - right, MultiPoly::var(xs[i]) - MultiPoly::var(ys[i]));
        if (result.is_zero()) {
            break;
        }
    }
    return result;
}

Composition::Composition(std::vector<unsigned> entries) : entries_(std::move(entries))
{
    if (entries_.empty()) {
        throw std::invalid_argument("composition needs at least one entry");
    }
    for (std::size_t i = 1; i + 1 < entries_.size(); ++i) {
        if (entries_[i] == 0) {
            throw std::invalid_argument("composition interior entries must be positive");
        }
    }
}

unsigned Composition::m() const
{
    return std::accumulate(entries_.begin(), entries_.end(), 0U);
}

Composition Composition::reversed() const
{
    return Composition(std::vector<unsigned>(entries_.rbegin(), entries_.rend()));
}

std::string Composition::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) {
            os << ',';
        }
        os << entries_[i];
    }
    os << ')';
    return os.str();
}

std::vector<Composition> enumerate_compositions(int m, int n)
{
    std::vector<Composition> out;
    if (m < 0 || n < 0 || (n >= 2 && m < n - 1)) {
        return out;
    }
    std::vector<unsigned> current(static_cast<std::size_t>(n) + 1, 0);
    enumerate_rec(current, 0, static_cast<unsigned>(m), static_cast<unsigned>(n), out);
    return out;
}

CompositionStats stats(const Composition &nu)
{
    CompositionStats s;
    const auto &y = nu.entries();
    s.lambda0 = y[0];
    for (std::size_t i = 1; i < y.size(); ++i) {
        (i % 2 == 0 ? s.lambda0 : s.lambda1) += y[i];
    }
    s.n0 = nu.n() / 2;
    s.n1 = nu.n() - s.n0;
    return s;
}

MultiPoly b_nu(const Composition &nu, const MultiPoly &f, VarId v)
{
    require_phase_var(v, "b_nu");
    const auto &y = nu.entries();
    MultiPoly g = differentiate(f, v, y[0]);
    for (std::size_t i = 1; i < y.size() && !g.is_zero(); ++i) {
        g = differentiate(d_tilde(g, v), v, y[i]);
    }
    return g;
}

MultiPoly a_nu(const Composition &nu, const MultiPoly &f, VarId v)
{
    require_phase_var(v, "a_nu");
    const unsigned r = nu.m() + nu.n();
    if (r > f.degree(v)) {
        return {};
    }
    const CompositionStats s = stats(nu);
    const unsigned positive = s.lambda0 + s.n0 + 1;
    MultiPoly g = delta_iter(f, v, r);
    for (unsigned slot = 0; slot <= r; ++slot) {
        g = merge_var(g, VarId::aux(slot), v, slot < positive ? 1 : -1);
    }
    return g;
}

Integer c_nu(const Composition &nu, long s)
{
    if (s < 0) {
        throw std::invalid_argument("c_nu: s must be non-negative");
    }
    const CompositionStats st = stats(nu);
    const unsigned long minus_power = st.lambda0 + st.n0 + 1; // (1-t)^-a
    const unsigned long plus_power = st.lambda1 + st.n1;      // (1+t)^-b
    const auto len = static_cast<std::size_t>(s) + 1;

    // (1-t)^-a = sum C(a-1+u, u) t^u ; (1+t)^-b = sum (-1)^u C(b-1+u, u) t^u, or 1 when b = 0.
    std::vector<Integer> left(len), right(len);
    for (std::size_t u = 0; u < len; ++u) {
        left[u] = binomial(minus_power - 1 + u, u);
        if (plus_power == 0) {
            right[u] = (u == 0) ? 1 : 0;
        } else {
            right[u] = binomial(plus_power - 1 + u, u);
            if (u % 2 == 1) {
                right[u] = -right[u];
            }
        }
    }
    Integer coeff = 0;
    for (std::size_t u = 0; u < len; ++u) {
        coeff += left[u] * right[len - 1 - u];
    }
    return coeff;
}

} // namespace dwstar
