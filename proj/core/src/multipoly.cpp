#include <dwstar/multipoly.hpp>

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <vector>

namespace dwstar
{

namespace
{

constexpr std::array<std::string_view, kNamedVars> kNames{"x", "p", "k", "h1", "h2"};

Monomial::Exponent checked_exponent(unsigned e)
{
    if (e > std::numeric_limits<Monomial::Exponent>::max()) {
        throw std::overflow_error("monomial exponent overflow");
    }
    return static_cast<Monomial::Exponent>(e);
}

} // namespace

VarId VarId::from_name(std::string_view name)
{
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == name) {
            return VarId(i);
        }
    }
    if (name.size() > 1 && name.front() == 'q') {
        std::size_t slot = 0;
        const auto *first = name.data() + 1;
        const auto *last = name.data() + name.size();
        auto [ptr, ec] = std::from_chars(first, last, slot);
        if (ec == std::errc{} && ptr == last && slot < kMaxAuxSlots) {
            return aux(slot);
        }
    }
    throw UnknownVariable("unknown variable '" + std::string(name) + "'");
}

std::string VarId::name() const
{
    if (index_ < kNamedVars) {
        return std::string(kNames[index_]);
    }
    return "q" + std::to_string(index_ - kNamedVars);
}

Monomial::Monomial(std::initializer_list<std::pair<VarId, unsigned>> powers)
{
    for (const auto &[v, e] : powers) {
        exps_[v.index()] = checked_exponent(exps_[v.index()] + e);
    }
}

void Monomial::set_exponent(VarId v, unsigned e)
{
    exps_[v.index()] = checked_exponent(e);
}

unsigned Monomial::total_degree() const
{
    unsigned d = 0;
    for (auto e : exps_) {
        d += e;
    }
    return d;
}

bool Monomial::is_one() const
{
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial &other) const
{
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (exps_[i] > other.exps_[i]) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::quotient_of(const Monomial &other) const
{
    Monomial q;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        q.exps_[i] = static_cast<Exponent>(other.exps_[i] - exps_[i]);
    }
    return q;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        r.exps_[i] = checked_exponent(unsigned{a.exps_[i]} + b.exps_[i]);
    }
    return r;
}

MultiPoly::MultiPoly(GaussianRational c)
{
    if (!c.is_zero()) {
        terms_.emplace(Monomial{}, std::move(c));
    }
}

MultiPoly MultiPoly::var(VarId v, unsigned power)
{
    return term(Monomial{{v, power}}, GaussianRational(1));
}

MultiPoly MultiPoly::term(const Monomial &m, GaussianRational c)
{
    MultiPoly f;
    if (!c.is_zero()) {
        f.terms_.emplace(m, std::move(c));
    }
    return f;
}

unsigned MultiPoly::degree(VarId v) const
{
    unsigned d = 0;
    for (const auto &[m, c] : terms_) {
        d = std::max(d, m.exponent(v));
    }
    return d;
}

unsigned MultiPoly::total_degree() const
{
    unsigned d = 0;
    for (const auto &[m, c] : terms_) {
        d = std::max(d, m.total_degree());
    }
    return d;
}

bool MultiPoly::only_uses(std::initializer_list<VarId> allowed) const
{
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        const VarId v(i);
        if (std::find(allowed.begin(), allowed.end(), v) == allowed.end() && depends_on(v)) {
            return false;
        }
    }
    return true;
}

GaussianRational MultiPoly::coefficient(const Monomial &m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
}

MultiPoly MultiPoly::coefficient_in(VarId v, unsigned power) const
{
    MultiPoly r;
    for (const auto &[m, c] : terms_) {
        if (m.exponent(v) == power) {
            Monomial reduced = m;
            reduced.set_exponent(v, 0);
            r.terms_.emplace(reduced, c);
        }
    }
    return r;
}

void MultiPoly::add_term(const Monomial &m, const GaussianRational &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto &[m, c] : r.terms_) {
        c = -c;
    }
    return r;
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o)
{
    for (const auto &[m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o)
{
    for (const auto &[m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b)
{
    MultiPoly r;
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

MultiPoly &MultiPoly::operator*=(const MultiPoly &o)
{
    *this = *this * o;
    return *this;
}

MultiPoly &MultiPoly::operator*=(const GaussianRational &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << it->second;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            const unsigned e = it->first.exponent(VarId(i));
            if (e > 0) {
                os << '*' << VarId(i).name();
                if (e > 1) {
                    os << '^' << e;
                }
            }
        }
    }
    return os.str();
}

MultiPoly pow(const MultiPoly &f, unsigned e)
{
    MultiPoly result(1);
    MultiPoly base = f;
    while (e > 0) {
        if (e & 1U) {
            result *= base;
        }
        e >>= 1U;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

MultiPoly differentiate(const MultiPoly &f, VarId v, unsigned times)
{
    MultiPoly r;
    for (const auto &[m, c] : f.terms()) {
        const unsigned e = m.exponent(v);
        if (e < times) {
            continue;
        }
        Integer falling = 1;
        for (unsigned t = 0; t < times; ++t) {
            falling *= e - t;
        }
        Monomial dm = m;
        dm.set_exponent(v, e - times);
        r.add_term(dm, c * GaussianRational(Rational(falling)));
    }
    return r;
}

MultiPoly reflect(const MultiPoly &f, std::span<const VarId> flipped)
{
    MultiPoly r;
    for (const auto &[m, c] : f.terms()) {
        unsigned parity = 0;
        for (VarId v : flipped) {
            parity += m.exponent(v);
        }
        r.add_term(m, (parity & 1U) ? -c : c);
    }
    return r;
}

MultiPoly reflect(const MultiPoly &f, std::initializer_list<VarId> flipped)
{
    return reflect(f, std::span<const VarId>(flipped.begin(), flipped.size()));
}

MultiPoly substitute(const MultiPoly &f, VarId v, const MultiPoly &g)
{
    const unsigned deg = f.degree(v);
    MultiPoly r;
    MultiPoly power(1);
    for (unsigned e = 0; e <= deg; ++e) {
        if (e > 0) {
            power *= g;
        }
        MultiPoly coeff = f.coefficient_in(v, e);
        if (!coeff.is_zero()) {
            r += coeff * power;
        }
    }
    return r;
}

MultiPoly merge_var(const MultiPoly &f, VarId from, VarId to, int sign)
{
    if (from == to) {
        return sign < 0 ? reflect(f, {from}) : f;
    }
    MultiPoly r;
    for (const auto &[m, c] : f.terms()) {
        const unsigned e = m.exponent(from);
        Monomial moved = m;
        moved.set_exponent(from, 0);
        moved.set_exponent(to, m.exponent(to) + e);
        r.add_term(moved, (sign < 0 && (e & 1U)) ? -c : c);
    }
    return r;
}

MultiPoly evaluate(const MultiPoly &f, VarId v, const GaussianRational &value)
{
    return substitute(f, v, MultiPoly(value));
}

MultiPoly divide_exact(const MultiPoly &f, const MultiPoly &g)
{
    if (g.is_zero()) {
        throw std::domain_error("division by the zero polynomial");
    }
    // Lex-leading term is the last map entry. Exact divisibility means every
    // intermediate remainder is a multiple of g, so the first leading term not
    // divisible by lt(g) proves that g does not divide f.
    const auto &[lead_mono, lead_coeff] = *g.terms().rbegin();
    const GaussianRational lead_inv = lead_coeff.inverse();
    MultiPoly remainder = f;
    MultiPoly quotient;
    while (!remainder.is_zero()) {
        const auto &[rm, rc] = *remainder.terms().rbegin();
        if (!lead_mono.divides(rm)) {
            throw NotDivisible("polynomial is not divisible by " + g.to_string());
        }
        const MultiPoly step = MultiPoly::term(lead_mono.quotient_of(rm), rc * lead_inv);
        quotient += step;
        remainder -= step * g;
    }
    return quotient;
}

} // namespace dwstar
