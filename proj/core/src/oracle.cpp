#include <dwstar/oracle.hpp>

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dwstar
{

namespace
{

using MonoKey = std::array<unsigned, 6>;

const MultiPoly &k_var()
{
    static const MultiPoly k = MultiPoly::var(kK);
    return k;
}

// X^a P^b G^e * X^c P^d G^f, memoized within one multiply() call.
NormalForm mono_product(const MonoKey &key, std::map<MonoKey, NormalForm> &memo)
{
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    const auto [a, b, e, c, d, f] = key;
    NormalForm result;
    if (e != 0) {
        // G X^c P^d G^f = (-1)^{c+d} X^c P^d G^{1+f}
        result = mono_product({a, b, 0, c, d, 1 - f}, memo);
        if ((c + d) % 2 == 1) {
            result *= MultiPoly(-1);
        }
    } else if (b == 0 || c == 0) {
        result = NormalForm::basis({a + c, b + d, f != 0});
    } else {
        // P X^c = X^c P - i c X^{c-1} - 2ik [c odd] X^{c-1} G
        result = mono_product({a, b - 1, 0, c, d + 1, f}, memo);
        NormalForm lower = mono_product({a, b - 1, 0, c - 1, d, f}, memo);
        lower *= MultiPoly(GaussianRational(Rational(0), Rational(-static_cast<long>(c))));
        result += lower;
        if (c % 2 == 1) {
            // X^{c-1} G P^d G^f = (-1)^d X^{c-1} P^d G^{f+1}
            NormalForm flip = mono_product({a, b - 1, 0, c - 1, d, 1 - f}, memo);
            const long sign = (d % 2 == 1) ? 2 : -2;
            flip *= k_var() * GaussianRational(Rational(0), Rational(sign));
            result += flip;
        }
    }
    memo.emplace(key, result);
    return result;
}

bool is_normal_word(std::string_view w)
{
    std::size_t i = 0;
    while (i < w.size() && w[i] == 'X') {
        ++i;
    }
    while (i < w.size() && w[i] == 'P') {
        ++i;
    }
    if (i < w.size() && w[i] == 'G') {
        ++i;
    }
    return i == w.size();
}

std::vector<std::size_t> redexes(std::string_view w)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const char l = w[i];
        const char r = w[i + 1];
        if ((l == 'P' && r == 'X') || (l == 'G' && (r == 'X' || r == 'P' || r == 'G'))) {
            out.push_back(i);
        }
    }
    return out;
}

// Gaussian elimination over GaussianRational; throws if the columns are dependent
// or the system is inconsistent.
std::vector<GaussianRational> solve_exact(std::vector<std::vector<GaussianRational>> rows,
                                          std::vector<GaussianRational> rhs)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            throw std::domain_error("action data does not determine the normal form");
        }
        std::swap(rows[pivot], rows[rank]);
        std::swap(rhs[pivot], rhs[rank]);
        const GaussianRational inv = rows[rank][col].inverse();
        for (std::size_t c = col; c < cols; ++c) {
            rows[rank][c] *= inv;
        }
        rhs[rank] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) {
                continue;
            }
            const GaussianRational factor = rows[r][col];
            for (std::size_t c = col; c < cols; ++c) {
                rows[r][c] -= factor * rows[rank][c];
            }
            rhs[r] -= factor * rhs[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r) {
        if (!rhs[r].is_zero()) {
            throw std::domain_error("action data is inconsistent with any normal form in range");
        }
    }
    return {rhs.begin(), rhs.begin() + static_cast<std::ptrdiff_t>(cols)};
}

// Coefficient of x^{d-b} in (-i T_k)^b x^d.
GaussianRational lowering_factor(unsigned d, unsigned b, const Rational &k)
{
    if (b > d) {
        return {};
    }
    GaussianRational f = GaussianRational::i_pow(-static_cast<long>(b));
    for (unsigned t = 0; t < b; ++t) {
        const unsigned m = d - t;
        f *= GaussianRational(Rational(m) + ((m % 2 == 1) ? Rational(2) * k : Rational(0)));
    }
    return f;
}

} // namespace

NormalForm NormalForm::basis(PbwIndex index, MultiPoly coeff)
{
    NormalForm n;
    n.add_term(index, coeff);
    return n;
}

MultiPoly NormalForm::coefficient(PbwIndex index) const
{
    auto it = terms_.find(index);
    return it == terms_.end() ? MultiPoly() : it->second;
}

void NormalForm::add_term(PbwIndex index, const MultiPoly &coeff)
{
    if (!coeff.only_uses({kK})) {
        throw std::invalid_argument("normal form coefficients must be polynomials in k");
    }
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(index, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

NormalForm &NormalForm::operator+=(const NormalForm &o)
{
    for (const auto &[idx, c] : o.terms_) {
        add_term(idx, c);
    }
    return *this;
}

NormalForm &NormalForm::operator-=(const NormalForm &o)
{
    for (const auto &[idx, c] : o.terms_) {
        add_term(idx, -c);
    }
    return *this;
}

NormalForm &NormalForm::operator*=(const MultiPoly &scalar)
{
    Terms scaled;
    for (auto &[idx, c] : terms_) {
        MultiPoly s = c * scalar;
        if (!s.is_zero()) {
            scaled.emplace(idx, std::move(s));
        }
    }
    terms_ = std::move(scaled);
    return *this;
}

std::string NormalForm::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[idx, c] : terms_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << '(' << c.to_string() << ")*X^" << idx.x_power << "*P^" << idx.p_power << (idx.gamma ? "*G" : "");
    }
    return os.str();
}

NormalForm multiply(const NormalForm &left, const NormalForm &right)
{
    std::map<MonoKey, NormalForm> memo;
    NormalForm result;
    for (const auto &[li, lc] : left.terms()) {
        for (const auto &[ri, rc] : right.terms()) {
            NormalForm piece = mono_product(
                {li.x_power, li.p_power, li.gamma ? 1U : 0U, ri.x_power, ri.p_power, ri.gamma ? 1U : 0U}, memo);
            piece *= lc * rc;
            result += piece;
        }
    }
    return result;
}

NormalForm reduce_word(std::string_view word, RewriteOrder order, std::uint64_t seed)
{
    for (char c : word) {
        if (c != 'X' && c != 'P' && c != 'G') {
            throw std::invalid_argument("words are built from the letters X, P, G");
        }
    }
    std::mt19937_64 rng(seed);
    std::map<std::string, MultiPoly> pending{{std::string(word), MultiPoly(1)}};
    std::map<std::string, MultiPoly> done;
    auto accumulate = [](std::map<std::string, MultiPoly> &into, std::string w, const MultiPoly &c) {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = into.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                into.erase(it);
            }
        }
    };
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const std::string w = node.key();
        const MultiPoly c = node.mapped();
        if (is_normal_word(w)) {
            accumulate(done, w, c);
            continue;
        }
        const std::vector<std::size_t> spots = redexes(w);
        std::size_t pos = spots.front();
        if (order == RewriteOrder::rightmost) {
            pos = spots.back();
        } else if (order == RewriteOrder::random) {
            pos = spots[rng() % spots.size()];
        }
        const std::string head = w.substr(0, pos);
        const std::string tail = w.substr(pos + 2);
        const std::string pair = w.substr(pos, 2);
        if (pair == "PX") {
            accumulate(pending, head + "XP" + tail, c);
            accumulate(pending, head + tail, c * GaussianRational(Rational(0), Rational(-1)));
            accumulate(pending, head + "G" + tail, c * k_var() * GaussianRational(Rational(0), Rational(-2)));
        } else if (pair == "GX") {
            accumulate(pending, head + "XG" + tail, -c);
        } else if (pair == "GP") {
            accumulate(pending, head + "PG" + tail, -c);
        } else {
            accumulate(pending, head + tail, c);
        }
    }
    NormalForm result;
    for (const auto &[w, c] : done) {
        const auto xs = static_cast<unsigned>(std::count(w.begin(), w.end(), 'X'));
        const auto ps = static_cast<unsigned>(std::count(w.begin(), w.end(), 'P'));
        result.add_term({xs, ps, w.find('G') != std::string::npos}, c);
    }
    return result;
}

CrossedElement specialize(const CrossedElement &a)
{
    auto one = [](const MultiPoly &f) { return merge_var(evaluate(f, kH1, GaussianRational(1)), kH2, kK); };
    return {one(a.plain), one(a.gamma)};
}

NormalForm from_symbol(const CrossedElement &a)
{
    NormalForm n;
    for (const bool gamma : {false, true}) {
        const MultiPoly &part = gamma ? a.gamma : a.plain;
        if (!part.only_uses({kX, kP, kK})) {
            throw std::invalid_argument("from_symbol: components must be polynomials in x, p, k");
        }
        for (const auto &[m, c] : part.terms()) {
            n.add_term({m.exponent(kX), m.exponent(kP), gamma}, MultiPoly::term(Monomial{{kK, m.exponent(kK)}}, c));
        }
    }
    return n;
}

SymbolLayers to_symbol_layers(const NormalForm &n)
{
    SymbolLayers layers;
    for (const auto &[idx, coeff] : n.terms()) {
        for (const auto &[m, c] : coeff.terms()) {
            CrossedElement &layer = layers[m.exponent(kK)];
            (idx.gamma ? layer.gamma : layer.plain).add_term(Monomial{{kX, idx.x_power}, {kP, idx.p_power}}, c);
        }
    }
    std::erase_if(layers, [](const auto &kv) { return kv.second.is_zero(); });
    return layers;
}

SymbolLayers split_layers(const CrossedElement &specialized)
{
    SymbolLayers layers;
    for (const bool gamma : {false, true}) {
        const MultiPoly &part = gamma ? specialized.gamma : specialized.plain;
        for (const auto &[m, c] : part.terms()) {
            Monomial stripped = m;
            stripped.set_exponent(kK, 0);
            CrossedElement &layer = layers[m.exponent(kK)];
            (gamma ? layer.gamma : layer.plain).add_term(stripped, c);
        }
    }
    std::erase_if(layers, [](const auto &kv) { return kv.second.is_zero(); });
    return layers;
}

MultiPoly apply(const NormalForm &n, const MultiPoly &g)
{
    const GaussianRational minus_i(Rational(0), Rational(-1));
    MultiPoly result;
    for (const auto &[idx, coeff] : n.terms()) {
        MultiPoly h = idx.gamma ? reflect(g, {kX}) : g;
        for (unsigned t = 0; t < idx.p_power && !h.is_zero(); ++t) {
            h = dunkl(h, kX) * minus_i;
        }
        result += coeff * MultiPoly::var(kX, idx.x_power) * h;
    }
    return result;
}

SymbolLayers expansion_product(const MultiPoly &a, const MultiPoly &b)
{
    if (!a.only_uses({kX, kP}) || !b.only_uses({kX, kP})) {
        throw std::invalid_argument("expansion_product: inputs must be polynomials in x and p");
    }
    const unsigned max_alpha = a.degree(kP);
    std::vector<MultiPoly> weights(max_alpha + 1);
    for (unsigned alpha = 0; alpha <= max_alpha; ++alpha) {
        weights[alpha] = evaluate(differentiate(a, kP, alpha), kP, GaussianRational(0)) *
                         GaussianRational(Rational(1) / Rational(factorial(alpha)));
    }

    const GaussianRational minus_i(Rational(0), Rational(-1));
    const MultiPoly p1 = MultiPoly::var(kP);
    SymbolLayers layers;

    // Depth-first over words, growing each word to the left: the value at a
    // node is the word applied to b, with `b_count` letters B used so far.
    auto visit = [&](auto &&self, const MultiPoly &value, unsigned depth, unsigned b_count) -> void {
        if (value.is_zero()) {
            return;
        }
        if (!weights[depth].is_zero()) {
            CrossedElement &layer = layers[b_count];
            (b_count % 2 == 0 ? layer.plain : layer.gamma) += weights[depth] * value;
        }
        if (depth == max_alpha) {
            return;
        }
        self(self, p1 * value, depth + 1, b_count);
        self(self, differentiate(value, kX) * minus_i, depth + 1, b_count);
        self(self, reflect(d_tilde(value, kX), {kP}) * minus_i, depth + 1, b_count + 1);
    };
    visit(visit, b, 0, 0);

    std::erase_if(layers, [](const auto &kv) { return kv.second.is_zero(); });
    return layers;
}

std::map<std::pair<Composition, unsigned>, Integer> word_census(unsigned alpha)
{
    std::map<std::pair<Composition, unsigned>, Integer> census;
    std::vector<int> letters(alpha, 0); // 0 = p1, 1 = A, 2 = B
    while (true) {
        std::vector<unsigned> blocks{0};
        unsigned p1_count = 0;
        int sign = 1;
        for (int letter : letters) {
            if (letter == 0) {
                ++p1_count;
                if ((blocks.size() - 1) % 2 == 1) {
                    sign = -sign;
                }
            } else if (letter == 1) {
                ++blocks.back();
            } else {
                blocks.push_back(0);
            }
        }
        bool vanishing = false;
        for (std::size_t i = 1; i + 1 < blocks.size(); ++i) {
            vanishing = vanishing || blocks[i] == 0;
        }
        if (!vanishing) {
            census[{Composition(blocks), p1_count}] += sign;
        }
        std::size_t pos = 0;
        while (pos < alpha && letters[pos] == 2) {
            letters[pos++] = 0;
        }
        if (pos == alpha) {
            break;
        }
        ++letters[pos];
    }
    return census;
}

PairReport verify_pair(const MultiPoly &a, const MultiPoly &b)
{
    PairReport report;
    report.star_layers = split_layers(specialize(star(a, b)));
    const SymbolLayers normal = to_symbol_layers(multiply(from_symbol(CrossedElement(a)), from_symbol(CrossedElement(b))));
    const SymbolLayers expansion = expansion_product(a, b);

    const bool monomials = a.size() == 1 && b.size() == 1;
    const unsigned x_total = a.degree(kX) + b.degree(kX);

    auto compare = [&](const char *route, const SymbolLayers &other) {
        std::set<unsigned> keys;
        for (const auto &[l, v] : report.star_layers) {
            keys.insert(l);
        }
        for (const auto &[l, v] : other) {
            keys.insert(l);
        }
        for (unsigned l : keys) {
            const auto si = report.star_layers.find(l);
            const auto oi = other.find(l);
            const CrossedElement expected = si == report.star_layers.end() ? CrossedElement() : si->second;
            const CrossedElement actual = oi == other.end() ? CrossedElement() : oi->second;
            for (const bool gamma : {false, true}) {
                const MultiPoly &e = gamma ? expected.gamma : expected.plain;
                const MultiPoly &g = gamma ? actual.gamma : actual.plain;
                if (e == g) {
                    continue;
                }
                Mismatch mm{route, l, gamma, e, g, {}};
                if (monomials) {
                    std::set<unsigned> js;
                    const MultiPoly diff = e - g;
                    for (const auto &[m, c] : diff.terms()) {
                        js.insert(x_total - m.exponent(kX));
                    }
                    mm.j_values.assign(js.begin(), js.end());
                }
                report.mismatches.push_back(std::move(mm));
            }
        }
    };
    compare("normal-form", normal);
    compare("expansion", expansion);
    return report;
}

ActionSample sample_action(const NormalForm &n, const Rational &k, unsigned degree)
{
    ActionSample sample{k, {}};
    for (unsigned d = 0; d <= degree; ++d) {
        sample.images.push_back(evaluate(apply(n, MultiPoly::var(kX, d)), kK, GaussianRational(k)));
    }
    return sample;
}

NormalForm recover_from_action(std::span<const ActionSample> samples, unsigned max_p_power, unsigned max_x_power)
{
    if (samples.empty()) {
        throw std::domain_error("recover_from_action needs at least one sample");
    }
    const unsigned degree_needed = 2 * max_p_power + 1;
    for (std::size_t s = 0; s < samples.size(); ++s) {
        if (samples[s].images.size() < degree_needed + 1) {
            throw std::domain_error("recover_from_action needs images of x^0 .. x^(2*max_p_power+1)");
        }
        for (std::size_t t = 0; t < s; ++t) {
            if (samples[t].k == samples[s].k) {
                throw std::domain_error("recover_from_action needs distinct k values");
            }
        }
    }

    // Specialized coefficient of each basis element, per sample.
    std::map<PbwIndex, std::vector<GaussianRational>> values;
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const ActionSample &sample = samples[s];
        const auto degree = static_cast<unsigned>(sample.images.size() - 1);
        for (int shift = -static_cast<int>(max_p_power); shift <= static_cast<int>(max_x_power); ++shift) {
            std::vector<PbwIndex> unknowns;
            for (unsigned b = 0; b <= max_p_power; ++b) {
                const int a = shift + static_cast<int>(b);
                if (a < 0 || a > static_cast<int>(max_x_power)) {
                    continue;
                }
                unknowns.push_back({static_cast<unsigned>(a), b, false});
                unknowns.push_back({static_cast<unsigned>(a), b, true});
            }
            if (unknowns.empty()) {
                continue;
            }
            std::vector<std::vector<GaussianRational>> rows;
            std::vector<GaussianRational> rhs;
            for (unsigned d = 0; d <= degree; ++d) {
                const int target = static_cast<int>(d) + shift;
                if (target < 0) {
                    continue;
                }
                std::vector<GaussianRational> row;
                for (const PbwIndex &u : unknowns) {
                    GaussianRational f = lowering_factor(d, u.p_power, sample.k);
                    if (u.gamma && d % 2 == 1) {
                        f = -f;
                    }
                    row.push_back(f);
                }
                rows.push_back(std::move(row));
                rhs.push_back(sample.images[d].coefficient(Monomial{{kX, static_cast<unsigned>(target)}}));
            }
            const std::vector<GaussianRational> solution = solve_exact(rows, rhs);
            for (std::size_t u = 0; u < unknowns.size(); ++u) {
                auto &slot = values[unknowns[u]];
                slot.resize(samples.size());
                slot[s] = solution[u];
            }
        }
    }

    NormalForm result;
    const MultiPoly k = MultiPoly::var(kK);
    for (const auto &[idx, vals] : values) {
        MultiPoly interpolant;
        for (std::size_t s = 0; s < samples.size(); ++s) {
            if (vals[s].is_zero()) {
                continue;
            }
            MultiPoly basis(vals[s]);
            for (std::size_t r = 0; r < samples.size(); ++r) {
                if (r == s) {
                    continue;
                }
                const GaussianRational denom(samples[s].k - samples[r].k);
                basis *= (k - MultiPoly(GaussianRational(samples[r].k))) * denom.inverse();
            }
            interpolant += basis;
        }
        result.add_term(idx, interpolant);
    }

    // The images must be fully explained by the recovered operator.
    for (const ActionSample &sample : samples) {
        for (std::size_t d = 0; d < sample.images.size(); ++d) {
            const MultiPoly image =
                evaluate(apply(result, MultiPoly::var(kX, static_cast<unsigned>(d))), kK, GaussianRational(sample.k));
            if (image != sample.images[d]) {
                throw std::domain_error("action data is not produced by a normal form in range");
            }
        }
    }
    return result;
}

} // namespace dwstar
