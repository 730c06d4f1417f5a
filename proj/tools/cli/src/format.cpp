#include <dwstar/cli/format.hpp>

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dwstar::cli
{

namespace
{

constexpr std::array<VarId, 4> kOrder{kX, kP, kH1, kH2};

using Exponents = std::array<unsigned, 4>;
using Term = std::pair<Exponents, GaussianRational>;

// Descending graded lex on (x, p, h1, h2).
std::vector<Term> sorted_terms(const MultiPoly &f)
{
    std::vector<Term> terms;
    for (const auto &[m, c] : f.terms()) {
        Exponents e{};
        unsigned total = 0;
        for (std::size_t i = 0; i < kOrder.size(); ++i) {
            e[i] = m.exponent(kOrder[i]);
            total += e[i];
        }
        if (total != m.total_degree()) {
            throw std::invalid_argument("only x, p, h1, h2 can be formatted");
        }
        terms.emplace_back(e, c);
    }
    std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) {
        const unsigned da = a.first[0] + a.first[1] + a.first[2] + a.first[3];
        const unsigned db = b.first[0] + b.first[1] + b.first[2] + b.first[3];
        if (da != db) {
            return da > db;
        }
        return a.first > b.first;
    });
    return terms;
}

struct Style {
    bool latex = false;
    const char *names[4];
    const char *gamma;
    const char *times;
};

const Style kText{false, {"x", "p", "h1", "h2"}, "gamma", "*"};
const Style kLatex{true, {"x", "p", "\\hbar_1", "\\hbar_2"}, "\\gamma", " "};

std::string magnitude(const Rational &q, const Style &st)
{
    // q > 0
    if (!st.latex || q.get_den() == 1) {
        return format_rational(q);
    }
    return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string power(const char *name, unsigned e, const Style &st)
{
    std::string s = name;
    if (e > 1) {
        s += st.latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
    }
    return s;
}

// Appends one signed summand. `first` suppresses the leading " + ".
void append_term(std::string &out, const Term &t, bool gamma, bool first, const Style &st)
{
    const GaussianRational &c = t.second;
    std::vector<std::string> factors;
    bool negative = false;
    if (c.is_real() || sgn(c.re()) == 0) {
        const bool real = c.is_real();
        const Rational v = real ? c.re() : c.im();
        negative = sgn(v) < 0;
        const Rational mag = abs(v);
        if (mag != 1) {
            factors.push_back(magnitude(mag, st));
        }
        if (!real) {
            factors.emplace_back("i");
        }
    } else {
        std::string z = st.latex ? "\\left(" : "(";
        z += sgn(c.re()) < 0 ? "-" + magnitude(abs(c.re()), st) : magnitude(c.re(), st);
        z += sgn(c.im()) < 0 ? " - " : " + ";
        if (abs(c.im()) != 1) {
            z += magnitude(abs(c.im()), st) + st.times;
        }
        z += "i";
        z += st.latex ? "\\right)" : ")";
        factors.push_back(std::move(z));
    }
    for (std::size_t i = 0; i < 4; ++i) {
        if (t.first[i] > 0) {
            factors.push_back(power(st.names[i], t.first[i], st));
        }
    }
    if (gamma) {
        factors.emplace_back(st.gamma);
    }
    if (factors.empty()) {
        factors.emplace_back("1");
    }
    if (first) {
        if (negative) {
            out += "-";
        }
    } else {
        out += negative ? " - " : " + ";
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) {
            out += st.times;
        }
        out += factors[i];
    }
}

std::string format_symbolic(const CrossedElement &a, const Style &st)
{
    if (a.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const bool gamma : {false, true}) {
        for (const Term &t : sorted_terms(gamma ? a.gamma : a.plain)) {
            append_term(out, t, gamma, first, st);
            first = false;
        }
    }
    return out;
}

std::string json_integer(const Integer &z)
{
    // Values beyond int64 are quoted so that consumers with 64-bit integers
    // cannot silently round them.
    if (z >= std::numeric_limits<long>::min() && z <= std::numeric_limits<long>::max()) {
        return z.get_str();
    }
    return "\"" + z.get_str() + "\"";
}

std::string json_rational(const Rational &q)
{
    return "[" + json_integer(q.get_num()) + "," + json_integer(q.get_den()) + "]";
}

std::string json_component(const MultiPoly &f)
{
    std::string out = "[";
    bool first = true;
    for (const Term &t : sorted_terms(f)) {
        if (!first) {
            out += ",";
        }
        first = false;
        out += "[";
        for (unsigned e : t.first) {
            out += std::to_string(e) + ",";
        }
        out += json_rational(t.second.re()) + "," + json_rational(t.second.im()) + "]";
    }
    return out + "]";
}

} // namespace

std::optional<Format> format_from_name(std::string_view name)
{
    if (name == "text") {
        return Format::text;
    }
    if (name == "latex") {
        return Format::latex;
    }
    if (name == "json") {
        return Format::json;
    }
    return std::nullopt;
}

std::string format_rational(const Rational &q)
{
    return dwstar::to_string(q);
}

std::string format(const CrossedElement &a, Format mode)
{
    switch (mode) {
    case Format::text:
        return format_symbolic(a, kText);
    case Format::latex:
        return format_symbolic(a, kLatex);
    case Format::json:
        return "{\"plain\": " + json_component(a.plain) + ", \"gamma\": " + json_component(a.gamma) + "}";
    }
    throw std::invalid_argument("unknown format");
}

} // namespace dwstar::cli
