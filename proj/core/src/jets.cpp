#include <dwstar/jets.hpp>

#include <vector>

namespace dwstar
{

namespace
{

MultiPoly shifted_var(VarId v, const Rational &at)
{
    return MultiPoly::var(v) - MultiPoly(GaussianRational(at));
}

// Jets of `data` at one point, with aliases of that point cross-checked.
std::map<std::pair<unsigned, unsigned>, GaussianRational> targets_at(const JetData &data,
                                                                     const std::vector<unsigned> &aliases)
{
    std::map<std::pair<unsigned, unsigned>, GaussianRational> out;
    for (unsigned i = 0; i <= data.m; ++i) {
        for (unsigned j = 0; j <= data.n; ++j) {
            const GaussianRational *seen = nullptr;
            for (unsigned point : aliases) {
                auto it = data.values.find({point, i, j});
                if (it == data.values.end()) {
                    continue;
                }
                if (seen != nullptr && !(*seen == it->second)) {
                    throw InconsistentJets("jets disagree at coinciding points");
                }
                seen = &it->second;
            }
            if (seen == nullptr) {
                throw InconsistentJets("missing jet (" + std::to_string(i) + "," + std::to_string(j) + ") at point " +
                                       std::to_string(aliases.front()));
            }
            out.emplace(std::make_pair(i, j), *seen);
        }
    }
    return out;
}

// Returns g + M*h where h = Σ a_st (x-qx)^s (p-qp)^t / (s! t!) is chosen so the
// jets of the result at (qx, qp) hit `targets`. The system is triangular in
// lexicographic (s, t) order with diagonal M(qx, qp), which must be nonzero.
MultiPoly correct_at(const MultiPoly &g, const MultiPoly &multiplier, const Rational &qx, const Rational &qp,
                     unsigned m, unsigned n,
                     const std::map<std::pair<unsigned, unsigned>, GaussianRational> &targets)
{
    std::vector<std::vector<GaussianRational>> mjet(m + 1, std::vector<GaussianRational>(n + 1));
    for (unsigned i = 0; i <= m; ++i) {
        for (unsigned j = 0; j <= n; ++j) {
            mjet[i][j] = jet_value(multiplier, qx, qp, i, j);
        }
    }
    const GaussianRational diagonal = mjet[0][0];
    if (diagonal.is_zero()) {
        throw std::logic_error("jet correction multiplier vanishes at its target point");
    }
    const GaussianRational diagonal_inv = diagonal.inverse();

    std::vector<std::vector<GaussianRational>> a(m + 1, std::vector<GaussianRational>(n + 1));
    for (unsigned i = 0; i <= m; ++i) {
        for (unsigned j = 0; j <= n; ++j) {
            GaussianRational rhs = targets.at({i, j}) - jet_value(g, qx, qp, i, j);
            for (unsigned s = 0; s <= i; ++s) {
                for (unsigned t = 0; t <= j; ++t) {
                    if (s == i && t == j) {
                        continue;
                    }
                    const GaussianRational weight(Rational(binomial(i, s) * binomial(j, t)));
                    rhs -= weight * mjet[i - s][j - t] * a[s][t];
                }
            }
            a[i][j] = rhs * diagonal_inv;
        }
    }

    MultiPoly h;
    const MultiPoly dx = shifted_var(kX, qx);
    const MultiPoly dp = shifted_var(kP, qp);
    for (unsigned s = 0; s <= m; ++s) {
        for (unsigned t = 0; t <= n; ++t) {
            if (a[s][t].is_zero()) {
                continue;
            }
            const GaussianRational scale(Rational(1) / Rational(factorial(s) * factorial(t)));
            h += pow(dx, s) * pow(dp, t) * (a[s][t] * scale);
        }
    }
    return g + multiplier * h;
}

} // namespace

std::array<std::pair<Rational, Rational>, 4> JetData::points() const
{
    return {{{x0, p0}, {-x0, p0}, {x0, -p0}, {-x0, -p0}}};
}

JetCase classify(const JetData &data)
{
    const bool x_zero = sgn(data.x0) == 0;
    const bool p_zero = sgn(data.p0) == 0;
    if (x_zero && p_zero) {
        return JetCase::origin;
    }
    if (p_zero) {
        return JetCase::x_axis;
    }
    if (x_zero) {
        return JetCase::p_axis;
    }
    return JetCase::generic;
}

GaussianRational jet_value(const MultiPoly &f, const Rational &x, const Rational &p, unsigned i, unsigned j)
{
    const MultiPoly d = differentiate(differentiate(f, kX, i), kP, j);
    GaussianRational total;
    for (const auto &[mono, c] : d.terms()) {
        Rational factor = 1;
        for (unsigned e = 0; e < mono.exponent(kX); ++e) {
            factor *= x;
        }
        for (unsigned e = 0; e < mono.exponent(kP); ++e) {
            factor *= p;
        }
        total += c * GaussianRational(factor);
    }
    return total;
}

JetData jets_of(const MultiPoly &f, const Rational &x0, const Rational &p0, unsigned m, unsigned n)
{
    JetData data{x0, p0, m, n, {}};
    const auto pts = data.points();
    for (unsigned point = 0; point < 4; ++point) {
        for (unsigned i = 0; i <= m; ++i) {
            for (unsigned j = 0; j <= n; ++j) {
                data.values[{point, i, j}] = jet_value(f, pts[point].first, pts[point].second, i, j);
            }
        }
    }
    return data;
}

bool jets_agree(const MultiPoly &g, const JetData &data)
{
    const auto pts = data.points();
    for (const auto &[key, value] : data.values) {
        if (!(jet_value(g, pts[key.point].first, pts[key.point].second, key.i, key.j) == value)) {
            return false;
        }
    }
    return true;
}

MultiPoly jet_match(const JetData &data)
{
    const auto pts = data.points();
    const unsigned m = data.m;
    const unsigned n = data.n;
    const MultiPoly x_factor = pow(shifted_var(kX, data.x0), m + 1);
    const MultiPoly p_factor = pow(shifted_var(kP, data.p0), n + 1);

    auto taylor = [&](const std::vector<unsigned> &aliases) {
        return correct_at(MultiPoly(), MultiPoly(1), data.x0, data.p0, m, n, targets_at(data, aliases));
    };

    switch (classify(data)) {
        case JetCase::origin:
            return taylor({0, 1, 2, 3});
        case JetCase::x_axis: {
            const MultiPoly g = taylor({0, 2});
            return correct_at(g, x_factor, pts[1].first, pts[1].second, m, n, targets_at(data, {1, 3}));
        }
        case JetCase::p_axis: {
            const MultiPoly g = taylor({0, 1});
            return correct_at(g, p_factor, pts[2].first, pts[2].second, m, n, targets_at(data, {2, 3}));
        }
        case JetCase::generic:
        default: {
            MultiPoly g = taylor({0});
            g = correct_at(g, x_factor, pts[1].first, pts[1].second, m, n, targets_at(data, {1}));
            g = correct_at(g, p_factor, pts[2].first, pts[2].second, m, n, targets_at(data, {2}));
            return correct_at(g, x_factor * p_factor, pts[3].first, pts[3].second, m, n, targets_at(data, {3}));
        }
    }
}

} // namespace dwstar
