#include <dwstar/cli/run.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include <dwstar/cli/format.hpp>
#include <dwstar/cli/jets_file.hpp>
#include <dwstar/cli/parse.hpp>
#include <dwstar/dunkl.hpp>
#include <dwstar/jets.hpp>
#include <dwstar/star.hpp>
#include <dwstar/verify.hpp>

namespace dwstar::cli
{

namespace
{

// Bad flag values that CLI11 cannot check by type alone.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input data other than expressions.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational_flag(const std::string &s)
{
    Rational q;
    const bool shape_ok = !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/';
    });
    if (!shape_ok || q.set_str(s, 10) != 0 || q.get_den() == 0) {
        throw UsageError("not a rational number: '" + s + "'");
    }
    q.canonicalize();
    return q;
}

std::vector<std::string> split_commas(const std::string &s)
{
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        parts.push_back(item);
    }
    if (!s.empty() && s.back() == ',') {
        parts.emplace_back();
    }
    return parts;
}

Composition parse_composition(const std::string &s)
{
    std::vector<unsigned> entries;
    for (const std::string &part : split_commas(s)) {
        if (part.empty() || part.size() > 6 ||
            !std::all_of(part.begin(), part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw InputError("composition entries must be non-negative integers: '" + s + "'");
        }
        entries.push_back(static_cast<unsigned>(std::stoul(part)));
    }
    try {
        return Composition(std::move(entries));
    } catch (const std::invalid_argument &e) {
        throw InputError(std::string("invalid composition: ") + e.what());
    }
}

MultiPoly symbol_operand(const std::string &text)
{
    const CrossedElement e = parse(text);
    if (!e.gamma.is_zero() || !e.plain.only_uses({kX, kP})) {
        throw InputError("cterm operands must be polynomials in x and p: '" + text + "'");
    }
    return e.plain;
}

Format format_of(const std::string &name)
{
    return *format_from_name(name);
}

std::string weight_text(const MultiPoly &f)
{
    if (f.is_zero()) {
        return "zero";
    }
    const auto w = weight(f);
    return w ? std::to_string(*w) : "mixed";
}

std::string join_j(const std::vector<unsigned> &js)
{
    std::string s;
    for (unsigned j : js) {
        s += (s.empty() ? "" : ",") + std::to_string(j);
    }
    return s;
}

} // namespace

int run(std::span<const std::string> args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact star products for the Z2 Dunkl-Weyl algebra", "dwstar"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"text", "latex", "json"};
    std::function<int()> action;

    std::string a_text, b_text, format_name = "text";

    auto *star_cmd = app.add_subcommand("star", "Star product of two crossed-product elements");
    star_cmd->add_option("--a", a_text, "left operand")->required();
    star_cmd->add_option("--b", b_text, "right operand")->required();
    star_cmd->add_option("--format", format_name, "text, latex or json")->check(CLI::IsMember(formats));
    star_cmd->callback([&] {
        action = [&] {
            out << format(star(parse(a_text), parse(b_text)), format_of(format_name)) << "\n";
            return exit_ok;
        };
    });

    unsigned j = 0, l = 0, family = 0;
    auto *cterm_cmd = app.add_subcommand("cterm", "One bilinear coefficient C^family_{j,l}(a, b)");
    cterm_cmd->add_option("--j", j)->required();
    cterm_cmd->add_option("--l", l)->required();
    cterm_cmd->add_option("--a", a_text)->required();
    cterm_cmd->add_option("--b", b_text)->required();
    cterm_cmd->add_option("--family", family, "0 or 1")->required()->check(CLI::IsMember({0u, 1u}));
    cterm_cmd->add_option("--format", format_name)->check(CLI::IsMember(formats));
    cterm_cmd->callback([&] {
        action = [&] {
            const MultiPoly a = symbol_operand(a_text);
            const MultiPoly b = symbol_operand(b_text);
            const MultiPoly c = family == 0 ? c0(j, l, a, b) : c1(j, l, a, b);
            out << format(CrossedElement(c), format_of(format_name)) << "\n";
            return exit_ok;
        };
    });

    int m = 0, n = 0;
    auto *comp_cmd = app.add_subcommand("compositions", "List P_{m,n} in lexicographic order");
    comp_cmd->add_option("--m", m)->required();
    comp_cmd->add_option("--n", n)->required();
    comp_cmd->callback([&] {
        action = [&] {
            for (const Composition &nu : enumerate_compositions(m, n)) {
                out << nu.to_string() << "\n";
            }
            return exit_ok;
        };
    });

    std::string nu_text;
    long s = 0;
    auto *cnu_cmd = app.add_subcommand("cnu", "Signed word multiplicity c_nu(s)");
    cnu_cmd->add_option("--nu", nu_text, "comma separated y0,...,yn")->required();
    cnu_cmd->add_option("--s", s)->required();
    cnu_cmd->callback([&] {
        action = [&] {
            if (s < 0) {
                throw UsageError("--s must be non-negative");
            }
            out << c_nu(parse_composition(nu_text), s).get_str() << "\n";
            return exit_ok;
        };
    });

    unsigned trials = 0, degree = 0;
    std::uint64_t seed = 0;
    auto *assoc_cmd = app.add_subcommand("verify-assoc", "Associativity on seeded random triples");
    assoc_cmd->add_option("--trials", trials)->required();
    assoc_cmd->add_option("--degree", degree)->required()->check(CLI::Range(0u, 12u));
    assoc_cmd->add_option("--seed", seed)->required();
    assoc_cmd->callback([&] {
        action = [&] {
            const AssocReport report = verify_associativity(trials, degree, seed);
            if (report.ok()) {
                out << "ok: " << report.trials_run << " trials, degree " << degree << ", seed " << seed << "\n";
                return exit_ok;
            }
            const AssocFailure &f = *report.failure;
            out << "FAIL: trial " << f.trial << ", degree " << degree << ", seed " << seed << "\n"
                << "  a = " << format(f.a) << "\n"
                << "  b = " << format(f.b) << "\n"
                << "  c = " << format(f.c) << "\n"
                << "  (a*b)*c = " << format(f.left) << "\n"
                << "  a*(b*c) = " << format(f.right) << "\n";
            return exit_verification;
        };
    });

    unsigned max_degree = 0;
    auto *oracle_cmd = app.add_subcommand("verify-oracle", "Star product against both operator oracles");
    oracle_cmd->add_option("--max-degree", max_degree)->required()->check(CLI::Range(0u, 8u));
    oracle_cmd->callback([&] {
        action = [&] {
            const SweepReport report = verify_oracle_sweep(max_degree);
            if (report.ok()) {
                out << "ok: " << report.pairs_checked << " monomial pairs, max degree " << max_degree << "\n";
                return exit_ok;
            }
            for (const SweepFailure &f : report.failures) {
                for (const Mismatch &mm : f.report.mismatches) {
                    out << "FAIL: " << format(CrossedElement(f.a)) << " * " << format(CrossedElement(f.b))
                        << ": " << mm.route << " layer " << mm.layer << (mm.gamma ? " gamma" : " plain") << " j={"
                        << join_j(mm.j_values) << "}\n";
                }
            }
            out << report.failures.size() << " of " << report.pairs_checked << " pairs failed\n";
            return exit_verification;
        };
    });

    std::string point_text, jets_path;
    unsigned jm = 0, jn = 0;
    auto *jet_cmd = app.add_subcommand("jet-match", "Polynomial with prescribed jets at (+-x0, +-p0)");
    jet_cmd->add_option("--point", point_text, "X0,P0 as integers or fractions")->required();
    jet_cmd->add_option("--m", jm)->required();
    jet_cmd->add_option("--n", jn)->required();
    jet_cmd->add_option("--jets", jets_path, "JSON jets file")->required();
    jet_cmd->add_option("--format", format_name)->check(CLI::IsMember(formats));
    jet_cmd->callback([&] {
        action = [&] {
            const std::vector<std::string> coords = split_commas(point_text);
            if (coords.size() != 2) {
                throw UsageError("--point must be X0,P0");
            }
            const Rational x0 = parse_rational_flag(coords[0]);
            const Rational p0 = parse_rational_flag(coords[1]);
            std::ifstream in(jets_path, std::ios::binary);
            if (!in) {
                throw InputError("cannot read jets file '" + jets_path + "'");
            }
            std::stringstream buffer;
            buffer << in.rdbuf();
            const JetData data = jets_from_json(buffer.str());
            if (data.x0 != x0 || data.p0 != p0 || data.m != jm || data.n != jn) {
                throw InputError("jets file disagrees with --point/--m/--n");
            }
            const MultiPoly g = jet_match(data);
            if (!jets_agree(g, data)) {
                out << "FAIL: result does not reproduce the prescribed jets\n";
                return exit_verification;
            }
            out << format(CrossedElement(g), format_of(format_name)) << "\n";
            return exit_ok;
        };
    });

    std::string expect_text;
    auto *check_cmd = app.add_subcommand("check-star", "Compare a star product with an expected value");
    check_cmd->add_option("--a", a_text)->required();
    check_cmd->add_option("--b", b_text)->required();
    check_cmd->add_option("--expect", expect_text)->required();
    check_cmd->callback([&] {
        action = [&] {
            const CrossedElement expected = parse(expect_text);
            const CrossedElement actual = star(parse(a_text), parse(b_text));
            if (actual == expected) {
                out << "ok\n";
                return exit_ok;
            }
            out << "FAIL: a*b = " << format(actual) << "\n"
                << "  expected " << format(expected) << "\n"
                << "  difference " << format(actual - expected) << "\n";
            return exit_verification;
        };
    });

    std::string expr_text;
    auto *weights_cmd = app.add_subcommand("weights", "deg_x - deg_p of each component");
    weights_cmd->add_option("--expr", expr_text)->required();
    weights_cmd->callback([&] {
        action = [&] {
            const CrossedElement e = parse(expr_text);
            out << "plain: " << weight_text(e.plain) << "\n"
                << "gamma: " << weight_text(e.gamma) << "\n";
            return exit_ok;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return e.get_exit_code() == 0 ? exit_ok : exit_usage;
    }

    try {
        return action();
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ParseError &e) {
        err << e.what() << "\n";
        return exit_parse;
    } catch (const GammaPlacementError &e) {
        err << "gamma placement error: " << e.what() << "\n";
        return exit_parse;
    } catch (const JetsFileError &e) {
        err << "jets file error: " << e.what() << "\n";
        return exit_parse;
    } catch (const InconsistentJets &e) {
        err << "inconsistent jets: " << e.what() << "\n";
        return exit_parse;
    } catch (const InputError &e) {
        err << "input error: " << e.what() << "\n";
        return exit_parse;
    }
}

} // namespace dwstar::cli
