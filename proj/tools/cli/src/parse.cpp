#include <dwstar/cli/parse.hpp>

#include <cctype>
#include <stdexcept>

namespace dwstar::cli
{

namespace
{

std::string join_expected(const std::vector<std::string> &expected)
{
    std::string s;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i > 0) {
            s += ", ";
        }
        s += expected[i];
    }
    return s;
}

constexpr unsigned kMaxExponent = 255;

const std::vector<std::string> &atom_tokens()
{
    static const std::vector<std::string> tokens{"number", "'i'", "'x'", "'p'", "'h1'", "'h2'", "'gamma'", "'('"};
    return tokens;
}

struct Value {
    CrossedElement element;
    bool has_gamma = false;
};

enum class Tok { end, number, ident, plus, minus, star, slash, caret, lparen, rparen, bad };

struct Token {
    Tok kind = Tok::end;
    std::size_t begin = 0; // 0-based
    std::string_view text;
};

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) { advance(); }

    Value parse_all()
    {
        Value v = expr();
        if (tok_.kind != Tok::end) {
            fail({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
        }
        return v;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    Token tok_;

    void advance()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        tok_.begin = pos_;
        if (pos_ == text_.size()) {
            tok_.kind = Tok::end;
            tok_.text = {};
            return;
        }
        const char c = text_[pos_];
        const auto is_alpha = [](char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; };
        const auto is_digit = [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; };
        std::size_t end = pos_ + 1;
        if (is_digit(c)) {
            while (end < text_.size() && is_digit(text_[end])) {
                ++end;
            }
            tok_.kind = Tok::number;
        } else if (is_alpha(c)) {
            while (end < text_.size() && (is_alpha(text_[end]) || is_digit(text_[end]))) {
                ++end;
            }
            tok_.kind = Tok::ident;
        } else {
            switch (c) {
            case '+': tok_.kind = Tok::plus; break;
            case '-': tok_.kind = Tok::minus; break;
            case '*': tok_.kind = Tok::star; break;
            case '/': tok_.kind = Tok::slash; break;
            case '^': tok_.kind = Tok::caret; break;
            case '(': tok_.kind = Tok::lparen; break;
            case ')': tok_.kind = Tok::rparen; break;
            default: tok_.kind = Tok::bad; break;
            }
        }
        tok_.text = text_.substr(pos_, end - pos_);
        pos_ = end;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const
    {
        const std::size_t offset = tok_.begin + 1;
        std::string found = tok_.kind == Tok::end ? "end of input" : "'" + std::string(tok_.text) + "'";
        throw ParseError(offset, expected,
                         "syntax error at offset " + std::to_string(offset) + ": found " + found +
                             ", expected one of " + join_expected(expected));
    }

    Integer nat()
    {
        if (tok_.kind != Tok::number) {
            fail({"number"});
        }
        Integer n(std::string(tok_.text));
        advance();
        return n;
    }

    Value expr()
    {
        bool negate = false;
        if (tok_.kind == Tok::plus || tok_.kind == Tok::minus) {
            negate = tok_.kind == Tok::minus;
            advance();
        }
        Value acc = term();
        if (negate) {
            acc.element = -acc.element;
        }
        while (tok_.kind == Tok::plus || tok_.kind == Tok::minus) {
            const bool minus = tok_.kind == Tok::minus;
            advance();
            Value rhs = term();
            acc.element = minus ? acc.element - rhs.element : acc.element + rhs.element;
            acc.has_gamma = acc.has_gamma || rhs.has_gamma;
        }
        return acc;
    }

    Value term()
    {
        Value acc = factor();
        while (tok_.kind == Tok::star || tok_.kind == Tok::slash) {
            if (tok_.kind == Tok::slash) {
                advance();
                const std::size_t at = tok_.begin + 1;
                const Integer d = nat();
                if (d == 0) {
                    throw ParseError(at, {"nonzero number"}, "division by zero at offset " + std::to_string(at));
                }
                acc.element *= GaussianRational(Rational(Integer(1), d));
                continue;
            }
            advance();
            const std::size_t at = tok_.begin + 1;
            Value rhs = factor();
            if (acc.has_gamma && rhs.has_gamma) {
                throw GammaPlacementError(at, "gamma may appear only once in a product (offset " +
                                                  std::to_string(at) + ")");
            }
            try {
                acc.element = {acc.element.plain * rhs.element.plain,
                               acc.element.gamma * rhs.element.plain + acc.element.plain * rhs.element.gamma};
            } catch (const std::overflow_error &) {
                throw ParseError(at, {"smaller exponent"}, "exponent overflow at offset " + std::to_string(at));
            }
            acc.has_gamma = acc.has_gamma || rhs.has_gamma;
        }
        return acc;
    }

    Value factor()
    {
        Value base = atom();
        if (tok_.kind != Tok::caret) {
            return base;
        }
        const std::size_t caret_at = tok_.begin + 1;
        advance();
        if (base.has_gamma) {
            throw GammaPlacementError(caret_at, "gamma cannot be raised to a power (offset " +
                                                    std::to_string(caret_at) + ")");
        }
        const std::size_t at = tok_.begin + 1;
        const Integer e = nat();
        if (e > kMaxExponent) {
            throw ParseError(at, {"exponent <= 255"}, "exponent too large at offset " + std::to_string(at));
        }
        try {
            base.element.plain = pow(base.element.plain, static_cast<unsigned>(e.get_ui()));
        } catch (const std::overflow_error &) {
            throw ParseError(at, {"smaller exponent"}, "exponent overflow at offset " + std::to_string(at));
        }
        return base;
    }

    Value atom()
    {
        switch (tok_.kind) {
        case Tok::number: {
            Value v;
            v.element.plain = MultiPoly(GaussianRational(Rational(nat())));
            return v;
        }
        case Tok::lparen: {
            advance();
            Value v = expr();
            if (tok_.kind != Tok::rparen) {
                fail({"'+'", "'-'", "'*'", "'/'", "'^'", "')'"});
            }
            advance();
            return v;
        }
        case Tok::ident: {
            Value v;
            const std::string_view name = tok_.text;
            if (name == "i") {
                v.element.plain = MultiPoly(GaussianRational::i());
            } else if (name == "gamma") {
                v.element = CrossedElement::gamma_unit();
                v.has_gamma = true;
            } else if (name == "x") {
                v.element.plain = MultiPoly::var(kX);
            } else if (name == "p") {
                v.element.plain = MultiPoly::var(kP);
            } else if (name == "h1") {
                v.element.plain = MultiPoly::var(kH1);
            } else if (name == "h2") {
                v.element.plain = MultiPoly::var(kH2);
            } else {
                fail(atom_tokens());
            }
            advance();
            return v;
        }
        default:
            fail(atom_tokens());
        }
    }
};

} // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string &what)
    : std::runtime_error(what), offset_(offset), expected_(std::move(expected))
{
}

GammaPlacementError::GammaPlacementError(std::size_t offset, const std::string &what)
    : std::runtime_error(what), offset_(offset)
{
}

CrossedElement parse(std::string_view text)
{
    return Parser(text).parse_all().element;
}

} // namespace dwstar::cli
