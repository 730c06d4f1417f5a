#ifndef DWSTAR_CLI_FORMAT_HPP
#define DWSTAR_CLI_FORMAT_HPP

#include <optional>
#include <string>
#include <string_view>

#include <dwstar/star.hpp>

namespace dwstar::cli
{

enum class Format { text, latex, json };

std::optional<Format> format_from_name(std::string_view name);

// Terms are listed plain part first, then gamma part, each in descending
// graded lex order on the exponents of (x, p, h1, h2). Text output parses
// back to the same element. Throws std::invalid_argument when a component
// uses variables other than x, p, h1, h2.
std::string format(const CrossedElement &a, Format mode = Format::text);

std::string format_rational(const Rational &q);

} // namespace dwstar::cli

#endif
