#ifndef DWSTAR_CLI_PARSE_HPP
#define DWSTAR_CLI_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <dwstar/star.hpp>

namespace dwstar::cli
{

class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string &what);

    // 1-based byte offset of the offending token; size + 1 at end of input.
    std::size_t offset() const { return offset_; }
    const std::vector<std::string> &expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

// gamma raised to a power, or two gamma-bearing factors in one product.
class GammaPlacementError : public std::runtime_error
{
public:
    GammaPlacementError(std::size_t offset, const std::string &what);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*' factor) | ('/' nat))*
//   factor := atom ('^' nat)?
//   atom   := nat | 'i' | 'x' | 'p' | 'h1' | 'h2' | 'gamma' | '(' expr ')'
//
// gamma is a marker: a summand containing it lands in the gamma component,
// with γ understood on the right.
CrossedElement parse(std::string_view text);

} // namespace dwstar::cli

#endif
