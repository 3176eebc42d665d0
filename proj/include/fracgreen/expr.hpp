#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

// Arithmetic expressions for nonlinearities and bounds given on the command
// line, e.g. "t*root4(abs(r)^3 + t)".
//
// Grammar (loosest to tightest): + -, * /, unary -, ^ (right associative),
// function call. Constants: pi, e. Functions: abs sqrt cbrt root4 exp ln sin
// cos atan (one argument), min max pow (two arguments). Multiplication is
// always explicit.
namespace fracgreen::expr {

using Bindings = std::map<std::string, double, std::less<>>;

struct Node;

class Expr {
public:
    // Fully parenthesized source that parses back to the same tree.
    std::string to_string() const;
    const std::set<std::string>& variables() const noexcept { return variables_; }
    const std::string& source() const noexcept { return source_; }

    // Throws MissingBindingError or DomainError (sqrt/ln/root4 of bad
    // arguments, division by zero, non-finite results).
    double eval(const Bindings& bindings) const;

    friend bool structurally_equal(const Expr& a, const Expr& b);
    friend Expr parse(std::string_view source, const std::set<std::string>& allowed_vars);

private:
    std::shared_ptr<const Node> root_;
    std::set<std::string> variables_;
    std::string source_;
};

// Throws SyntaxError (with byte offset) or UnknownIdentifierError.
Expr parse(std::string_view source, const std::set<std::string>& allowed_vars);

double eval(const Expr& e, const Bindings& bindings);

}  // namespace fracgreen::expr
