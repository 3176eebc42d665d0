#include "fracgreen/expr.hpp"

#include "fracgreen/errors.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>

namespace fracgreen::expr {

enum class NodeKind { number, variable, constant, negate, binary, call };

struct Node {
    NodeKind kind = NodeKind::number;
    double number = 0.0;
    std::string name;  // variable, constant or function name
    char op = 0;       // binary operator
    std::vector<std::shared_ptr<const Node>> args;
};

namespace {

struct FunctionInfo {
    std::string_view name;
    int arity;
};

constexpr std::array<FunctionInfo, 12> kFunctions{{{"abs", 1},
                                                   {"sqrt", 1},
                                                   {"cbrt", 1},
                                                   {"root4", 1},
                                                   {"exp", 1},
                                                   {"ln", 1},
                                                   {"sin", 1},
                                                   {"cos", 1},
                                                   {"atan", 1},
                                                   {"min", 2},
                                                   {"max", 2},
                                                   {"pow", 2}}};

std::optional<int> function_arity(std::string_view name) {
    for (const auto& f : kFunctions) {
        if (f.name == name) {
            return f.arity;
        }
    }
    return std::nullopt;
}

bool is_constant(std::string_view name) { return name == "pi" || name == "e"; }

enum class TokenKind { number, identifier, op, lparen, rparen, comma, end };

struct Token {
    TokenKind kind = TokenKind::end;
    std::string_view text;
    std::size_t offset = 0;
    double number = 0.0;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const noexcept { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
        if (pos_ >= src_.size()) {
            current_ = {TokenKind::end, {}, src_.size(), 0.0};
            return;
        }
        const std::size_t start = pos_;
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            lex_number(start);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
            }
            current_ = {TokenKind::identifier, src_.substr(start, pos_ - start), start, 0.0};
            return;
        }
        ++pos_;
        switch (c) {
            case '+':
            case '-':
            case '*':
            case '/':
            case '^':
                current_ = {TokenKind::op, src_.substr(start, 1), start, 0.0};
                return;
            case '(':
                current_ = {TokenKind::lparen, src_.substr(start, 1), start, 0.0};
                return;
            case ')':
                current_ = {TokenKind::rparen, src_.substr(start, 1), start, 0.0};
                return;
            case ',':
                current_ = {TokenKind::comma, src_.substr(start, 1), start, 0.0};
                return;
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'", start);
        }
    }

    void lex_number(std::size_t start) {
        const auto digits = [&] {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
            }
        };
        digits();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            digits();
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) {
                ++look;
            }
            if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
                pos_ = look;
                digits();
            }
        }
        const std::string_view text = src_.substr(start, pos_ - start);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            throw SyntaxError("malformed number '" + std::string(text) + "'", start);
        }
        current_ = {TokenKind::number, text, start, value};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Token current_;
};

using NodePtr = std::shared_ptr<const Node>;

constexpr int kUnaryMinusPower = 30;

// Left/right binding powers of infix operators.
std::pair<int, int> infix_power(char op) {
    switch (op) {
        case '+':
        case '-':
            return {10, 11};
        case '*':
        case '/':
            return {20, 21};
        case '^':
            return {41, 40};
        default:
            return {-1, -1};
    }
}

class Parser {
public:
    Parser(std::string_view src, const std::set<std::string>& allowed, std::set<std::string>& used)
        : lexer_(src), allowed_(allowed), used_(used) {}

    NodePtr parse_all() {
        NodePtr root = parse_expr(0);
        const Token& t = lexer_.peek();
        if (t.kind != TokenKind::end) {
            throw SyntaxError("unexpected '" + std::string(t.text) + "'", t.offset);
        }
        return root;
    }

private:
    NodePtr parse_expr(int min_power) {
        NodePtr lhs = parse_prefix();
        for (;;) {
            const Token& t = lexer_.peek();
            if (t.kind != TokenKind::op) {
                break;
            }
            const auto [left, right] = infix_power(t.text[0]);
            if (left < min_power) {
                break;
            }
            const char op = lexer_.next().text[0];
            NodePtr rhs = parse_expr(right);
            auto node = std::make_shared<Node>();
            node->kind = NodeKind::binary;
            node->op = op;
            node->args = {std::move(lhs), std::move(rhs)};
            lhs = std::move(node);
        }
        return lhs;
    }

    NodePtr parse_prefix() {
        const Token t = lexer_.next();
        switch (t.kind) {
            case TokenKind::number: {
                auto node = std::make_shared<Node>();
                node->kind = NodeKind::number;
                node->number = t.number;
                return node;
            }
            case TokenKind::identifier:
                return parse_identifier(t);
            case TokenKind::lparen: {
                NodePtr inner = parse_expr(0);
                expect(TokenKind::rparen, "')'");
                return inner;
            }
            case TokenKind::op:
                if (t.text[0] == '-') {
                    auto node = std::make_shared<Node>();
                    node->kind = NodeKind::negate;
                    node->args = {parse_expr(kUnaryMinusPower)};
                    return node;
                }
                break;
            case TokenKind::end:
                throw SyntaxError("unexpected end of input", t.offset);
            default:
                break;
        }
        throw SyntaxError("unexpected '" + std::string(t.text) + "'", t.offset);
    }

    NodePtr parse_identifier(const Token& t) {
        const std::string name(t.text);
        if (const auto arity = function_arity(name)) {
            if (lexer_.peek().kind != TokenKind::lparen) {
                throw SyntaxError("function '" + name + "' must be called with '('", lexer_.peek().offset);
            }
            lexer_.next();
            auto node = std::make_shared<Node>();
            node->kind = NodeKind::call;
            node->name = name;
            node->args.push_back(parse_expr(0));
            while (lexer_.peek().kind == TokenKind::comma) {
                lexer_.next();
                node->args.push_back(parse_expr(0));
            }
            expect(TokenKind::rparen, "')'");
            if (static_cast<int>(node->args.size()) != *arity) {
                throw SyntaxError("function '" + name + "' takes " + std::to_string(*arity) + " argument(s)",
                                  t.offset);
            }
            return node;
        }
        auto node = std::make_shared<Node>();
        node->name = name;
        if (allowed_.count(name) != 0) {
            node->kind = NodeKind::variable;
            used_.insert(name);
            return node;
        }
        if (is_constant(name)) {
            node->kind = NodeKind::constant;
            return node;
        }
        std::string allowed_list;
        for (const auto& v : allowed_) {
            allowed_list += (allowed_list.empty() ? "" : ", ") + v;
        }
        throw UnknownIdentifierError("unknown identifier '" + name + "' at offset " + std::to_string(t.offset) +
                                     " (allowed variables: " + (allowed_list.empty() ? "none" : allowed_list) +
                                     ")");
    }

    void expect(TokenKind kind, const char* what) {
        const Token t = lexer_.next();
        if (t.kind != kind) {
            throw SyntaxError(std::string("expected ") + what, t.offset);
        }
    }

    Lexer lexer_;
    const std::set<std::string>& allowed_;
    std::set<std::string>& used_;
};

[[noreturn]] void domain(const std::string& what) { throw DomainError(what); }

double checked(double v, const char* what) {
    if (!std::isfinite(v)) {
        domain(std::string("non-finite result in ") + what);
    }
    return v;
}

double eval_node(const Node& n, const Bindings& b) {
    switch (n.kind) {
        case NodeKind::number:
            return n.number;
        case NodeKind::constant:
            return n.name == "pi" ? std::numbers::pi : std::numbers::e;
        case NodeKind::variable: {
            const auto it = b.find(n.name);
            if (it == b.end()) {
                throw MissingBindingError("no value bound for variable '" + n.name + "'");
            }
            return it->second;
        }
        case NodeKind::negate:
            return -eval_node(*n.args[0], b);
        case NodeKind::binary: {
            const double x = eval_node(*n.args[0], b);
            const double y = eval_node(*n.args[1], b);
            switch (n.op) {
                case '+':
                    return checked(x + y, "+");
                case '-':
                    return checked(x - y, "-");
                case '*':
                    return checked(x * y, "*");
                case '/':
                    if (y == 0.0) {
                        domain("division by zero");
                    }
                    return checked(x / y, "/");
                default:
                    return checked(std::pow(x, y), "^");
            }
        }
        case NodeKind::call:
            break;
    }
    const double x = eval_node(*n.args[0], b);
    const std::string& f = n.name;
    if (f == "abs") return std::abs(x);
    if (f == "sqrt") {
        if (x < 0.0) domain("sqrt of negative argument");
        return std::sqrt(x);
    }
    if (f == "cbrt") return std::cbrt(x);
    if (f == "root4") {
        if (x < 0.0) domain("root4 of negative argument");
        return std::sqrt(std::sqrt(x));
    }
    if (f == "exp") return checked(std::exp(x), "exp");
    if (f == "ln") {
        if (x <= 0.0) domain("ln of nonpositive argument");
        return std::log(x);
    }
    if (f == "sin") return std::sin(x);
    if (f == "cos") return std::cos(x);
    if (f == "atan") return std::atan(x);
    const double y = eval_node(*n.args[1], b);
    if (f == "min") return std::min(x, y);
    if (f == "max") return std::max(x, y);
    return checked(std::pow(x, y), "pow");
}

void print_node(const Node& n, std::string& out) {
    switch (n.kind) {
        case NodeKind::number: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", n.number);
            out += buf;
            return;
        }
        case NodeKind::variable:
        case NodeKind::constant:
            out += n.name;
            return;
        case NodeKind::negate:
            out += "(-";
            print_node(*n.args[0], out);
            out += ')';
            return;
        case NodeKind::binary:
            out += '(';
            print_node(*n.args[0], out);
            out += ' ';
            out += n.op;
            out += ' ';
            print_node(*n.args[1], out);
            out += ')';
            return;
        case NodeKind::call:
            out += n.name;
            out += '(';
            for (std::size_t i = 0; i < n.args.size(); ++i) {
                if (i != 0) out += ", ";
                print_node(*n.args[i], out);
            }
            out += ')';
            return;
    }
}

bool equal_nodes(const Node& a, const Node& b) {
    if (a.kind != b.kind || a.name != b.name || a.op != b.op || a.args.size() != b.args.size()) {
        return false;
    }
    if (a.kind == NodeKind::number && a.number != b.number) {
        return false;
    }
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (!equal_nodes(*a.args[i], *b.args[i])) {
            return false;
        }
    }
    return true;
}

}  // namespace

Expr parse(std::string_view source, const std::set<std::string>& allowed_vars) {
    Expr e;
    e.source_ = std::string(source);
    Parser parser(source, allowed_vars, e.variables_);
    e.root_ = parser.parse_all();
    return e;
}

std::string Expr::to_string() const {
    std::string out;
    print_node(*root_, out);
    return out;
}

double Expr::eval(const Bindings& bindings) const { return eval_node(*root_, bindings); }

double eval(const Expr& e, const Bindings& bindings) { return e.eval(bindings); }

bool structurally_equal(const Expr& a, const Expr& b) { return equal_nodes(*a.root_, *b.root_); }

}  // namespace fracgreen::expr
