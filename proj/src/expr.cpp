#include "colloc/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace colloc::expr {

ParseError::ParseError(std::size_t offset_, const std::string& message)
    : std::runtime_error(message + " at offset " + std::to_string(offset_)),
      offset(offset_)
{
}

namespace {

NodePtr make(Node::Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr)
{
    auto node = std::make_unique<Node>();
    node->kind = kind;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr run()
    {
        NodePtr root = parse_expr();
        skip_space();
        if (pos_ != text_.size())
            throw ParseError(pos_, "unexpected trailing input");
        return root;
    }

private:
    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    NodePtr parse_expr()
    {
        NodePtr lhs = parse_term();
        for (;;) {
            if (eat('+')) lhs = make(Node::Kind::Add, std::move(lhs), parse_term());
            else if (eat('-')) lhs = make(Node::Kind::Sub, std::move(lhs), parse_term());
            else return lhs;
        }
    }

    NodePtr parse_term()
    {
        NodePtr lhs = parse_factor();
        for (;;) {
            if (eat('*')) lhs = make(Node::Kind::Mul, std::move(lhs), parse_factor());
            else if (eat('/')) lhs = make(Node::Kind::Div, std::move(lhs), parse_factor());
            else return lhs;
        }
    }

    NodePtr parse_factor()
    {
        NodePtr base = parse_unary();
        if (eat('^'))
            return make(Node::Kind::Pow, std::move(base), parse_factor());
        return base;
    }

    NodePtr parse_unary()
    {
        if (eat('-'))
            return make(Node::Kind::Neg, parse_atom());
        return parse_atom();
    }

    NodePtr parse_atom()
    {
        skip_space();
        if (pos_ >= text_.size())
            throw ParseError(pos_, "expected number, variable, function or '('");
        const char c = text_[pos_];

        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return parse_number();

        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_expr();
            if (!eat(')')) throw ParseError(pos_, "expected ')'");
            return inner;
        }

        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return parse_identifier();

        throw ParseError(pos_, "expected number, variable, function or '('");
    }

    NodePtr parse_number()
    {
        const std::size_t start = pos_;
        double value = 0.0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [end, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || end == first)
            throw ParseError(start, "malformed number");
        pos_ = static_cast<std::size_t>(end - text_.data());
        auto node = make(Node::Kind::Number);
        node->number = value;
        return node;
    }

    NodePtr parse_identifier()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);

        if (name == "t" && peek() != '(') return make(Node::Kind::VarT);
        if (name == "y" && peek() != '(') return make(Node::Kind::VarY);

        Func fn;
        if (name == "sin") fn = Func::Sin;
        else if (name == "cos") fn = Func::Cos;
        else if (name == "exp") fn = Func::Exp;
        else if (name == "ln") fn = Func::Ln;
        else if (name == "sqrt") fn = Func::Sqrt;
        else if (name == "abs") fn = Func::Abs;
        else throw ParseError(start, "unknown function or variable '" + std::string(name) + "'");

        if (!eat('(')) throw ParseError(pos_, "expected '(' after function name");
        NodePtr arg = parse_expr();
        if (!eat(')')) throw ParseError(pos_, "expected ')'");
        auto node = make(Node::Kind::Call, std::move(arg));
        node->fn = fn;
        return node;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

const char* func_name(Func fn)
{
    switch (fn) {
        case Func::Sin: return "sin";
        case Func::Cos: return "cos";
        case Func::Exp: return "exp";
        case Func::Ln: return "ln";
        case Func::Sqrt: return "sqrt";
        case Func::Abs: return "abs";
    }
    return "?";
}

} // namespace

NodePtr parse(std::string_view text)
{
    return Parser(text).run();
}

double eval(const Node& node, double t, double y)
{
    switch (node.kind) {
        case Node::Kind::Number: return node.number;
        case Node::Kind::VarT: return t;
        case Node::Kind::VarY: return y;
        case Node::Kind::Neg: return -eval(*node.lhs, t, y);
        case Node::Kind::Add: return eval(*node.lhs, t, y) + eval(*node.rhs, t, y);
        case Node::Kind::Sub: return eval(*node.lhs, t, y) - eval(*node.rhs, t, y);
        case Node::Kind::Mul: return eval(*node.lhs, t, y) * eval(*node.rhs, t, y);
        case Node::Kind::Div: return eval(*node.lhs, t, y) / eval(*node.rhs, t, y);
        case Node::Kind::Pow: return std::pow(eval(*node.lhs, t, y), eval(*node.rhs, t, y));
        case Node::Kind::Call: {
            const double arg = eval(*node.lhs, t, y);
            switch (node.fn) {
                case Func::Sin: return std::sin(arg);
                case Func::Cos: return std::cos(arg);
                case Func::Exp: return std::exp(arg);
                case Func::Ln: return std::log(arg);
                case Func::Sqrt: return std::sqrt(arg);
                case Func::Abs: return std::fabs(arg);
            }
            return 0.0;
        }
    }
    return 0.0;
}

std::string print(const Node& node)
{
    switch (node.kind) {
        case Node::Kind::Number: {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", node.number);
            return buf;
        }
        case Node::Kind::VarT: return "t";
        case Node::Kind::VarY: return "y";
        case Node::Kind::Neg: return "(-" + print(*node.lhs) + ")";
        case Node::Kind::Add: return "(" + print(*node.lhs) + "+" + print(*node.rhs) + ")";
        case Node::Kind::Sub: return "(" + print(*node.lhs) + "-" + print(*node.rhs) + ")";
        case Node::Kind::Mul: return "(" + print(*node.lhs) + "*" + print(*node.rhs) + ")";
        case Node::Kind::Div: return "(" + print(*node.lhs) + "/" + print(*node.rhs) + ")";
        case Node::Kind::Pow: return "(" + print(*node.lhs) + "^" + print(*node.rhs) + ")";
        case Node::Kind::Call:
            return std::string(func_name(node.fn)) + "(" + print(*node.lhs) + ")";
    }
    return "";
}

NodePtr clone(const Node& node)
{
    auto copy = std::make_unique<Node>();
    copy->kind = node.kind;
    copy->number = node.number;
    copy->fn = node.fn;
    if (node.lhs) copy->lhs = clone(*node.lhs);
    if (node.rhs) copy->rhs = clone(*node.rhs);
    return copy;
}

} // namespace colloc::expr
