#ifndef COLLOC_EXPR_HPP
#define COLLOC_EXPR_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace colloc::expr {

/// Syntax error with the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset_, const std::string& message);
    std::size_t offset;
};

enum class Func { Sin, Cos, Exp, Ln, Sqrt, Abs };

struct Node;
using NodePtr = std::unique_ptr<Node>;

/// Scalar right-hand-side expression over the variables t and y.
///
/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := unary ('^' factor)?          -- '^' right-associative
///   unary  := '-'? atom
///   atom   := number | 't' | 'y' | ident '(' expr ')' | '(' expr ')'
struct Node {
    enum class Kind { Number, VarT, VarY, Neg, Add, Sub, Mul, Div, Pow, Call };
    Kind kind;
    double number = 0.0;
    Func fn = Func::Sin;
    NodePtr lhs;
    NodePtr rhs;
};

NodePtr parse(std::string_view text);

double eval(const Node& node, double t, double y);

/// Fully parenthesized rendering; parse(print(n)) is an equivalent tree.
std::string print(const Node& node);

NodePtr clone(const Node& node);

} // namespace colloc::expr

#endif
