#pragma once

#include <string>
#include <vector>

#include "ahg/jet.hpp"

namespace ahg {

/// Parsed closed-form expression over named variables (x1..xd by default).
/// Nodes are stored in evaluation (post) order; the root is the last node.
/// Trees compare structurally, so pretty_print/parse round-trips exactly.
struct ExprAst {
    enum class Kind { Constant, Coordinate, Unary, Binary };
    enum class Fn { Sin, Cos, Exp, Log, Sqrt, Neg };

    struct Node {
        Kind kind;
        double cval = 0.0;  // Constant payload, or Binary '^' exponent cache
        int coord = -1;     // Coordinate payload
        Fn fn = Fn::Neg;    // Unary payload
        char op = 0;        // Binary payload: + - * / ^
        int a = -1, b = -1; // children
        bool operator==(const Node&) const = default;
    };

    std::vector<Node> nodes;
    std::vector<std::string> vars;

    bool operator==(const ExprAst&) const = default;
};

/// Standard precedence (^ > unary- > */ > +-), parentheses, whitespace
/// insensitive.  '^' exponents must be numeric literals (optionally signed).
ExprAst parse_expr(const std::string& src, const std::vector<std::string>& vars);
ExprAst parse_expr(const std::string& src, int dim);

std::string pretty_print(const ExprAst& ast);

/// Evaluate over jet-valued variables (one per declared name, equal dims).
Jet eval_expr(const ExprAst& ast, std::span<const Jet> args);

/// Evaluate at a chart point: seeds coordinate jets of the given order.
Jet eval_expr(const ExprAst& ast, std::span<const double> coords, int order);

} // namespace ahg
