#include "ahg/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace ahg {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Parser {
    const std::string& src;
    const std::vector<std::string>& vars;
    std::size_t pos = 0;
    std::vector<ExprAst::Node>* out;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    int push(ExprAst::Node n) {
        out->push_back(n);
        return int(out->size()) - 1;
    }

    int push_const(double v) {
        ExprAst::Node n;
        n.kind = ExprAst::Kind::Constant;
        n.cval = v;
        return push(n);
    }

    double parse_number() {
        skip_ws();
        std::size_t start = pos;
        double v = 0;
        auto res = std::from_chars(src.data() + pos, src.data() + src.size(), v);
        if (res.ec != std::errc() || res.ptr == src.data() + pos) fail("expected number");
        pos = std::size_t(res.ptr - src.data());
        (void)start;
        return v;
    }

    // sum := product (('+'|'-') product)*
    int parse_sum() {
        int lhs = parse_product();
        for (;;) {
            skip_ws();
            if (pos >= src.size()) return lhs;
            char c = src[pos];
            if (c != '+' && c != '-') return lhs;
            ++pos;
            int rhs = parse_product();
            ExprAst::Node n;
            n.kind = ExprAst::Kind::Binary;
            n.op = c;
            n.a = lhs;
            n.b = rhs;
            lhs = push(n);
        }
    }

    int parse_product() {
        int lhs = parse_unary();
        for (;;) {
            skip_ws();
            if (pos >= src.size()) return lhs;
            char c = src[pos];
            if (c != '*' && c != '/') return lhs;
            ++pos;
            int rhs = parse_unary();
            ExprAst::Node n;
            n.kind = ExprAst::Kind::Binary;
            n.op = c;
            n.a = lhs;
            n.b = rhs;
            lhs = push(n);
        }
    }

    int parse_unary() {
        skip_ws();
        if (eat('-')) {
            int child = parse_unary();
            ExprAst::Node n;
            n.kind = ExprAst::Kind::Unary;
            n.fn = ExprAst::Fn::Neg;
            n.a = child;
            return push(n);
        }
        return parse_power();
    }

    int parse_power() {
        int base = parse_atom();
        skip_ws();
        if (pos < src.size() && src[pos] == '^') {
            ++pos;
            skip_ws();
            double sign = 1.0;
            if (eat('-')) sign = -1.0;
            bool paren = eat('(');
            if (paren && eat('-')) sign = -sign;
            double e = sign * parse_number();
            if (paren && !eat(')')) fail("expected ')' after exponent");
            ExprAst::Node n;
            n.kind = ExprAst::Kind::Binary;
            n.op = '^';
            n.cval = e;
            n.a = base;
            n.b = push_const(e);
            return push(n);
        }
        return base;
    }

    int parse_atom() {
        skip_ws();
        if (pos >= src.size()) fail("unexpected end of expression");
        char c = src[pos];
        if (c == '(') {
            ++pos;
            int e = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return push_const(parse_number());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_' ||
                    src[pos] == '.'))
                ++pos;
            std::string name = src.substr(start, pos - start);
            if (name == "pi") return push_const(kPi);
            static const std::pair<const char*, ExprAst::Fn> fns[] = {
                {"sin", ExprAst::Fn::Sin},   {"cos", ExprAst::Fn::Cos}, {"exp", ExprAst::Fn::Exp},
                {"log", ExprAst::Fn::Log},   {"sqrt", ExprAst::Fn::Sqrt}};
            for (auto& [fname, fid] : fns)
                if (name == fname) {
                    if (!eat('(')) fail("expected '(' after function name");
                    int child = parse_sum();
                    if (!eat(')')) fail("expected ')'");
                    ExprAst::Node n;
                    n.kind = ExprAst::Kind::Unary;
                    n.fn = fid;
                    n.a = child;
                    return push(n);
                }
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (name == vars[i]) {
                    ExprAst::Node n;
                    n.kind = ExprAst::Kind::Coordinate;
                    n.coord = int(i);
                    return push(n);
                }
            // x{k} beyond the declared dimension gets a dedicated message
            if (name.size() > 1 && name[0] == 'x') {
                bool digits = true;
                for (std::size_t i = 1; i < name.size(); ++i)
                    if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
                if (digits) {
                    pos = start;
                    fail("coordinate index out of range: " + name);
                }
            }
            pos = start;
            fail("unknown identifier: " + name);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

const char* fn_name(ExprAst::Fn f) {
    switch (f) {
        case ExprAst::Fn::Sin: return "sin";
        case ExprAst::Fn::Cos: return "cos";
        case ExprAst::Fn::Exp: return "exp";
        case ExprAst::Fn::Log: return "log";
        case ExprAst::Fn::Sqrt: return "sqrt";
        case ExprAst::Fn::Neg: return "-";
    }
    return "?";
}

std::string fmt_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void print_node(const ExprAst& ast, int id, std::string& s) {
    const auto& n = ast.nodes[id];
    switch (n.kind) {
        case ExprAst::Kind::Constant: {
            if (n.cval < 0) {
                s += "(0-" + fmt_number(-n.cval) + ")";
            } else {
                s += fmt_number(n.cval);
            }
            break;
        }
        case ExprAst::Kind::Coordinate: s += ast.vars[n.coord]; break;
        case ExprAst::Kind::Unary:
            if (n.fn == ExprAst::Fn::Neg) {
                s += "(-";
                print_node(ast, n.a, s);
                s += ")";
            } else {
                s += fn_name(n.fn);
                s += "(";
                print_node(ast, n.a, s);
                s += ")";
            }
            break;
        case ExprAst::Kind::Binary:
            if (n.op == '^') {
                s += "(";
                print_node(ast, n.a, s);
                s += ")^";
                if (n.cval < 0) {
                    s += "(" + fmt_number(n.cval) + ")";
                } else {
                    s += fmt_number(n.cval);
                }
            } else {
                s += "(";
                print_node(ast, n.a, s);
                s += n.op;
                print_node(ast, n.b, s);
                s += ")";
            }
            break;
    }
}

} // namespace

ExprAst parse_expr(const std::string& src, const std::vector<std::string>& vars) {
    if (src.empty()) throw ParseError("empty expression", 0);
    ExprAst ast;
    ast.vars = vars;
    Parser p{src, vars, 0, &ast.nodes};
    p.parse_sum();
    p.skip_ws();
    if (p.pos != src.size()) p.fail("trailing input");
    return ast;
}

ExprAst parse_expr(const std::string& src, int dim) {
    std::vector<std::string> vars(dim);
    for (int i = 0; i < dim; ++i) vars[i] = "x" + std::to_string(i + 1);
    return parse_expr(src, vars);
}

std::string pretty_print(const ExprAst& ast) {
    std::string s;
    if (!ast.nodes.empty()) print_node(ast, int(ast.nodes.size()) - 1, s);
    return s;
}

Jet eval_expr(const ExprAst& ast, std::span<const Jet> args) {
    if (args.size() != ast.vars.size()) throw DomainError("eval_expr: argument count mismatch");
    std::vector<Jet> v(ast.nodes.size());
    for (std::size_t i = 0; i < ast.nodes.size(); ++i) {
        const auto& n = ast.nodes[i];
        switch (n.kind) {
            case ExprAst::Kind::Constant:
                v[i] = jet_const(args.empty() ? 0 : args[0].dim,
                                 args.empty() ? 1 : args[0].order, n.cval);
                break;
            case ExprAst::Kind::Coordinate: v[i] = args[n.coord]; break;
            case ExprAst::Kind::Unary:
                switch (n.fn) {
                    case ExprAst::Fn::Sin: v[i] = sin(v[n.a]); break;
                    case ExprAst::Fn::Cos: v[i] = cos(v[n.a]); break;
                    case ExprAst::Fn::Exp: v[i] = exp(v[n.a]); break;
                    case ExprAst::Fn::Log: v[i] = log(v[n.a]); break;
                    case ExprAst::Fn::Sqrt: v[i] = sqrt(v[n.a]); break;
                    case ExprAst::Fn::Neg: v[i] = -v[n.a]; break;
                }
                break;
            case ExprAst::Kind::Binary:
                switch (n.op) {
                    case '+': v[i] = v[n.a] + v[n.b]; break;
                    case '-': v[i] = v[n.a] - v[n.b]; break;
                    case '*': v[i] = v[n.a] * v[n.b]; break;
                    case '/': v[i] = v[n.a] / v[n.b]; break;
                    case '^': v[i] = pow(v[n.a], n.cval); break;
                }
                break;
        }
    }
    return v.back();
}

Jet eval_expr(const ExprAst& ast, std::span<const double> coords, int order) {
    if (order < 1 || order > 3) throw OrderError("eval_expr: order must be 1, 2 or 3");
    const int d = int(coords.size());
    std::vector<Jet> args(d);
    for (int i = 0; i < d; ++i) args[i] = jet_coordinate(d, order, i, coords[i]);
    return eval_expr(ast, args);
}

} // namespace ahg
