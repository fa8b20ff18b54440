#include "fht/expression.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <vector>

#include "fht/errors.hpp"

namespace fht {

namespace {

// Recursive-descent parser over a deliberately tiny, total grammar. The AST
// is a tree of evaluation closures.

struct Node;
using NodePtr = std::shared_ptr<Node>;

struct Node {
    std::function<double(double)> eval;
    bool uses_chi = false;
    bool divides_by_w = false;
    bool contains_w = false;
    std::vector<double> breakpoints;
    bool is_constant = false;
    double constant = 0.0;
};

struct Parser {
    const std::string& src;
    size_t pos = 0;

    explicit Parser(const std::string& s) : src(s) {}

    [[noreturn]] void fail(const std::string& msg, size_t at) {
        int line = 1, col = 1;
        for (size_t i = 0; i < at && i < src.size(); ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

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

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    NodePtr parse() {
        NodePtr e = expr();
        skip_ws();
        if (pos != src.size()) fail("unexpected trailing input", pos);
        return e;
    }

    NodePtr expr() {  // + -
        NodePtr lhs = term();
        for (;;) {
            if (eat('+')) {
                lhs = binary(lhs, term(), [](double a, double b) { return a + b; });
            } else if (eat('-')) {
                lhs = binary(lhs, term(), [](double a, double b) { return a - b; });
            } else {
                return lhs;
            }
        }
    }

    NodePtr term() {  // * /
        NodePtr lhs = unary();
        for (;;) {
            if (eat('*')) {
                lhs = binary(lhs, unary(), [](double a, double b) { return a * b; });
            } else if (eat('/')) {
                NodePtr rhs = unary();
                NodePtr n = binary(lhs, rhs, [](double a, double b) { return a / b; });
                // Division by (an expression containing) w marks the result.
                if (rhs->contains_w) n->divides_by_w = true;
                lhs = n;
            } else {
                return lhs;
            }
        }
    }

    NodePtr unary() {
        if (eat('-')) {
            NodePtr e = unary();
            NodePtr n = std::make_shared<Node>(*e);
            auto inner = e->eval;
            n->eval = [inner](double x) { return -inner(x); };
            n->is_constant = e->is_constant;
            n->constant = -e->constant;
            return n;
        }
        if (eat('+')) return unary();
        return power();
    }

    NodePtr power() {  // ^ right-associative
        NodePtr base = primary();
        if (eat('^')) {
            NodePtr exp = unary();
            return binary(base, exp, [](double a, double b) { return std::pow(a, b); });
        }
        return base;
    }

    NodePtr binary(const NodePtr& a, const NodePtr& b, double (*op)(double, double)) {
        NodePtr n = std::make_shared<Node>();
        auto ea = a->eval, eb = b->eval;
        n->eval = [ea, eb, op](double x) { return op(ea(x), eb(x)); };
        n->uses_chi = a->uses_chi || b->uses_chi;
        n->divides_by_w = a->divides_by_w || b->divides_by_w;
        n->contains_w = a->contains_w || b->contains_w;
        n->breakpoints = a->breakpoints;
        n->breakpoints.insert(n->breakpoints.end(), b->breakpoints.begin(),
                              b->breakpoints.end());
        if (a->is_constant && b->is_constant) {
            n->is_constant = true;
            n->constant = op(a->constant, b->constant);
        }
        return n;
    }

    NodePtr primary() {
        skip_ws();
        size_t start = pos;
        if (pos >= src.size()) fail("unexpected end of expression", pos);
        char c = src[pos];
        if (eat('(')) {
            NodePtr e = expr();
            if (!eat(')')) fail("expected ')'", pos);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            char* end = nullptr;
            double v = std::strtod(src.c_str() + pos, &end);
            if (end == src.c_str() + pos) fail("malformed number", pos);
            pos = static_cast<size_t>(end - src.c_str());
            NodePtr n = std::make_shared<Node>();
            n->eval = [v](double) { return v; };
            n->is_constant = true;
            n->constant = v;
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t b = pos;
            while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) ++pos;
            std::string name = src.substr(b, pos - b);
            if (name == "x") {
                NodePtr n = std::make_shared<Node>();
                n->eval = [](double x) { return x; };
                return n;
            }
            if (name == "w") {
                NodePtr n = std::make_shared<Node>();
                n->eval = [](double x) { return weight(x); };
                n->contains_w = true;
                return n;
            }
            if (name == "chi") {
                if (!eat('(')) fail("chi requires two constant arguments", pos);
                NodePtr a = expr();
                if (!eat(',')) fail("expected ',' in chi(a,b)", pos);
                NodePtr bb = expr();
                if (!eat(')')) fail("expected ')' after chi(a,b)", pos);
                if (!a->is_constant || !bb->is_constant) {
                    fail("chi arguments must be constants", start);
                }
                double lo = a->constant, hi = bb->constant;
                if (!(lo < hi) || lo < -1.0 || hi > 1.0) {
                    fail("chi(a,b) requires -1 <= a < b <= 1", start);
                }
                NodePtr n = std::make_shared<Node>();
                n->eval = [lo, hi](double x) { return (x > lo && x < hi) ? 1.0 : 0.0; };
                n->uses_chi = true;
                if (lo > -1.0) n->breakpoints.push_back(lo);
                if (hi < 1.0) n->breakpoints.push_back(hi);
                return n;
            }
            static const std::pair<const char*, double (*)(double)> kFns[] = {
                {"log", [](double v) { return std::log(v); }},
                {"exp", [](double v) { return std::exp(v); }},
                {"sqrt", [](double v) { return std::sqrt(v); }},
                {"abs", [](double v) { return std::abs(v); }},
                {"sin", [](double v) { return std::sin(v); }},
                {"cos", [](double v) { return std::cos(v); }},
            };
            for (auto& [fname, fn] : kFns) {
                if (name == fname) {
                    if (!eat('(')) fail(std::string(fname) + " requires an argument", pos);
                    NodePtr arg = expr();
                    if (!eat(')')) fail("expected ')'", pos);
                    NodePtr n = std::make_shared<Node>();
                    auto inner = arg->eval;
                    auto f = fn;
                    n->eval = [inner, f](double x) { return f(inner(x)); };
                    n->uses_chi = arg->uses_chi;
                    n->divides_by_w = arg->divides_by_w;
                    n->contains_w = arg->contains_w;
                    n->breakpoints = arg->breakpoints;
                    if (arg->is_constant) {
                        n->is_constant = true;
                        n->constant = fn(arg->constant);
                    }
                    return n;
                }
            }
            fail("unknown identifier '" + name + "'", b);
        }
        fail(std::string("unexpected character '") + c + "'", pos);
    }
};

}  // namespace

FunctionHandle parse_expression(const std::string& source) {
    Parser p(source);
    NodePtr root = p.parse();
    FunctionHandle h;
    h.eval = root->eval;
    h.name = source;
    if (root->divides_by_w) {
        h.tag = SingularityTag::InverseWeight;
    } else if (root->uses_chi) {
        h.tag = SingularityTag::Jump;
    } else {
        h.tag = SingularityTag::Smooth;
    }
    h.breakpoints = root->breakpoints;
    std::sort(h.breakpoints.begin(), h.breakpoints.end());
    h.breakpoints.erase(std::unique(h.breakpoints.begin(), h.breakpoints.end()),
                        h.breakpoints.end());
    return h;
}

}  // namespace fht
