#include "pmfp/metric_expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "pmfp/errors.hpp"

namespace pmfp {

struct MetricExpr::Node {
    enum class Kind { Number, VarX, VarY, Add, Sub, Mul, Neg, Abs, Max, Min };
    Kind kind;
    double value = 0.0;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

using Node = MetricExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_node(Node::Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

NodePtr make_number(double v) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Number;
    n->value = v;
    return n;
}

double eval_node(const Node& n, double x, double y) {
    switch (n.kind) {
        case Node::Kind::Number: return n.value;
        case Node::Kind::VarX: return x;
        case Node::Kind::VarY: return y;
        case Node::Kind::Add: return eval_node(*n.lhs, x, y) + eval_node(*n.rhs, x, y);
        case Node::Kind::Sub: return eval_node(*n.lhs, x, y) - eval_node(*n.rhs, x, y);
        case Node::Kind::Mul: return eval_node(*n.lhs, x, y) * eval_node(*n.rhs, x, y);
        case Node::Kind::Neg: return -eval_node(*n.lhs, x, y);
        case Node::Kind::Abs: return std::fabs(eval_node(*n.lhs, x, y));
        case Node::Kind::Max: {
            const double a = eval_node(*n.lhs, x, y);
            const double b = eval_node(*n.rhs, x, y);
            return a > b ? a : b;
        }
        case Node::Kind::Min: {
            const double a = eval_node(*n.lhs, x, y);
            const double b = eval_node(*n.rhs, x, y);
            return a < b ? a : b;
        }
    }
    throw Error("corrupt expression node");
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    NodePtr run() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return e;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw ArgumentError("expression parse error at position " +
                            std::to_string(pos_) + ": " + what + " in \"" + text_ +
                            "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    bool eat_word(const char* w) {
        skip_ws();
        std::size_t n = 0;
        while (w[n] != '\0') ++n;
        if (text_.compare(pos_, n, w) != 0) return false;
        pos_ += n;
        return true;
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            if (eat('+')) {
                lhs = make_node(Node::Kind::Add, lhs, term());
            } else if (eat('-')) {
                lhs = make_node(Node::Kind::Sub, lhs, term());
            } else {
                return lhs;
            }
        }
    }

    NodePtr term() {
        NodePtr lhs = factor();
        while (eat('*')) lhs = make_node(Node::Kind::Mul, lhs, factor());
        return lhs;
    }

    NodePtr factor() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            expect(')');
            return e;
        }
        if (c == '|') {
            ++pos_;
            NodePtr e = expr();
            expect('|');
            return make_node(Node::Kind::Abs, e);
        }
        if (c == '-') {
            ++pos_;
            return make_node(Node::Kind::Neg, factor());
        }
        if (eat_word("abs")) {
            expect('(');
            NodePtr e = expr();
            expect(')');
            return make_node(Node::Kind::Abs, e);
        }
        if (eat_word("max")) {
            expect('(');
            NodePtr a = expr();
            expect(',');
            NodePtr b = expr();
            expect(')');
            return make_node(Node::Kind::Max, a, b);
        }
        if (eat_word("min")) {
            expect('(');
            NodePtr a = expr();
            expect(',');
            NodePtr b = expr();
            expect(')');
            return make_node(Node::Kind::Min, a, b);
        }
        if (c == 'x') {
            ++pos_;
            return make_node(Node::Kind::VarX);
        }
        if (c == 'y') {
            ++pos_;
            return make_node(Node::Kind::VarY);
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = text_.data() + pos_;
            const char* end = text_.data() + text_.size();
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(begin, end, v);
            if (ec != std::errc()) fail("bad number");
            pos_ += static_cast<std::size_t>(ptr - begin);
            return make_number(v);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

double MetricExpr::eval(double x, double y) const {
    if (!root_) throw Error("evaluating an empty expression");
    return eval_node(*root_, x, y);
}

MetricExpr MetricExpr::parse(const std::string& text) {
    MetricExpr e;
    e.root_ = Parser(text).run();
    e.source_ = text;
    return e;
}

MetricExpr::MetricExpr(const MetricExpr& other) = default;
MetricExpr& MetricExpr::operator=(const MetricExpr& other) = default;

}  // namespace pmfp
