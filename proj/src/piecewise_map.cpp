#include "pmfp/piecewise_map.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "pmfp/errors.hpp"

namespace pmfp {

PiecewiseMap& PiecewiseMap::add_rule(SetDescriptor guard, double a, double b) {
    rules_.push_back({std::move(guard), a, b});
    return *this;
}

PiecewiseMap& PiecewiseMap::add_constant(SetDescriptor guard, double value) {
    return add_rule(std::move(guard), 0.0, value);
}

double PiecewiseMap::apply(double x, double tol) const {
    for (const auto& r : rules_) {
        if (r.guard.contains(x, tol)) return r.image(x);
    }
    throw MapTotalityError("map " + (name_.empty() ? "<unnamed>" : name_) +
                               " has no rule covering " + std::to_string(x),
                           x);
}

double PiecewiseMap::iterate(double x, std::size_t n, double tol) const {
    for (std::size_t i = 0; i < n; ++i) x = apply(x, tol);
    return x;
}

bool PiecewiseMap::covers(double x, double tol) const {
    for (const auto& r : rules_) {
        if (r.guard.contains(x, tol)) return true;
    }
    return false;
}

namespace {

// Recursive-descent parser tracking (a, b) of a*x + b per subexpression.
class AffineParser {
public:
    explicit AffineParser(const std::string& text) : text_(text) {}

    AffineCoeffs run() {
        AffineCoeffs c = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return c;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw ArgumentError("map expression parse error at position " +
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

    AffineCoeffs expr() {
        AffineCoeffs lhs = term();
        for (;;) {
            if (eat('+')) {
                AffineCoeffs r = term();
                lhs.a += r.a;
                lhs.b += r.b;
            } else if (eat('-')) {
                AffineCoeffs r = term();
                lhs.a -= r.a;
                lhs.b -= r.b;
            } else {
                return lhs;
            }
        }
    }

    AffineCoeffs term() {
        AffineCoeffs lhs = factor();
        for (;;) {
            if (eat('*')) {
                AffineCoeffs r = factor();
                if (lhs.a != 0.0 && r.a != 0.0) fail("product is not affine");
                if (r.a == 0.0) {
                    lhs.a *= r.b;
                    lhs.b *= r.b;
                } else {
                    lhs = {r.a * lhs.b, r.b * lhs.b};
                }
            } else if (eat('/')) {
                AffineCoeffs r = factor();
                if (r.a != 0.0) fail("division by a non-constant");
                if (r.b == 0.0) fail("division by zero");
                lhs.a /= r.b;
                lhs.b /= r.b;
            } else {
                return lhs;
            }
        }
    }

    AffineCoeffs factor() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            AffineCoeffs e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == '-') {
            ++pos_;
            AffineCoeffs e = factor();
            return {-e.a, -e.b};
        }
        if (c == 'x') {
            ++pos_;
            return {1.0, 0.0};
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = text_.data() + pos_;
            const char* end = text_.data() + text_.size();
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(begin, end, v);
            if (ec != std::errc()) fail("bad number");
            pos_ += static_cast<std::size_t>(ptr - begin);
            return {0.0, v};
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

AffineCoeffs parse_affine(const std::string& text) {
    return AffineParser(text).run();
}

}  // namespace pmfp
