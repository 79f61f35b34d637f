#pragma once

#include <memory>
#include <string>

namespace pmfp {

// A tiny arithmetic expression over the two metric arguments.
//
// Grammar (whitespace-insensitive):
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := number | 'x' | 'y' | 'abs(' expr ')' | '|' expr '|'
//           | 'max(' expr ',' expr ')' | 'min(' expr ',' expr ')'
//           | '(' expr ')' | '-' factor
//
// Parsing failures raise ArgumentError with the offending position.
class MetricExpr {
public:
    double eval(double x, double y) const;
    const std::string& source() const { return source_; }

    static MetricExpr parse(const std::string& text);

    MetricExpr() = default;
    MetricExpr(const MetricExpr& other);
    MetricExpr& operator=(const MetricExpr& other);
    MetricExpr(MetricExpr&&) noexcept = default;
    MetricExpr& operator=(MetricExpr&&) noexcept = default;
    ~MetricExpr() = default;

    bool empty() const { return root_ == nullptr; }

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::string source_;
};

}  // namespace pmfp
