#include "pmfp/text_specs.hpp"

#include <cctype>
#include <charconv>

#include "pmfp/errors.hpp"

namespace pmfp {

namespace {

class SetParser {
public:
    explicit SetParser(const std::string& text) : text_(text) {}

    SetDescriptor run() {
        SetDescriptor set;
        skip_separators();
        if (pos_ >= text_.size()) fail("empty set specification");
        while (pos_ < text_.size()) {
            atom(set);
            skip_separators();
        }
        return set;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw ArgumentError("set parse error at position " + std::to_string(pos_) +
                            ": " + what + " in \"" + text_ + "\"");
    }

    void skip_separators() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == 'u') {
                ++pos_;
            } else {
                break;
            }
        }
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    double number() {
        skip_ws();
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc()) fail("expected a number");
        pos_ += static_cast<std::size_t>(ptr - begin);
        return v;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    void atom(SetDescriptor& set) {
        const char open = text_[pos_];
        if (open == '{') {
            ++pos_;
            set.add_point(number());
            skip_ws();
            while (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                set.add_point(number());
                skip_ws();
            }
            expect('}');
            return;
        }
        if (open != '[' && open != '(') {
            fail("expected '[', '(' or '{'");
        }
        ++pos_;
        const double lo = number();
        expect(',');
        const double hi = number();
        skip_ws();
        if (pos_ >= text_.size() || (text_[pos_] != ']' && text_[pos_] != ')')) {
            fail("expected ']' or ')'");
        }
        const char close = text_[pos_];
        ++pos_;
        if (lo > hi) fail("interval endpoints out of order");
        set.add_interval(lo, hi, open == '[', close == ']');
    }
};

}  // namespace

SetDescriptor parse_set_spec(const std::string& text) {
    return SetParser(text).run();
}

CyclicDecomposition parse_decomp_spec(const std::string& text) {
    CyclicDecomposition decomp;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t semi = text.find(';', start);
        const std::size_t end = (semi == std::string::npos) ? text.size() : semi;
        decomp.sets.push_back(parse_set_spec(text.substr(start, end - start)));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    if (decomp.sets.empty()) {
        throw ArgumentError("decomposition specification is empty");
    }
    return decomp;
}

PiecewiseMap parse_map_spec(const std::string& text,
                            const SetDescriptor& default_guard) {
    PiecewiseMap map(text);
    if (text.find(':') == std::string::npos) {
        const AffineCoeffs c = parse_affine(text);
        map.add_rule(default_guard, c.a, c.b);
        return map;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t semi = text.find(';', start);
        const std::size_t end = (semi == std::string::npos) ? text.size() : semi;
        const std::string piece = text.substr(start, end - start);
        const std::size_t colon = piece.find(':');
        if (colon == std::string::npos) {
            throw ArgumentError("map piece \"" + piece + "\" is missing ':'");
        }
        const AffineCoeffs c = parse_affine(piece.substr(colon + 1));
        map.add_rule(parse_set_spec(piece.substr(0, colon)), c.a, c.b);
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return map;
}

}  // namespace pmfp
