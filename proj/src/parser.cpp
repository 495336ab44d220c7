#include "algcalc/parser.hpp"

#include "algcalc/error.hpp"

#include <cctype>
#include <string>

namespace algcalc {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::span<const Coordinate> coords)
        : text_(text), coords_(coords) {}

    ScalarExpr parse() {
        skip_space();
        if (at_end()) throw ParseError("empty expression", pos_);
        ScalarExpr e = expr();
        skip_space();
        if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return e;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ScalarExpr expr() {
        ScalarExpr acc = term();
        while (true) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    ScalarExpr term() {
        ScalarExpr acc = factor();
        while (true) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                skip_space();
                const std::size_t at = pos_;
                ScalarExpr divisor = factor();
                if (divisor.is_zero()) throw ParseError("division by zero", at);
                acc = acc / divisor;
            } else {
                return acc;
            }
        }
    }

    ScalarExpr factor() {
        ScalarExpr b = base();
        if (accept('^')) {
            skip_space();
            const std::size_t at = pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("expected unsigned integer exponent", at);
            unsigned long exponent = 0;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                exponent = exponent * 10 + static_cast<unsigned long>(text_[pos_] - '0');
                if (exponent > 1000) throw ParseError("exponent too large", at);
                ++pos_;
            }
            b = b.pow(static_cast<unsigned>(exponent));
        }
        return b;
    }

    ScalarExpr base() {
        skip_space();
        if (at_end()) throw ParseError("unexpected end of expression", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            const std::size_t open = pos_;
            ++pos_;
            ScalarExpr e = expr();
            if (!accept(')')) {
                throw ParseError("missing ')' for '(' opened at " + std::to_string(open), pos_);
            }
            return e;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return literal();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    ScalarExpr literal() {
        const std::size_t start = pos_;
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += text_[pos_++];
        std::string frac;
        if (!at_end() && text_[pos_] == '.') {
            ++pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) frac += text_[pos_++];
            if (frac.empty()) throw ParseError("malformed number", start);
        }
        mpz_class numerator(digits + frac);
        mpz_class denominator = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) denominator *= 10;
        Rational value(numerator, denominator);
        value.canonicalize();
        return ScalarExpr(value);
    }

    ScalarExpr identifier() {
        const std::size_t start = pos_;
        std::string name;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            name += text_[pos_++];
        for (const Coordinate& coord : coords_) {
            if (coord.name == name) return ScalarExpr::coordinate(coord.index);
        }
        throw ParseError("unknown identifier '" + name + "'", start);
    }

    std::string_view text_;
    std::span<const Coordinate> coords_;
    std::size_t pos_ = 0;
};

} // namespace

ScalarExpr parse_expr(std::string_view text, std::span<const Coordinate> coords) {
    return Parser(text, coords).parse();
}

} // namespace algcalc
