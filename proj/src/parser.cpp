#include <cctype>
#include <cmath>
#include <cstdlib>
#include <optional>

#include "rotalg/ncpoly.hpp"

// Recursive-descent parser for the Laurent expression grammar.  Whitespace
// is insignificant everywhere; numbers are lexed with strtod at atom
// position, so a leading sign belongs to the float token.

namespace rotalg {

namespace {

class Parser {
public:
    Parser(const std::string& text, const ModularParams& mp) : s_(text), mp_(mp) {}

    NCLaurentPoly run() {
        skip_ws();
        if (at_end()) throw EmptyExpression();
        NCLaurentPoly p = parse_expr();
        skip_ws();
        if (!at_end()) throw SyntaxError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
        return p;
    }

private:
    const std::string& s_;
    const ModularParams& mp_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    // '*' or the UTF-8 middle dot used by render().
    bool consume_mul() {
        if (peek() == '*') {
            ++pos_;
            return true;
        }
        if (pos_ + 1 < s_.size() && static_cast<unsigned char>(s_[pos_]) == 0xC2 &&
            static_cast<unsigned char>(s_[pos_ + 1]) == 0xB7) {
            pos_ += 2;
            return true;
        }
        return false;
    }

    NCLaurentPoly parse_expr() {
        NCLaurentPoly p = parse_term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                p = p + parse_term();
            } else if (peek() == '-') {
                ++pos_;
                p = p - parse_term();
            } else {
                return p;
            }
        }
    }

    NCLaurentPoly parse_term() {
        NCLaurentPoly p = parse_factor();
        for (;;) {
            skip_ws();
            if (!consume_mul()) return p;
            p = p * parse_factor();
        }
    }

    NCLaurentPoly parse_factor() {
        NCLaurentPoly p = parse_atom();
        skip_ws();
        if (peek() == '^') {
            const std::size_t at = pos_;
            ++pos_;
            const int e = parse_signed_int();
            try {
                p = pow(p, e);
            } catch (const DomainError& err) {
                throw SyntaxError(err.what(), at);
            }
        }
        skip_ws();
        if (peek() == '\'') {
            ++pos_;
            p = adjoint(p);
        }
        return p;
    }

    int parse_signed_int() {
        skip_ws();
        const std::size_t at = pos_;
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = peek() == '-';
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw SyntaxError("expected an integer exponent", at);
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000000LL) throw SyntaxError("exponent out of range", at);
            ++pos_;
        }
        return static_cast<int>(neg ? -v : v);
    }

    NCLaurentPoly parse_atom() {
        skip_ws();
        const std::size_t at = pos_;
        const char c = peek();
        if (c == 'U') {
            ++pos_;
            return NCLaurentPoly::monomial(mp_, 1, 0);
        }
        if (c == 'V') {
            ++pos_;
            return NCLaurentPoly::monomial(mp_, 0, 1);
        }
        if (c == '(') {
            ++pos_;
            // A parenthesized complex literal is one atom; parsing it as a
            // sub-expression would prune a tiny imaginary part on its own.
            const std::size_t save = pos_;
            if (auto lit = try_complex_literal()) return NCLaurentPoly::constant(mp_, *lit);
            pos_ = save;
            NCLaurentPoly p = parse_expr();
            skip_ws();
            if (peek() != ')') throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '+' || c == '-')
            return parse_number();
        throw SyntaxError("expected 'U', 'V', a number, or '('", at);
    }

    // Matches float ('+'|'-') float 'i' ')' after an opening paren; returns
    // nothing (and leaves restoration to the caller) when the text is a
    // general sub-expression instead.
    std::optional<Complex> try_complex_literal() {
        skip_ws();
        double re = 0.0;
        if (!lex_float(re)) return std::nullopt;
        skip_ws();
        if (peek() != '+' && peek() != '-') return std::nullopt;
        const double sign = peek() == '-' ? -1.0 : 1.0;
        ++pos_;
        skip_ws();
        double im = 0.0;
        if (!lex_float(im)) return std::nullopt;
        if (peek() != 'i') return std::nullopt;
        ++pos_;
        skip_ws();
        if (peek() != ')') return std::nullopt;
        ++pos_;
        return Complex(re, sign * im);
    }

    bool lex_float(double& out) {
        const char* begin = s_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin || !std::isfinite(v)) return false;
        pos_ += static_cast<std::size_t>(end - begin);
        out = v;
        return true;
    }

    NCLaurentPoly parse_number() {
        const std::size_t at = pos_;
        const char* begin = s_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin || !std::isfinite(v)) throw SyntaxError("expected a number", at);
        pos_ += static_cast<std::size_t>(end - begin);
        skip_ws();
        if (peek() == 'i') {
            ++pos_;
            return NCLaurentPoly::constant(mp_, Complex(0.0, v));
        }
        return NCLaurentPoly::constant(mp_, Complex(v, 0.0));
    }
};

}  // namespace

NCLaurentPoly parse(const std::string& expr, const ModularParams& mp) {
    return Parser(expr, mp).run();
}

}  // namespace rotalg
