#pragma once

// Test-only oracle: evaluates an expression string straight to a q x q
// matrix by substituting U -> z1*U0, V -> z2*V0 in the parse tree, with no
// normal-form rewriting anywhere on the path.  Keeping this separate from
// the library parser is the point: agreement between the two is evidence,
// not tautology.

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "rotalg/algebra.hpp"

namespace rotalg::testing {

class MatrixEvalOracle {
public:
    MatrixEvalOracle(const ModularParams& mp, Complex z1, Complex z2)
        : u_(z1 * shift_matrix(mp)), v_(z2 * clock_matrix(mp)), q_(mp.q) {}

    CMatrix eval(const std::string& text) {
        s_ = text;
        pos_ = 0;
        CMatrix m = expr();
        ws();
        if (pos_ != s_.size()) throw std::runtime_error("oracle: trailing input");
        return m;
    }

private:
    CMatrix u_, v_;
    int q_;
    std::string s_;
    std::size_t pos_ = 0;

    void ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    bool mul_token() {
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

    CMatrix expr() {
        CMatrix m = term();
        for (;;) {
            ws();
            if (peek() == '+') {
                ++pos_;
                m += term();
            } else if (peek() == '-') {
                ++pos_;
                m -= term();
            } else {
                return m;
            }
        }
    }

    CMatrix term() {
        CMatrix m = factor();
        for (;;) {
            ws();
            if (!mul_token()) return m;
            m = m * factor();
        }
    }

    CMatrix factor() {
        CMatrix m = atom();
        ws();
        if (peek() == '^') {
            ++pos_;
            ws();
            bool neg = false;
            if (peek() == '+' || peek() == '-') {
                neg = peek() == '-';
                ++pos_;
            }
            long long e = 0;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw std::runtime_error("oracle: bad exponent");
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                e = e * 10 + (s_[pos_] - '0');
                ++pos_;
            }
            CMatrix base = neg ? CMatrix(m.inverse()) : m;
            CMatrix acc = CMatrix::Identity(q_, q_);
            for (long long i = 0; i < e; ++i) acc = acc * base;
            m = acc;
        }
        ws();
        if (peek() == '\'') {
            ++pos_;
            m = m.adjoint().eval();
        }
        return m;
    }

    CMatrix atom() {
        ws();
        const char c = peek();
        if (c == 'U') {
            ++pos_;
            return u_;
        }
        if (c == 'V') {
            ++pos_;
            return v_;
        }
        if (c == '(') {
            ++pos_;
            CMatrix m = expr();
            ws();
            if (peek() != ')') throw std::runtime_error("oracle: expected ')'");
            ++pos_;
            return m;
        }
        const char* begin = s_.c_str() + pos_;
        char* end = nullptr;
        const double val = std::strtod(begin, &end);
        if (end == begin) throw std::runtime_error("oracle: expected a number");
        pos_ += static_cast<std::size_t>(end - begin);
        ws();
        Complex z(val, 0.0);
        if (peek() == 'i') {
            ++pos_;
            z = Complex(0.0, val);
        }
        return z * CMatrix::Identity(q_, q_);
    }
};

}  // namespace rotalg::testing
