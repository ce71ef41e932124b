#pragma once

#include <map>
#include <string>
#include <utility>

#include "rotalg/algebra.hpp"

namespace rotalg {

// A noncommutative Laurent polynomial sum c(m,n) U^m V^n held in normal form
// (all U powers to the left of all V powers) under UV = omega VU.
// Coefficients with |c| < 1e-15 are pruned on every mutation.
class NCLaurentPoly {
public:
    using Key = std::pair<int, int>;  // (m, n) exponents of U^m V^n
    using CoeffMap = std::map<Key, Complex>;

    static constexpr double kPruneTol = 1e-15;

    explicit NCLaurentPoly(const ModularParams& mp) : params_(mp) {}

    static NCLaurentPoly zero(const ModularParams& mp) { return NCLaurentPoly(mp); }
    static NCLaurentPoly constant(const ModularParams& mp, Complex c);
    static NCLaurentPoly monomial(const ModularParams& mp, int m, int n, Complex c = 1.0);

    const ModularParams& params() const { return params_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t support_size() const { return coeffs_.size(); }

    Complex coeff(int m, int n) const;
    void add_term(int m, int n, Complex c);

    NCLaurentPoly operator+(const NCLaurentPoly& other) const;
    NCLaurentPoly operator-(const NCLaurentPoly& other) const;
    NCLaurentPoly operator*(const NCLaurentPoly& other) const;
    NCLaurentPoly operator*(Complex scalar) const;
    NCLaurentPoly operator-() const { return *this * Complex(-1.0, 0.0); }

    // Sum of coefficient moduli; a cheap upper bound on the operator norm.
    double coeff_one_norm() const;

private:
    ModularParams params_;
    CoeffMap coeffs_;

    void require_same_params(const NCLaurentPoly& other) const;
};

// (U^m V^n)(U^m' V^n') = omega^{-n m'} U^{m+m'} V^{n+n'}, extended bilinearly.
NCLaurentPoly multiply(const NCLaurentPoly& a, const NCLaurentPoly& b);

// (c U^m V^n)^* = conj(c) omega^{-m n} U^{-m} V^{-n}, extended additively.
NCLaurentPoly adjoint(const NCLaurentPoly& a);

bool is_selfadjoint(const NCLaurentPoly& a, double tol);

// Inverse of a single monomial c U^m V^n (throws DomainError on anything else).
NCLaurentPoly monomial_inverse(const NCLaurentPoly& a);

// Non-negative integer power by repeated multiplication; negative powers
// require a monomial base.
NCLaurentPoly pow(const NCLaurentPoly& a, int exponent);

// Front end for the expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' signed-int] ["'"]
//   atom   := 'U' | 'V' | complex-literal | '(' expr ')'
// The middle dot of rendered output is accepted as a synonym for '*'.
NCLaurentPoly parse(const std::string& expr, const ModularParams& mp);

// Canonical text form: terms ascending in (m,n), each as (coeff)*U^m*V^n with
// a middle-dot separator and coefficients at 17 significant digits.  Output
// re-parses to the identical coefficient map.
std::string render(const NCLaurentPoly& a);

// %.17g — enough digits to round-trip an IEEE double exactly.
std::string format_double17(double x);
std::string format_complex17(Complex c);

}  // namespace rotalg
