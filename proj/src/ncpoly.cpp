#include "rotalg/ncpoly.hpp"

#include <cmath>
#include <cstdio>

namespace rotalg {

NCLaurentPoly NCLaurentPoly::constant(const ModularParams& mp, Complex c) {
    return monomial(mp, 0, 0, c);
}

NCLaurentPoly NCLaurentPoly::monomial(const ModularParams& mp, int m, int n, Complex c) {
    NCLaurentPoly p(mp);
    p.add_term(m, n, c);
    return p;
}

Complex NCLaurentPoly::coeff(int m, int n) const {
    auto it = coeffs_.find({m, n});
    return it == coeffs_.end() ? Complex(0.0) : it->second;
}

void NCLaurentPoly::add_term(int m, int n, Complex c) {
    auto [it, inserted] = coeffs_.try_emplace({m, n}, c);
    if (!inserted) it->second += c;
    if (std::abs(it->second) < kPruneTol) coeffs_.erase(it);
}

void NCLaurentPoly::require_same_params(const NCLaurentPoly& other) const {
    if (params_.p != other.params_.p || params_.q != other.params_.q)
        throw ParamsMismatch("polynomials live in different algebras: (" +
                             std::to_string(params_.p) + "/" + std::to_string(params_.q) +
                             ") vs (" + std::to_string(other.params_.p) + "/" +
                             std::to_string(other.params_.q) + ")");
}

NCLaurentPoly NCLaurentPoly::operator+(const NCLaurentPoly& other) const {
    require_same_params(other);
    NCLaurentPoly out = *this;
    for (const auto& [key, c] : other.coeffs_) out.add_term(key.first, key.second, c);
    return out;
}

NCLaurentPoly NCLaurentPoly::operator-(const NCLaurentPoly& other) const {
    require_same_params(other);
    NCLaurentPoly out = *this;
    for (const auto& [key, c] : other.coeffs_) out.add_term(key.first, key.second, -c);
    return out;
}

NCLaurentPoly NCLaurentPoly::operator*(const NCLaurentPoly& other) const {
    return multiply(*this, other);
}

NCLaurentPoly NCLaurentPoly::operator*(Complex scalar) const {
    NCLaurentPoly out(params_);
    for (const auto& [key, c] : coeffs_) out.add_term(key.first, key.second, c * scalar);
    return out;
}

double NCLaurentPoly::coeff_one_norm() const {
    double s = 0.0;
    for (const auto& [key, c] : coeffs_) s += std::abs(c);
    return s;
}

NCLaurentPoly multiply(const NCLaurentPoly& a, const NCLaurentPoly& b) {
    const ModularParams& mp = a.params();
    if (mp.p != b.params().p || mp.q != b.params().q)
        throw ParamsMismatch("multiply: polynomials live in different algebras: (" +
                             std::to_string(mp.p) + "/" + std::to_string(mp.q) + ") vs (" +
                             std::to_string(b.params().p) + "/" +
                             std::to_string(b.params().q) + ")");
    NCLaurentPoly out(mp);
    const long long q = mp.q;
    for (const auto& [ka, ca] : a.coeffs()) {
        for (const auto& [kb, cb] : b.coeffs()) {
            // (U^m V^n)(U^m' V^n') = omega^{-n m'} U^{m+m'} V^{n+n'}
            const long long e = -((ka.second % q) * (kb.first % q));
            const Complex phase = omega_power(mp, e);
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb * phase);
        }
    }
    return out;
}

NCLaurentPoly adjoint(const NCLaurentPoly& a) {
    const ModularParams& mp = a.params();
    const long long q = mp.q;
    NCLaurentPoly out(mp);
    for (const auto& [key, c] : a.coeffs()) {
        // (c U^m V^n)^* = conj(c) omega^{-m n} U^{-m} V^{-n}
        const long long e = -((key.first % q) * (key.second % q));
        out.add_term(-key.first, -key.second, std::conj(c) * omega_power(mp, e));
    }
    return out;
}

bool is_selfadjoint(const NCLaurentPoly& a, double tol) {
    NCLaurentPoly diff = adjoint(a) - a;
    for (const auto& [key, c] : diff.coeffs())
        if (std::abs(c) > tol) return false;
    return true;
}

NCLaurentPoly monomial_inverse(const NCLaurentPoly& a) {
    if (a.support_size() != 1)
        throw DomainError("inverse requires a single nonzero monomial, support has " +
                          std::to_string(a.support_size()) + " terms");
    const auto& [key, c] = *a.coeffs().begin();
    const auto [m, n] = key;
    const long long q = a.params().q;
    // (c U^m V^n)^{-1} = c^{-1} omega^{-m n} U^{-m} V^{-n}
    const long long e = -((static_cast<long long>(m) % q) * (n % q));
    return NCLaurentPoly::monomial(a.params(), -m, -n, omega_power(a.params(), e) / c);
}

NCLaurentPoly pow(const NCLaurentPoly& a, int exponent) {
    const ModularParams& mp = a.params();
    if (exponent == 0) return NCLaurentPoly::constant(mp, 1.0);
    if (a.support_size() == 1) {
        // (c U^m V^n)^k = c^k omega^{-m n k(k-1)/2} U^{km} V^{kn}
        const auto& [key, c] = *a.coeffs().begin();
        const auto [m, n] = key;
        const long long k = exponent;
        const long long q = mp.q;
        const long long half = (k * (k - 1) / 2) % q;
        const long long e = -(((static_cast<long long>(m) % q) * (n % q)) % q) * half;
        const Complex ck = std::polar(std::pow(std::abs(c), static_cast<double>(k)),
                                      static_cast<double>(k) * std::arg(c));
        return NCLaurentPoly::monomial(mp, static_cast<int>(k) * m, static_cast<int>(k) * n,
                                       ck * omega_power(mp, e));
    }
    if (exponent < 0)
        throw DomainError("negative exponent requires a single-monomial base");
    NCLaurentPoly out = a;
    for (int i = 1; i < exponent; ++i) out = out * a;
    return out;
}

std::string format_double17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_complex17(Complex c) {
    if (c.imag() == 0.0) return format_double17(c.real());
    if (c.real() == 0.0) return format_double17(c.imag()) + "i";
    std::string s = format_double17(c.real());
    s += c.imag() < 0.0 ? "-" : "+";
    s += format_double17(std::abs(c.imag()));
    s += "i";
    return s;
}

std::string render(const NCLaurentPoly& a) {
    if (a.is_zero()) return "(0)";
    std::string out;
    for (const auto& [key, c] : a.coeffs()) {
        if (!out.empty()) out += " + ";
        out += "(" + format_complex17(c) + ")\xC2\xB7U^" + std::to_string(key.first) +
               "\xC2\xB7V^" + std::to_string(key.second);
    }
    return out;
}

}  // namespace rotalg
