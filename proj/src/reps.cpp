#include "rotalg/reps.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace rotalg {

RepPoint::RepPoint(Complex a, Complex b) : z1(a), z2(b) {
    if (std::abs(std::abs(a) - 1.0) > 1e-12 || std::abs(std::abs(b) - 1.0) > 1e-12)
        throw RangeError("RepPoint coordinates must lie on the unit circle");
}

RepPoint RepPoint::from_angles(double phi1, double phi2) {
    return RepPoint(std::polar(1.0, phi1), std::polar(1.0, phi2));
}

Complex unit_power(Complex z, long long k) {
    if (k == 0) return {1.0, 0.0};
    if (z == Complex(1.0, 0.0)) return {1.0, 0.0};
    return std::polar(1.0, static_cast<double>(k) * std::arg(z));
}

CMatrix rep_evaluate(const NCLaurentPoly& a, const RepPoint& pt) {
    const ModularParams& mp = a.params();
    CMatrix out = CMatrix::Zero(mp.q, mp.q);
    for (const auto& [key, c] : a.coeffs()) {
        const auto [m, n] = key;
        const Complex scale = c * unit_power(pt.z1, m) * unit_power(pt.z2, n);
        out += scale * monomial_matrix(mp, m, n);
    }
    return out;
}

bool reps_equivalent(const RepPoint& a, const RepPoint& b, int q, double tol) {
    const Complex r1 = unit_power(b.z1 / a.z1, q);
    const Complex r2 = unit_power(b.z2 / a.z2, q);
    return std::abs(r1 - Complex(1.0, 0.0)) <= tol && std::abs(r2 - Complex(1.0, 0.0)) <= tol;
}

std::vector<Complex> eigenvalue_signature(char generator, const RepPoint& pt,
                                          const ModularParams& mp) {
    if (generator != 'U' && generator != 'V')
        throw RangeError("generator must be 'U' or 'V'");
    const Complex z = generator == 'U' ? pt.z1 : pt.z2;
    std::vector<Complex> sig(mp.q);
    for (int j = 0; j < mp.q; ++j) sig[j] = z * omega_power(mp, j);
    return sig;
}

namespace {

double angle_of(Complex z) {
    double a = std::arg(z);
    if (a < 0.0) a += 2.0 * M_PI;
    return a;
}

}  // namespace

bool signatures_match(std::vector<Complex> a, std::vector<Complex> b, double tol) {
    if (a.size() != b.size()) return false;
    auto by_angle = [](Complex x, Complex y) { return angle_of(x) < angle_of(y); };
    std::sort(a.begin(), a.end(), by_angle);
    std::sort(b.begin(), b.end(), by_angle);
    const std::size_t n = a.size();
    for (std::size_t shift = 0; shift < n; ++shift) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            ok = std::abs(a[i] - b[(i + shift) % n]) <= tol;
        if (ok) return true;
    }
    return false;
}

int commutant_dimension(const std::vector<CMatrix>& mats, double tol) {
    if (mats.empty()) throw RangeError("commutant_dimension: empty family");
    const Eigen::Index n = mats.front().rows();
    for (const CMatrix& m : mats)
        if (m.rows() != n || m.cols() != n)
            throw DimensionMismatch("commutant_dimension: matrices must all be n x n");

    // Realify X -> (XA - AX) over the basis {E_jk, i E_jk}: 2n^2 unknowns.
    const Eigen::Index dim = n * n;
    Eigen::MatrixXd op(2 * dim * static_cast<Eigen::Index>(mats.size()), 2 * dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        const Eigen::Index j = col / n, k = col % n;
        CMatrix e = CMatrix::Zero(n, n);
        e(j, k) = 1.0;
        for (std::size_t s = 0; s < mats.size(); ++s) {
            const CMatrix comm = e * mats[s] - mats[s] * e;
            const Eigen::Index row0 = 2 * dim * static_cast<Eigen::Index>(s);
            for (Eigen::Index t = 0; t < dim; ++t) {
                const Complex v = comm(t / n, t % n);
                op(row0 + t, col) = v.real();
                op(row0 + dim + t, col) = v.imag();
                // i E_jk contributes i * comm: real part -imag, imag part +real.
                op(row0 + t, dim + col) = -v.imag();
                op(row0 + dim + t, dim + col) = v.real();
            }
        }
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(op);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    if (smax == 0.0) return static_cast<int>(dim);  // everything commutes
    int nullity = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) <= tol * smax) ++nullity;
    return nullity / 2;
}

}  // namespace rotalg
