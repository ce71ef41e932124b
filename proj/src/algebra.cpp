#include "rotalg/algebra.hpp"

#include <cmath>
#include <numeric>

namespace rotalg {

ModularParams make_params(int p, int q) {
    if (q < 2) throw RangeError("q must be >= 2, got " + std::to_string(q));
    if (p < 1 || p > q - 1)
        throw RangeError("p must lie in [1, q-1], got p=" + std::to_string(p) +
                         " for q=" + std::to_string(q));
    if (std::gcd(p, q) != 1)
        throw CoprimalityError("gcd(p,q) must be 1, got gcd(" + std::to_string(p) + "," +
                               std::to_string(q) + ") = " + std::to_string(std::gcd(p, q)));

    ModularParams mp;
    mp.p = p;
    mp.q = q;
    mp.r = 0;
    for (int k = 1; k <= q - 1; ++k) {
        if ((static_cast<long long>(p) * k) % q == 1) {
            mp.r = k;
            break;
        }
    }
    // gcd(p,q)=1 guarantees the inverse exists and is unique in [1,q-1].
    mp.sigma = root_of_unity(q, 1);
    mp.omega = root_of_unity(q, p);
    return mp;
}

Complex root_of_unity(long long den, long long num) {
    long long m = num % den;
    if (m < 0) m += den;
    // Axis points are exact in IEEE arithmetic; snapping them keeps phase
    // products of the form omega^k free of sin(pi) = 1.2e-16 residue.
    if (m == 0) return {1.0, 0.0};
    if (4 * m == den) return {0.0, 1.0};
    if (2 * m == den) return {-1.0, 0.0};
    if (4 * m == 3 * den) return {0.0, -1.0};
    const double angle = 2.0 * M_PI * static_cast<double>(m) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

Complex omega_power(const ModularParams& mp, long long k) {
    return root_of_unity(mp.q, (k % mp.q) * mp.p);
}

CMatrix shift_matrix(const ModularParams& mp) {
    CMatrix u = CMatrix::Zero(mp.q, mp.q);
    for (int j = 0; j < mp.q; ++j) u(j, (j + 1) % mp.q) = 1.0;
    return u;
}

CMatrix clock_matrix(const ModularParams& mp) {
    CMatrix v = CMatrix::Zero(mp.q, mp.q);
    for (int j = 0; j < mp.q; ++j) v(j, j) = omega_power(mp, j);
    return v;
}

CMatrix monomial_matrix(const ModularParams& mp, long long j, long long k) {
    const int q = mp.q;
    long long js = j % q;
    if (js < 0) js += q;
    CMatrix m = CMatrix::Zero(q, q);
    for (int a = 0; a < q; ++a) {
        const int b = static_cast<int>((a + js) % q);
        m(a, b) = omega_power(mp, (k % q) * b);
    }
    return m;
}

Complex hs_inner(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("hs_inner: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
    return (b.adjoint() * a).trace();
}

Complex trace_against_monomial(const CMatrix& M, const ModularParams& mp, long long j,
                               long long k) {
    const int q = mp.q;
    if (M.rows() != q || M.cols() != q)
        throw DimensionMismatch("trace_against_monomial: matrix is " + std::to_string(M.rows()) +
                                "x" + std::to_string(M.cols()) + ", expected " +
                                std::to_string(q));
    long long js = j % q;
    if (js < 0) js += q;
    Complex t = 0.0;
    for (int a = 0; a < q; ++a) {
        const int b = static_cast<int>((a + js) % q);
        t += std::conj(omega_power(mp, (k % q) * b)) * M(a, b);
    }
    return t;
}

CMatrix basis_expand(const CMatrix& M, const ModularParams& mp) {
    const int q = mp.q;
    if (M.rows() != q || M.cols() != q)
        throw DimensionMismatch("basis_expand: matrix is " + std::to_string(M.rows()) + "x" +
                                std::to_string(M.cols()) + ", params have q=" +
                                std::to_string(q));
    CMatrix d(q, q);
    for (int j = 0; j < q; ++j)
        for (int k = 0; k < q; ++k)
            d(j, k) = trace_against_monomial(M, mp, j, k) / static_cast<double>(q);
    return d;
}

double spectral_norm(const CMatrix& M) {
    if (M.rows() == 0 || M.cols() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(M.adjoint() * M, Eigen::EigenvaluesOnly);
    const double lmax = es.eigenvalues().maxCoeff();
    return lmax > 0.0 ? std::sqrt(lmax) : 0.0;
}

}  // namespace rotalg
