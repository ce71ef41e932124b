#pragma once

#include <complex>

#include <Eigen/Dense>

#include "rotalg/errors.hpp"

namespace rotalg {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

// Arithmetic backbone of a fixed rational rotation algebra: p/q in lowest
// terms, r the modular inverse of p, sigma = e^{2*pi*i/q}, omega = sigma^p.
struct ModularParams {
    int p = 1;
    int q = 2;
    int r = 1;
    Complex omega{-1.0, 0.0};
    Complex sigma{-1.0, 0.0};
};

// Validates 2 <= q, 1 <= p <= q-1, gcd(p,q) = 1 and fills in r, omega, sigma.
ModularParams make_params(int p, int q);

// exp(2*pi*i*num/den) with the exponent reduced mod den in integer
// arithmetic, so large powers carry no accumulated phase drift.  The four
// axis points (den | 4*num) come out exact.
Complex root_of_unity(long long den, long long num);

// omega^k = exp(2*pi*i*p*k/q).
Complex omega_power(const ModularParams& mp, long long k);

// The cyclic shift U0: row j has its 1 in column (j+1) mod q.
CMatrix shift_matrix(const ModularParams& mp);

// The clock V0 = diag(1, omega, ..., omega^{q-1}).
CMatrix clock_matrix(const ModularParams& mp);

// U0^j V0^k with exponents reduced mod q.  Entry (a, (a+j) mod q) is
// omega^{k*((a+j) mod q)}; every other entry is exactly zero.
CMatrix monomial_matrix(const ModularParams& mp, long long j, long long k);

// Hilbert-Schmidt inner product <a,b> = Trace(b^* a).
Complex hs_inner(const CMatrix& a, const CMatrix& b);

// Trace((U0^j V0^k)^* M) evaluated over the q non-zero positions of the
// monomial.  Same value as hs_inner(M, monomial_matrix(mp,j,k)) since the
// skipped terms are exact zeros.
Complex trace_against_monomial(const CMatrix& M, const ModularParams& mp, long long j,
                               long long k);

// Coefficients d(j,k) with M = sum d(j,k) U0^j V0^k; d(j,k) = <M, U0^j V0^k>/q.
CMatrix basis_expand(const CMatrix& M, const ModularParams& mp);

// Operator norm: sqrt of the largest eigenvalue of M^* M.
double spectral_norm(const CMatrix& M);

}  // namespace rotalg
