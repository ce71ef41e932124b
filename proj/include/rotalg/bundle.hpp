#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rotalg/ncpoly.hpp"

namespace rotalg {

// A matrix-valued doubly periodic function sampled on an n x n lattice over
// [0,q)^2; entry (a,b) holds the value at (q*a/n, q*b/n).
struct SectionGrid {
    ModularParams params;
    int n = 0;
    std::vector<CMatrix> values;  // n*n entries, row-major, each q x q

    SectionGrid() = default;
    SectionGrid(const ModularParams& mp, int samples);

    const CMatrix& at(int a, int b) const { return values[static_cast<std::size_t>(a) * n + b]; }
    CMatrix& at(int a, int b) { return values[static_cast<std::size_t>(a) * n + b]; }
};

// Sample sum c(m,k) e^{2 pi i (m x1 + k x2)/q} U0^m V0^k on the lattice.
// n = 0 picks the default resolution 8q.
SectionGrid synthesize_section(const NCLaurentPoly& a, int n = 0);

struct MembershipReport {
    bool member = false;
    double max_violation = 0.0;
};

// Twisted equivariance at every lattice point:
//   a(x1+1, x2) = V0^{-r} a(x1,x2) V0^r
//   a(x1, x2+1) = U0^{r}  a(x1,x2) U0^{-r}
// Requires q | n so the +1 shifts land on lattice points.
MembershipReport check_membership(const SectionGrid& s, double tol);

using CoeffTable = std::map<std::pair<int, int>, Complex>;

// c(m,k) = (1/q^3) Int e^{-2 pi i (m x1 + k x2)/q} Tr((U0^m V0^k)^* a(x)) dx,
// evaluated as a lattice DFT; exact for band-limited sections below the
// Nyquist box M_max < n/2.  Requires membership at 1e-8.
CoeffTable fourier_coefficients(const SectionGrid& s, int M_max);

// Winding number of z -> det(G(z)^r) where G(z) = diag(1,...,1,z) U0;
// accumulated unwrapped phase over `samples` loop points divided by 2*pi.
int clutching_winding(const ModularParams& mp, int samples);

// Theorem-level classification: A_{p/q} and A_{p2/q2} are isomorphic iff
// q2 = q and p2 is p or q - p.
bool classify_isomorphic(int p, int q, int p2, int q2);

// JSON round-trip: {p, q, n, values: [[ [re,im] x q^2 ] x n^2 ]} row-major.
std::string section_to_json(const SectionGrid& s);
SectionGrid section_from_json(const std::string& text);

// CSV "m,n,re,im", ascending in (m,n), 17 significant digits, LF endings.
std::string coeff_table_csv(const CoeffTable& table);

}  // namespace rotalg
