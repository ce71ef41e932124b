#pragma once

#include <vector>

#include "rotalg/ncpoly.hpp"

namespace rotalg {

// Label of an irreducible representation: a point on the unit 2-torus.
struct RepPoint {
    Complex z1{1.0, 0.0};
    Complex z2{1.0, 0.0};

    RepPoint() = default;
    RepPoint(Complex a, Complex b);

    static RepPoint from_angles(double phi1, double phi2);
};

// z^k for unit-modulus z, computed through the argument so the result stays
// on the circle for any exponent.
Complex unit_power(Complex z, long long k);

// rho_{z1,z2}(a) = sum c(m,n) z1^m z2^n U0^m V0^n.
CMatrix rep_evaluate(const NCLaurentPoly& a, const RepPoint& pt);

// Unitary equivalence test: (z1'/z1)^q = (z2'/z2)^q = 1 to tol.
bool reps_equivalent(const RepPoint& a, const RepPoint& b, int q, double tol);

// Eigenvalues {z omega^j : 0 <= j < q} of the requested generator's image;
// generator is 'U' or 'V'.
std::vector<Complex> eigenvalue_signature(char generator, const RepPoint& pt,
                                          const ModularParams& mp);

// Multiset equality of unit-modulus values: sort by angle, then compare
// pointwise under every cyclic rotation (handles ties at the 2*pi seam).
bool signatures_match(std::vector<Complex> a, std::vector<Complex> b, double tol);

// Dimension of {X : XA = AX for all A}, via the nullity of the realified
// stacked commutator operator with relative singular-value threshold tol.
// Returns 1 exactly when the family acts irreducibly.
int commutant_dimension(const std::vector<CMatrix>& mats, double tol);

}  // namespace rotalg
