#pragma once

#include <string>
#include <vector>

#include "rotalg/ncpoly.hpp"
#include "rotalg/reps.hpp"

namespace rotalg {

// Sample lattice (e^{2 pi i a/n1}, e^{2 pi i b/n2}) on the torus.
struct TorusGrid {
    int n1 = 64;
    int n2 = 64;
};

struct NormEstimate {
    double value = 0.0;
    double phi1 = 0.0;  // argmax angles
    double phi2 = 0.0;
    RepPoint argmax() const { return RepPoint::from_angles(phi1, phi2); }
};

// Max over the grid of ||rho_{z1,z2}(a)||, then refine_steps rounds of
// coordinatewise golden-section ascent inside the best grid cell.  A lower
// bound on the true norm; never below the plain grid maximum.
NormEstimate operator_norm_estimate(const NCLaurentPoly& a, const TorusGrid& grid,
                                    int refine_steps);
double operator_norm(const NCLaurentPoly& a, const TorusGrid& grid = {}, int refine_steps = 3);

struct Band {
    double lo = 0.0;
    double hi = 0.0;
};

// Disjoint closed intervals, ascending; at most q of them.
struct BandSpectrum {
    std::vector<Band> bands;
};

// Eigenvalue ranges of rho(a) over the grid: the k-th sorted eigenvalue
// sweeps an interval; intervals closer than merge_tol are merged.
// merge_tol < 0 selects the default 1e-6 * (spectral diameter).
BandSpectrum spectrum_selfadjoint(const NCLaurentPoly& a, const TorusGrid& grid,
                                  double merge_tol = -1.0);

struct ButterflyRow {
    int p = 0;
    int q = 0;
    double theta = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

// One row per band per coprime (p,q) with 2 <= q <= q_max, ordered by
// (q asc, p asc, lo asc).
std::vector<ButterflyRow> butterfly(int q_max, const std::string& expr, const TorusGrid& grid);

// CSV: header "p,q,theta,band_lo,band_hi", 17 significant digits, LF endings.
std::string butterfly_csv(const std::vector<ButterflyRow>& rows);

// Jump projections of a unitary matrix at its distinct eigenphases,
// phases ascending in (0, 2*pi] with eigenvalue 1 mapped to 2*pi.
struct SpectralFamily {
    std::vector<double> phases;
    std::vector<CMatrix> projections;

    // E_psi = sum of projections with phase <= psi (E_0 = 0).
    CMatrix cumulative(double psi) const;
};

SpectralFamily spectral_decomposition(const CMatrix& M, double tol);

// Coefficients of a Laurent polynomial indexed min_exp .. min_exp+size-1.
struct LaurentCoeffs {
    int min_exp = 0;
    std::vector<Complex> coeffs;

    Complex at(int e) const {
        const int i = e - min_exp;
        return (i >= 0 && i < static_cast<int>(coeffs.size())) ? coeffs[i] : Complex(0.0);
    }
    int max_exp() const { return min_exp + static_cast<int>(coeffs.size()) - 1; }
};

// Interpolating polynomial with p(e^{i phase_j}) = delta_{jk}, so
// p(M) reproduces projection k exactly at matrix scale.
LaurentCoeffs projection_as_polynomial(const CMatrix& M, const SpectralFamily& family, int k);

// p(M) for unitary M; negative powers use M^{-1} = M^*.
CMatrix evaluate_laurent(const LaurentCoeffs& p, const CMatrix& M);

}  // namespace rotalg
