#include "rotalg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rotalg/parallel.hpp"

namespace rotalg {

namespace {

void validate_grid(const TorusGrid& grid) {
    if (grid.n1 < 4 || grid.n2 < 4)
        throw RangeError("torus grid must be at least 4x4, got " + std::to_string(grid.n1) +
                         "x" + std::to_string(grid.n2));
}

// Caches the monomial matrices of a polynomial so grid sweeps only pay for
// a phase rotation and an accumulate per term.
struct PolyEvaluator {
    int q;
    struct Term {
        double m, n;
        Complex c;
        CMatrix mono;
    };
    std::vector<Term> terms;

    explicit PolyEvaluator(const NCLaurentPoly& a) : q(a.params().q) {
        terms.reserve(a.support_size());
        for (const auto& [key, c] : a.coeffs())
            terms.push_back({static_cast<double>(key.first), static_cast<double>(key.second), c,
                             monomial_matrix(a.params(), key.first, key.second)});
    }

    CMatrix eval(double phi1, double phi2) const {
        CMatrix out = CMatrix::Zero(q, q);
        for (const Term& t : terms)
            out += (t.c * std::polar(1.0, t.m * phi1 + t.n * phi2)) * t.mono;
        return out;
    }

    double norm_at(double phi1, double phi2) const { return spectral_norm(eval(phi1, phi2)); }
};

// Golden-section ascent of f on [lo,hi]; keeps the best point seen anywhere.
void golden_ascend(const std::function<double(double)>& f, double lo, double hi, int iters,
                   double& xbest, double& fbest) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    auto consider = [&](double x, double v) {
        if (v > fbest) {
            fbest = v;
            xbest = x;
        }
    };
    consider(x1, f1);
    consider(x2, f2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
            consider(x2, f2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
            consider(x1, f1);
        }
    }
}

}  // namespace

namespace {

// One refinement round: alternate golden-section line searches in phi1 and
// phi2, re-centering the +-h window on the running best so the search can
// walk across cell boundaries; stop the round once a pass stalls.
void refine_round(const PolyEvaluator& ev, NormEstimate& best, double h1, double h2) {
    for (int pass = 0; pass < 12; ++pass) {
        const double before = best.value;
        golden_ascend([&](double x) { return ev.norm_at(x, best.phi2); }, best.phi1 - h1,
                      best.phi1 + h1, 40, best.phi1, best.value);
        golden_ascend([&](double x) { return ev.norm_at(best.phi1, x); }, best.phi2 - h2,
                      best.phi2 + h2, 40, best.phi2, best.value);
        if (best.value - before <= 1e-13 * std::max(1.0, before)) break;
    }
}

}  // namespace

NormEstimate operator_norm_estimate(const NCLaurentPoly& a, const TorusGrid& grid,
                                    int refine_steps) {
    validate_grid(grid);
    const PolyEvaluator ev(a);
    const int n1 = grid.n1, n2 = grid.n2;

    std::vector<double> values(static_cast<std::size_t>(n1) * n2);
    parallel_for(n1, [&](int i) {
        const double phi1 = 2.0 * M_PI * i / n1;
        for (int j = 0; j < n2; ++j)
            values[static_cast<std::size_t>(i) * n2 + j] = ev.norm_at(phi1, 2.0 * M_PI * j / n2);
    });

    // Deterministic reduction in lattice order; first maximum wins.  Keep a
    // few leaders so a runner-up cell that hides the true peak still gets
    // refined.
    constexpr int kLeaders = 3;
    std::vector<NormEstimate> leaders;
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) {
            const double v = values[static_cast<std::size_t>(i) * n2 + j];
            const NormEstimate cand{v, 2.0 * M_PI * i / n1, 2.0 * M_PI * j / n2};
            auto pos = std::find_if(leaders.begin(), leaders.end(),
                                    [&](const NormEstimate& l) { return v > l.value; });
            leaders.insert(pos, cand);
            if (leaders.size() > kLeaders) leaders.pop_back();
        }

    NormEstimate best = leaders.front();
    for (NormEstimate cand : leaders) {
        double h1 = 2.0 * M_PI / n1;
        double h2 = 2.0 * M_PI / n2;
        for (int step = 0; step < refine_steps; ++step) {
            refine_round(ev, cand, h1, h2);
            h1 *= 0.25;
            h2 *= 0.25;
        }
        if (cand.value > best.value) best = cand;
    }
    return best;
}

double operator_norm(const NCLaurentPoly& a, const TorusGrid& grid, int refine_steps) {
    return operator_norm_estimate(a, grid, refine_steps).value;
}

BandSpectrum spectrum_selfadjoint(const NCLaurentPoly& a, const TorusGrid& grid,
                                  double merge_tol) {
    validate_grid(grid);
    if (!is_selfadjoint(a, 1e-10))
        throw NotSelfAdjoint("spectrum_selfadjoint requires a self-adjoint element");
    const PolyEvaluator ev(a);
    const int n1 = grid.n1, n2 = grid.n2, q = ev.q;

    std::vector<double> eigs(static_cast<std::size_t>(n1) * n2 * q);
    parallel_for(n1, [&](int i) {
        const double phi1 = 2.0 * M_PI * i / n1;
        for (int j = 0; j < n2; ++j) {
            Eigen::SelfAdjointEigenSolver<CMatrix> es(ev.eval(phi1, 2.0 * M_PI * j / n2),
                                                      Eigen::EigenvaluesOnly);
            for (int k = 0; k < q; ++k)
                eigs[(static_cast<std::size_t>(i) * n2 + j) * q + k] = es.eigenvalues()(k);
        }
    });

    // k-th sorted eigenvalue sweeps a closed interval as the point moves.
    std::vector<double> lo(q, std::numeric_limits<double>::infinity());
    std::vector<double> hi(q, -std::numeric_limits<double>::infinity());
    for (std::size_t pt = 0; pt < static_cast<std::size_t>(n1) * n2; ++pt)
        for (int k = 0; k < q; ++k) {
            const double v = eigs[pt * q + k];
            lo[k] = std::min(lo[k], v);
            hi[k] = std::max(hi[k], v);
        }

    double tol = merge_tol;
    if (tol < 0.0) tol = 1e-6 * (hi[q - 1] - lo[0]);

    BandSpectrum out;
    Band cur{lo[0], hi[0]};
    for (int k = 1; k < q; ++k) {
        if (lo[k] - cur.hi <= tol) {
            cur.hi = std::max(cur.hi, hi[k]);
        } else {
            out.bands.push_back(cur);
            cur = {lo[k], hi[k]};
        }
    }
    out.bands.push_back(cur);
    return out;
}

std::vector<ButterflyRow> butterfly(int q_max, const std::string& expr, const TorusGrid& grid) {
    if (q_max < 2) throw DomainError("no valid (p,q) with q >= 2 for q_max=" + std::to_string(q_max));
    if (q_max > 50) throw RangeError("q_max must be <= 50, got " + std::to_string(q_max));
    std::vector<ButterflyRow> rows;
    for (int q = 2; q <= q_max; ++q) {
        for (int p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const ModularParams mp = make_params(p, q);
            NCLaurentPoly poly(mp);
            try {
                poly = parse(expr, mp);
            } catch (const SyntaxError& e) {
                throw SyntaxError("(p=" + std::to_string(p) + ",q=" + std::to_string(q) +
                                      ") " + e.what(),
                                  e.position);
            }
            if (!is_selfadjoint(poly, 1e-10))
                throw NotSelfAdjoint("expression is not self-adjoint at (p=" +
                                     std::to_string(p) + ",q=" + std::to_string(q) + ")");
            const BandSpectrum spec = spectrum_selfadjoint(poly, grid);
            for (const Band& b : spec.bands)
                rows.push_back({p, q, static_cast<double>(p) / q, b.lo, b.hi});
        }
    }
    return rows;
}

std::string butterfly_csv(const std::vector<ButterflyRow>& rows) {
    std::string out = "p,q,theta,band_lo,band_hi\n";
    for (const ButterflyRow& r : rows) {
        out += std::to_string(r.p) + "," + std::to_string(r.q) + "," + format_double17(r.theta) +
               "," + format_double17(r.lo) + "," + format_double17(r.hi) + "\n";
    }
    return out;
}

namespace {

// Maps arg to (0, 2*pi]; eigenvalue 1 lands at 2*pi (the E_0 = 0 convention).
double phase_of(Complex z) {
    const double a = std::arg(z);
    return a > 0.0 ? a : a + 2.0 * M_PI;
}

}  // namespace

CMatrix SpectralFamily::cumulative(double psi) const {
    if (projections.empty()) return CMatrix();
    const Eigen::Index n = projections.front().rows();
    CMatrix e = CMatrix::Zero(n, n);
    for (std::size_t j = 0; j < phases.size(); ++j)
        if (phases[j] <= psi) e += projections[j];
    return e;
}

SpectralFamily spectral_decomposition(const CMatrix& M, double tol) {
    const Eigen::Index n = M.rows();
    if (n == 0 || M.cols() != n)
        throw DimensionMismatch("spectral_decomposition requires a square matrix");
    const double defect = spectral_norm(M.adjoint() * M - CMatrix::Identity(n, n));
    if (defect > tol)
        throw NotUnitary("matrix is not unitary: ||M*M - I|| = " + format_double17(defect));

    Eigen::ComplexSchur<CMatrix> schur(M, true);
    const CMatrix& Q = schur.matrixU();
    std::vector<Complex> eig(n);
    for (Eigen::Index i = 0; i < n; ++i) eig[i] = schur.matrixT()(i, i);

    // Cluster eigenvalues on the circle at angular tolerance ~1e-9 (the
    // eigenvalues are unit modulus, so chord and angle agree at this scale).
    constexpr double ctol = 1e-9;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return phase_of(eig[a]) < phase_of(eig[b]); });

    std::vector<std::vector<int>> clusters;
    for (int idx : order) {
        if (!clusters.empty() &&
            phase_of(eig[idx]) - phase_of(eig[clusters.back().back()]) <= ctol) {
            clusters.back().push_back(idx);
        } else {
            clusters.push_back({idx});
        }
    }
    if (clusters.size() > 1) {
        const double wrap = phase_of(eig[clusters.front().front()]) + 2.0 * M_PI -
                            phase_of(eig[clusters.back().back()]);
        if (wrap <= ctol) {
            // Seam cluster: the values straddle angle 0 == 2*pi.
            clusters.front().insert(clusters.front().end(), clusters.back().begin(),
                                    clusters.back().end());
            clusters.pop_back();
        }
    }

    SpectralFamily family;
    std::vector<std::pair<double, CMatrix>> parts;
    parts.reserve(clusters.size());
    for (const auto& cluster : clusters) {
        Complex mean = 0.0;
        CMatrix proj = CMatrix::Zero(n, n);
        for (int idx : cluster) {
            mean += eig[idx];
            proj += Q.col(idx) * Q.col(idx).adjoint();
        }
        parts.emplace_back(phase_of(mean), std::move(proj));
    }
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [phase, proj] : parts) {
        family.phases.push_back(phase);
        family.projections.push_back(std::move(proj));
    }
    return family;
}

LaurentCoeffs projection_as_polynomial(const CMatrix& M, const SpectralFamily& family, int k) {
    const int s = static_cast<int>(family.phases.size());
    if (k < 0 || k >= s)
        throw IndexOutOfRange("phase index " + std::to_string(k) + " outside [0, " +
                              std::to_string(s) + ")");
    (void)M;  // nodes come from the family, which was built from M

    std::vector<Complex> nodes(s);
    for (int j = 0; j < s; ++j) nodes[j] = std::polar(1.0, family.phases[j]);

    // Lagrange basis polynomial for node k, expanded to monomial coefficients.
    std::vector<Complex> poly{1.0};
    Complex den = 1.0;
    for (int j = 0; j < s; ++j) {
        if (j == k) continue;
        std::vector<Complex> next(poly.size() + 1, Complex(0.0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i] * (-nodes[j]);
            next[i + 1] += poly[i];
        }
        poly = std::move(next);
        den *= nodes[k] - nodes[j];
    }

    LaurentCoeffs out;
    out.min_exp = -(s - 1);
    out.coeffs.assign(2 * s - 1, Complex(0.0));
    for (int i = 0; i < s; ++i) out.coeffs[(s - 1) + i] = poly[i] / den;
    return out;
}

CMatrix evaluate_laurent(const LaurentCoeffs& p, const CMatrix& M) {
    const Eigen::Index n = M.rows();
    if (n == 0 || M.cols() != n)
        throw DimensionMismatch("evaluate_laurent requires a square matrix");
    CMatrix out = CMatrix::Zero(n, n);
    CMatrix cur;
    if (p.min_exp >= 0) {
        cur = CMatrix::Identity(n, n);
        for (int e = 0; e < p.min_exp; ++e) cur = cur * M;
    } else {
        const CMatrix inv = M.adjoint();  // unitary inverse
        cur = CMatrix::Identity(n, n);
        for (int e = 0; e < -p.min_exp; ++e) cur = cur * inv;
    }
    for (int e = p.min_exp; e <= p.max_exp(); ++e) {
        out += p.at(e) * cur;
        cur = cur * M;
    }
    return out;
}

}  // namespace rotalg
