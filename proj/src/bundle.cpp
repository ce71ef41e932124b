#include "rotalg/bundle.hpp"

#include <cmath>

#include <json.hpp>

#include "rotalg/parallel.hpp"

namespace rotalg {

SectionGrid::SectionGrid(const ModularParams& mp, int samples) : params(mp), n(samples) {
    if (n < 4 * mp.q)
        throw ResolutionTooLow("section lattice needs n >= 4q, got n=" + std::to_string(n) +
                               " for q=" + std::to_string(mp.q));
    values.assign(static_cast<std::size_t>(n) * n, CMatrix::Zero(mp.q, mp.q));
}

SectionGrid synthesize_section(const NCLaurentPoly& a, int n) {
    const ModularParams& mp = a.params();
    if (n == 0) n = 8 * mp.q;
    SectionGrid s(mp, n);
    struct Term {
        int m, k;
        Complex c;
        CMatrix mono;
    };
    std::vector<Term> terms;
    terms.reserve(a.support_size());
    for (const auto& [key, c] : a.coeffs())
        terms.push_back({key.first, key.second, c, monomial_matrix(mp, key.first, key.second)});

    parallel_for(n, [&](int ia) {
        for (int ib = 0; ib < n; ++ib) {
            CMatrix& cell = s.at(ia, ib);
            for (const Term& t : terms) {
                // e^{2 pi i (m x1 + k x2)/q} at x = (q*ia/n, q*ib/n) is an
                // exact n-th root of unity.
                const Complex phase = root_of_unity(
                    n, static_cast<long long>(t.m) * ia + static_cast<long long>(t.k) * ib);
                cell += t.c * phase * t.mono;
            }
        }
    });
    return s;
}

MembershipReport check_membership(const SectionGrid& s, double tol) {
    const ModularParams& mp = s.params;
    if (s.n % mp.q != 0)
        throw ResolutionNotDivisible("membership shifts need q | n, got n=" +
                                     std::to_string(s.n) + ", q=" + std::to_string(mp.q));
    const int step = s.n / mp.q;  // lattice points per unit of x

    const CMatrix vr = monomial_matrix(mp, 0, mp.r);    // V0^r
    const CMatrix vmr = monomial_matrix(mp, 0, -mp.r);  // V0^{-r}
    const CMatrix ur = monomial_matrix(mp, mp.r, 0);    // U0^r
    const CMatrix umr = monomial_matrix(mp, -mp.r, 0);  // U0^{-r}

    std::vector<double> row_max(s.n, 0.0);
    parallel_for(s.n, [&](int a) {
        double worst = 0.0;
        for (int b = 0; b < s.n; ++b) {
            const CMatrix& here = s.at(a, b);
            const CMatrix d1 = s.at((a + step) % s.n, b) - vmr * here * vr;
            const CMatrix d2 = s.at(a, (b + step) % s.n) - ur * here * umr;
            worst = std::max({worst, d1.cwiseAbs().maxCoeff(), d2.cwiseAbs().maxCoeff()});
        }
        row_max[a] = worst;
    });
    double violation = 0.0;
    for (double w : row_max) violation = std::max(violation, w);
    return {violation <= tol, violation};
}

CoeffTable fourier_coefficients(const SectionGrid& s, int M_max) {
    const ModularParams& mp = s.params;
    if (M_max < 0) throw RangeError("M_max must be non-negative");
    if (2 * M_max >= s.n)
        throw AliasingRisk("M_max=" + std::to_string(M_max) + " reaches the Nyquist limit of n=" +
                           std::to_string(s.n));
    const MembershipReport rep = check_membership(s, 1e-8);
    if (!rep.member)
        throw MembershipViolation("section is not twisted-equivariant (violation " +
                                  format_double17(rep.max_violation) + ")");

    const int n = s.n;
    const double scale = 1.0 / (static_cast<double>(mp.q) * n * n);
    const int width = 2 * M_max + 1;

    std::vector<Complex> cells(static_cast<std::size_t>(width) * width, Complex(0.0));
    parallel_for(width, [&](int mi) {
        const int m = mi - M_max;
        for (int ki = 0; ki < width; ++ki) {
            const int k = ki - M_max;
            Complex acc = 0.0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    const Complex phase = root_of_unity(
                        n, -(static_cast<long long>(m) * a + static_cast<long long>(k) * b));
                    acc += phase * trace_against_monomial(s.at(a, b), mp, m, k);
                }
            cells[static_cast<std::size_t>(mi) * width + ki] = acc * scale;
        }
    });

    CoeffTable table;
    for (int mi = 0; mi < width; ++mi)
        for (int ki = 0; ki < width; ++ki) {
            const Complex c = cells[static_cast<std::size_t>(mi) * width + ki];
            if (std::abs(c) > 1e-12) table[{mi - M_max, ki - M_max}] = c;
        }
    return table;
}

int clutching_winding(const ModularParams& mp, int samples) {
    if (samples < 4) throw RangeError("winding needs at least 4 samples");
    const CMatrix u0 = shift_matrix(mp);

    auto det_gr = [&](double angle) {
        CMatrix g = u0;
        // G(z) = diag(1, ..., 1, z) U0 scales the last row by z.
        g.row(mp.q - 1) *= std::polar(1.0, angle);
        CMatrix gr = CMatrix::Identity(mp.q, mp.q);
        for (int i = 0; i < mp.r; ++i) gr = gr * g;
        return gr.determinant();
    };

    double total = 0.0;
    Complex prev = det_gr(0.0);
    for (int j = 1; j <= samples; ++j) {
        const Complex cur = det_gr(2.0 * M_PI * j / samples);
        const double jump = std::arg(cur / prev);
        if (std::abs(jump) >= M_PI - 1e-9)
            throw PhaseJumpTooLarge("adjacent determinant samples differ by " +
                                    format_double17(std::abs(jump)) +
                                    " rad; increase the sample count");
        total += jump;
        prev = cur;
    }
    return static_cast<int>(std::lround(total / (2.0 * M_PI)));
}

bool classify_isomorphic(int p, int q, int p2, int q2) {
    make_params(p, q);
    make_params(p2, q2);
    return q2 == q && (p2 == p || p2 == q - p);
}

std::string section_to_json(const SectionGrid& s) {
    nlohmann::json j;
    j["p"] = s.params.p;
    j["q"] = s.params.q;
    j["n"] = s.n;
    nlohmann::json values = nlohmann::json::array();
    for (const CMatrix& m : s.values) {
        nlohmann::json cell = nlohmann::json::array();
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            for (Eigen::Index c = 0; c < m.cols(); ++c)
                cell.push_back({m(r, c).real(), m(r, c).imag()});
        values.push_back(std::move(cell));
    }
    j["values"] = std::move(values);
    return j.dump();
}

SectionGrid section_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("bad section JSON: ") + e.what());
    }
    if (!j.contains("p") || !j.contains("q") || !j.contains("n") || !j.contains("values"))
        throw IoError("section JSON needs fields p, q, n, values");
    const ModularParams mp = make_params(j["p"].get<int>(), j["q"].get<int>());
    SectionGrid s(mp, j["n"].get<int>());
    const auto& values = j["values"];
    if (values.size() != s.values.size())
        throw IoError("section JSON has " + std::to_string(values.size()) + " cells, expected " +
                      std::to_string(s.values.size()));
    const int q = mp.q;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        const auto& cell = values[i];
        if (static_cast<int>(cell.size()) != q * q)
            throw IoError("section JSON cell " + std::to_string(i) + " has wrong size");
        CMatrix m(q, q);
        for (int r = 0; r < q; ++r)
            for (int c = 0; c < q; ++c) {
                const auto& e = cell[static_cast<std::size_t>(r) * q + c];
                m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
            }
        s.values[i] = std::move(m);
    }
    return s;
}

std::string coeff_table_csv(const CoeffTable& table) {
    std::string out = "m,n,re,im\n";
    for (const auto& [key, c] : table) {
        out += std::to_string(key.first) + "," + std::to_string(key.second) + "," +
               format_double17(c.real()) + "," + format_double17(c.imag()) + "\n";
    }
    return out;
}

}  // namespace rotalg
