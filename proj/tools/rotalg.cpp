// Command-line front end: reproducible, scriptable computations in rational
// rotation algebras with file outputs.
//
// Exit codes: 0 success, 2 expression/command syntax, 3 domain error, 4 I/O.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rotalg/bundle.hpp"
#include "rotalg/ncpoly.hpp"
#include "rotalg/reps.hpp"
#include "rotalg/spectral.hpp"

namespace {

using namespace rotalg;

TorusGrid parse_grid(const std::string& spec) {
    const auto x = spec.find('x');
    if (x == std::string::npos || x == 0 || x + 1 >= spec.size())
        throw RangeError("grid must look like N1xN2, got '" + spec + "'");
    try {
        return TorusGrid{std::stoi(spec.substr(0, x)), std::stoi(spec.substr(x + 1))};
    } catch (const std::exception&) {
        throw RangeError("grid must look like N1xN2, got '" + spec + "'");
    }
}

// Complex literals on the command line: 1, -0.5, i, -i, 2i, 1+2i, 0.7-0.7i.
Complex parse_complex_cli(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw SyntaxError("empty complex value", 0);

    auto bare_i = [](const std::string& t, double& sign) {
        if (t == "i" || t == "+i") {
            sign = 1.0;
            return true;
        }
        if (t == "-i") {
            sign = -1.0;
            return true;
        }
        return false;
    };
    double sign = 0.0;
    if (bare_i(s, sign)) return {0.0, sign};

    const char* begin = s.c_str();
    char* end = nullptr;
    const double first = std::strtod(begin, &end);
    if (end == begin) throw SyntaxError("bad complex value '" + raw + "'", 0);
    std::string rest(end);
    if (rest.empty()) return {first, 0.0};
    if (rest == "i") return {0.0, first};

    if (bare_i(rest, sign)) return {first, sign};
    const char* begin2 = rest.c_str();
    char* end2 = nullptr;
    const double second = std::strtod(begin2, &end2);
    if (end2 == begin2 || std::string(end2) != "i")
        throw SyntaxError("bad complex value '" + raw + "'", 0);
    return {first, second};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CMatrix matrix_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("bad matrix JSON: ") + e.what());
    }
    if (!j.contains("dim") || !j.contains("entries"))
        throw IoError("matrix JSON needs fields dim, entries");
    const int n = j["dim"].get<int>();
    if (n <= 0 || static_cast<int>(j["entries"].size()) != n * n)
        throw IoError("matrix JSON entries must hold dim^2 [re,im] pairs");
    CMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const auto& e = j["entries"][static_cast<std::size_t>(r) * n + c];
            m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
        }
    return m;
}

nlohmann::json matrix_to_json_entries(const CMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            entries.push_back({m(r, c).real(), m(r, c).imag()});
    return entries;
}

struct Options {
    int p = 1;
    int q = 2;
    std::string expr;
    std::string grid = "64x64";
    int refine = 3;
    double tol = 1e-9;
    std::string out;
    std::string format = "csv";
    int qmax = 2;
    int mmax = -1;
    std::string file;
    std::vector<std::string> zs;
    std::vector<int> classify_args;
};

void cmd_norm(const Options& opt) {
    const ModularParams mp = make_params(opt.p, opt.q);
    const TorusGrid grid = parse_grid(opt.grid);
    const NCLaurentPoly a = parse(opt.expr, mp);
    const NormEstimate est = operator_norm_estimate(a, grid, opt.refine);
    std::cout << format_double17(est.value) << "\n";
    if (!opt.out.empty()) {
        const RepPoint pt = est.argmax();
        nlohmann::json j;
        j["norm"] = est.value;
        j["argmax"] = {{"z1", {pt.z1.real(), pt.z1.imag()}},
                       {"z2", {pt.z2.real(), pt.z2.imag()}},
                       {"phi1", est.phi1},
                       {"phi2", est.phi2}};
        j["grid"] = {grid.n1, grid.n2};
        j["refine"] = opt.refine;
        write_file(opt.out, j.dump(2) + "\n");
    }
}

void cmd_butterfly(const Options& opt) {
    const TorusGrid grid = parse_grid(opt.grid);
    const auto rows = butterfly(opt.qmax, opt.expr, grid);
    std::string payload;
    if (opt.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows)
            j.push_back({{"p", r.p}, {"q", r.q}, {"theta", r.theta}, {"band_lo", r.lo},
                         {"band_hi", r.hi}});
        payload = j.dump(2) + "\n";
    } else {
        payload = butterfly_csv(rows);
    }
    if (opt.out.empty())
        std::cout << payload;
    else
        write_file(opt.out, payload);
}

void cmd_classify(const Options& opt) {
    const auto& a = opt.classify_args;
    std::cout << (classify_isomorphic(a[0], a[1], a[2], a[3]) ? "isomorphic" : "not-isomorphic")
              << "\n";
}

void cmd_rep_equiv(const Options& opt) {
    const RepPoint a(parse_complex_cli(opt.zs[0]), parse_complex_cli(opt.zs[1]));
    const RepPoint b(parse_complex_cli(opt.zs[2]), parse_complex_cli(opt.zs[3]));
    std::cout << (reps_equivalent(a, b, opt.q, opt.tol) ? "equivalent" : "not-equivalent")
              << "\n";
}

void cmd_spectral_decomp(const Options& opt) {
    const CMatrix m = matrix_from_json(read_file(opt.file));
    const SpectralFamily fam = spectral_decomposition(m, opt.tol);
    std::string line = "phases:";
    for (double phi : fam.phases) line += " " + format_double17(phi);
    std::cout << line << "\n";
    if (!opt.out.empty()) {
        nlohmann::json j;
        j["dim"] = m.rows();
        j["phases"] = fam.phases;
        nlohmann::json projs = nlohmann::json::array();
        for (const CMatrix& p : fam.projections) projs.push_back(matrix_to_json_entries(p));
        j["projections"] = std::move(projs);
        write_file(opt.out, j.dump(2) + "\n");
    }
}

void cmd_fourier(const Options& opt) {
    const SectionGrid s = section_from_json(read_file(opt.file));
    const int mmax = opt.mmax >= 0 ? opt.mmax : s.n / 2 - 1;
    const CoeffTable table = fourier_coefficients(s, mmax);
    std::string payload;
    if (opt.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& [key, c] : table)
            j.push_back({{"m", key.first}, {"n", key.second}, {"re", c.real()},
                         {"im", c.imag()}});
        payload = j.dump(2) + "\n";
    } else {
        payload = coeff_table_csv(table);
    }
    if (opt.out.empty())
        std::cout << payload;
    else
        write_file(opt.out, payload);
}

void cmd_verify_section(const Options& opt) {
    const SectionGrid s = section_from_json(read_file(opt.file));
    const MembershipReport rep = check_membership(s, opt.tol);
    std::cout << (rep.member ? "member" : "not-member")
              << " max_violation=" << format_double17(rep.max_violation) << "\n";
}

void cmd_normal_form(const Options& opt) {
    const ModularParams mp = make_params(opt.p, opt.q);
    std::cout << render(parse(opt.expr, mp)) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Computations in rational rotation C*-algebras"};
    app.require_subcommand(1);
    Options opt;

    auto add_pq = [&](CLI::App* cmd) {
        cmd->add_option("--p", opt.p, "numerator of the rotation angle p/q")->required();
        cmd->add_option("--q", opt.q, "denominator of the rotation angle p/q")->required();
    };

    CLI::App* norm = app.add_subcommand("norm", "operator norm of an expression");
    add_pq(norm);
    norm->add_option("--expr", opt.expr, "Laurent expression in U, V")->required();
    norm->add_option("--grid", opt.grid, "torus sample grid N1xN2 (default 64x64)");
    norm->add_option("--refine", opt.refine, "refinement rounds (default 3)");
    norm->add_option("--out", opt.out, "write JSON result here");
    norm->callback([&] { cmd_norm(opt); });

    CLI::App* bfly = app.add_subcommand("butterfly", "band spectra for all p/q up to qmax");
    bfly->add_option("--qmax", opt.qmax, "largest denominator")->required();
    bfly->add_option("--expr", opt.expr, "self-adjoint Laurent expression")->required();
    bfly->add_option("--grid", opt.grid, "torus sample grid N1xN2 (default 64x64)");
    bfly->add_option("--out", opt.out, "output file (stdout when omitted)");
    bfly->add_option("--format", opt.format, "csv (default) or json")
        ->check(CLI::IsMember({"csv", "json"}));
    bfly->callback([&] { cmd_butterfly(opt); });

    CLI::App* cls = app.add_subcommand("classify", "isomorphism of A_{p/q} and A_{p2/q2}");
    cls->add_option("args", opt.classify_args, "p q p2 q2")->expected(4);
    cls->callback([&] { cmd_classify(opt); });

    CLI::App* req = app.add_subcommand("rep-equiv", "unitary equivalence of representation points");
    req->add_option("--q", opt.q, "denominator q")->required();
    req->add_option("--tol", opt.tol, "comparison tolerance (default 1e-9)");
    req->add_option("points", opt.zs, "z1 z2 z1' z2' as complex literals")->expected(4);
    req->callback([&] { cmd_rep_equiv(opt); });

    CLI::App* sd = app.add_subcommand("spectral-decomp", "spectral family of a unitary matrix");
    sd->add_option("file", opt.file, "matrix JSON {dim, entries: [[re,im]...]}")->required();
    sd->add_option("--tol", opt.tol, "unitarity tolerance (default 1e-9)");
    sd->add_option("--out", opt.out, "write phases and projections JSON here");
    sd->callback([&] { cmd_spectral_decomp(opt); });

    CLI::App* fo = app.add_subcommand("fourier", "Fourier coefficients of a section file");
    fo->add_option("file", opt.file, "section JSON {p,q,n,values}")->required();
    fo->add_option("--mmax", opt.mmax, "coefficient box bound (default n/2-1)");
    fo->add_option("--out", opt.out, "output file (stdout when omitted)");
    fo->add_option("--format", opt.format, "csv (default) or json")
        ->check(CLI::IsMember({"csv", "json"}));
    fo->callback([&] { cmd_fourier(opt); });

    CLI::App* vs = app.add_subcommand("verify-section", "twisted-equivariance membership test");
    vs->add_option("file", opt.file, "section JSON {p,q,n,values}")->required();
    vs->add_option("--tol", opt.tol, "violation tolerance (default 1e-9)");
    vs->callback([&] { cmd_verify_section(opt); });

    CLI::App* nf = app.add_subcommand("normal-form", "canonical form of an expression");
    add_pq(nf);
    nf->add_option("expr", opt.expr, "Laurent expression in U, V")->required();
    nf->callback([&] { cmd_normal_form(opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
