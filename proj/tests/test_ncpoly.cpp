#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "matrix_eval_oracle.hpp"
#include "rotalg/reps.hpp"
#include "test_support.hpp"

using namespace rotalg;
using namespace rotalg::testing;

namespace {

double coeff_map_distance(const NCLaurentPoly& a, const NCLaurentPoly& b) {
    double worst = 0.0;
    for (const auto& [key, c] : a.coeffs())
        worst = std::max(worst, std::abs(c - b.coeff(key.first, key.second)));
    for (const auto& [key, c] : b.coeffs())
        worst = std::max(worst, std::abs(c - a.coeff(key.first, key.second)));
    return worst;
}

bool coeff_maps_identical(const NCLaurentPoly& a, const NCLaurentPoly& b) {
    return a.coeffs() == b.coeffs();
}

// Hand-written corpus exercising every production of the grammar.
const std::vector<std::string> kExpressions = {
    "U",
    "V",
    "U*V",
    "V*U",
    "U + U'",
    "U+U'+V+V'",
    "U^2",
    "V^-3",
    "U^-2*V^4",
    "(U+V)^2",
    "(U+V)*(U-V)",
    "U*V - V*U",
    "2.5*U",
    "-3*V",
    "1i*U*V",
    "(0.5+0.25i)*U^2*V^-1",
    "(1-2i)*V'",
    "U'",
    "V'*U'",
    "(U*V)'",
    "(U*V)' * (U*V)",
    "U^3*V^3 - V^3*U^3",
    "0",
    "1",
    "0.5",
    "2i",
    "(2i)*(3i)",
    "U - U",
    "(U + V)'",
    "((U))",
    "(U^2)'",
    "U^2'",
    "3*U^-1*V^2 + 2*V^-2*U^3",
    "U*U*U",
    "U*(V+1)*(V-1)",
    "(V+2)*(V-2) - V^2 + 4",
    "1.5e-1*U",
    "(U'+V')^2",
    "U^1*V^0",
    "(0.25+0i)*V",
};

std::string random_expr(std::mt19937_64& g, int depth) {
    std::uniform_int_distribution<int> pick(0, 9);
    std::uniform_int_distribution<int> expo(-3, 3);
    std::uniform_real_distribution<double> lit(-2.0, 2.0);
    const int c = pick(g);
    if (depth <= 0 || c < 4) {
        switch (c % 4) {
            case 0:
                return "U^" + std::to_string(expo(g));
            case 1:
                return "V^" + std::to_string(expo(g));
            case 2:
                return "U'";
            default: {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.3f", lit(g));
                return std::string(buf);
            }
        }
    }
    const std::string a = random_expr(g, depth - 1);
    const std::string b = random_expr(g, depth - 1);
    switch (c) {
        case 4:
        case 5:
            return "(" + a + " + " + b + ")";
        case 6:
            return "(" + a + " - " + b + ")";
        case 7:
        case 8:
            return "(" + a + ")*(" + b + ")";
        default:
            return "(" + a + " + " + b + ")'";
    }
}

}  // namespace

TEST_CASE("parse produces the documented normal forms") {
    const ModularParams mp = make_params(1, 3);

    const NCLaurentPoly uv = parse("U*V", mp);
    CHECK(uv.support_size() == 1);
    CHECK(std::abs(uv.coeff(1, 1) - Complex(1.0)) == 0.0);

    // Matrix oracle: V0 U0 = omega^{-1} U0 V0, so V*U normalizes to
    // omega^{-1} U V.
    const CMatrix u0 = shift_matrix(mp);
    const CMatrix v0 = clock_matrix(mp);
    const Complex winv = omega_power(mp, -1);
    CHECK(max_abs(v0 * u0 - winv * u0 * v0) <= 1e-15);
    const NCLaurentPoly vu = parse("V*U", mp);
    CHECK(vu.support_size() == 1);
    CHECK(std::abs(vu.coeff(1, 1) - winv) <= 1e-15);

    const NCLaurentPoly sum = parse("U + U'", mp);
    CHECK(sum.support_size() == 2);
    CHECK(sum.coeff(1, 0) == Complex(1.0));
    CHECK(sum.coeff(-1, 0) == Complex(1.0));

    CHECK(parse("0", mp).is_zero());
}

TEST_CASE("multiply implements the twisted product") {
    const ModularParams mp = make_params(2, 5);
    const NCLaurentPoly u = NCLaurentPoly::monomial(mp, 1, 0);
    const NCLaurentPoly v = NCLaurentPoly::monomial(mp, 0, 1);

    const NCLaurentPoly uv = u * v;
    CHECK(uv.coeff(1, 1) == Complex(1.0));

    const NCLaurentPoly vu = v * u;
    CHECK(std::abs(vu.coeff(1, 1) - omega_power(mp, -1)) <= 1e-15);

    // Homomorphism oracle: evaluate through a representation.
    auto g = rng(8101);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
    for (int trial = 0; trial < 10; ++trial) {
        const NCLaurentPoly a = random_poly(g, mp, 5, 5);
        const NCLaurentPoly b = random_poly(g, mp, 5, 5);
        const NCLaurentPoly ab = a * b;
        for (int k = 0; k < 10; ++k) {
            const RepPoint pt = RepPoint::from_angles(ang(g), ang(g));
            CHECK(max_abs(rep_evaluate(ab, pt) - rep_evaluate(a, pt) * rep_evaluate(b, pt)) <=
                  1e-10);
        }
    }

    const ModularParams other = make_params(1, 3);
    CHECK_THROWS_AS(u * NCLaurentPoly::monomial(other, 1, 0), ParamsMismatch);
}

TEST_CASE("adjoint matches the matrix star and is an involution") {
    const ModularParams mp = make_params(1, 4);
    const NCLaurentPoly u = NCLaurentPoly::monomial(mp, 1, 0);
    CHECK(adjoint(u).coeff(-1, 0) == Complex(1.0));
    CHECK(adjoint(u).support_size() == 1);

    // (U0 V0)^* = omega^{-1} U0^{-1} V0^{-1}: verified on matrices first.
    const CMatrix lhs = (shift_matrix(mp) * clock_matrix(mp)).adjoint();
    const CMatrix rhs = omega_power(mp, -1) * monomial_matrix(mp, -1, 0) * monomial_matrix(mp, 0, -1);
    CHECK(max_abs(lhs - rhs) <= 1e-15);
    const NCLaurentPoly uv_star = adjoint(parse("U*V", mp));
    CHECK(std::abs(uv_star.coeff(-1, -1) - omega_power(mp, -1)) <= 1e-15);

    const NCLaurentPoly h = harper(mp);
    CHECK(coeff_maps_identical(adjoint(h), h));

    auto g = rng(8102);
    for (int trial = 0; trial < 20; ++trial) {
        const NCLaurentPoly a = random_poly(g, mp, 6, 5);
        CHECK(coeff_map_distance(adjoint(adjoint(a)), a) <= 1e-15);
    }
}

TEST_CASE("is_selfadjoint classifies the standard examples") {
    const ModularParams mp = make_params(1, 3);
    CHECK(is_selfadjoint(parse("U + U'", mp), 1e-12));
    CHECK_FALSE(is_selfadjoint(parse("U", mp), 1e-12));
    CHECK(is_selfadjoint(harper(mp), 1e-12));

    // i (UV - (UV)^*) is self-adjoint by construction.
    const NCLaurentPoly x = parse("U*V", mp);
    const NCLaurentPoly y = (x - adjoint(x)) * Complex(0.0, 1.0);
    CHECK(is_selfadjoint(y, 1e-12));
}

TEST_CASE("negative powers invert monomials and reject sums") {
    const ModularParams mp = make_params(1, 5);
    const NCLaurentPoly m = NCLaurentPoly::monomial(mp, 2, 3, Complex(0.0, 2.0));
    const NCLaurentPoly prod = m * monomial_inverse(m);
    CHECK(prod.support_size() == 1);
    CHECK(std::abs(prod.coeff(0, 0) - Complex(1.0)) <= 1e-15);

    const NCLaurentPoly inv2 = pow(m, -2);
    CHECK(max_abs(rep_evaluate(inv2 * m * m, RepPoint::from_angles(0.3, 1.1)) -
                  CMatrix::Identity(5, 5)) <= 1e-12);

    CHECK_THROWS_AS(pow(parse("U+V", mp), -1), DomainError);
    CHECK_THROWS_AS(parse("(U+V)^-1", mp), SyntaxError);
    CHECK(parse("2^-1", mp).coeff(0, 0) == Complex(0.5));
}

TEST_CASE("parser reports positions for malformed input") {
    const ModularParams mp = make_params(1, 2);
    CHECK_THROWS_AS(parse("", mp), EmptyExpression);
    CHECK_THROWS_AS(parse("   ", mp), EmptyExpression);

    auto position_of = [&](const std::string& text) {
        try {
            parse(text, mp);
        } catch (const SyntaxError& e) {
            return static_cast<long>(e.position);
        }
        return -1L;
    };
    CHECK(position_of("U+") == 2);
    CHECK(position_of("U^") == 2);
    CHECK(position_of("(U") == 2);
    CHECK(position_of("W") == 0);
    CHECK(position_of("2**U") == 2);
    CHECK(position_of("U V") == 2);
    CHECK(position_of("U)") == 1);
}

TEST_CASE("parsed normal form agrees with direct tree evaluation") {
    auto g = rng(8103);
    std::vector<std::string> corpus = kExpressions;
    for (int i = 0; i < 20; ++i) corpus.push_back(random_expr(g, 3));
    REQUIRE(corpus.size() >= 50);

    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
    for (int q : {2, 3, 5}) {
        const ModularParams mp = make_params(1, q);
        for (const std::string& text : corpus) {
            const NCLaurentPoly p = parse(text, mp);
            for (int k = 0; k < 2; ++k) {
                const RepPoint pt = RepPoint::from_angles(ang(g), ang(g));
                MatrixEvalOracle oracle(mp, pt.z1, pt.z2);
                CHECK(max_abs(rep_evaluate(p, pt) - oracle.eval(text)) <= 1e-10);
            }
        }
    }
}

TEST_CASE("render round-trips to the identical coefficient map") {
    auto g = rng(8104);
    std::vector<std::string> corpus = kExpressions;
    for (int i = 0; i < 15; ++i) corpus.push_back(random_expr(g, 3));

    for (int q : {2, 5}) {
        const ModularParams mp = make_params(1, q);
        for (const std::string& text : corpus) {
            const NCLaurentPoly p = parse(text, mp);
            const NCLaurentPoly again = parse(render(p), mp);
            CHECK(coeff_maps_identical(p, again));
        }
    }
}

TEST_CASE("render produces the documented canonical string") {
    const ModularParams mp = make_params(1, 2);
    CHECK(render(parse("V*U", mp)) == "(-1)\xC2\xB7U^1\xC2\xB7V^1");
    CHECK(render(NCLaurentPoly::zero(mp)) == "(0)");
    CHECK(parse(render(NCLaurentPoly::zero(mp)), mp).is_zero());
}

TEST_CASE("multiplication is associative and distributes") {
    auto g = rng(8105);
    const ModularParams mp = make_params(3, 7);
    for (int trial = 0; trial < 15; ++trial) {
        const NCLaurentPoly a = random_poly(g, mp, 4, 4);
        const NCLaurentPoly b = random_poly(g, mp, 4, 4);
        const NCLaurentPoly c = random_poly(g, mp, 4, 4);
        CHECK(coeff_map_distance((a * b) * c, a * (b * c)) <= 1e-10);
        CHECK(coeff_map_distance(a * (b + c), a * b + a * c) <= 1e-10);
    }
}

TEST_CASE("monomial phase chains do not drift") {
    auto g = rng(8106);
    const ModularParams mp = make_params(2, 7);
    std::uniform_int_distribution<int> exp(-6, 6);
    NCLaurentPoly acc = NCLaurentPoly::monomial(mp, 0, 0);
    for (int i = 0; i < 100; ++i) acc = acc * NCLaurentPoly::monomial(mp, exp(g), exp(g));
    CHECK(acc.support_size() == 1);
    CHECK(std::abs(std::abs(acc.coeffs().begin()->second) - 1.0) <= 1e-13);
}
