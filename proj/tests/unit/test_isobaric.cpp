#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "generators.hpp"
#include "gl6/error.hpp"
#include "gl6/isobaric.hpp"

using namespace gl6;
using cd = std::complex<double>;

namespace {

BasisPtr basis() { return parse_basis("basis chi:3, delta:2, alpha1, alpha2, beta1, beta2, beta3;"); }

std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<cd> values(const LocalParameter& p, const NumericEmbedding& e) {
    std::vector<cd> v;
    for (const auto& c : p.entries()) v.push_back(char_eval(c, e));
    return v;
}

// Elementary and complete homogeneous symmetric polynomials of evaluated
// entries, computed by the usual recurrences.
cd elementary(const std::vector<cd>& x, unsigned k) {
    std::vector<cd> e(k + 1, 0.0);
    e[0] = 1.0;
    for (const auto& z : x)
        for (unsigned j = k; j >= 1; --j) e[j] += e[j - 1] * z;
    return e[k];
}

cd complete(const std::vector<cd>& x, unsigned k) {
    std::vector<cd> h(k + 1, 0.0);
    h[0] = 1.0;
    for (const auto& z : x)
        for (unsigned j = 1; j <= k; ++j) h[j] += h[j - 1] * z;
    return h[k];
}

cd sum(const std::vector<cd>& v) {
    cd s = 0;
    for (const auto& z : v) s += z;
    return s;
}

bool close(cd a, cd b) { return std::abs(a - b) <= 1e-8 * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("parameter literals") {
    const auto b = basis();
    const auto p = parse_parameter(b, "[alpha1, alpha2*chi, alpha1]");
    CHECK(p.degree() == 3);
    CHECK(p.multiplicity(parse_character(b, "alpha1")) == 2);
    CHECK(parse_parameter(b, format_parameter(p)) == p);
    CHECK(parse_parameter(b, "[]").is_empty());
    CHECK_THROWS_AS(parse_parameter(b, "alpha1, alpha2"), ParseError);
    CHECK_THROWS_AS(parse_parameter(b, "[alpha1,,alpha2]"), ParseError);
}

TEST_CASE("binomial degrees and the square split") {
    const auto b = basis();
    testgen::Gen g(21);
    for (int i = 0; i < 60; ++i) {
        const int n = g.uniform(1, 5);
        const auto a = g.parameter(b, n, 1);
        for (unsigned k = 0; k <= 4; ++k) {
            CHECK(sym_k(a, k).degree() == static_cast<std::size_t>(binom(n + k - 1, k)));
            CHECK(ext_k(a, k).degree() == static_cast<std::size_t>(binom(n, k)));
        }
        CHECK(boxplus(sym_k(a, 2), ext_k(a, 2)) == boxtimes(a, a));
    }
}

TEST_CASE("exterior and symmetric powers match symmetric function oracles") {
    const auto b = basis();
    testgen::Gen g(22);
    for (int i = 0; i < 60; ++i) {
        const auto a = g.parameter(b, g.uniform(1, 5), 2);
        const auto e = NumericEmbedding::random(b, g.rng);
        const auto x = values(a, e);
        for (unsigned k = 0; k <= 4; ++k) {
            CHECK(close(sum(values(ext_k(a, k), e)), elementary(x, k)));
            CHECK(close(sum(values(sym_k(a, k), e)), complete(x, k)));
        }
    }
}

TEST_CASE("twist equivariance") {
    const auto b = basis();
    testgen::Gen g(23);
    for (int i = 0; i < 50; ++i) {
        const auto a = g.parameter(b, g.uniform(1, 4));
        const auto c = g.character(b);
        for (unsigned k = 0; k <= 3; ++k) {
            CHECK(ext_k(twist(a, c), k) == twist(ext_k(a, k), c.pow(k)));
            CHECK(sym_k(twist(a, c), k) == twist(sym_k(a, k), c.pow(k)));
        }
    }
}

TEST_CASE("degree three duality") {
    const auto b = basis();
    testgen::Gen g(24);
    for (int i = 0; i < 50; ++i) {
        const auto s = g.parameter(b, 3);
        const auto w = central_char(s);
        CHECK(ext_k(s, 2) == twist(dual(s), w));
        CHECK(ext_k(s, 3) == LocalParameter(b, {w}));
    }
}

TEST_CASE("exterior powers of sums convolve") {
    const auto b = basis();
    testgen::Gen g(25);
    for (int i = 0; i < 80; ++i) {
        const auto A = g.parameter(b, g.uniform(1, 4), 1);
        const auto B = g.parameter(b, g.uniform(1, 4), 1);
        for (unsigned k = 0; k <= A.degree() + B.degree(); ++k) {
            LocalParameter rhs(b);
            for (unsigned j = 0; j <= k; ++j) rhs = boxplus(rhs, boxtimes(ext_k(A, j), ext_k(B, k - j)));
            CHECK(ext_k(boxplus(A, B), k) == rhs);
        }
    }
}

TEST_CASE("adjoint and A4 of a degree-2 parameter") {
    const auto b = basis();
    const auto a = parse_parameter(b, "[alpha1, alpha2]");
    CHECK(adjoint(a) == parse_parameter(b, "[alpha1*alpha2^-1, 1, alpha2*alpha1^-1]"));
    CHECK(a4(a).degree() == 5);
    CHECK(boxtimes(adjoint(a), adjoint(a)) == boxplus(boxplus(parse_parameter(b, "[1]"), adjoint(a)), a4(a)));
    CHECK_THROWS_AS(adjoint(parse_parameter(b, "[alpha1]")), DomainError);
}

TEST_CASE("multiset differences name the unmatched entries") {
    const auto b = basis();
    const auto d = multiset_diff(parse_parameter(b, "[alpha1, alpha1, beta1]"), parse_parameter(b, "[alpha1, beta2]"));
    REQUIRE(d.only_left.size() == 2);
    REQUIRE(d.only_right.size() == 1);
    CHECK(d.only_right[0] == parse_character(b, "beta2"));
    CHECK(multiset_diff(parse_parameter(b, "[beta1]"), parse_parameter(b, "[beta1]")).empty());
}

TEST_CASE("exterior cube of a product, free and degenerate") {
    const auto b = basis();
    const auto free = verify_exterior_cube_product(parse_parameter(b, "[alpha1, alpha2]"),
                                                   parse_parameter(b, "[beta1, beta2, beta3]"));
    CHECK(free.holds);
    CHECK(free.lhs_degree == 22);
    testgen::Gen g(26);
    for (int i = 0; i < 100; ++i) {
        const auto a2 = g.parameter(b, 2, 1), a3 = g.parameter(b, 3, 1);
        const auto r = verify_exterior_cube_product(a2, a3);
        CHECK_MESSAGE(r.holds, r.detail());
        CHECK(exterior_cube_terms(a2, a3).degree() == 22);
    }
    CHECK_THROWS_AS(verify_exterior_cube_product(parse_parameter(b, "[alpha1]"), parse_parameter(b, "[beta1, beta2, beta3]")),
                    DomainError);
}

TEST_CASE("exterior cube of a product under numeric embeddings") {
    const auto b = basis();
    const auto a2 = parse_parameter(b, "[alpha1, alpha2]");
    const auto a3 = parse_parameter(b, "[beta1, beta2, beta3]");
    const auto w2 = central_char(a2), w3 = central_char(a3);
    const auto lhs = boxplus(twist(ext_k(boxtimes(a2, a3), 3), char_inv(w3)), twist(a2, w2));
    const auto rhs = boxplus(sym_k(a2, 3), twist(boxtimes(boxtimes(a2, a3), dual(a3)), w2));
    testgen::Gen g(27);
    for (int i = 0; i < 100; ++i) CHECK(numerically_equal(lhs, rhs, NumericEmbedding::random(b, g.rng)));
    // A single altered entry is caught both symbolically and numerically.
    auto bad = rhs.entries();
    bad[0] = bad[0] * parse_character(b, "alpha1");
    const LocalParameter broken(b, bad);
    CHECK_FALSE(lhs == broken);
    CHECK_FALSE(numerically_equal(lhs, broken, NumericEmbedding::random(b, g.rng)));
}

TEST_CASE("Clebsch-Gordan") {
    const auto b = basis();
    testgen::Gen g(28);
    for (int i = 0; i < 100; ++i) CHECK(verify_clebsch_gordan(g.parameter(b, 2, 1)).holds);
    CHECK_THROWS_AS(verify_clebsch_gordan(parse_parameter(b, "[alpha1, alpha2, beta1]")), DomainError);
}

TEST_CASE("exterior cube of a sum of two degree-3 parameters") {
    const auto b = basis();
    testgen::Gen g(29);
    for (int i = 0; i < 100; ++i) {
        const auto r = verify_exterior_cube_of_sum(g.parameter(b, 3, 1), g.parameter(b, 3, 1), g.character(b));
        CHECK_MESSAGE(r.holds, r.detail());
    }
}

TEST_CASE("twist pair forces the symmetric cube") {
    const auto b = basis();
    const auto C = [&](const char* s) { return parse_character(b, s); };
    CHECK(verify_twist_pair_sym3(parse_parameter(b, "[alpha1, alpha2]"), parse_parameter(b, "[beta1, beta2, beta3]"),
                                 C("alpha1"), C("alpha2"))
              .holds);
    CHECK(verify_twist_pair_sym3(parse_parameter(b, "[alpha1*chi, alpha1]"), parse_parameter(b, "[beta1, beta1, beta2]"),
                                 C("alpha1"), C("alpha1*chi"))
              .holds);
    CHECK_THROWS_AS(verify_twist_pair_sym3(parse_parameter(b, "[alpha1, alpha2]"),
                                           parse_parameter(b, "[beta1, beta2, beta3]"), C("alpha1"), C("beta1")),
                    HypothesisError);
}

TEST_CASE("cubic self-twist shape") {
    const auto b = basis();
    const auto chi = parse_character(b, "chi");
    testgen::Gen g(30);
    for (int i = 0; i < 50; ++i) {
        const auto beta = g.character(b);
        const auto a3 = LocalParameter(b, {beta, beta * chi, beta * chi.pow(2)});
        CHECK(verify_cubic_selftwist_sym3(g.parameter(b, 2, 1), a3, chi).holds);
    }
    const auto a3 = parse_parameter(b, "[beta1, beta1*chi, beta1*chi^2]");
    CHECK_THROWS_AS(verify_cubic_selftwist_sym3(parse_parameter(b, "[alpha1, alpha2]"), a3, Character(b)), DomainError);
    CHECK_THROWS_AS(verify_cubic_selftwist_sym3(parse_parameter(b, "[alpha1, alpha2]"),
                                                parse_parameter(b, "[beta1, beta2, beta3]"), chi),
                    DomainError);
}
