#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "gl6/error.hpp"
#include "gl6/lfactor.hpp"

using namespace gl6;
using cd = std::complex<double>;

namespace {

bool close(cd a, cd b, double tol = 1e-9) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

EulerFactor numeric(std::initializer_list<cd> v) {
    std::vector<SatakeValue> s(v.begin(), v.end());
    return EulerFactor(s);
}

}  // namespace

TEST_CASE("factor of a degree-2 parameter") {
    const auto b = parse_basis("basis alpha1, alpha2;");
    NumericEmbedding e(b);
    const cd U(0.5, 1.0), V(-2.0, 0.25);
    e.assign("alpha1", U);
    e.assign("alpha2", V);
    const auto f = factor_from_param(parse_parameter(b, "[alpha1, alpha2]"), e);
    const auto d = DenomPolynomial(f).numeric();
    REQUIRE(d.size() == 3);
    CHECK(close(d[0], 1.0));
    CHECK(close(d[1], -(U + V)));
    CHECK(close(d[2], U * V));
    const auto c = prime_power_coefficients(f, 3);
    CHECK(close(c[1], U + V));
    CHECK(close(c[2], U * U + U * V + V * V));
    CHECK(close(f.trace(), U + V));
}

TEST_CASE("trivial factor") {
    const auto b = parse_basis("basis alpha;");
    const auto f = factor_from_param(parse_parameter(b, "[1]"), NumericEmbedding(b));
    REQUIRE(f.degree() == 1);
    CHECK(f.exact());
    const auto c = prime_power_coefficients(f, 4);
    for (unsigned k = 0; k <= 4; ++k) CHECK(close(c[k], 1.0));
}

TEST_CASE("products evaluate either way round") {
    const auto b = parse_basis("basis chi:3, alpha1, alpha2, beta1, beta2, beta3;");
    testgen::Gen g(41);
    for (int i = 0; i < 50; ++i) {
        const auto a2 = g.parameter(b, 2), a3 = g.parameter(b, 3);
        const auto e = NumericEmbedding::random(b, g.rng);
        const auto direct = factor_from_param(boxtimes(a2, a3), e);
        const auto rs = rankin_selberg_factor(factor_from_param(a2, e), factor_from_param(a3, e));
        CHECK(check_factor_identity({direct}, {rs}));
        CHECK(close(prime_power_coefficients(direct, 1)[1],
                    factor_from_param(a2, e).trace() * factor_from_param(a3, e).trace()));
    }
}

TEST_CASE("Rankin-Selberg basics") {
    const auto a = numeric({cd(1, 2), cd(0.5, -1)});
    const auto b = numeric({cd(2, 0), cd(0, 1), cd(-1, 0.5)});
    CHECK(rankin_selberg_factor(a, b).degree() == 6);
    CHECK(check_factor_identity({rankin_selberg_factor(a, b)}, {rankin_selberg_factor(b, a)}));
    const auto one = EulerFactor({SatakeValue(Turn(0))});
    CHECK(check_factor_identity({rankin_selberg_factor(one, a)}, {a}));
}

TEST_CASE("factor identities detect perturbations") {
    const auto a = numeric({cd(1, 2), cd(0.5, -1), cd(3, 0)});
    CHECK(check_factor_identity({a}, {a}));
    CHECK(check_factor_identity({numeric({cd(1, 2)}), numeric({cd(0.5, -1), cd(3, 0)})}, {a}));
    CHECK_FALSE(check_factor_identity({a}, {numeric({cd(1, 2), cd(0.5, -1), cd(3, 1e-6)})}));
    CHECK_THROWS_AS(numeric({cd(0, 0)}), DomainError);
}

TEST_CASE("exact denominators over roots of unity") {
    const auto f = EulerFactor({SatakeValue(Turn(0)), SatakeValue(Turn(1, 2))});
    const auto d = DenomPolynomial(f);
    REQUIRE(d.exact());
    const auto& c = std::get<DenomPolynomial::Exact>(d.coefficients());
    CHECK(c[0] == Cyclotomic(1));
    CHECK(c[1] == Cyclotomic(0));
    CHECK(c[2] == Cyclotomic(-1));
}

TEST_CASE("Dirichlet coefficients") {
    SUBCASE("geometric series at one prime") {
        PartialLSeries s;
        s.factors.emplace(2, EulerFactor({SatakeValue(Turn(0))}));
        s.omitted.insert(3);
        const auto c = dirichlet_coefficients(s, 4);
        CHECK(close(c[1], 1.0));
        CHECK(close(c[2], 1.0));
        CHECK(close(c[3], 0.0));
        CHECK(close(c[4], 1.0));
        CHECK_THROWS_AS(dirichlet_coefficients(s, 5), DomainError);
    }
    SUBCASE("multiplicative and a convolution of the factors") {
        testgen::Gen g(42);
        const std::int64_t bound = 200;
        PartialLSeries s1, s2, prod;
        for (const auto p : primes_up_to(bound)) {
            const auto f1 = numeric({g.nonzero_complex(), g.nonzero_complex()});
            const auto f2 = numeric({g.nonzero_complex()});
            s1.factors.emplace(p, f1);
            s2.factors.emplace(p, f2);
            std::vector<SatakeValue> both = f1.satake();
            both.insert(both.end(), f2.satake().begin(), f2.satake().end());
            prod.factors.emplace(p, EulerFactor(both));
        }
        const auto c1 = dirichlet_coefficients(s1, bound), c2 = dirichlet_coefficients(s2, bound),
                   c = dirichlet_coefficients(prod, bound);
        for (std::int64_t n = 1; n <= bound; ++n) {
            cd conv = 0;
            for (std::int64_t d = 1; d <= n; ++d)
                if (n % d == 0) conv += c1[d] * c2[n / d];
            CHECK(close(c[n], conv, 1e-8));
        }
        CHECK(close(c1[6], c1[2] * c1[3]));
    }
    SUBCASE("omitted primes contribute nothing") {
        PartialLSeries s;
        s.factors.emplace(3, numeric({cd(2, 0)}));
        s.omitted = {2, 5, 7};
        const auto c = dirichlet_coefficients(s, 9);
        CHECK(close(c[2], 0.0));
        CHECK(close(c[9], 4.0));
    }
    CHECK_THROWS_AS(dirichlet_coefficients(PartialLSeries{}, kMaxCoefficientBound + 1), DomainError);
}

TEST_CASE("degree-6 factor coefficient") {
    const cd U(1, 1), V(0.5, 0), A(2, -1), B(0, 1), C(-1, 0.5);
    const auto rs = rankin_selberg_factor(numeric({U, V}), numeric({A, B, C}));
    CHECK(close(prime_power_coefficients(rs, 1)[1], (U + V) * (A + B + C)));
}

TEST_CASE("prime lists") {
    CHECK(primes_up_to(30) == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_up_to(1).empty());
}
