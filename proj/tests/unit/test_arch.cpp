#include <doctest.h>

#include <cmath>
#include <set>

#include "gl6/arch.hpp"
#include "gl6/error.hpp"

using namespace gl6;

TEST_CASE("degree windows") {
    CHECK(degree_window(6).d == 9);
    CHECK(degree_window(6).hi == 11);
    CHECK(degree_window(2).d == 1);
    CHECK(degree_window(2).hi == 1);
    CHECK(degree_window(3).d == 2);
    CHECK(degree_window(3).hi == 3);
    for (int m = 1; m <= 20; ++m) {
        CHECK(degree_window(2 * m).d == m * m);
        if (m >= 1) CHECK(degree_window(2 * m + 1).d == m * (m + 1));
    }
    CHECK_THROWS_AS(degree_window(1), DomainError);
}

TEST_CASE("cohomological types") {
    CHECK(cohomological_type(3) == parse_arch("{(2;2), (0;2), (-2;2)}"));
    for (int n = 2; n <= 30; ++n) {
        const auto t = cohomological_type(n);
        CHECK(t.degree() == static_cast<std::size_t>(n));
        CHECK(is_regular(t));
    }
    CHECK_THROWS_AS(cohomological_type(1), DomainError);
}

TEST_CASE("weight-4 times GL(3) is cohomological for GL(6)") {
    CHECK(check_sym_tensor_infinity());
    const auto d = tensor_with_gl3(weight4_type());
    CHECK(d.regular);
    CHECK(d.product == cohomological_type(6));
    const auto w2 = tensor_with_gl3(weight2_type());
    CHECK_FALSE(w2.regular);
    CHECK(w2.collisions.size() == 2);
}

TEST_CASE("tensor products add exponents") {
    const auto a = parse_arch("{(1;0), (2;1)}"), b = parse_arch("{(0;0), (5;5), (-1;2)}");
    const auto t = arch_tensor(a, b);
    CHECK(t.degree() == 6);
    std::multiset<std::pair<std::int64_t, std::int64_t>> want;
    for (const auto& x : a.entries())
        for (const auto& y : b.entries()) want.insert({x.k + y.k, x.w + y.w});
    std::multiset<std::pair<std::int64_t, std::int64_t>> got;
    for (const auto& e : t.entries()) got.insert({e.k, e.w});
    CHECK(got == want);
}

TEST_CASE("induced types of degree 2m") {
    const auto a2 = appendix_infinity(2);
    CHECK(a2.k == std::vector<std::int64_t>{3, 1});
    for (int m = 2; m <= 12; ++m) {
        const auto a = appendix_infinity(m);
        CHECK(a.regular);
        CHECK(a.degree == 2 * m);
        CHECK(a.induced == cohomological_type(2 * m));
    }
    CHECK_THROWS_AS(appendix_infinity(1), DomainError);
}

TEST_CASE("unit condition") {
    // u = exp(i pi / 4): 2 k arg u = pi/2 for k = 1, so M = 4 is the first solution.
    const std::vector<std::complex<double>> u{std::polar(1.0, M_PI / 4)};
    CHECK(unit_condition(u, {1}, 10, 1e-9) == 4);
    CHECK(unit_condition(u, {2}, 10, 1e-9) == 2);
    CHECK_FALSE(unit_condition({std::polar(1.0, 1.0)}, {1}, 10, 1e-9).has_value());
    CHECK_THROWS_AS(unit_condition(u, {1, 2}, 10, 1e-9), DomainError);
}

TEST_CASE("arch literals") {
    const auto t = parse_arch("{(3;3), (-3;3)}");
    CHECK(format_arch(t) == "{(-3;3), (3;3)}");
    CHECK(parse_arch(format_arch(cohomological_type(7))) == cohomological_type(7));
    CHECK_THROWS_AS(parse_arch("{(3,3)}"), ParseError);
    CHECK_THROWS_AS(parse_arch("{}"), ParseError);
    CHECK_THROWS_AS(parse_arch("{(a;3)}"), ParseError);
}
