#include <doctest.h>

#include <cmath>
#include <numeric>

#include "generators.hpp"
#include "gl6/cyclotomic.hpp"
#include "gl6/error.hpp"

using namespace gl6;

namespace {

Cyclotomic random_element(testgen::Gen& g, int n) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(n));
    for (auto& x : c) x = g.uniform(-3, 3);
    return Cyclotomic::from_powers(n, c, g.uniform(1, 4));
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9 * std::max(1.0, std::abs(b)); }

int mobius(int n) {
    int r = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        r = -r;
    }
    return n > 1 ? -r : r;
}

}  // namespace

TEST_CASE("arithmetic agrees with complex arithmetic") {
    testgen::Gen g(31);
    for (int n : {1, 3, 4, 8, 12, 24}) {
        for (int i = 0; i < 40; ++i) {
            const auto a = random_element(g, n), b = random_element(g, n);
            CHECK(close((a + b).to_complex(), a.to_complex() + b.to_complex()));
            CHECK(close((a * b).to_complex(), a.to_complex() * b.to_complex()));
            CHECK(close(a.conj().to_complex(), std::conj(a.to_complex())));
            CHECK((a - a).is_zero());
        }
    }
}

TEST_CASE("mixed conductors lift to a common field") {
    const auto a = Cyclotomic::zeta(3, 1), b = Cyclotomic::zeta(4, 1);
    CHECK(close((a * b).to_complex(), std::polar(1.0, 2 * M_PI * 7 / 12)));
    CHECK(a.lifted(12) == a);
    CHECK(Cyclotomic::zeta(12, 4) == a);
}

TEST_CASE("roots of unity") {
    for (int n = 1; n <= 24; ++n) {
        Cyclotomic power(1), primitive_sum(0), all_sum(0);
        for (int k = 0; k < n; ++k) {
            all_sum += Cyclotomic::zeta(n, k);
            if (std::gcd(k, n) == 1) primitive_sum += Cyclotomic::zeta(n, k);
        }
        for (int k = 0; k < n; ++k) power *= Cyclotomic::zeta(n, 1);
        CHECK(power == Cyclotomic(1));
        CHECK(all_sum == Cyclotomic(n == 1 ? 1 : 0));
        CHECK(primitive_sum == Cyclotomic(mobius(n)));
    }
}

TEST_CASE("cyclotomic polynomials and phi") {
    CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
    for (int n = 1; n <= 30; ++n) CHECK(cyclotomic_polynomial(n).size() == static_cast<std::size_t>(euler_phi(n) + 1));
}

TEST_CASE("rationals") {
    const auto h = Cyclotomic::rational(3, 6);
    CHECK(h.is_rational());
    CHECK(h.as_rational() == std::pair<std::int64_t, std::int64_t>{1, 2});
    CHECK(Cyclotomic(7).as_integer() == 7);
    CHECK((Cyclotomic::zeta(3, 1) + Cyclotomic::zeta(3, 2)) == Cyclotomic(-1));
    CHECK(Cyclotomic(6).divided(4) == Cyclotomic::rational(3, 2));
    CHECK_THROWS(Cyclotomic::zeta(3, 1).as_integer());
}

TEST_CASE("literal round trip") {
    testgen::Gen g(32);
    for (int i = 0; i < 100; ++i) {
        const auto a = random_element(g, 24);
        CHECK(parse_cyclotomic(a.to_string()) == a);
    }
    CHECK(parse_cyclotomic("1+-1*z3^1") == Cyclotomic(1) - Cyclotomic::zeta(3, 1));
    CHECK(parse_cyclotomic("-z4") == -Cyclotomic::zeta(4, 1));
    CHECK(parse_cyclotomic("3/2") == Cyclotomic::rational(3, 2));
    CHECK_THROWS_AS(parse_cyclotomic("1+*z3"), ParseError);
}
