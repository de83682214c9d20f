#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "gl6/charalg.hpp"
#include "gl6/error.hpp"

using namespace gl6;

namespace {

BasisPtr mixed() { return parse_basis("basis chi:3, delta:2, alpha, beta;"); }

}  // namespace

TEST_CASE("basis literal records names and orders") {
    const auto b = mixed();
    REQUIRE(b->size() == 4);
    CHECK((*b)[0].name == "chi");
    CHECK((*b)[0].order == 3);
    CHECK((*b)[1].order == 2);
    CHECK_FALSE((*b)[2].order.has_value());
    CHECK(b->index_of("beta") == 3);
    CHECK_THROWS_AS(b->index_of("gamma"), ParseError);
}

TEST_CASE("malformed basis literals are rejected") {
    CHECK_THROWS_AS(parse_basis("alpha, beta"), ParseError);
    CHECK_THROWS_AS(parse_basis("basis alpha, alpha;"), Error);
    CHECK_THROWS_AS(parse_basis("basis chi:1;"), Error);
    CHECK_THROWS_AS(parse_basis("basis chi:x;"), ParseError);
}

TEST_CASE("finite-order exponents reduce") {
    const auto b = mixed();
    const auto chi = Character::generator(b, "chi");
    CHECK(chi.pow(3).is_trivial());
    CHECK(chi.pow(-1) == chi.pow(2));
    CHECK(parse_character(b, "chi^4*delta^3") == parse_character(b, "chi*delta"));
    CHECK(chi.order() == 3);
    CHECK(parse_character(b, "chi*delta").order() == 6);
    CHECK_FALSE(parse_character(b, "alpha*chi").order().has_value());
    CHECK(Character(b).order() == 1);
}

TEST_CASE("character literal round trip") {
    const auto b = mixed();
    testgen::Gen g(11);
    for (int i = 0; i < 200; ++i) {
        const auto c = g.character(b, 4);
        CHECK(parse_character(b, format_character(c)) == c);
    }
    CHECK(format_character(Character(b)) == "1");
    CHECK_THROWS_AS(parse_character(b, "gamma"), ParseError);
    CHECK_THROWS_AS(parse_character(b, "alpha^"), ParseError);
}

TEST_CASE("characters form an abelian group") {
    const auto b = mixed();
    testgen::Gen g(12);
    for (int i = 0; i < 200; ++i) {
        const auto x = g.character(b), y = g.character(b), z = g.character(b);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK((x * char_inv(x)).is_trivial());
        CHECK(x.pow(3) == x * x * x);
    }
}

TEST_CASE("mixing bases is an error") {
    const auto a = parse_basis("basis alpha;");
    const auto b = parse_basis("basis beta;");
    CHECK_THROWS_AS(Character::generator(a, "alpha") * Character::generator(b, "beta"), BasisMismatch);
}

TEST_CASE("evaluation is a homomorphism") {
    const auto b = mixed();
    testgen::Gen g(13);
    for (int i = 0; i < 100; ++i) {
        const auto e = NumericEmbedding::random(b, g.rng);
        const auto x = g.character(b, 3), y = g.character(b, 3);
        const auto lhs = char_eval(x * y, e);
        const auto rhs = char_eval(x, e) * char_eval(y, e);
        CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("exact evaluation on roots of unity") {
    const auto b = mixed();
    NumericEmbedding e(b);
    e.assign_root("chi", 1, 3);
    e.assign_root("delta", 1, 2);
    e.assign("alpha", std::complex<double>(2.0, 0.0));
    CHECK(char_eval_exact(parse_character(b, "chi^2*delta"), e) == Turn(1, 6));
    CHECK_FALSE(char_eval_exact(parse_character(b, "alpha"), e).has_value());
    CHECK(std::abs(char_eval(parse_character(b, "alpha^2*delta"), e) - std::complex<double>(-4, 0)) < 1e-12);
    CHECK_THROWS_AS(char_eval(parse_character(b, "beta"), e), DomainError);
    CHECK_THROWS_AS(e.assign_root("chi", 1, 4), DomainError);
}

TEST_CASE("embedding files") {
    const auto b = mixed();
    const auto e = parse_embedding(b, "# values\nchi root 2 3\ndelta root 1 2\nalpha 0.5 -1\nbeta 2 0\n");
    CHECK(char_eval_exact(parse_character(b, "chi"), e) == Turn(2, 3));
    CHECK(std::abs(char_eval(parse_character(b, "alpha*beta"), e) - std::complex<double>(1, -2)) < 1e-12);
    CHECK_THROWS_AS(parse_embedding(b, "alpha 1\n"), ParseError);
    CHECK_THROWS_AS(parse_embedding(b, "alpha 1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_embedding(b, "gamma 1 0\n"), ParseError);
}

TEST_CASE("random embeddings respect finite orders") {
    const auto b = mixed();
    testgen::Gen g(14);
    for (int i = 0; i < 50; ++i) {
        const auto e = NumericEmbedding::random(b, g.rng);
        const auto v = char_eval(Character::generator(b, "chi").pow(3), e);
        CHECK(std::abs(v - 1.0) < 1e-12);
        const auto a = std::abs(char_eval(Character::generator(b, "alpha"), e));
        CHECK(a >= 0.5 - 1e-12);
        CHECK(a <= 2.0 + 1e-12);
    }
}
