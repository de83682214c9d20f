#include <doctest.h>

#include <map>

#include "generators.hpp"
#include "gl6/catalog.hpp"
#include "gl6/error.hpp"
#include "gl6/galois.hpp"
#include "gl6/group.hpp"

using namespace gl6;

TEST_CASE("catalog orders and names") {
    const std::map<std::string, int> expect = {{"S3", 6},      {"A4", 12},      {"S4", 24},  {"SL(2,3)", 24},
                                               {"GL(2,3)", 48}, {"SL(2,5)", 120}, {"C7:C3", 21}};
    for (const auto& [name, order] : expect) CHECK(catalog_group(name)->order() == order);
    CHECK(builtin_catalog().size() + 4 == extended_catalog().size());
    CHECK_THROWS_AS(catalog_group("M11"), DomainError);
}

TEST_CASE("class equation and element orders") {
    for (const auto& g : extended_catalog()) {
        int total = 0;
        for (const auto& c : g->classes()) {
            total += c.size();
            for (int x : c.members) CHECK(g->element_order(x) == g->element_order(c.representative));
        }
        CHECK(total == g->order());
        CHECK(g->classes()[0].members == std::vector<int>{0});
    }
}

TEST_CASE("character tables satisfy both orthogonality relations exactly") {
    for (const auto& g : extended_catalog()) {
        const auto& t = g->character_table();
        const int k = g->num_classes();
        REQUIRE(static_cast<int>(t.size()) == k);
        std::int64_t degrees = 0;
        for (const auto& row : t) degrees += row[0].as_integer() * row[0].as_integer();
        CHECK(degrees == g->order());
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                Cyclotomic row_sum(0), col_sum(0);
                for (int c = 0; c < k; ++c) row_sum += Cyclotomic(g->class_size(c)) * t[i][c] * t[j][c].conj();
                for (int r = 0; r < k; ++r) col_sum += t[r][i] * t[r][j].conj();
                CHECK(row_sum == Cyclotomic(i == j ? g->order() : 0));
                CHECK(col_sum == Cyclotomic(i == j ? g->order() / g->class_size(i) : 0));
            }
    }
}

TEST_CASE("Frobenius reciprocity on random cyclic subgroups") {
    testgen::Gen gen(51);
    for (const auto& g : builtin_catalog()) {
        const auto irr = irreducibles(g);
        for (int t = 0; t < 3; ++t) {
            const auto h = Subgroup::generated(g, {gen.uniform(0, g->order() - 1)});
            for (const auto& psi : irreducibles(h.group()))
                for (const auto& x : irr) CHECK(inner_product(induce(h, psi), x) == inner_product(psi, restriction(x, h)));
        }
    }
}

TEST_CASE("induction in stages through C2 < C6 < D12") {
    const auto d12 = dihedral_group(6);
    int r = -1;
    for (int x = 0; x < d12->order(); ++x)
        if (d12->element_order(x) == 6) r = x;
    REQUIRE(r >= 0);
    const auto c6 = Subgroup::generated(d12, {r});
    const auto c2_in_d12 = Subgroup::generated(d12, {d12->power(r, 3)});
    const auto c2_in_c6 = Subgroup::generated(c6.group(), {c6.local(d12->power(r, 3))});
    const auto nontrivial = [](const GroupPtr& g) {
        for (const auto& x : linear_characters(g))
            if (!(x == ClassFunction::trivial(g))) return x;
        throw Error("no nontrivial linear character");
    };
    const auto direct = induce(c2_in_d12, nontrivial(c2_in_d12.group()));
    const auto staged = induce(c6, induce(c2_in_c6, nontrivial(c2_in_c6.group())));
    CHECK(direct == staged);
    CHECK(direct.integer_degree() == 6);
}

TEST_CASE("subgroups") {
    const auto s4 = symmetric_group(4);
    const auto a4 = index2_subgroups(s4);
    REQUIRE(a4.size() == 1);
    CHECK(a4[0].order() == 12);
    CHECK(a4[0].is_normal());
    const auto cubic = index3_subgroup_classes(s4);
    REQUIRE(cubic.size() == 1);
    CHECK_FALSE(cubic[0].normal);
    CHECK(cubic[0].members.size() == 3);
    CHECK(cubic[0].members[0].transversal().size() == 3);
    CHECK_THROWS_AS(Subgroup::from_members(s4, {0, 1, 2, 3, 4}), InconsistentInput);
    CHECK_THROWS_AS(Subgroup::from_members(s4, {1}), InconsistentInput);
}

TEST_CASE("group files") {
    const auto c3 = parse_group("order 3 classes 3\n0 1 2\n1 2 0\n2 0 1\n", "C3");
    CHECK(c3->order() == 3);
    CHECK(c3->is_abelian());
    CHECK(irreducibles(c3).size() == 3);

    const auto with_table = parse_group(
        "order 3 classes 3\n0 1 2\n1 2 0\n2 0 1\n1 1 1\n1 z3 z3^2\n1 z3^2 z3\n", "C3");
    CHECK(with_table->character_table().size() == 3);
    CHECK_THROWS_AS(parse_group("order 3 classes 3\n0 1 2\n1 2 0\n2 0 1\n1 1 1\n1 1 1\n1 z3^2 z3\n"), InconsistentInput);
    CHECK_THROWS_AS(parse_group("order 3 classes 3\n0 1 2\n1 1 0\n2 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_group("order three\n"), ParseError);

    for (const auto& g : builtin_catalog()) {
        const auto back = parse_group(format_group(*g, true), g->name());
        CHECK(back->order() == g->order());
        CHECK(back->character_table() == g->character_table());
    }
}
