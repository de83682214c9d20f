#include <doctest.h>

#include <map>
#include <set>

#include "gl6/catalog.hpp"
#include "gl6/error.hpp"
#include "gl6/galois.hpp"

using namespace gl6;

namespace {

std::vector<ClassFunction> of_degree(const GroupPtr& g, std::int64_t d) {
    std::vector<ClassFunction> out;
    for (const auto& x : irreducibles(g))
        if (x.integer_degree() == d) out.push_back(x);
    return out;
}

std::multiset<std::int64_t> constituent_degrees(const ClassFunction& x) {
    std::multiset<std::int64_t> out;
    for (const auto& c : decompose(x))
        for (std::int64_t m = 0; m < c.multiplicity; ++m) out.insert(c.degree);
    return out;
}

}  // namespace

TEST_CASE("Adams operations and powers") {
    for (const auto& g : builtin_catalog())
        for (const auto& x : irreducibles(g)) {
            CHECK(sym_rep(x, 2) + ext_rep(x, 2) == x * x);
            CHECK(sym_rep(x, 2) - ext_rep(x, 2) == adams(x, 2));
            // sym^3 = (x^3 + 3 x psi2 + 2 psi3) / 6
            const auto six_sym3 = x * x * x + (x * adams(x, 2)).scaled(3) + adams(x, 3).scaled(2);
            CHECK(sym_rep(x, 3).scaled(6) == six_sym3);
            CHECK(determinant(x) == ext_rep(x, static_cast<int>(x.integer_degree())));
            CHECK(is_irreducible(x));
        }
}

TEST_CASE("adjoint and A4 of degree-2 characters") {
    for (const auto& g : builtin_catalog())
        for (const auto& x : of_degree(g, 2)) {
            const auto ad = adjoint_rep(x);
            CHECK(ad.integer_degree() == 3);
            CHECK(a4_rep(x).integer_degree() == 5);
            CHECK(x * x.conj() == ClassFunction::trivial(g) + ad);
        }
}

TEST_CASE("projective classification") {
    const auto tags = [](const GroupPtr& g) {
        std::multiset<std::string> out;
        for (const auto& x : of_degree(g, 2)) out.insert(classify_2dim(x).tag());
        return out;
    };
    CHECK(tags(symmetric_group(3)) == std::multiset<std::string>{"Dihedral(D6)"});
    CHECK(tags(dihedral_group(4)) == std::multiset<std::string>{"Dihedral(D4)"});
    CHECK(tags(symmetric_group(4)) == std::multiset<std::string>{"Dihedral(D6)"});
    CHECK(tags(sl2_3()) == std::multiset<std::string>{"Tetrahedral", "Tetrahedral", "Tetrahedral"});
    CHECK(tags(gl2_3()) == std::multiset<std::string>{"Dihedral(D6)", "Octahedral", "Octahedral"});
    for (const auto& x : of_degree(sl2_5(), 2)) CHECK(classify_2dim(x).type == ProjectiveType::Primitive);
    CHECK_THROWS_AS(classify_2dim(of_degree(symmetric_group(4), 3)[0]), DomainError);
}

TEST_CASE("self-twists and self-duality") {
    const auto g = sl2_3();
    for (const auto& x : of_degree(g, 2)) {
        const auto ad = adjoint_rep(x);
        CHECK(self_twists(ad).size() == 3);
        CHECK(essentially_selfdual(x).has_value());
    }
    for (const auto& x : of_degree(gl2_3(), 2))
        if (classify_2dim(x).type == ProjectiveType::Octahedral) CHECK(self_twists(sym_rep(x, 3)).size() == 2);
    const auto f21 = frobenius_21();
    for (const auto& x : of_degree(f21, 3)) CHECK_FALSE(essentially_selfdual(x).has_value());
}

TEST_CASE("Mackey intertwining agrees with inner products of induced characters") {
    for (const auto& g : builtin_catalog()) {
        std::vector<Subgroup> subs = index2_subgroups(g);
        for (const auto& c : index3_subgroup_classes(g)) subs.push_back(c.members.front());
        for (const auto& h : subs) {
            const auto lin = linear_characters(h.group());
            for (const auto& a : lin)
                for (const auto& b : lin)
                    CHECK(Cyclotomic(mackey_intertwining(h, a, b)) == inner_product(induce(h, a), induce(h, b)));
            for (const auto& psi : lin) {
                const auto m = mackey_induced_checks(h, psi);
                const auto ind = induce(h, psi);
                CHECK(m.irreducible == is_irreducible(ind));
                if (m.irreducible) {
                    CHECK(m.essentially_selfdual == essentially_selfdual(ind).has_value());
                    CHECK(m.selftwists.size() == self_twists(ind).size());
                    CHECK(induced_from_linear(ind, h));
                }
            }
        }
    }
}

TEST_CASE("product types of degree-3 by degree-2 products") {
    const auto s4 = symmetric_group(4);
    const auto three = of_degree(s4, 3), two = of_degree(s4, 2);
    for (const auto& x3 : three) {
        const auto t = product_type_bruteforce(x3, two[0]);
        CHECK(t.outcome == Outcome::Type33);
        CHECK(constituent_degrees(x3 * two[0]) == std::multiset<std::int64_t>{3, 3});
    }
    for (const auto& x2 : of_degree(sl2_3(), 2))
        CHECK(product_type_bruteforce(adjoint_rep(x2), x2).outcome == Outcome::Type222);
    for (const auto& x2 : of_degree(gl2_3(), 2))
        if (classify_2dim(x2).type == ProjectiveType::Octahedral)
            CHECK(product_type_bruteforce(adjoint_rep(x2), x2).outcome == Outcome::Type24);
    for (const auto& x3 : of_degree(frobenius_21(), 3)) {
        const auto s3 = symmetric_group(3);
        CHECK_THROWS_AS(product_type_bruteforce(x3, of_degree(s3, 2)[0]), Error);
    }
    CHECK_THROWS_AS(product_type_bruteforce(two[0], three[0]), DomainError);
}

TEST_CASE("no linear constituent in any degree-3 by degree-2 product") {
    for (const auto& g : extended_catalog())
        for (const auto& x3 : of_degree(g, 3))
            for (const auto& x2 : of_degree(g, 2)) CHECK(constituent_degrees(x3 * x2).count(1) == 0);
}

TEST_CASE("decomposition reassembles and rejects non-characters") {
    const auto g = gl2_3();
    const auto irr = irreducibles(g);
    const auto x = irr[2] * irr[3] + irr[1];
    CHECK(reassemble(g, decompose(x)) == x);
    CHECK_THROWS_AS(decompose(irr[1] - irr[2]), DomainError);
}
