#include <doctest.h>

#include "gl6/catalog.hpp"
#include "gl6/criterion.hpp"
#include "gl6/error.hpp"

using namespace gl6;

namespace {

GL2Descriptor gl2(std::string label, GL2Kind kind) {
    GL2Descriptor d;
    d.label = std::move(label);
    d.kind = kind;
    return d;
}

GL2Descriptor dihedral(std::string label, int order) {
    auto d = gl2(std::move(label), GL2Kind::Dihedral);
    d.projective_order = order;
    d.induced_from = "tau";
    d.quadratic = "delta";
    return d;
}

GL3Descriptor adjoint_twist(std::string label, std::set<std::string> of) {
    GL3Descriptor d;
    d.label = std::move(label);
    d.kind = GL3Kind::AdjointTwist;
    d.adjoint_of = std::move(of);
    d.essentially_selfdual = true;
    d.twist = "nu";
    return d;
}

GL3Descriptor monomial(std::string label, std::string field, bool normal) {
    GL3Descriptor d;
    d.label = std::move(label);
    d.kind = GL3Kind::Monomial;
    d.fields = {{std::move(field), normal}};
    d.admits_selftwist = normal;
    return d;
}

}  // namespace

TEST_CASE("adjoint twists") {
    const auto t = gl2("pi", GL2Kind::Tetrahedral);
    const auto v = decide_cuspidality(adjoint_twist("Pi", {"pi"}), t);
    CHECK(v.outcome == Outcome::Type222);
    CHECK(v.rule == "adjoint-twist/tetrahedral");
    CHECK(v.witnesses.size() == 3);

    for (const auto kind : {GL2Kind::Octahedral, GL2Kind::General}) {
        const auto w = decide_cuspidality(adjoint_twist("Pi", {"pi"}), gl2("pi", kind));
        CHECK(w.outcome == Outcome::Type24);
        CHECK(w.rule == "adjoint-twist/non-tetrahedral");
    }

    auto twisted = gl2("pi2", GL2Kind::General);
    twisted.twist_class = "pi";
    CHECK(decide_cuspidality(adjoint_twist("Pi", {"pi"}), twisted).outcome == Outcome::Type24);
    CHECK(decide_cuspidality(adjoint_twist("Pi", {"sigma"}), gl2("pi", GL2Kind::General)).outcome == Outcome::Cuspidal);
    CHECK_THROWS_AS(decide_cuspidality(adjoint_twist("Pi", {"pi"}), dihedral("pi", 4)), InconsistentInput);
}

TEST_CASE("cubic monomial against a D6 dihedral form") {
    auto p2 = dihedral("pi", 6);
    p2.eisenstein_cubics = {"K"};
    const auto v = decide_cuspidality(monomial("Pi", "K", false), p2);
    CHECK(v.outcome == Outcome::Type33);
    CHECK(v.rule == "dihedral-D6/cubic-monomial");
    CHECK(decide_cuspidality(monomial("Pi", "L", false), p2).outcome == Outcome::Cuspidal);
    CHECK(decide_cuspidality(monomial("Pi", "K", true), p2).outcome == Outcome::Cuspidal);
    CHECK(decide_cuspidality(monomial("Pi", "K", false), dihedral("pi", 6)).rule == "no-clause");
}

TEST_CASE("adjoint pairs") {
    auto a = gl2("a", GL2Kind::Tetrahedral), b = gl2("b", GL2Kind::Tetrahedral);
    a.twist_class = b.twist_class = "t";
    CHECK(decide_adjoint_pair(a, b).outcome == Outcome::Type222);

    auto oa = gl2("oa", GL2Kind::Octahedral), ob = gl2("ob", GL2Kind::Octahedral);
    CHECK(decide_adjoint_pair(oa, ob).rule == "no-clause");
    oa.s4_tag = ob.s4_tag = "E";
    oa.adjoint_class = ob.adjoint_class = "Ad";
    const auto shared = decide_adjoint_pair(oa, ob);
    CHECK(shared.outcome == Outcome::Type24);
    CHECK(shared.rule == "octahedral/shared-extension");
    ob.adjoint_class = "Ad'";
    CHECK(decide_adjoint_pair(oa, ob).outcome == Outcome::Cuspidal);

    auto partner = dihedral("d", 6);
    ob.dihedral_partners = {"d"};
    const auto p = decide_adjoint_pair(partner, ob);
    CHECK(p.outcome == Outcome::Type33);
    CHECK(p.rule == "octahedral/dihedral-partner");
    CHECK_THROWS_AS(decide_adjoint_pair(ob, partner), InconsistentInput);

    auto mixed = gl2("m", GL2Kind::Octahedral);
    mixed.twist_class = "t";
    CHECK_THROWS_AS(decide_adjoint_pair(mixed, b), InconsistentInput);
}

TEST_CASE("descriptor validation") {
    auto d = gl2("x", GL2Kind::Dihedral);
    CHECK_THROWS_AS(validate(d), InconsistentInput);
    d.projective_order = 3;
    d.induced_from = "tau";
    CHECK_THROWS_AS(validate(d), InconsistentInput);
    d.projective_order = 4;
    CHECK_NOTHROW(validate(d));
    d.eisenstein_cubics = {"K"};
    CHECK_THROWS_AS(validate(d), InconsistentInput);

    auto t = gl2("t", GL2Kind::Tetrahedral);
    t.projective_order = 12;
    CHECK_THROWS_AS(validate(t), InconsistentInput);
    t.projective_order = 0;
    t.s4_tag = "E";
    CHECK_THROWS_AS(validate(t), InconsistentInput);

    GL3Descriptor g;
    g.kind = GL3Kind::AdjointTwist;
    CHECK_THROWS_AS(validate(g), InconsistentInput);
    g.adjoint_of = {"pi"};
    CHECK_THROWS_AS(validate(g), InconsistentInput);  // not marked essentially selfdual
    g.essentially_selfdual = true;
    CHECK_NOTHROW(validate(g));

    auto m = monomial("M", "K", true);
    m.admits_selftwist = false;
    CHECK_THROWS_AS(validate(m), InconsistentInput);
    auto r = monomial("R", "K", false);
    r.regular_algebraic = r.base_not_totally_imaginary = true;
    CHECK_THROWS_AS(validate(r), InconsistentInput);

    GL3Descriptor s;
    s.kind = GL3Kind::SelfTwist;
    CHECK_THROWS_AS(validate(s), InconsistentInput);
    s.admits_selftwist = true;
    s.selftwist = "chi";
    CHECK_NOTHROW(validate(s));
}

TEST_CASE("products with a non-polyhedral GL(2) form") {
    GL3Descriptor p3;
    p3.label = "Pi";
    p3.regular_algebraic = true;
    p3.base_not_totally_imaginary = true;
    const auto r = decide_nonpolyhedral_product(p3, gl2("pi", GL2Kind::General));
    CHECK(r.cuspidal);
    CHECK(r.no_selftwist);
    CHECK(r.monomial_excluded);
    CHECK(r.not_cubic_induced);
    CHECK(r.not_solvably_induced);

    p3.admits_selftwist = true;
    p3.solvable_type = true;
    const auto s = decide_nonpolyhedral_product(p3, gl2("pi", GL2Kind::General));
    CHECK_FALSE(s.no_selftwist);
    CHECK_FALSE(s.not_cubic_induced);
    CHECK_FALSE(s.not_solvably_induced);

    CHECK_THROWS_AS(decide_nonpolyhedral_product(p3, gl2("pi", GL2Kind::Octahedral)), HypothesisError);
    auto sd = adjoint_twist("Pi", {"sigma"});
    CHECK_THROWS_AS(decide_nonpolyhedral_product(sd, gl2("pi", GL2Kind::General)), HypothesisError);
}

TEST_CASE("descriptor files") {
    const auto f = parse_descriptors(
        "basis chi:3, omega;\n"
        "# a D6 form and a cubic monomial GL(3) form\n"
        "[gl2]\n"
        "label = pi\n"
        "kind = dihedral\n"
        "projective_order = 6\n"
        "induced_from = tau\n"
        "quadratic = delta\n"
        "eisenstein_cubics = K3.1, K3.2\n"
        "central = omega*chi\n"
        "[gl3]\n"
        "label = Pi\n"
        "kind = monomial\n"
        "fields = K3.1:nonnormal\n"
        "essentially_selfdual = no\n");
    REQUIRE(f.gl2);
    REQUIRE(f.gl3);
    CHECK_FALSE(f.gl2b);
    CHECK(f.gl2->eisenstein_cubics.size() == 2);
    CHECK(f.gl2->central.has_value());
    CHECK(f.gl3->fields.size() == 1);
    CHECK(decide_cuspidality(*f.gl3, *f.gl2).outcome == Outcome::Type33);

    CHECK_THROWS_AS(parse_descriptors("[gl2]\ncentral = chi\n"), ParseError);
    CHECK_THROWS_AS(parse_descriptors("[gl2]\ncolour = red\n"), ParseError);
    CHECK_THROWS_AS(parse_descriptors("[gl4]\n"), ParseError);
    CHECK_THROWS_AS(parse_descriptors("[gl3]\nfields = K:sometimes\n"), ParseError);
    CHECK_THROWS_AS(parse_descriptors("[gl3]\nadmits_selftwist = maybe\n"), ParseError);
    try {
        parse_descriptors("[gl2]\nlabel = x\nkind = cubic\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("model descriptors for S4 and GL(2,3)") {
    const GroupModel s4(symmetric_group(4));
    for (std::size_t i = 0; i < s4.irreducibles().size(); ++i) {
        if (s4.irreducibles()[i].integer_degree() != 2) continue;
        const auto d = s4.describe_gl2(i);
        CHECK(d.kind == GL2Kind::Dihedral);
        CHECK(d.projective_order == 6);
        CHECK(d.eisenstein_cubics.size() == 1);
    }
    const GroupModel g(gl2_3());
    int octahedral = 0;
    for (std::size_t i = 0; i < g.irreducibles().size(); ++i) {
        if (g.irreducibles()[i].integer_degree() != 2) continue;
        const auto d = g.describe_gl2(i);
        if (d.kind != GL2Kind::Octahedral) continue;
        ++octahedral;
        CHECK_FALSE(d.s4_tag.empty());
        CHECK(d.dihedral_partners.size() == 1);
    }
    CHECK(octahedral == 2);
}

TEST_CASE("rules agree with brute-force decomposition on the built-in catalog") {
    for (const auto& grp : builtin_catalog()) {
        const GroupModel m(grp);
        for (const auto& c : cross_validate(m)) {
            CHECK_MESSAGE(c.agree, grp->name() << " " << c.left << " x " << c.right << ": " << c.decided.rule);
            CHECK(c.witnesses_twist_equivalent);
        }
        for (const auto& c : cross_validate_adjoint_pairs(m))
            CHECK_MESSAGE(c.agree, grp->name() << " " << c.left << " x Ad " << c.right << ": " << c.decided.rule);
    }
}
