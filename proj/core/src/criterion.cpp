#include "gl6/criterion.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gl6/error.hpp"

namespace gl6 {

std::string to_string(GL2Kind k) {
    switch (k) {
        case GL2Kind::Dihedral: return "dihedral";
        case GL2Kind::Tetrahedral: return "tetrahedral";
        case GL2Kind::Octahedral: return "octahedral";
        case GL2Kind::General: return "general";
    }
    return "?";
}

std::string to_string(GL3Kind k) {
    switch (k) {
        case GL3Kind::AdjointTwist: return "adjoint_twist";
        case GL3Kind::Monomial: return "monomial";
        case GL3Kind::SelfTwist: return "selftwist";
        case GL3Kind::General: return "general";
    }
    return "?";
}

void validate(const GL2Descriptor& d) {
    const auto fail = [&](const std::string& why) { throw InconsistentInput("GL(2) descriptor '" + d.label + "': " + why); };
    const bool dihedral = d.kind == GL2Kind::Dihedral;
    if (dihedral) {
        if (d.projective_order < 2 || d.projective_order % 2 != 0)
            fail("dihedral kind needs an even projective order >= 2");
        if (d.induced_from.empty()) fail("dihedral kind needs the inducing character");
    } else {
        if (d.projective_order != 0) fail("projective order is only meaningful for dihedral forms");
        if (!d.induced_from.empty() || !d.quadratic.empty()) fail("induced-from data on a non-dihedral form");
    }
    if (!d.eisenstein_cubics.empty() && !(dihedral && d.projective_order == 6))
        fail("Eisensteinian over a non-normal cubic field forces projective image D6");
    if (d.kind != GL2Kind::Octahedral && (!d.s4_tag.empty() || !d.dihedral_partners.empty()))
        fail("S4 extension data on a non-octahedral form");
}

void validate(const GL3Descriptor& d) {
    const auto fail = [&](const std::string& why) { throw InconsistentInput("GL(3) descriptor '" + d.label + "': " + why); };
    switch (d.kind) {
        case GL3Kind::AdjointTwist:
            if (d.adjoint_of.empty()) fail("adjoint_twist kind without a base form");
            break;
        case GL3Kind::Monomial:
            if (d.fields.empty()) fail("monomial kind without a cubic field");
            break;
        case GL3Kind::SelfTwist:
            if (!d.admits_selftwist) fail("selftwist kind but admits_selftwist is false");
            break;
        case GL3Kind::General: break;
    }
    if (!d.adjoint_of.empty() && !d.essentially_selfdual) fail("a twist of an adjoint is essentially selfdual");
    if (!d.selftwist.empty() && !d.admits_selftwist) fail("self-twist character given but admits_selftwist is false");
    for (const auto& f : d.fields)
        if (f.normal && !d.admits_selftwist) fail("induced from the normal cubic field " + f.label + " but no self-twist");
    if (d.regular_algebraic && d.base_not_totally_imaginary && !d.fields.empty())
        fail("regular algebraic over a base that is not totally imaginary cannot be monomial");
}

namespace {

std::string twisted(const std::string& base, const std::string& chi) {
    return chi.empty() ? base : base + " (x) " + chi;
}

}  // namespace

Verdict decide_cuspidality(const GL3Descriptor& p3, const GL2Descriptor& p2) {
    validate(p3);
    validate(p2);
    Verdict v;
    const std::string& cls = p2.twist_class_or_label();

    if (p3.adjoint_of.count(cls) != 0) {
        if (p2.kind == GL2Kind::Dihedral)
            throw InconsistentInput("'" + p3.label + "' is a twist of Ad('" + p2.label + "') but the adjoint of a dihedral form is not cuspidal");
        if (p2.kind == GL2Kind::Tetrahedral) {
            v.outcome = Outcome::Type222;
            v.rule = "adjoint-twist/tetrahedral";
            v.witnesses = {twisted(p2.label, p3.twist), twisted(p2.label, p3.twist) + " (x) mu",
                           twisted(p2.label, p3.twist) + " (x) mu^2"};
        } else {
            v.outcome = Outcome::Type24;
            v.rule = "adjoint-twist/non-tetrahedral";
            v.witnesses = {twisted(p2.label, p3.twist), twisted("sym^3(" + p2.label + ") (x) det^-1", p3.twist)};
        }
        return v;
    }

    if (p2.kind == GL2Kind::Dihedral && p2.projective_order == 6) {
        for (const auto& f : p3.fields) {
            if (f.normal || p2.eisenstein_cubics.count(f.label) == 0) continue;
            v.outcome = Outcome::Type33;
            v.rule = "dihedral-D6/cubic-monomial";
            v.witnesses = {p3.label + " (x) nu", p3.label + " (x) nu (x) " + (p2.quadratic.empty() ? "delta" : p2.quadratic)};
            return v;
        }
    }

    v.rule = "no-clause";
    return v;
}

Verdict decide_adjoint_pair(const GL2Descriptor& p2a, const GL2Descriptor& p2b) {
    validate(p2a);
    validate(p2b);
    if (p2b.kind == GL2Kind::Dihedral)
        throw InconsistentInput("the adjoint is taken of '" + p2b.label + "', which must be non-dihedral");
    Verdict v;
    if (p2a.twist_class_or_label() == p2b.twist_class_or_label()) {
        if (p2a.kind != p2b.kind) throw InconsistentInput("twist-equivalent forms with different kinds");
        if (p2b.kind == GL2Kind::Tetrahedral) {
            v.outcome = Outcome::Type222;
            v.rule = "twist-equivalent/tetrahedral";
        } else {
            v.outcome = Outcome::Type24;
            v.rule = "twist-equivalent/non-tetrahedral";
        }
        v.witnesses = {p2a.label};
        return v;
    }
    if (p2a.kind == GL2Kind::Octahedral && p2b.kind == GL2Kind::Octahedral && !p2a.s4_tag.empty() &&
        p2a.s4_tag == p2b.s4_tag && p2a.adjoint_class_or_default() == p2b.adjoint_class_or_default()) {
        v.outcome = Outcome::Type24;
        v.rule = "octahedral/shared-extension";
        v.witnesses = {p2a.label};
        return v;
    }
    if (p2b.kind == GL2Kind::Octahedral && p2a.kind == GL2Kind::Dihedral &&
        p2b.dihedral_partners.count(p2a.twist_class_or_label()) != 0) {
        v.outcome = Outcome::Type33;
        v.rule = "octahedral/dihedral-partner";
        v.witnesses = {"Ad(" + p2b.label + ") (x) nu", "Ad(" + p2b.label + ") (x) nu'"};
        return v;
    }
    v.rule = "no-clause";
    return v;
}

GenericProductReport decide_nonpolyhedral_product(const GL3Descriptor& p3, const GL2Descriptor& p2) {
    validate(p3);
    validate(p2);
    if (p2.kind != GL2Kind::General)
        throw HypothesisError("'" + p2.label + "' is of solvable polyhedral type (" + to_string(p2.kind) + ")");
    if (p3.essentially_selfdual) throw HypothesisError("'" + p3.label + "' is essentially selfdual");
    GenericProductReport r;
    // Neither clause of the product rule can fire: the first needs an
    // essentially selfdual GL(3) form, the second a dihedral GL(2) form.
    r.cuspidal = true;
    r.monomial_excluded = p3.regular_algebraic && p3.base_not_totally_imaginary;
    r.no_selftwist = !p3.admits_selftwist;
    r.not_cubic_induced = r.no_selftwist && (p3.fields.empty() || r.monomial_excluded);
    r.not_solvably_induced = !p3.solvable_type;
    return r;
}

// ---- descriptor files -----------------------------------------------------

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto t = trim(item);
        if (!t.empty()) out.push_back(std::move(t));
    }
    return out;
}

bool parse_bool(const std::string& v, std::size_t line) {
    if (v == "true" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "no" || v == "0") return false;
    throw ParseError("expected a boolean, got '" + v + "'", line);
}

int parse_int(const std::string& v, std::size_t line) {
    try {
        std::size_t pos = 0;
        const int x = std::stoi(v, &pos);
        if (pos == v.size()) return x;
    } catch (const std::exception&) {
    }
    throw ParseError("expected an integer, got '" + v + "'", line);
}

void set_gl2(GL2Descriptor& d, const std::string& key, const std::string& v, const BasisPtr& basis, std::size_t line) {
    if (key == "label") d.label = v;
    else if (key == "kind") {
        if (v == "dihedral") d.kind = GL2Kind::Dihedral;
        else if (v == "tetrahedral") d.kind = GL2Kind::Tetrahedral;
        else if (v == "octahedral") d.kind = GL2Kind::Octahedral;
        else if (v == "general") d.kind = GL2Kind::General;
        else throw ParseError("unknown GL(2) kind '" + v + "'", line);
    } else if (key == "projective_order") d.projective_order = parse_int(v, line);
    else if (key == "central") {
        if (!basis) throw ParseError("central character needs a basis line", line);
        try {
            d.central = parse_character(basis, v);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line);
        }
    } else if (key == "induced_from") d.induced_from = v;
    else if (key == "quadratic") d.quadratic = v;
    else if (key == "eisenstein_cubics") {
        for (auto& s : split_list(v)) d.eisenstein_cubics.insert(std::move(s));
    } else if (key == "twist_class") d.twist_class = v;
    else if (key == "adjoint_class") d.adjoint_class = v;
    else if (key == "s4_tag") d.s4_tag = v;
    else if (key == "dihedral_partners") {
        for (auto& s : split_list(v)) d.dihedral_partners.insert(std::move(s));
    } else throw ParseError("unknown GL(2) key '" + key + "'", line);
}

void set_gl3(GL3Descriptor& d, const std::string& key, const std::string& v, std::size_t line) {
    if (key == "label") d.label = v;
    else if (key == "kind") {
        if (v == "adjoint_twist") d.kind = GL3Kind::AdjointTwist;
        else if (v == "monomial") d.kind = GL3Kind::Monomial;
        else if (v == "selftwist") d.kind = GL3Kind::SelfTwist;
        else if (v == "general") d.kind = GL3Kind::General;
        else throw ParseError("unknown GL(3) kind '" + v + "'", line);
    } else if (key == "adjoint_of") {
        for (auto& s : split_list(v)) d.adjoint_of.insert(std::move(s));
    } else if (key == "twist") d.twist = v;
    else if (key == "fields") {
        for (const auto& item : split_list(v)) {
            CubicField f;
            const auto colon = item.find(':');
            f.label = trim(std::string_view(item).substr(0, colon));
            if (colon != std::string::npos) {
                const auto tag = trim(std::string_view(item).substr(colon + 1));
                if (tag == "normal") f.normal = true;
                else if (tag != "nonnormal") throw ParseError("field tag must be normal or nonnormal", line);
            }
            if (f.label.empty()) throw ParseError("empty field label", line);
            d.fields.push_back(std::move(f));
        }
    } else if (key == "selftwist") d.selftwist = v;
    else if (key == "essentially_selfdual") d.essentially_selfdual = parse_bool(v, line);
    else if (key == "admits_selftwist") d.admits_selftwist = parse_bool(v, line);
    else if (key == "solvable_type") d.solvable_type = parse_bool(v, line);
    else if (key == "regular_algebraic") d.regular_algebraic = parse_bool(v, line);
    else if (key == "base_not_totally_imaginary") d.base_not_totally_imaginary = parse_bool(v, line);
    else throw ParseError("unknown GL(3) key '" + key + "'", line);
}

}  // namespace

DescriptorFile parse_descriptors(std::string_view text) {
    DescriptorFile out;
    enum class Section { None, GL2, GL2b, GL3 } section = Section::None;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view raw = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++lineno;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        const std::string line = trim(raw);
        if (line.empty()) {
            if (nl == text.size()) break;
            continue;
        }
        if (line.front() == '[') {
            if (line == "[gl2]") {
                if (out.gl2) throw ParseError("duplicate [gl2] section", lineno);
                section = Section::GL2;
                out.gl2.emplace();
            } else if (line == "[gl2b]") {
                if (out.gl2b) throw ParseError("duplicate [gl2b] section", lineno);
                section = Section::GL2b;
                out.gl2b.emplace();
            } else if (line == "[gl3]") {
                if (out.gl3) throw ParseError("duplicate [gl3] section", lineno);
                section = Section::GL3;
                out.gl3.emplace();
            } else {
                throw ParseError("unknown section " + line, lineno);
            }
            continue;
        }
        if (section == Section::None) {
            if (line.rfind("basis", 0) == 0 && !out.basis) {
                try {
                    out.basis = parse_basis(line);
                } catch (const ParseError& e) {
                    throw ParseError(e.what(), lineno);
                }
                continue;
            }
            throw ParseError("expected a basis line or a section header", lineno);
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected key = value", lineno);
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        switch (section) {
            case Section::GL2: set_gl2(*out.gl2, key, value, out.basis, lineno); break;
            case Section::GL2b: set_gl2(*out.gl2b, key, value, out.basis, lineno); break;
            case Section::GL3: set_gl3(*out.gl3, key, value, lineno); break;
            case Section::None: break;
        }
        if (nl == text.size()) break;
    }
    return out;
}

// ---- model mode -----------------------------------------------------------

GroupModel::GroupModel(GroupPtr g)
    : group_(std::move(g)), irr_(gl6::irreducibles(group_)), cubic_(index3_subgroup_classes(group_)),
      quadratic_(index2_subgroups(group_)) {
    twist_rep_.resize(irr_.size());
    for (std::size_t i = 0; i < irr_.size(); ++i) {
        twist_rep_[i] = i;
        for (std::size_t j = 0; j < i; ++j) {
            if (twist_rep_[j] == j && irr_[j].degree() == irr_[i].degree() && twist_equivalent(irr_[j], irr_[i])) {
                twist_rep_[i] = j;
                break;
            }
        }
    }
}

std::string GroupModel::label(std::size_t i) const { return group_->name() + "#" + std::to_string(i); }

std::string GroupModel::twist_class(std::size_t i) const { return label(twist_rep_.at(i)); }

std::optional<std::size_t> GroupModel::index_of(const ClassFunction& x) const {
    for (std::size_t i = 0; i < irr_.size(); ++i)
        if (irr_[i] == x) return i;
    return std::nullopt;
}

GL2Descriptor GroupModel::describe_gl2(std::size_t i) const {
    const auto& x = irr_.at(i);
    if (x.integer_degree() != 2) throw DomainError(label(i) + " does not have degree 2");
    const auto cls = classify_2dim(x);
    GL2Descriptor d;
    d.label = label(i);
    d.twist_class = twist_class(i);
    switch (cls.type) {
        case ProjectiveType::Dihedral: d.kind = GL2Kind::Dihedral; break;
        case ProjectiveType::Tetrahedral: d.kind = GL2Kind::Tetrahedral; break;
        case ProjectiveType::Octahedral: d.kind = GL2Kind::Octahedral; break;
        case ProjectiveType::Primitive: d.kind = GL2Kind::General; break;
        case ProjectiveType::Reducible: throw DomainError(label(i) + " is reducible");
    }

    if (d.kind == GL2Kind::Dihedral) {
        d.projective_order = cls.projective_order;
        const auto quad = [&] {
            std::vector<std::size_t> idx;
            for (std::size_t j = 0; j < irr_.size(); ++j)
                if (irr_[j].integer_degree() == 1 && linear_order(irr_[j]) == 2) idx.push_back(j);
            return idx;
        }();
        for (std::size_t k = 0; k < quadratic_.size(); ++k) {
            if (!induced_from_linear(x, quadratic_[k])) continue;
            d.quadratic = label(quad[k]);
            d.induced_from = "tau[" + d.quadratic + "]";
            break;
        }
        if (d.induced_from.empty()) throw Error("dihedral character " + d.label + " is not induced from an index-2 subgroup");
        if (d.projective_order == 6) {
            for (const auto& c : cubic_)
                if (!c.normal && !is_irreducible(restriction(x, c.members.front()))) d.eisenstein_cubics.insert(c.label);
        }
        return d;
    }

    const auto ad = adjoint_rep(x);
    const auto adi = index_of(ad);
    if (!adi) throw Error("adjoint of the non-dihedral character " + d.label + " is reducible");
    d.adjoint_class = twist_class(*adi);

    if (d.kind == GL2Kind::Octahedral) {
        std::ostringstream tag;
        tag << "Z{";
        bool first = true;
        const Cyclotomic four(4);
        for (int c = 0; c < group_->num_classes(); ++c) {
            Cyclotomic n = x.value(c);
            n *= x.value(c).conj();
            if (n == four) {
                tag << (first ? "" : ",") << c;
                first = false;
            }
        }
        tag << "}";
        d.s4_tag = tag.str();

        const auto s3 = sym_rep(x, 3);
        for (const auto& h : quadratic_) {
            // h is the kernel of some quadratic character eps; keep those with sym^3 (x) eps == sym^3.
            bool fixes = true;
            for (int c = 0; c < group_->num_classes() && fixes; ++c) {
                const bool in_kernel = h.contains(group_->classes()[c].representative);
                if (!in_kernel && !s3.value(c).is_zero()) fixes = false;
            }
            if (!fixes) continue;
            const auto res = restriction(ad, h);
            for (const auto& mu : linear_characters(h.group())) {
                if (linear_order(mu) != 3 || !(res * mu == res)) continue;
                const auto ind = induce(h, mu);
                if (!is_irreducible(ind)) continue;
                if (const auto j = index_of(ind)) d.dihedral_partners.insert(twist_class(*j));
            }
        }
    }
    return d;
}

GL3Descriptor GroupModel::describe_gl3(std::size_t i) const {
    const auto& x = irr_.at(i);
    if (x.integer_degree() != 3) throw DomainError(label(i) + " does not have degree 3");
    GL3Descriptor d;
    d.label = label(i);
    d.essentially_selfdual = essentially_selfdual(x).has_value();
    const auto twists = self_twists(x);
    d.admits_selftwist = twists.size() > 1;
    for (const auto& t : twists) {
        if (linear_order(t) == 3) {
            if (const auto j = index_of(t)) d.selftwist = label(*j);
            break;
        }
    }

    const auto lins = linear_characters(group_);
    for (std::size_t j = 0; j < irr_.size(); ++j) {
        if (irr_[j].integer_degree() != 2 || classify_2dim(irr_[j]).type == ProjectiveType::Dihedral) continue;
        const auto ad = adjoint_rep(irr_[j]);
        for (const auto& l : lins) {
            if (!(ad * l == x)) continue;
            d.adjoint_of.insert(twist_class(j));
            if (d.twist.empty())
                if (const auto k = index_of(l)) d.twist = label(*k);
            break;
        }
    }
    for (const auto& c : cubic_)
        if (induced_from_linear(x, c.members.front())) d.fields.push_back({c.label, c.normal});

    if (!d.adjoint_of.empty()) d.kind = GL3Kind::AdjointTwist;
    else if (!d.fields.empty()) d.kind = GL3Kind::Monomial;
    else if (d.admits_selftwist) d.kind = GL3Kind::SelfTwist;
    return d;
}

namespace {

CrossCheck compare(const GroupModel& m, std::size_t left, std::size_t right, const ClassFunction& x3,
                   const ClassFunction& x2, Verdict decided) {
    CrossCheck c;
    c.group = m.group()->name();
    c.left = m.label(left);
    c.right = m.label(right);
    c.decided = std::move(decided);
    c.brute = product_type_bruteforce(x3, x2);
    c.agree = c.decided.outcome == c.brute.outcome;
    if (c.brute.outcome == Outcome::Type33) {
        for (const auto& part : c.brute.constituents)
            if (!twist_equivalent(x3, m.irreducibles()[part.index])) c.witnesses_twist_equivalent = false;
    }
    return c;
}

}  // namespace

std::vector<CrossCheck> cross_validate(const GroupModel& m) {
    const auto& irr = m.irreducibles();
    std::map<std::size_t, GL2Descriptor> gl2;
    std::vector<CrossCheck> out;
    for (std::size_t j = 0; j < irr.size(); ++j)
        if (irr[j].integer_degree() == 2) gl2.emplace(j, m.describe_gl2(j));
    for (std::size_t i = 0; i < irr.size(); ++i) {
        if (irr[i].integer_degree() != 3) continue;
        const auto d3 = m.describe_gl3(i);
        for (const auto& [j, d2] : gl2) out.push_back(compare(m, i, j, irr[i], irr[j], decide_cuspidality(d3, d2)));
    }
    return out;
}

std::vector<CrossCheck> cross_validate_adjoint_pairs(const GroupModel& m) {
    const auto& irr = m.irreducibles();
    std::map<std::size_t, GL2Descriptor> gl2;
    for (std::size_t j = 0; j < irr.size(); ++j)
        if (irr[j].integer_degree() == 2) gl2.emplace(j, m.describe_gl2(j));
    std::vector<CrossCheck> out;
    for (const auto& [b, db] : gl2) {
        if (db.kind == GL2Kind::Dihedral) continue;
        const auto ad = adjoint_rep(irr[b]);
        for (const auto& [a, da] : gl2) out.push_back(compare(m, a, b, ad, irr[a], decide_adjoint_pair(da, db)));
    }
    return out;
}

}  // namespace gl6
