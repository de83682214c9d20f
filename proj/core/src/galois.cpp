#include "gl6/galois.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "gl6/error.hpp"

namespace gl6 {

namespace {

void require_same_group(const ClassFunction& a, const ClassFunction& b) {
    if (a.group() != b.group()) throw BasisMismatch("class functions live on different groups");
}

}  // namespace

ClassFunction::ClassFunction(GroupPtr g, std::vector<Cyclotomic> values) : group_(std::move(g)), values_(std::move(values)) {
    if (!group_) throw DomainError("class function without a group");
    if (static_cast<int>(values_.size()) != group_->num_classes())
        throw DomainError("class function has " + std::to_string(values_.size()) + " values, group has " +
                          std::to_string(group_->num_classes()) + " classes");
}

ClassFunction ClassFunction::irreducible(const GroupPtr& g, std::size_t index) {
    const auto& t = g->character_table();
    if (index >= t.size()) throw DomainError("no irreducible character #" + std::to_string(index));
    return ClassFunction(g, t[index]);
}

ClassFunction ClassFunction::trivial(const GroupPtr& g) {
    return ClassFunction(g, std::vector<Cyclotomic>(g->num_classes(), Cyclotomic(1)));
}

std::int64_t ClassFunction::integer_degree() const {
    const auto& d = degree();
    if (!d.is_integer() || d.as_integer() <= 0)
        throw DomainError("not a character: value at the identity is " + d.to_string());
    return d.as_integer();
}

ClassFunction ClassFunction::conj() const {
    std::vector<Cyclotomic> v;
    v.reserve(values_.size());
    for (const auto& x : values_) v.push_back(x.conj());
    return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::scaled(const Cyclotomic& c) const {
    auto v = values_;
    for (auto& x : v) x *= c;
    return ClassFunction(group_, std::move(v));
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
    require_same_group(a, b);
    auto v = a.values_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values_[i];
    return ClassFunction(a.group_, std::move(v));
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
    require_same_group(a, b);
    auto v = a.values_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.values_[i];
    return ClassFunction(a.group_, std::move(v));
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    require_same_group(a, b);
    auto v = a.values_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= b.values_[i];
    return ClassFunction(a.group_, std::move(v));
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group_ == b.group_ && a.values_ == b.values_;
}

std::string ClassFunction::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) out += (i ? ", " : "") + values_[i].to_string();
    return out + ")";
}

Cyclotomic inner_product(const ClassFunction& x, const ClassFunction& y) {
    require_same_group(x, y);
    const auto& g = *x.group();
    Cyclotomic s(0);
    for (int c = 0; c < g.num_classes(); ++c) {
        if (x.value(c).is_zero() || y.value(c).is_zero()) continue;
        s += x.value(c) * y.value(c).conj() * Cyclotomic(g.class_size(c));
    }
    return s.divided(g.order());
}

bool is_irreducible(const ClassFunction& x) {
    x.integer_degree();
    return inner_product(x, x) == Cyclotomic(1);
}

std::vector<ClassFunction> irreducibles(const GroupPtr& g) {
    std::vector<ClassFunction> out;
    for (const auto& row : g->character_table()) out.emplace_back(g, row);
    return out;
}

std::vector<ClassFunction> linear_characters(const GroupPtr& g) {
    std::vector<ClassFunction> out;
    for (const auto& row : g->character_table())
        if (row[0] == Cyclotomic(1)) out.emplace_back(g, row);
    return out;
}

int linear_order(const ClassFunction& x) {
    if (!(x.degree() == Cyclotomic(1))) throw DomainError("linear_order needs a linear character");
    const auto one = ClassFunction::trivial(x.group());
    auto p = x;
    for (int k = 1; k <= x.group()->exponent(); ++k) {
        if (p == one) return k;
        p = p * x;
    }
    throw DomainError("value is not a linear character");
}

ClassFunction induce(const Subgroup& h, const ClassFunction& x) {
    if (x.group() != h.group()) throw BasisMismatch("class function is not on the subgroup");
    const auto& g = *h.parent();
    const auto& hg = *h.group();
    std::vector<Cyclotomic> acc(g.num_classes(), Cyclotomic(0));
    // Sum x over H cap C class by class of H.
    for (int c = 0; c < hg.num_classes(); ++c) {
        const auto& cls = hg.classes()[c];
        const int parent_cls = g.class_of(h.members()[cls.representative]);
        acc[parent_cls] += x.value(c) * Cyclotomic(cls.size());
    }
    for (int c = 0; c < g.num_classes(); ++c)
        if (!acc[c].is_zero()) acc[c] = (acc[c] * Cyclotomic(g.order())).divided(static_cast<std::int64_t>(h.order()) * g.class_size(c));
    return ClassFunction(h.parent(), std::move(acc));
}

ClassFunction restriction(const ClassFunction& x, const Subgroup& h) {
    if (x.group() != h.parent()) throw BasisMismatch("class function is not on the subgroup's parent");
    const auto& hg = *h.group();
    std::vector<Cyclotomic> v;
    for (int c = 0; c < hg.num_classes(); ++c)
        v.push_back(x.value(h.parent()->class_of(h.members()[hg.classes()[c].representative])));
    return ClassFunction(h.group(), std::move(v));
}

const Cyclotomic& value_at_member(const ClassFunction& x, const Subgroup& h, int parent_element) {
    const int l = h.local(parent_element);
    if (l < 0) throw DomainError("element is not in the subgroup");
    return x.value(h.group()->class_of(l));
}

ClassFunction adams(const ClassFunction& x, int k) {
    if (k < 1) throw DomainError("Adams operation index must be positive");
    const auto& g = *x.group();
    std::vector<Cyclotomic> v;
    for (int c = 0; c < g.num_classes(); ++c) v.push_back(x.value(g.class_power(c, k)));
    return ClassFunction(x.group(), std::move(v));
}

namespace {

// Newton recursion k a_k = sum_{i=1..k} s^(i-1) psi^i(x) a_{k-i}; s = 1 gives
// symmetric powers, s = -1 exterior powers.
ClassFunction newton_power(const ClassFunction& x, int k, int sign) {
    if (k < 0) throw DomainError("power index must be non-negative");
    std::vector<ClassFunction> a{ClassFunction::trivial(x.group())};
    std::vector<ClassFunction> psi{ClassFunction::trivial(x.group())};
    for (int i = 1; i <= k; ++i) psi.push_back(adams(x, i));
    for (int m = 1; m <= k; ++m) {
        std::vector<Cyclotomic> acc(x.group()->num_classes(), Cyclotomic(0));
        for (int i = 1; i <= m; ++i) {
            const std::int64_t s = (sign < 0 && i % 2 == 0) ? -1 : 1;
            for (std::size_t c = 0; c < acc.size(); ++c)
                acc[c] += psi[i].value(static_cast<int>(c)) * a[m - i].value(static_cast<int>(c)) * Cyclotomic(s);
        }
        for (auto& v : acc) v = v.divided(m);
        a.emplace_back(x.group(), std::move(acc));
    }
    return a[k];
}

}  // namespace

ClassFunction sym_rep(const ClassFunction& x, int k) { return newton_power(x, k, +1); }
ClassFunction ext_rep(const ClassFunction& x, int k) { return newton_power(x, k, -1); }

ClassFunction determinant(const ClassFunction& x) { return ext_rep(x, static_cast<int>(x.integer_degree())); }

ClassFunction adjoint_rep(const ClassFunction& x) {
    if (x.integer_degree() != 2) throw DomainError("adjoint needs a degree-2 character");
    return sym_rep(x, 2) * determinant(x).conj();
}

ClassFunction a4_rep(const ClassFunction& x) {
    if (x.integer_degree() != 2) throw DomainError("A4 needs a degree-2 character");
    const auto dinv = determinant(x).conj();
    return sym_rep(x, 4) * dinv * dinv;
}

std::vector<ClassFunction> self_twists(const ClassFunction& x) {
    std::vector<ClassFunction> out;
    for (const auto& l : linear_characters(x.group()))
        if (x * l == x) out.push_back(l);
    return out;
}

std::vector<ClassFunction> selfdual_witnesses(const ClassFunction& x) {
    std::vector<ClassFunction> out;
    const auto c = x.conj();
    for (const auto& l : linear_characters(x.group()))
        if (x * l == c) out.push_back(l);
    return out;
}

std::optional<ClassFunction> essentially_selfdual(const ClassFunction& x) {
    const auto c = x.conj();
    for (const auto& l : linear_characters(x.group()))
        if (x * l == c) return l;
    return std::nullopt;
}

bool twist_equivalent(const ClassFunction& x, const ClassFunction& y) {
    require_same_group(x, y);
    if (!(x.degree() == y.degree())) return false;
    for (const auto& l : linear_characters(x.group()))
        if (x * l == y) return true;
    return false;
}

std::vector<Constituent> decompose(const ClassFunction& x) {
    x.integer_degree();
    std::vector<Constituent> out;
    const auto irr = irreducibles(x.group());
    for (std::size_t i = 0; i < irr.size(); ++i) {
        const auto m = inner_product(x, irr[i]);
        if (!m.is_integer() || m.as_integer() < 0)
            throw DomainError("not a character: multiplicity of irreducible #" + std::to_string(i) + " is " +
                              m.to_string());
        if (m.as_integer() > 0) out.push_back({i, m.as_integer(), irr[i].degree().as_integer()});
    }
    if (!(reassemble(x.group(), out) == x)) throw Error("decomposition does not reassemble the input");
    return out;
}

ClassFunction reassemble(const GroupPtr& g, const std::vector<Constituent>& parts) {
    std::vector<Cyclotomic> v(g->num_classes(), Cyclotomic(0));
    const auto& t = g->character_table();
    for (const auto& p : parts)
        for (std::size_t c = 0; c < v.size(); ++c) v[c] += t[p.index][c] * Cyclotomic(p.multiplicity);
    return ClassFunction(g, std::move(v));
}

std::string to_string(ProjectiveType t) {
    switch (t) {
        case ProjectiveType::Reducible: return "Reducible";
        case ProjectiveType::Dihedral: return "Dihedral";
        case ProjectiveType::Tetrahedral: return "Tetrahedral";
        case ProjectiveType::Octahedral: return "Octahedral";
        case ProjectiveType::Primitive: return "Primitive";
    }
    return "?";
}

std::string Classification::tag() const {
    if (type == ProjectiveType::Dihedral) return "Dihedral(D" + std::to_string(projective_order) + ")";
    return to_string(type);
}

int projective_order(const ClassFunction& x) {
    const auto& g = *x.group();
    const auto d2 = x.degree() * x.degree();
    int center = 0;
    for (int c = 0; c < g.num_classes(); ++c)
        if (x.value(c) * x.value(c).conj() == d2) center += g.class_size(c);
    return g.order() / center;
}

Classification classify_2dim(const ClassFunction& x) {
    if (x.integer_degree() != 2) throw DomainError("classify_2dim needs a degree-2 character");
    Classification out;
    if (!is_irreducible(x)) return out;
    out.projective_order = projective_order(x);
    auto has_twist_of_order = [](const ClassFunction& y, int order) {
        for (const auto& l : self_twists(y))
            if (linear_order(l) == order) return true;
        return false;
    };
    if (has_twist_of_order(x, 2)) {
        out.type = ProjectiveType::Dihedral;
        return out;
    }
    const auto s2 = sym_rep(x, 2);
    if (is_irreducible(s2) && has_twist_of_order(s2, 3)) {
        out.type = ProjectiveType::Tetrahedral;
        return out;
    }
    const auto s3 = sym_rep(x, 3);
    if (is_irreducible(s3)) {
        if (has_twist_of_order(s3, 2)) {
            out.type = ProjectiveType::Octahedral;
            return out;
        }
    } else {
        out.note = "sym^3 reducible without a cubic self-twist of sym^2";
    }
    out.type = ProjectiveType::Primitive;
    return out;
}

int mackey_intertwining(const Subgroup& h, const ClassFunction& a, const ClassFunction& b) {
    if (a.group() != h.group() || b.group() != h.group()) throw BasisMismatch("characters are not on the subgroup");
    if (!(a.degree() == Cyclotomic(1)) || !(b.degree() == Cyclotomic(1)))
        throw DomainError("double-coset test needs linear characters");
    const auto& g = *h.parent();
    std::vector<char> covered(g.order(), 0);
    int count = 0;
    for (int t = 0; t < g.order(); ++t) {
        if (covered[t]) continue;
        for (int h1 : h.members())
            for (int h2 : h.members()) covered[g.mul(g.mul(h1, t), h2)] = 1;
        const int tinv = g.inv(t);
        bool agree = true;
        for (int k : h.members()) {
            const int conj = g.mul(g.mul(tinv, k), t);
            if (!h.contains(conj)) continue;
            if (!(value_at_member(a, h, conj) == value_at_member(b, h, k))) {
                agree = false;
                break;
            }
        }
        if (agree) ++count;
    }
    return count;
}

MackeyReport mackey_induced_checks(const Subgroup& h, const ClassFunction& psi) {
    MackeyReport r;
    r.irreducible = mackey_intertwining(h, psi, psi) == 1;
    const auto psi_bar = psi.conj();
    for (const auto& mu : linear_characters(h.parent())) {
        const auto twisted = psi * restriction(mu, h);
        if (!r.essentially_selfdual && mackey_intertwining(h, psi_bar, twisted) >= 1) r.essentially_selfdual = true;
        if (mackey_intertwining(h, psi, twisted) >= 1) r.selftwists.push_back(mu);
    }
    return r;
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::Cuspidal: return "Cuspidal";
        case Outcome::Type24: return "Type24";
        case Outcome::Type222: return "Type222";
        case Outcome::Type33: return "Type33";
    }
    return "?";
}

ProductType product_type_bruteforce(const ClassFunction& x3, const ClassFunction& x2) {
    require_same_group(x3, x2);
    if (x3.integer_degree() != 3 || x2.integer_degree() != 2)
        throw DomainError("product type needs characters of degrees 3 and 2");
    if (!is_irreducible(x3) || !is_irreducible(x2)) throw DomainError("product type needs irreducible inputs");
    ProductType out;
    out.constituents = decompose(x3 * x2);
    std::vector<std::int64_t> degrees;
    for (const auto& c : out.constituents)
        for (std::int64_t m = 0; m < c.multiplicity; ++m) degrees.push_back(c.degree);
    std::sort(degrees.rbegin(), degrees.rend());
    if (std::find(degrees.begin(), degrees.end(), 1) != degrees.end())
        throw Error("linear constituent in a 3 x 2 tensor product over " + x3.group()->name());
    if (degrees == std::vector<std::int64_t>{6}) out.outcome = Outcome::Cuspidal;
    else if (degrees == std::vector<std::int64_t>{4, 2}) out.outcome = Outcome::Type24;
    else if (degrees == std::vector<std::int64_t>{3, 3}) out.outcome = Outcome::Type33;
    else if (degrees == std::vector<std::int64_t>{2, 2, 2}) out.outcome = Outcome::Type222;
    else throw Error("unexpected constituent degrees in a 3 x 2 tensor product");
    return out;
}

namespace {

// S3 as permutations of {0,1,2}; (x * y)(i) = y(x(i)).
struct S3 {
    std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}};
    int mul(int a, int b) const {
        std::array<int, 3> out{};
        for (int i = 0; i < 3; ++i) out[i] = perms[b][perms[a][i]];
        for (int k = 0; k < 6; ++k)
            if (perms[k] == out) return k;
        return -1;
    }
};

}  // namespace

std::vector<CubicSubgroupClass> index3_subgroup_classes(const GroupPtr& gp) {
    const auto& g = *gp;
    const auto& gens = g.generators();
    const S3 s3;
    std::array<std::array<int, 6>, 6> table{};
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) table[a][b] = s3.mul(a, b);

    std::set<std::vector<int>> found;
    std::vector<int> assign(gens.size(), 0);
    std::vector<int> phi(g.order());
    while (true) {
        // Extend the assignment along the Cayley graph and check consistency.
        std::fill(phi.begin(), phi.end(), -1);
        phi[0] = 0;
        std::vector<int> queue{0};
        bool ok = true;
        for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
            const int x = queue[qi];
            for (std::size_t s = 0; s < gens.size() && ok; ++s) {
                const int y = g.mul(x, gens[s]);
                const int val = table[phi[x]][assign[s]];
                if (phi[y] < 0) {
                    phi[y] = val;
                    queue.push_back(y);
                } else {
                    ok = phi[y] == val;
                }
            }
        }
        if (ok) {
            std::set<int> orbit{0};
            for (int k : assign) orbit.insert(s3.perms[k][0]);
            // Orbit of 0 under the image: close up under the generators' images.
            bool grew = true;
            while (grew) {
                grew = false;
                for (int pt : std::set<int>(orbit))
                    for (int k : assign)
                        if (orbit.insert(s3.perms[k][pt]).second) grew = true;
            }
            if (orbit.size() == 3) {
                std::vector<int> stab;
                for (int x = 0; x < g.order(); ++x)
                    if (s3.perms[phi[x]][0] == 0) stab.push_back(x);
                found.insert(std::move(stab));
            }
        }
        std::size_t i = 0;
        while (i < assign.size() && ++assign[i] == 6) assign[i++] = 0;
        if (i == assign.size()) break;
    }

    std::vector<std::vector<std::vector<int>>> classes;
    std::set<std::vector<int>> assigned;
    for (const auto& h : found) {
        if (assigned.count(h)) continue;
        std::set<std::vector<int>> conj;
        for (int t = 0; t < g.order(); ++t) {
            std::vector<int> c;
            for (int x : h) c.push_back(g.mul(g.mul(t, x), g.inv(t)));
            std::sort(c.begin(), c.end());
            conj.insert(std::move(c));
        }
        for (const auto& c : conj) assigned.insert(c);
        classes.emplace_back(conj.begin(), conj.end());
    }
    std::sort(classes.begin(), classes.end());
    std::vector<CubicSubgroupClass> out;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        CubicSubgroupClass c;
        c.label = "K3." + std::to_string(i + 1);
        c.normal = classes[i].size() == 1;
        for (std::size_t j = 0; j < classes[i].size(); ++j)
            c.members.push_back(Subgroup::from_members(gp, classes[i][j], g.name() + "/" + c.label + "." + std::to_string(j + 1)));
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Subgroup> index2_subgroups(const GroupPtr& g) {
    std::vector<Subgroup> out;
    for (const auto& l : linear_characters(g)) {
        if (linear_order(l) != 2) continue;
        std::vector<int> kernel;
        for (int x = 0; x < g->order(); ++x)
            if (l.value(g->class_of(x)) == Cyclotomic(1)) kernel.push_back(x);
        out.push_back(Subgroup::from_members(g, std::move(kernel)));
    }
    return out;
}

bool induced_from_linear(const ClassFunction& x, const Subgroup& h) {
    if (x.integer_degree() != h.index()) return false;
    const auto res = restriction(x, h);
    for (const auto& l : linear_characters(h.group()))
        if (!inner_product(res, l).is_zero()) return true;
    return false;
}

}  // namespace gl6
