#include "gl6/catalog.hpp"

#include <functional>
#include <map>

#include "gl6/error.hpp"

namespace gl6 {

namespace {

using Elem = std::vector<int>;
using MulFn = std::function<Elem(const Elem&, const Elem&)>;

GroupPtr from_closure(std::string name, const Elem& identity, const std::vector<Elem>& gens, const MulFn& mul) {
    std::map<Elem, int> index{{identity, 0}};
    std::vector<Elem> elems{identity};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& s : gens) {
            Elem x = mul(elems[i], s);
            if (index.emplace(x, static_cast<int>(elems.size())).second) elems.push_back(std::move(x));
            if (elems.size() > static_cast<std::size_t>(kMaxGroupOrder)) throw DomainError("generated group too large");
        }
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = index.at(mul(elems[a], elems[b]));
    return FiniteGroup::from_table(std::move(name), table);
}

// Permutations compose left to right: (x * y)(i) = y(x(i)).
Elem perm_mul(const Elem& x, const Elem& y) {
    Elem out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = y[x[i]];
    return out;
}

GroupPtr matrix_group(std::string name, int p, const std::vector<Elem>& gens) {
    auto mul = [p](const Elem& x, const Elem& y) {
        auto m = [p](long v) { return static_cast<int>(((v % p) + p) % p); };
        return Elem{m(x[0] * y[0] + x[1] * y[2]), m(x[0] * y[1] + x[1] * y[3]), m(x[2] * y[0] + x[3] * y[2]),
                    m(x[2] * y[1] + x[3] * y[3])};
    };
    return from_closure(std::move(name), {1, 0, 0, 1}, gens, mul);
}

}  // namespace

GroupPtr cyclic_group(int n) {
    auto mul = [n](const Elem& x, const Elem& y) { return Elem{(x[0] + y[0]) % n}; };
    return from_closure("C" + std::to_string(n), {0}, {{1 % n}}, mul);
}

GroupPtr dihedral_group(int n) {
    // (a, b) = r^a s^b with s r s = r^-1.
    auto mul = [n](const Elem& x, const Elem& y) {
        const int a = x[1] ? x[0] - y[0] : x[0] + y[0];
        return Elem{((a % n) + n) % n, (x[1] + y[1]) % 2};
    };
    return from_closure("D" + std::to_string(2 * n), {0, 0}, {{1 % n, 0}, {0, 1}}, mul);
}

GroupPtr symmetric_group(int n) {
    if (n == 3) return from_closure("S3", {0, 1, 2}, {{1, 0, 2}, {1, 2, 0}}, perm_mul);
    if (n == 4) return from_closure("S4", {0, 1, 2, 3}, {{1, 0, 2, 3}, {1, 2, 3, 0}}, perm_mul);
    throw DomainError("only S3 and S4 are built in");
}

GroupPtr alternating_group_4() { return from_closure("A4", {0, 1, 2, 3}, {{1, 2, 0, 3}, {1, 0, 3, 2}}, perm_mul); }

GroupPtr sl2_3() { return matrix_group("SL(2,3)", 3, {{1, 1, 0, 1}, {0, 2, 1, 0}}); }

GroupPtr gl2_3() { return matrix_group("GL(2,3)", 3, {{1, 1, 0, 1}, {0, 2, 1, 0}, {2, 0, 0, 1}}); }

GroupPtr sl2_5() { return matrix_group("SL(2,5)", 5, {{1, 1, 0, 1}, {0, 4, 1, 0}}); }

GroupPtr frobenius_21() {
    auto mul = [](const Elem& x, const Elem& y) {
        static constexpr int pow2[3] = {1, 2, 4};
        return Elem{(x[0] + pow2[x[1]] * y[0]) % 7, (x[1] + y[1]) % 3};
    };
    return from_closure("C7:C3", {0, 0}, {{1, 0}, {0, 1}}, mul);
}

const std::vector<GroupPtr>& builtin_catalog() {
    static const std::vector<GroupPtr> groups = [] {
        std::vector<GroupPtr> out;
        for (int n = 2; n <= 12; ++n) out.push_back(cyclic_group(n));
        for (int n = 2; n <= 12; ++n) out.push_back(dihedral_group(n));
        out.push_back(symmetric_group(3));
        out.push_back(alternating_group_4());
        out.push_back(symmetric_group(4));
        out.push_back(sl2_3());
        out.push_back(gl2_3());
        return out;
    }();
    return groups;
}

const std::vector<GroupPtr>& extended_catalog() {
    static const std::vector<GroupPtr> groups = [] {
        auto out = builtin_catalog();
        auto f21 = frobenius_21();
        out.push_back(f21);
        out.push_back(sl2_5());
        out.push_back(direct_product(f21, symmetric_group(3), "C7:C3xS3"));
        out.push_back(direct_product(f21, gl2_3(), "C7:C3xGL(2,3)"));
        return out;
    }();
    return groups;
}

GroupPtr catalog_group(std::string_view name) {
    for (const auto& g : extended_catalog())
        if (g->name() == name) return g;
    throw DomainError("unknown catalog group '" + std::string(name) + "'");
}

}  // namespace gl6
