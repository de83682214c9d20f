#pragma once
// Character theory on finite groups as a stand-in for Galois representations:
// class functions, induction/restriction, symmetric and exterior powers via
// Adams operations, self-twists, projective-type classification and the
// brute-force decomposition type of a 3 x 2 tensor product.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gl6/cyclotomic.hpp"
#include "gl6/group.hpp"

namespace gl6 {

class ClassFunction {
public:
    ClassFunction() = default;
    ClassFunction(GroupPtr g, std::vector<Cyclotomic> values);

    static ClassFunction irreducible(const GroupPtr& g, std::size_t index);
    static ClassFunction trivial(const GroupPtr& g);

    const GroupPtr& group() const noexcept { return group_; }
    const std::vector<Cyclotomic>& values() const noexcept { return values_; }
    const Cyclotomic& value(int cls) const { return values_[cls]; }
    /// Value at the identity.
    const Cyclotomic& degree() const { return values_[0]; }
    /// Throws DomainError unless the value at the identity is a positive integer.
    std::int64_t integer_degree() const;

    ClassFunction conj() const;
    ClassFunction scaled(const Cyclotomic& c) const;

    friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
    friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
    /// Pointwise product (tensor product of characters).
    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
    friend bool operator==(const ClassFunction& a, const ClassFunction& b);

    /// "(2, 0, -1)".
    std::string to_string() const;

private:
    GroupPtr group_;
    std::vector<Cyclotomic> values_;
};

/// (1/|G|) sum over classes of |C| x(C) conj(y(C)).
Cyclotomic inner_product(const ClassFunction& x, const ClassFunction& y);
bool is_irreducible(const ClassFunction& x);

std::vector<ClassFunction> irreducibles(const GroupPtr& g);
std::vector<ClassFunction> linear_characters(const GroupPtr& g);
/// Smallest k > 0 with x^k trivial, for a linear character.
int linear_order(const ClassFunction& x);

ClassFunction induce(const Subgroup& h, const ClassFunction& x);
ClassFunction restriction(const ClassFunction& x, const Subgroup& h);
/// Pulls a linear character of the subgroup's group back into the parent's
/// element indexing: value at parent element g in h.
const Cyclotomic& value_at_member(const ClassFunction& x, const Subgroup& h, int parent_element);

ClassFunction adams(const ClassFunction& x, int k);
ClassFunction sym_rep(const ClassFunction& x, int k);
ClassFunction ext_rep(const ClassFunction& x, int k);
ClassFunction determinant(const ClassFunction& x);
/// sym^2(x) (x) det(x)^-1.
ClassFunction adjoint_rep(const ClassFunction& x);
/// sym^4(x) (x) det(x)^-2.
ClassFunction a4_rep(const ClassFunction& x);

/// Linear characters l with x * l == x.
std::vector<ClassFunction> self_twists(const ClassFunction& x);
/// Some linear nu with conj(x) == x * nu (the first in table order).
std::optional<ClassFunction> essentially_selfdual(const ClassFunction& x);
std::vector<ClassFunction> selfdual_witnesses(const ClassFunction& x);
/// True when y == x * l for some linear l.
bool twist_equivalent(const ClassFunction& x, const ClassFunction& y);

struct Constituent {
    std::size_t index;  // row of the group's character table
    std::int64_t multiplicity;
    std::int64_t degree;
};

/// Multiplicities against the character table; checks the reassembly.
/// Throws DomainError when x is not a character.
std::vector<Constituent> decompose(const ClassFunction& x);
ClassFunction reassemble(const GroupPtr& g, const std::vector<Constituent>& parts);

enum class ProjectiveType { Reducible, Dihedral, Tetrahedral, Octahedral, Primitive };
std::string to_string(ProjectiveType t);

struct Classification {
    ProjectiveType type = ProjectiveType::Reducible;
    /// |G / Z(x)| with Z(x) the elements acting by scalars; 0 when reducible.
    int projective_order = 0;
    /// Set when sym^3 is reducible but sym^2 carries no cubic self-twist.
    std::string note;
    /// "Dihedral(D6)", "Tetrahedral", ...
    std::string tag() const;
};

/// Throws DomainError unless x has degree 2.
Classification classify_2dim(const ClassFunction& x);
int projective_order(const ClassFunction& x);

struct MackeyReport {
    bool irreducible = false;
    bool essentially_selfdual = false;
    std::vector<ClassFunction> selftwists;  // linear characters of the parent
};

/// sum over double cosets HtH of [a^t == b on H cap tHt^-1], which equals
/// <Ind a, Ind b> for linear a, b of H.
int mackey_intertwining(const Subgroup& h, const ClassFunction& a, const ClassFunction& b);

/// Irreducibility, essential self-duality and self-twists of Ind_H(psi),
/// decided through double cosets without forming the induced character.
MackeyReport mackey_induced_checks(const Subgroup& h, const ClassFunction& psi);

enum class Outcome { Cuspidal, Type24, Type222, Type33 };
std::string to_string(Outcome o);

struct ProductType {
    Outcome outcome = Outcome::Cuspidal;
    std::vector<Constituent> constituents;
};

/// Decomposes x3 * x2 for irreducible characters of degrees 3 and 2 and reads
/// the outcome off the constituent degrees. Throws DomainError on bad inputs
/// and Error if a linear constituent ever shows up.
ProductType product_type_bruteforce(const ClassFunction& x3, const ClassFunction& x2);

/// One conjugacy class of subgroups of index 3.
struct CubicSubgroupClass {
    std::string label;  // "K3.1", "K3.2", ... in canonical order
    bool normal = false;
    std::vector<Subgroup> members;  // the conjugates, first is the canonical representative
};

/// All subgroups of index 3, found as point stabilisers of transitive actions on 3 points.
std::vector<CubicSubgroupClass> index3_subgroup_classes(const GroupPtr& g);

/// Subgroups of index 2 (kernels of quadratic characters), in table order of the characters.
std::vector<Subgroup> index2_subgroups(const GroupPtr& g);

/// x == Ind_H(psi) for a linear psi of H: degree equals the index and Res_H(x)
/// has a linear constituent.
bool induced_from_linear(const ClassFunction& x, const Subgroup& h);

}  // namespace gl6
