#pragma once
// Decision rules for the shape of the GL(2) x GL(3) product (and of
// pi' x Ad(pi'')) over symbolic descriptors, plus extraction of descriptors
// from finite-group characters so the rules can be replayed against the
// brute-force decomposition.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gl6/charalg.hpp"
#include "gl6/galois.hpp"

namespace gl6 {

enum class GL2Kind { Dihedral, Tetrahedral, Octahedral, General };
enum class GL3Kind { AdjointTwist, Monomial, SelfTwist, General };

std::string to_string(GL2Kind k);
std::string to_string(GL3Kind k);

struct GL2Descriptor {
    std::string label;
    GL2Kind kind = GL2Kind::General;
    /// Order 2n of the projective image; dihedral only.
    int projective_order = 0;
    std::optional<Character> central;
    /// Dihedral data: the character tau it is induced from and the quadratic
    /// character delta cutting out the quadratic field.
    std::string induced_from;
    std::string quadratic;
    /// Non-normal cubic fields over which the base change is Eisensteinian.
    std::set<std::string> eisenstein_cubics;
    /// Twist-equivalence class; defaults to the label.
    std::string twist_class;
    /// Twist-equivalence class of Ad; defaults to the twist class.
    std::string adjoint_class;
    /// Octahedral only: opaque tag of the attached S4-tilde extension.
    std::string s4_tag;
    /// Octahedral only: twist classes of the dihedral forms I_K(mu) (x) nu with
    /// mu the cubic character allowed by Ad over the quadratic field K.
    std::set<std::string> dihedral_partners;

    const std::string& twist_class_or_label() const { return twist_class.empty() ? label : twist_class; }
    const std::string& adjoint_class_or_default() const {
        return adjoint_class.empty() ? twist_class_or_label() : adjoint_class;
    }
};

struct CubicField {
    std::string label;
    bool normal = false;
    friend bool operator<(const CubicField& a, const CubicField& b) { return a.label < b.label; }
};

struct GL3Descriptor {
    std::string label;
    GL3Kind kind = GL3Kind::General;
    /// Twist classes of GL(2) forms whose adjoint this is a twist of.
    std::set<std::string> adjoint_of;
    std::string twist;
    /// Cubic fields it is induced from (monomial).
    std::vector<CubicField> fields;
    std::string selftwist;
    bool essentially_selfdual = false;
    bool admits_selftwist = false;
    bool solvable_type = false;
    bool regular_algebraic = false;
    bool base_not_totally_imaginary = false;
};

struct Verdict {
    Outcome outcome = Outcome::Cuspidal;
    std::vector<std::string> witnesses;
    /// Which clause fired, e.g. "adjoint-twist/tetrahedral", "no-clause".
    std::string rule;
};

/// Checks internal consistency. Throws InconsistentInput.
void validate(const GL2Descriptor& d);
void validate(const GL3Descriptor& d);

/// Shape of p3 x p2. Throws InconsistentInput for contradictory descriptors.
Verdict decide_cuspidality(const GL3Descriptor& p3, const GL2Descriptor& p2);

/// Shape of p2a x Ad(p2b) for non-dihedral p2b.
Verdict decide_adjoint_pair(const GL2Descriptor& p2a, const GL2Descriptor& p2b);

struct GenericProductReport {
    bool cuspidal = false;
    /// Each flag records a conclusion that is established, not merely possible.
    bool no_selftwist = false;
    bool not_cubic_induced = false;
    bool not_solvably_induced = false;
    /// Monomial ruled out up front because p3 is regular algebraic over a base
    /// that is not totally imaginary.
    bool monomial_excluded = false;
};

/// Conclusions for p2 not of solvable polyhedral type and p3 not essentially
/// selfdual. Throws HypothesisError naming the failed hypothesis.
GenericProductReport decide_nonpolyhedral_product(const GL3Descriptor& p3, const GL2Descriptor& p2);

/// Descriptor file: optional `basis ...;` line, then sections `[gl2]`,
/// `[gl2b]`, `[gl3]` of `key = value` lines. Throws ParseError.
struct DescriptorFile {
    BasisPtr basis;
    std::optional<GL2Descriptor> gl2, gl2b;
    std::optional<GL3Descriptor> gl3;
};
DescriptorFile parse_descriptors(std::string_view text);

// ---- model mode -----------------------------------------------------------

/// Labels and cached data for extracting descriptors from one finite group.
class GroupModel {
public:
    explicit GroupModel(GroupPtr g);

    const GroupPtr& group() const noexcept { return group_; }
    const std::vector<ClassFunction>& irreducibles() const noexcept { return irr_; }
    std::string label(std::size_t irr_index) const;
    /// Label of the smallest-index irreducible twist-equivalent to irr_index.
    std::string twist_class(std::size_t irr_index) const;
    std::optional<std::size_t> index_of(const ClassFunction& x) const;

    GL2Descriptor describe_gl2(std::size_t irr_index) const;
    GL3Descriptor describe_gl3(std::size_t irr_index) const;

private:
    GroupPtr group_;
    std::vector<ClassFunction> irr_;
    std::vector<std::size_t> twist_rep_;
    std::vector<CubicSubgroupClass> cubic_;
    std::vector<Subgroup> quadratic_;
};

struct CrossCheck {
    std::string group;
    std::string left, right;  // irreducible labels
    Verdict decided;
    ProductType brute;
    bool agree = false;
    /// For Type33: both constituents are linear twists of the degree-3 input.
    bool witnesses_twist_equivalent = true;
};

/// Every (degree-3, degree-2) pair of irreducibles of g.
std::vector<CrossCheck> cross_validate(const GroupModel& m);
/// Every (degree-2, non-dihedral degree-2) pair, comparing the adjoint-pair
/// rule with the brute-force type of x2a x Ad(x2b).
std::vector<CrossCheck> cross_validate_adjoint_pairs(const GroupModel& m);

}  // namespace gl6
