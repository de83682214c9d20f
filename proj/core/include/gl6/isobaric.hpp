#pragma once
// Unramified local parameters as canonical multisets of characters, with the
// isobaric sum, functorial product, symmetric/exterior powers and twists.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gl6/charalg.hpp"

namespace gl6 {

class LocalParameter {
public:
    LocalParameter() = default;
    explicit LocalParameter(BasisPtr basis) : basis_(std::move(basis)) {}
    LocalParameter(BasisPtr basis, std::vector<Character> entries);
    LocalParameter(std::initializer_list<Character> entries);

    const BasisPtr& basis() const noexcept { return basis_; }
    const std::vector<Character>& entries() const noexcept { return entries_; }
    std::size_t degree() const noexcept { return entries_.size(); }
    /// Only exterior powers beyond the degree produce this.
    bool is_empty() const noexcept { return entries_.empty(); }
    std::size_t multiplicity(const Character& c) const;

    friend bool operator==(const LocalParameter& a, const LocalParameter& b) { return a.entries_ == b.entries_; }

private:
    BasisPtr basis_;
    std::vector<Character> entries_;  // sorted
};

LocalParameter boxplus(const LocalParameter& a, const LocalParameter& b);
LocalParameter boxtimes(const LocalParameter& a, const LocalParameter& b);
LocalParameter dual(const LocalParameter& a);
LocalParameter twist(const LocalParameter& a, const Character& c);
Character central_char(const LocalParameter& a);
LocalParameter sym_k(const LocalParameter& a, unsigned k);
LocalParameter ext_k(const LocalParameter& a, unsigned k);
/// sym^2(a) twisted by the inverse central character; requires degree 2.
LocalParameter adjoint(const LocalParameter& a);
/// sym^4(a) twisted by the inverse square of the central character; requires degree 2.
LocalParameter a4(const LocalParameter& a);

/// `[alpha1, alpha2*chi]` against a declared basis; `[]` is the empty parameter.
LocalParameter parse_parameter(const BasisPtr& basis, std::string_view text);
std::string format_parameter(const LocalParameter& p);

struct MultisetDiff {
    std::vector<Character> only_left;
    std::vector<Character> only_right;
    bool empty() const noexcept { return only_left.empty() && only_right.empty(); }
};

MultisetDiff multiset_diff(const LocalParameter& left, const LocalParameter& right);

/// Evaluates both sides under `e` and matches the complex values within the
/// embedding's tolerance (relative to max(1, |z|)).
bool numerically_equal(const LocalParameter& left, const LocalParameter& right, const NumericEmbedding& e);

/// Outcome of one multiset identity check, with the mismatching entries.
struct IdentityReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> inputs;
    bool holds = false;
    std::size_t lhs_degree = 0;
    std::size_t rhs_degree = 0;
    std::vector<std::string> only_lhs;
    std::vector<std::string> only_rhs;
    /// Intermediate equalities checked along the way, in order.
    std::vector<std::pair<std::string, bool>> steps;

    std::string detail() const;
};

/// sym^2(a) x a  ==  sym^3(a) + a (x) omega.
IdentityReport verify_clebsch_gordan(const LocalParameter& a);

/// Exterior cube of a GL(2) x GL(3) product:
///   L3(a2 x a3) (x) w3^-1  +  a2 (x) w2   ==   sym^3(a2)  +  a2 x a3 x dual(a3) (x) w2,
/// both sides of degree 22. Also checks both sides against the explicit
/// 2 + 8 + 12 term bookkeeping.
IdentityReport verify_exterior_cube_product(const LocalParameter& a2, const LocalParameter& a3);

/// The 22 entries split as cubes of a2, four copies of a2 (x) w2, and the
/// twelve a_i w2 b_j / b_k with j != k.
LocalParameter exterior_cube_terms(const LocalParameter& a2, const LocalParameter& a3);

/// Exterior cube of an isobaric sum of two degree-3 parameters:
///   L3(s1 + s2) (x) c == e1 c + e2 c + s1 x dual(s2) (x) e2 c + s2 x dual(s1) (x) e1 c.
IdentityReport verify_exterior_cube_of_sum(const LocalParameter& s1, const LocalParameter& s2, const Character& c);

/// If a2 x a3 == a3 (x) chi1 + a3 (x) chi2 then sym^3(a2) == a2 (x) w2 + chi1^3 + chi2^3.
/// Throws HypothesisError when the hypothesis fails on the input.
IdentityReport verify_twist_pair_sym3(const LocalParameter& a2, const LocalParameter& a3, const Character& chi1,
                                      const Character& chi2);

/// a3 == beta (1 + chi + chi^-1) with chi of order 3: replays the cube
/// bookkeeping of a (3,3) split whose pieces are chi-invariant. Throws
/// DomainError when the shape is violated.
IdentityReport verify_cubic_selftwist_sym3(const LocalParameter& a2, const LocalParameter& a3, const Character& chi);

}  // namespace gl6
