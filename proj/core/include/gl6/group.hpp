#pragma once
// Finite groups given by multiplication tables, their conjugacy classes,
// power maps, subgroups and (lazily computed) character tables.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gl6/cyclotomic.hpp"

namespace gl6 {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Upper bound on group orders accepted anywhere in the library.
inline constexpr int kMaxGroupOrder = 10'000;

struct ConjugacyClass {
    int representative = 0;
    std::vector<int> members;  // sorted
    int size() const noexcept { return static_cast<int>(members.size()); }
};

/// Irreducible characters as rows of exact values, one column per class.
/// Rows are sorted by degree, the trivial character first.
using TableRows = std::vector<std::vector<Cyclotomic>>;

class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
public:
    /// Validates the table (Latin square, identity, associativity exhaustive
    /// up to order 64, sampled above) and relabels so the identity is 0.
    /// Throws InconsistentInput.
    static GroupPtr from_table(std::string name, const std::vector<std::vector<int>>& table);

    const std::string& name() const noexcept { return name_; }
    int order() const noexcept { return n_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int power(int g, std::int64_t k) const;
    int element_order(int g) const { return elem_order_[g]; }
    int exponent() const noexcept { return exponent_; }

    int num_classes() const noexcept { return static_cast<int>(classes_.size()); }
    const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
    int class_of(int g) const { return class_of_[g]; }
    int class_size(int c) const { return classes_[c].size(); }
    /// Class of g^k for g in class c.
    int class_power(int c, std::int64_t k) const { return class_of(power(classes_[c].representative, k)); }
    int class_inverse(int c) const { return class_of(inv(classes_[c].representative)); }

    /// A small generating set, chosen greedily by decreasing element order.
    const std::vector<int>& generators() const noexcept { return gens_; }

    /// Irreducible characters, computed on first use.
    const TableRows& character_table() const;
    /// Checks a user-supplied table against the computed one (up to row
    /// order). Throws InconsistentInput on disagreement.
    void check_supplied_table(TableRows rows) const;

    bool is_abelian() const;

private:
    FiniteGroup() = default;
    void analyze();

    std::string name_;
    int n_ = 0;
    std::vector<std::uint16_t> table_;
    std::vector<int> inv_, elem_order_, class_of_, gens_;
    std::vector<ConjugacyClass> classes_;
    int exponent_ = 1;

    mutable std::once_flag table_once_;
    mutable TableRows table_rows_;
};

/// Computes the irreducible characters (Burnside-Dixon over F_p, then exact lift).
TableRows compute_character_table(const FiniteGroup& g);

/// Sorts rows into the canonical order used by FiniteGroup::character_table.
void sort_table_rows(TableRows& rows);

class Subgroup {
public:
    /// Closure of `gens` inside `parent`.
    static Subgroup generated(const GroupPtr& parent, const std::vector<int>& gens, std::string name = "");
    /// `members` must be closed under multiplication. Throws InconsistentInput.
    static Subgroup from_members(const GroupPtr& parent, std::vector<int> members, std::string name = "");

    const GroupPtr& parent() const noexcept { return parent_; }
    /// The subgroup as a group in its own right; element i is members()[i].
    const GroupPtr& group() const noexcept { return group_; }
    const std::vector<int>& members() const noexcept { return members_; }
    int order() const noexcept { return static_cast<int>(members_.size()); }
    int index() const noexcept { return parent_->order() / order(); }
    bool contains(int g) const { return local_[g] >= 0; }
    /// Index in group() of a parent element, or -1.
    int local(int g) const { return local_[g]; }
    /// Left coset representatives, the identity first.
    const std::vector<int>& transversal() const noexcept { return transversal_; }
    bool is_normal() const;

private:
    GroupPtr parent_, group_;
    std::vector<int> members_, local_, transversal_;
};

/// `order n classes k`, n table lines, then optionally k lines of k
/// cyclotomic literals whose columns follow the canonical class order
/// (classes sorted by smallest member). Throws ParseError.
GroupPtr parse_group(std::string_view text, std::string name = "input");

std::string format_group(const FiniteGroup& g, bool with_table);

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, std::string name = "");

}  // namespace gl6
