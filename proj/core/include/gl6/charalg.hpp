#pragma once
// Formal abelian characters: exponent vectors over a named generator basis.
//
// Every local identity in the library is phrased in terms of these atoms.
// A generator either has infinite order (a free symbol) or a finite order d,
// in which case exponents are kept reduced into [0, d).

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/rational.hpp>

namespace gl6 {

class GeneratorBasis {
public:
    struct Generator {
        std::string name;
        std::optional<std::int64_t> order;  // nullopt: infinite order

        bool operator==(const Generator&) const = default;
    };

    GeneratorBasis() = default;
    explicit GeneratorBasis(std::vector<Generator> gens);

    std::size_t size() const noexcept { return gens_.size(); }
    const Generator& operator[](std::size_t i) const { return gens_[i]; }
    const std::vector<Generator>& generators() const noexcept { return gens_; }

    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;  // throws ParseError

    bool operator==(const GeneratorBasis& other) const { return gens_ == other.gens_; }

private:
    std::vector<Generator> gens_;
};

using BasisPtr = std::shared_ptr<const GeneratorBasis>;

BasisPtr make_basis(std::vector<GeneratorBasis::Generator> gens);

/// True when both pointers denote the same symbol universe.
bool same_basis(const BasisPtr& a, const BasisPtr& b);

using Exponents = boost::container::small_vector<std::int32_t, 8>;

class Character {
public:
    Character() = default;
    /// Trivial character on `basis`.
    explicit Character(BasisPtr basis);
    /// Exponents are reduced modulo the finite orders of the basis.
    Character(BasisPtr basis, Exponents exps);

    static Character generator(const BasisPtr& basis, std::string_view name, std::int32_t power = 1);

    const BasisPtr& basis() const noexcept { return basis_; }
    const Exponents& exponents() const noexcept { return exps_; }
    std::int32_t exponent(std::size_t i) const { return exps_[i]; }

    bool is_trivial() const noexcept;

    /// Smallest n > 0 with this^n trivial, or nullopt when a free generator occurs.
    std::optional<std::int64_t> order() const;

    Character pow(std::int64_t k) const;

    friend bool operator==(const Character& a, const Character& b) { return a.exps_ == b.exps_; }
    friend auto operator<=>(const Character& a, const Character& b) {
        return std::lexicographical_compare_three_way(a.exps_.begin(), a.exps_.end(), b.exps_.begin(),
                                                      b.exps_.end());
    }

private:
    void reduce();

    BasisPtr basis_;
    Exponents exps_;
};

Character char_mul(const Character& a, const Character& b);
Character char_inv(const Character& a);

inline Character operator*(const Character& a, const Character& b) { return char_mul(a, b); }

/// Exact value e^{2 pi i t} stored as the turn t in [0, 1).
using Turn = boost::rational<std::int64_t>;

Turn normalize_turn(Turn t);
std::complex<double> turn_to_complex(Turn t);

/// Assignment of nonzero complex values to generators.
///
/// Finite-order generators are normally given an exact root of unity (a turn
/// k/order); free generators take arbitrary nonzero complex numbers.
class NumericEmbedding {
public:
    using Value = std::variant<Turn, std::complex<double>>;

    NumericEmbedding() = default;
    explicit NumericEmbedding(BasisPtr basis, double tolerance = 1e-9);

    /// Validates against the generator's order. Throws DomainError.
    void assign(std::string_view name, Value v);
    void assign_root(std::string_view name, std::int64_t k, std::int64_t n) { assign(name, Turn(k, n)); }

    bool has(std::size_t gen) const { return values_.at(gen).has_value(); }
    const std::optional<Value>& value(std::size_t gen) const { return values_.at(gen); }
    const BasisPtr& basis() const noexcept { return basis_; }
    double tolerance() const noexcept { return tol_; }

    /// Random embedding: uniform root index for finite generators, modulus in
    /// [0.5, 2] and uniform phase for free ones.
    static NumericEmbedding random(const BasisPtr& basis, std::mt19937_64& rng);

private:
    BasisPtr basis_;
    std::vector<std::optional<Value>> values_;
    double tol_ = 1e-9;
};

/// Product of assigned values raised to the exponents. Throws DomainError
/// naming the first generator with nonzero exponent and no assignment.
std::complex<double> char_eval(const Character& a, const NumericEmbedding& e);

/// Exact evaluation when every generator involved carries a root-of-unity value.
std::optional<Turn> char_eval_exact(const Character& a, const NumericEmbedding& e);

// Text grammar:  basis chi:3, delta:2, alpha, beta;
//                alpha^2*beta*chi^-1     (or "1" for the trivial character)
BasisPtr parse_basis(std::string_view text);
std::string format_basis(const GeneratorBasis& basis);
Character parse_character(const BasisPtr& basis, std::string_view text);
std::string format_character(const Character& c);

/// Reads `name re im` or `name root k n` lines; '#' starts a comment.
NumericEmbedding parse_embedding(const BasisPtr& basis, std::string_view text);

}  // namespace gl6
