#pragma once
// Empirical checks of the power-sum cube lemma: if
//   (U^n + V^n)(A^n + B^n + C^n) = (X^n + Y^n)(A^n + B^n + C^n) for all n > 0
// and U^3 V^3 = X^3 Y^3, then {U^3, V^3} = {X^3, Y^3}.
// Also the auxiliary facts used in its proof: a + b + c and a^3 + b^3 + c^3
// never vanish together, and two points of modulus R are fixed by their sum.

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gl6/charalg.hpp"
#include "gl6/cyclotomic.hpp"

namespace gl6 {

using Rational = boost::rational<std::int64_t>;

/// modulus * exp(2 pi i angle), modulus > 0.
struct ScaledRoot {
    Rational modulus{1};
    Turn angle{0};
    friend bool operator==(const ScaledRoot&, const ScaledRoot&) = default;
};

using LemmaValue = std::variant<ScaledRoot, std::complex<double>>;

std::complex<double> to_complex(const LemmaValue& v);

struct SeptupleInstance {
    // U, V, X, Y, A, B, C in that order.
    std::array<LemmaValue, 7> v;

    const LemmaValue& U() const { return v[0]; }
    const LemmaValue& V() const { return v[1]; }
    const LemmaValue& X() const { return v[2]; }
    const LemmaValue& Y() const { return v[3]; }
    const LemmaValue& A() const { return v[4]; }
    const LemmaValue& B() const { return v[5]; }
    const LemmaValue& C() const { return v[6]; }

    bool exact() const;
    /// Exact with every modulus equal to 1.
    bool roots_of_unity() const;
};

/// `U=1 V=1@1/3 X=2 Y=c:0.5,-1 A=... B=... C=...`: `q` or `q@k/n` is the exact
/// value q exp(2 pi i k/n), `c:re,im` a floating value. Throws ParseError.
SeptupleInstance parse_septuple(std::string_view text);
std::string format_septuple(const SeptupleInstance& s);

/// 1..nmax together with 1, 2, 3, 6, 9.
std::vector<int> lemma_exponents(int nmax);

/// Periods beyond this are checked only up to nmax even for roots of unity.
inline constexpr std::int64_t kMaxCompletePeriod = 1'000'000;

struct HypothesisResult {
    bool holds = false;
    /// True when the finite check settles "for all n" (root-of-unity inputs).
    bool complete = false;
    /// Largest n examined.
    std::int64_t checked_up_to = 0;
};

/// Throws DomainError on a zero entry and OverflowError when exact values
/// with non-unit moduli leave the int64 range.
HypothesisResult power_sum_cube_hypothesis(const SeptupleInstance& s, int nmax = 24, double tol = 1e-9);
bool power_sum_cube_conclusion(const SeptupleInstance& s, double tol = 1e-9);

/// (a + b + c != 0) or (a^3 + b^3 + c^3 != 0), zero meaning below tol relative
/// to the size of the terms. Throws DomainError on a zero entry.
bool claim_check(std::complex<double> a, std::complex<double> b, std::complex<double> c, double tol = 1e-9);
bool claim_check(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c);

struct CirclePair {
    std::complex<double> z1, z2;
    /// max of ||z1| - R|, ||z2| - R|, |z1 + z2 - Z|.
    double residual = 0;
};

/// The unordered pair with |z1| = |z2| = R and z1 + z2 = Z. Throws DomainError
/// unless 0 < |Z| < 2R.
CirclePair statement_check(double R, std::complex<double> Z);

struct SweepReport {
    int order = 0;
    std::int64_t values = 0;      // roots of unity of order <= `order`
    std::int64_t period = 0;      // lcm(1..order)
    std::int64_t septuples = 0;   // values^7
    std::int64_t cube_prefilter = 0;
    std::int64_t hypothesis_satisfying = 0;
    std::int64_t counterexamples = 0;
    std::optional<SeptupleInstance> first_counterexample;
    /// Side facts on hypothesis-satisfying instances (logged, not asserted).
    std::int64_t ninth_power_sum_zero = 0;
    std::int64_t second_and_sixth_power_sums_zero = 0;
};

/// Every ordered septuple of roots of unity of order <= order (1 <= order <= 12),
/// decided exactly through exponents modulo lcm(1..order).
SweepReport root_of_unity_sweep(int order);

struct RandomReport {
    std::int64_t samples = 0;
    std::int64_t hypothesis_satisfying = 0;
    std::int64_t counterexamples = 0;
    std::optional<SeptupleInstance> first_counterexample;
};

/// Floating samples satisfying the hypothesis by construction (swap, identity,
/// cube-root rotations against an equilateral A, B, C), each re-checked.
RandomReport random_constructed_samples(std::int64_t count, std::uint64_t seed, int nmax = 24, double tol = 1e-9);

struct ClaimReport {
    std::int64_t triples = 0;
    std::int64_t zero_sum_triples = 0;  // triples drawn with c = -a - b
    std::int64_t failures = 0;
};

/// Half the triples are drawn with a + b + c = 0 so the second disjunct is exercised.
ClaimReport claim_sweep(std::int64_t count, std::uint64_t seed, double tol = 1e-9);

/// Root-of-unity sweep up to `order`, then `random_budget` constructed samples.
std::optional<SeptupleInstance> counterexample_search(int order, std::int64_t random_budget, std::uint64_t seed);

}  // namespace gl6
