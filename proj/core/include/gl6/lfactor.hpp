#pragma once
// Local Euler factors prod (1 - a_i X)^-1 in X = Nv^-s, their denominator
// polynomials, and Dirichlet coefficients of partial Euler products.

#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <variant>
#include <vector>

#include "gl6/charalg.hpp"
#include "gl6/cyclotomic.hpp"
#include "gl6/isobaric.hpp"

namespace gl6 {

/// A Satake value: an exact root of unity (as a turn) or a nonzero complex number.
using SatakeValue = std::variant<Turn, std::complex<double>>;

std::complex<double> satake_to_complex(const SatakeValue& v);

class EulerFactor {
public:
    EulerFactor() = default;
    /// Throws DomainError on a zero value.
    explicit EulerFactor(std::vector<SatakeValue> satake);

    const std::vector<SatakeValue>& satake() const noexcept { return satake_; }
    std::size_t degree() const noexcept { return satake_.size(); }
    bool exact() const noexcept;
    /// Sum of the Satake values, the coefficient of Nv^-s.
    std::complex<double> trace() const;

private:
    std::vector<SatakeValue> satake_;
};

EulerFactor factor_from_param(const LocalParameter& p, const NumericEmbedding& e);
EulerFactor rankin_selberg_factor(const EulerFactor& a, const EulerFactor& b);

/// prod (1 - a_i X), lowest degree first; exact when every root is exact.
class DenomPolynomial {
public:
    using Exact = std::vector<Cyclotomic>;
    using Numeric = std::vector<std::complex<double>>;

    explicit DenomPolynomial(const EulerFactor& f);
    DenomPolynomial(std::variant<Exact, Numeric> coeffs) : coeffs_(std::move(coeffs)) {}

    bool exact() const noexcept { return std::holds_alternative<Exact>(coeffs_); }
    std::size_t degree() const;
    const std::variant<Exact, Numeric>& coefficients() const noexcept { return coeffs_; }
    Numeric numeric() const;

    friend DenomPolynomial operator*(const DenomPolynomial& a, const DenomPolynomial& b);

private:
    std::variant<Exact, Numeric> coeffs_;
};

/// Exact comparison when both sides are exact, otherwise coefficientwise
/// within `tolerance` relative to max(1, |coefficient|).
bool same_polynomial(const DenomPolynomial& a, const DenomPolynomial& b, double tolerance = 1e-9);

/// True iff the product of the left denominators equals the product of the right ones.
bool check_factor_identity(const std::vector<EulerFactor>& lhs, const std::vector<EulerFactor>& rhs,
                           double tolerance = 1e-9);

struct PartialLSeries {
    std::map<std::int64_t, EulerFactor> factors;  // keyed by Nv
    std::set<std::int64_t> omitted;               // Nv whose factor is taken to be 1
};

/// Largest bound dirichlet_coefficients accepts.
inline constexpr std::int64_t kMaxCoefficientBound = 10'000'000;

/// c_n for 1 <= n <= bound (index 0 unused). Every prime up to the bound must
/// be present or omitted. Throws DomainError otherwise or when the bound
/// exceeds kMaxCoefficientBound.
std::vector<std::complex<double>> dirichlet_coefficients(const PartialLSeries& s, std::int64_t bound);

/// Coefficients of prod (1 - a_i X)^-1 up to X^k.
std::vector<std::complex<double>> prime_power_coefficients(const EulerFactor& f, unsigned k);

std::vector<std::int64_t> primes_up_to(std::int64_t bound);

}  // namespace gl6
