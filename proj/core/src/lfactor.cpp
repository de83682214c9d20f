#include "gl6/lfactor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gl6/error.hpp"

namespace gl6 {

std::complex<double> satake_to_complex(const SatakeValue& v) {
    if (const auto* t = std::get_if<Turn>(&v)) return turn_to_complex(*t);
    return std::get<std::complex<double>>(v);
}

EulerFactor::EulerFactor(std::vector<SatakeValue> satake) : satake_(std::move(satake)) {
    for (const auto& v : satake_)
        if (const auto* z = std::get_if<std::complex<double>>(&v); z && *z == std::complex<double>(0.0))
            throw DomainError("Satake value must be nonzero");
}

bool EulerFactor::exact() const noexcept {
    return std::all_of(satake_.begin(), satake_.end(), [](const auto& v) { return std::holds_alternative<Turn>(v); });
}

std::complex<double> EulerFactor::trace() const {
    std::complex<double> s = 0;
    for (const auto& v : satake_) s += satake_to_complex(v);
    return s;
}

EulerFactor factor_from_param(const LocalParameter& p, const NumericEmbedding& e) {
    std::vector<SatakeValue> out;
    out.reserve(p.degree());
    for (const auto& c : p.entries()) {
        if (auto t = char_eval_exact(c, e)) out.emplace_back(*t);
        else out.emplace_back(char_eval(c, e));
    }
    return EulerFactor(std::move(out));
}

EulerFactor rankin_selberg_factor(const EulerFactor& a, const EulerFactor& b) {
    std::vector<SatakeValue> out;
    out.reserve(a.degree() * b.degree());
    for (const auto& x : a.satake())
        for (const auto& y : b.satake()) {
            const auto* tx = std::get_if<Turn>(&x);
            const auto* ty = std::get_if<Turn>(&y);
            if (tx && ty) out.emplace_back(normalize_turn(*tx + *ty));
            else out.emplace_back(satake_to_complex(x) * satake_to_complex(y));
        }
    return EulerFactor(std::move(out));
}

DenomPolynomial::DenomPolynomial(const EulerFactor& f) {
    if (f.exact()) {
        Exact c{Cyclotomic(1)};
        for (const auto& v : f.satake()) {
            const auto t = std::get<Turn>(v);
            const auto root = -Cyclotomic::zeta(static_cast<int>(t.denominator()), t.numerator());
            Exact next(c.size() + 1, Cyclotomic(0));
            for (std::size_t i = 0; i < c.size(); ++i) {
                next[i] += c[i];
                next[i + 1] += c[i] * root;
            }
            c = std::move(next);
        }
        coeffs_ = std::move(c);
    } else {
        Numeric c{1.0};
        for (const auto& v : f.satake()) {
            const auto a = satake_to_complex(v);
            Numeric next(c.size() + 1, 0.0);
            for (std::size_t i = 0; i < c.size(); ++i) {
                next[i] += c[i];
                next[i + 1] -= c[i] * a;
            }
            c = std::move(next);
        }
        coeffs_ = std::move(c);
    }
}

std::size_t DenomPolynomial::degree() const {
    return std::visit([](const auto& c) { return c.size() - 1; }, coeffs_);
}

DenomPolynomial::Numeric DenomPolynomial::numeric() const {
    if (const auto* n = std::get_if<Numeric>(&coeffs_)) return *n;
    Numeric out;
    for (const auto& c : std::get<Exact>(coeffs_)) out.push_back(c.to_complex());
    return out;
}

namespace {

template <class T>
std::vector<T> poly_mul(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out(a.size() + b.size() - 1, T(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

DenomPolynomial operator*(const DenomPolynomial& a, const DenomPolynomial& b) {
    if (a.exact() && b.exact())
        return DenomPolynomial(poly_mul(std::get<DenomPolynomial::Exact>(a.coeffs_),
                                        std::get<DenomPolynomial::Exact>(b.coeffs_)));
    return DenomPolynomial(poly_mul(a.numeric(), b.numeric()));
}

bool same_polynomial(const DenomPolynomial& a, const DenomPolynomial& b, double tolerance) {
    if (a.degree() != b.degree()) return false;
    if (a.exact() && b.exact())
        return std::get<DenomPolynomial::Exact>(a.coefficients()) == std::get<DenomPolynomial::Exact>(b.coefficients());
    const auto x = a.numeric(), y = b.numeric();
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double scale = std::max({1.0, std::abs(x[i]), std::abs(y[i])});
        if (std::abs(x[i] - y[i]) > tolerance * scale) return false;
    }
    return true;
}

bool check_factor_identity(const std::vector<EulerFactor>& lhs, const std::vector<EulerFactor>& rhs,
                           double tolerance) {
    auto product = [](const std::vector<EulerFactor>& fs) {
        DenomPolynomial p(DenomPolynomial::Exact{Cyclotomic(1)});
        for (const auto& f : fs) p = p * DenomPolynomial(f);
        return p;
    };
    return same_polynomial(product(lhs), product(rhs), tolerance);
}

std::vector<std::complex<double>> prime_power_coefficients(const EulerFactor& f, unsigned k) {
    // 1 / D(X) by the recursion h_m = -sum_{i>=1} d_i h_{m-i}.
    const auto d = DenomPolynomial(f).numeric();
    std::vector<std::complex<double>> h(k + 1, 0.0);
    h[0] = 1.0;
    for (unsigned m = 1; m <= k; ++m)
        for (std::size_t i = 1; i < d.size() && i <= m; ++i) h[m] -= d[i] * h[m - i];
    return h;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
    std::vector<std::int64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (std::int64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

std::vector<std::complex<double>> dirichlet_coefficients(const PartialLSeries& s, std::int64_t bound) {
    if (bound < 1) throw DomainError("coefficient bound must be positive");
    if (bound > kMaxCoefficientBound)
        throw DomainError("coefficient bound " + std::to_string(bound) + " exceeds the supported maximum " +
                          std::to_string(kMaxCoefficientBound));
    std::vector<std::complex<double>> c(static_cast<std::size_t>(bound) + 1, 0.0);
    c[1] = 1.0;
    // Multiply in one prime at a time: after processing p, c is supported on
    // integers whose prime factors have all been processed.
    for (auto p : primes_up_to(bound)) {
        const bool omitted = s.omitted.count(p) > 0;
        auto it = s.factors.find(p);
        if (!omitted && it == s.factors.end())
            throw DomainError("no Euler factor for prime " + std::to_string(p) + " and it is not declared omitted");
        if (omitted) continue;
        unsigned kmax = 1;
        for (std::int64_t q = p; q <= bound / p; q *= p) ++kmax;
        const auto h = prime_power_coefficients(it->second, kmax);
        for (std::int64_t n = bound / p; n >= 1; --n) {
            if (c[n] == std::complex<double>(0.0) || n % p == 0) continue;
            std::int64_t q = p;
            for (unsigned k = 1; k <= kmax && n * q <= bound; ++k, q *= p) c[n * q] = c[n] * h[k];
        }
    }
    return c;
}

}  // namespace gl6
