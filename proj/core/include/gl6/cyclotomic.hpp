#pragma once
// Exact elements of Q(zeta_n): integer coefficients in the power basis
// 1, z, ..., z^{phi(n)-1} modulo the n-th cyclotomic polynomial, over one
// common positive denominator.

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gl6 {

class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(0) {}
    Cyclotomic(std::int64_t value);  // NOLINT: integers embed implicitly
    static Cyclotomic rational(std::int64_t num, std::int64_t den);
    /// zeta_n^k with zeta_n = exp(2 pi i / n).
    static Cyclotomic zeta(int n, std::int64_t k);
    /// Sum of coeffs[k] * zeta_n^k over k (coeffs may be longer than phi(n)).
    static Cyclotomic from_powers(int n, const std::vector<std::int64_t>& coeffs, std::int64_t den = 1);

    int conductor_bound() const noexcept { return n_; }
    const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }
    std::int64_t denominator() const noexcept { return den_; }

    bool is_zero() const noexcept;
    bool is_rational() const noexcept;
    bool is_integer() const noexcept { return is_rational() && den_ == 1; }
    /// Requires is_rational(); returns numerator, denominator.
    std::pair<std::int64_t, std::int64_t> as_rational() const;
    std::int64_t as_integer() const;

    /// Same element written over Q(zeta_m); m must be a multiple of the current n.
    Cyclotomic lifted(int m) const;
    Cyclotomic conj() const;
    std::complex<double> to_complex() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    /// Division by a nonzero rational (the only division class functions need).
    Cyclotomic divided(std::int64_t num, std::int64_t den = 1) const;

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    /// Terms `c*zN^k` joined by '+', e.g. `2+-1*z24^5`; "0" for zero.
    std::string to_string() const;

private:
    void normalize();

    int n_ = 1;
    std::vector<std::int64_t> c_;  // size phi(n_)
    std::int64_t den_ = 1;
};

/// Parses sums of terms `a`, `a/b`, `a*zN^k`, `zN^k`, `zN`, `-zN^k`.
Cyclotomic parse_cyclotomic(std::string_view text);

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

int euler_phi(int n);

}  // namespace gl6
