#include "gl6/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include "checked.hpp"
#include "gl6/error.hpp"

namespace gl6 {

using detail::add;
using detail::mul;
using detail::sub;

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
    static std::recursive_mutex mu;
    static std::map<int, std::vector<std::int64_t>> cache;
    if (n < 1) throw DomainError("cyclotomic polynomial index must be positive");
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<std::int64_t> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        const auto& q = cyclotomic_polynomial(d);
        const int dq = static_cast<int>(q.size()) - 1;
        const int dp = static_cast<int>(p.size()) - 1;
        std::vector<std::int64_t> quot(dp - dq + 1, 0);
        for (int i = dp; i >= dq; --i) {
            const auto c = p[i];
            quot[i - dq] = c;
            if (c == 0) continue;
            for (int j = 0; j <= dq; ++j) p[i - dq + j] = sub(p[i - dq + j], mul(c, q[j]));
        }
        p = std::move(quot);
    }
    return cache.emplace(n, std::move(p)).first->second;
}

namespace {

std::vector<std::int64_t> reduce_mod_phi(std::vector<std::int64_t> p, int n) {
    const auto& phi = cyclotomic_polynomial(n);
    const int d = static_cast<int>(phi.size()) - 1;
    for (int i = static_cast<int>(p.size()) - 1; i >= d; --i) {
        const auto c = p[i];
        if (c == 0) continue;
        for (int j = 0; j <= d; ++j) p[i - d + j] = sub(p[i - d + j], mul(c, phi[j]));
    }
    p.resize(d, 0);
    return p;
}

int lcm_int(int a, int b) { return static_cast<int>(detail::lcm(a, b)); }

}  // namespace

Cyclotomic::Cyclotomic(std::int64_t value) : n_(1), c_{value}, den_(1) {}

Cyclotomic Cyclotomic::rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("zero denominator");
    Cyclotomic r(num);
    if (den < 0) {
        r.c_[0] = -num;
        den = -den;
    }
    r.den_ = den;
    r.normalize();
    return r;
}

Cyclotomic Cyclotomic::zeta(int n, std::int64_t k) {
    std::vector<std::int64_t> coeffs(n, 0);
    coeffs[static_cast<std::size_t>(((k % n) + n) % n)] = 1;
    return from_powers(n, coeffs);
}

Cyclotomic Cyclotomic::from_powers(int n, const std::vector<std::int64_t>& coeffs, std::int64_t den) {
    if (n < 1) throw DomainError("root of unity order must be positive");
    if (den <= 0) throw DomainError("denominator must be positive");
    std::vector<std::int64_t> p(n, 0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) p[k % n] = add(p[k % n], coeffs[k]);
    Cyclotomic r;
    r.n_ = n;
    r.c_ = reduce_mod_phi(std::move(p), n);
    r.den_ = den;
    r.normalize();
    return r;
}

void Cyclotomic::normalize() {
    std::int64_t g = den_;
    for (auto x : c_) g = std::gcd(g, x);
    if (g > 1) {
        for (auto& x : c_) x /= g;
        den_ /= g;
    }
    if (is_zero()) den_ = 1;
}

bool Cyclotomic::is_zero() const noexcept {
    for (auto x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const noexcept {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::pair<std::int64_t, std::int64_t> Cyclotomic::as_rational() const {
    if (!is_rational()) throw DomainError("cyclotomic value is not rational: " + to_string());
    return {c_.empty() ? 0 : c_[0], den_};
}

std::int64_t Cyclotomic::as_integer() const {
    auto [num, den] = as_rational();
    if (den != 1) throw DomainError("cyclotomic value is not an integer: " + to_string());
    return num;
}

Cyclotomic Cyclotomic::lifted(int m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw DomainError("cannot lift Q(zeta_" + std::to_string(n_) + ") into Q(zeta_" +
                                       std::to_string(m) + ")");
    const int step = m / n_;
    std::vector<std::int64_t> p(m, 0);
    for (std::size_t k = 0; k < c_.size(); ++k) p[k * step] = c_[k];
    Cyclotomic r;
    r.n_ = m;
    r.c_ = reduce_mod_phi(std::move(p), m);
    r.den_ = den_;
    return r;
}

Cyclotomic Cyclotomic::conj() const {
    std::vector<std::int64_t> p(n_, 0);
    for (std::size_t k = 0; k < c_.size(); ++k) p[(n_ - k) % n_] = c_[k];
    Cyclotomic r;
    r.n_ = n_;
    r.c_ = reduce_mod_phi(std::move(p), n_);
    r.den_ = den_;
    return r;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> z = 0;
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0)
            z += static_cast<double>(c_[k]) *
                 std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_));
    return z / static_cast<double>(den_);
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = sub(0, x);
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (n_ != o.n_) {
        const int m = lcm_int(n_, o.n_);
        *this = lifted(m);
        return *this += o.lifted(m);
    }
    const auto l = detail::lcm(den_, o.den_);
    const auto sa = l / den_, sb = l / o.den_;
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] = add(mul(c_[k], sa), mul(o.c_[k], sb));
    den_ = l;
    normalize();
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (n_ != o.n_) {
        const int m = lcm_int(n_, o.n_);
        *this = lifted(m);
        return *this *= o.lifted(m);
    }
    if (n_ == 1) {
        c_[0] = mul(c_[0], o.c_[0]);
        den_ = mul(den_, o.den_);
        normalize();
        return *this;
    }
    std::vector<std::int64_t> p(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) p[i + j] = add(p[i + j], mul(c_[i], o.c_[j]));
    }
    c_ = reduce_mod_phi(std::move(p), n_);
    den_ = mul(den_, o.den_);
    normalize();
    return *this;
}

Cyclotomic Cyclotomic::divided(std::int64_t num, std::int64_t den) const {
    if (num == 0) throw DomainError("division by zero");
    if (den == 0) throw DomainError("zero denominator");
    if (num < 0) {
        num = -num;
        den = -den;
    }
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = mul(x, den);
    r.den_ = mul(r.den_, num);
    r.normalize();
    return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ != b.n_) {
        const int m = lcm_int(a.n_, b.n_);
        return a.lifted(m) == b.lifted(m);
    }
    if (a.den_ != b.den_) return a.is_zero() && b.is_zero();
    return a.c_ == b.c_;
}

std::string Cyclotomic::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        auto c = c_[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        const auto mag = neg ? -c : c;
        if (!out.empty()) out += neg ? "-" : "+";
        else if (neg) out += "-";
        std::string coeff = std::to_string(mag);
        if (den_ != 1) coeff += "/" + std::to_string(den_);
        if (k == 0) {
            out += coeff;
            continue;
        }
        if (coeff != "1") out += coeff + "*";
        out += "z" + std::to_string(n_);
        if (k != 1) out += "^" + std::to_string(k);
    }
    return out;
}

namespace {

struct Scanner {
    std::string_view s;
    std::size_t i = 0;

    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool at_end() {
        ws();
        return i >= s.size();
    }
    bool accept(char ch) {
        ws();
        if (i < s.size() && s[i] == ch) {
            ++i;
            return true;
        }
        return false;
    }
    bool peek_digit() {
        ws();
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    }
    std::int64_t number() {
        ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected a number");
        std::int64_t v = 0;
        for (auto j = start; j < i; ++j) v = add(mul(v, 10), s[j] - '0');
        return v;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at offset " + std::to_string(i) + " in '" + std::string(s) + "'");
    }
};

}  // namespace

Cyclotomic parse_cyclotomic(std::string_view text) {
    Scanner sc{text};
    if (sc.at_end()) sc.fail("empty cyclotomic literal");
    Cyclotomic total(0);
    bool first = true;
    while (!sc.at_end()) {
        bool neg = false;
        if (!first) {
            if (sc.accept('+')) {
            } else if (sc.accept('-')) {
                neg = true;
            } else {
                sc.fail("expected '+' or '-'");
            }
        }
        while (true) {
            if (sc.accept('-')) neg = !neg;
            else if (!sc.accept('+')) break;
        }
        first = false;
        std::int64_t num = 1, den = 1;
        bool have_coeff = false;
        if (sc.peek_digit()) {
            num = sc.number();
            have_coeff = true;
            if (sc.accept('/')) {
                den = sc.number();
                if (den == 0) sc.fail("zero denominator");
            }
        }
        Cyclotomic term = Cyclotomic::rational(neg ? -num : num, den);
        bool want_root = !have_coeff || sc.accept('*');
        if (want_root) {
            if (!sc.accept('z')) sc.fail("expected zN");
            const auto n = sc.number();
            if (n < 1 || n > 100000) sc.fail("root of unity order out of range");
            std::int64_t k = 1;
            if (sc.accept('^')) {
                bool kneg = sc.accept('-');
                k = sc.number();
                if (kneg) k = -k;
            }
            term *= Cyclotomic::zeta(static_cast<int>(n), k);
        }
        total += term;
    }
    return total;
}

}  // namespace gl6
