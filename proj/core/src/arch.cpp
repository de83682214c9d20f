#include "gl6/arch.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "checked.hpp"
#include "gl6/error.hpp"

namespace gl6 {

ArchParameter::ArchParameter(std::vector<ArchChar> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
}

ArchParameter arch_tensor(const ArchParameter& a, const ArchParameter& b) {
    std::vector<ArchChar> out;
    out.reserve(a.degree() * b.degree());
    for (const auto& x : a.entries())
        for (const auto& y : b.entries()) out.push_back({detail::add(x.k, y.k), detail::add(x.w, y.w)});
    return ArchParameter(std::move(out));
}

std::vector<ArchChar> collisions(const ArchParameter& a) {
    std::vector<ArchChar> out;
    const auto& e = a.entries();
    for (std::size_t i = 1; i < e.size(); ++i)
        if (e[i] == e[i - 1] && (out.empty() || out.back() != e[i])) out.push_back(e[i]);
    return out;
}

bool is_regular(const ArchParameter& a) { return collisions(a).empty(); }

ArchParameter cohomological_type(int n) {
    if (n < 2) throw DomainError("cohomological_type needs n >= 2");
    std::vector<ArchChar> out;
    for (int j = 0; j < n; ++j) out.push_back({n - 1 - 2 * j, n - 1});
    return ArchParameter(std::move(out));
}

ArchParameter weight4_type() { return ArchParameter({{3, 3}, {-3, 3}}); }
ArchParameter weight2_type() { return ArchParameter({{1, 1}, {-1, 1}}); }

DegreeWindow degree_window(int n) {
    if (n < 2) throw DomainError("degree_window needs n >= 2");
    const int m = n / 2;
    DegreeWindow w;
    w.d = n % 2 == 0 ? m * m : m * (m + 1);
    w.hi = w.d + (n - 1) / 2;
    return w;
}

TensorDiagnostic tensor_with_gl3(const ArchParameter& gl2_type) {
    TensorDiagnostic d;
    d.product = arch_tensor(gl2_type, cohomological_type(3));
    d.collisions = collisions(d.product);
    d.regular = d.collisions.empty();
    d.matches_cohomological = d.product == cohomological_type(6);
    return d;
}

bool check_sym_tensor_infinity() { return tensor_with_gl3(weight4_type()).matches_cohomological; }

AppendixInfinity appendix_infinity(int m) {
    if (m < 2) throw DomainError("appendix_infinity needs m >= 2");
    AppendixInfinity r;
    std::vector<ArchChar> e;
    for (int j = 1; j <= m; ++j) {
        const std::int64_t k = 2 * (m - j) + 1;
        r.k.push_back(k);
        e.push_back({k, 2 * m - 1});
        e.push_back({-k, 2 * m - 1});
    }
    r.induced = ArchParameter(std::move(e));
    r.regular = is_regular(r.induced);
    r.degree = static_cast<int>(r.induced.degree());
    return r;
}

std::optional<int> unit_condition(const std::vector<std::complex<double>>& u, const std::vector<std::int64_t>& k,
                                  int Mmax, double tol) {
    if (u.size() != k.size()) throw DomainError("unit_condition needs as many exponents as units");
    // u / conj(u) = exp(2 i arg u), so the product is exp(2 i M sum k_j arg u_j).
    double phase = 0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (u[j] == 0.0) throw DomainError("unit embedding is zero");
        phase += 2.0 * static_cast<double>(k[j]) * std::arg(u[j]);
    }
    for (int M = 1; M <= Mmax; ++M) {
        const auto z = std::polar(1.0, std::fmod(M * phase, 2 * M_PI));
        if (std::abs(z - 1.0) <= tol) return M;
    }
    return std::nullopt;
}

ArchParameter parse_arch(std::string_view text) {
    std::vector<ArchChar> out;
    std::size_t i = 0;
    const auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',' || text[i] == '{' || text[i] == '}' ||
                                   text[i] == '\n' || text[i] == '\r'))
            ++i;
    };
    const auto integer = [&](char stop) {
        const auto end = text.find(stop, i);
        if (end == std::string_view::npos) throw ParseError("unterminated arch entry");
        const std::string s(text.substr(i, end - i));
        std::size_t pos = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + s + "' in arch entry");
        }
        if (pos != s.size()) throw ParseError("bad integer '" + s + "' in arch entry");
        i = end + 1;
        return v;
    };
    skip();
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '(' in arch parameter");
        ++i;
        const auto k = integer(';');
        const auto w = integer(')');
        out.push_back({k, w});
        skip();
    }
    if (out.empty()) throw ParseError("empty arch parameter");
    return ArchParameter(std::move(out));
}

std::string format_arch(const ArchChar& c) {
    return "(" + std::to_string(c.k) + ";" + std::to_string(c.w) + ")";
}

std::string format_arch(const ArchParameter& a) {
    std::string out = "{";
    for (std::size_t i = 0; i < a.degree(); ++i) {
        if (i) out += ", ";
        out += format_arch(a.entries()[i]);
    }
    return out + "}";
}

}  // namespace gl6
