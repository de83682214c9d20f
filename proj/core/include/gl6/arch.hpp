#pragma once
// Archimedean parameters restricted to C*: multisets of characters
// z -> (z/|z|)^k (z zbar)^w, stored in the arithmetic (integral w) normalization.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gl6 {

struct ArchChar {
    std::int64_t k = 0;  // exponent of z/|z|
    std::int64_t w = 0;  // exponent of z zbar
    friend auto operator<=>(const ArchChar&, const ArchChar&) = default;
};

/// Sorted multiset of characters.
class ArchParameter {
public:
    ArchParameter() = default;
    explicit ArchParameter(std::vector<ArchChar> entries);

    const std::vector<ArchChar>& entries() const noexcept { return entries_; }
    std::size_t degree() const noexcept { return entries_.size(); }
    friend bool operator==(const ArchParameter&, const ArchParameter&) = default;

private:
    std::vector<ArchChar> entries_;
};

ArchParameter arch_tensor(const ArchParameter& a, const ArchParameter& b);
/// All entries pairwise distinct.
bool is_regular(const ArchParameter& a);
/// Entries occurring more than once (each listed once).
std::vector<ArchChar> collisions(const ArchParameter& a);

/// {(n-1-2j; n-1) : j = 0..n-1}. Throws DomainError for n < 2.
ArchParameter cohomological_type(int n);
/// {(3;3), (-3;3)}: the restriction attached to a holomorphic weight-4 newform.
ArchParameter weight4_type();
/// {(1;1), (-1;1)}: weight 2.
ArchParameter weight2_type();

struct DegreeWindow {
    int d = 0;
    int hi = 0;
};
/// d = m^2 for n = 2m, m(m+1) for n = 2m+1; hi = d + floor((n-1)/2).
DegreeWindow degree_window(int n);

/// weight-4 type (x) cohomological_type(3) == cohomological_type(6).
bool check_sym_tensor_infinity();

struct TensorDiagnostic {
    ArchParameter product;
    bool regular = false;
    bool matches_cohomological = false;
    std::vector<ArchChar> collisions;
};
/// The tensor of a GL(2) type with cohomological_type(3), compared with cohomological_type(6).
TensorDiagnostic tensor_with_gl3(const ArchParameter& gl2_type);

struct AppendixInfinity {
    std::vector<std::int64_t> k;  // k_j = 2(m - j) + 1 for j = 1..m
    ArchParameter induced;        // {(+-k_j; 2m - 1)}
    bool regular = false;
    int degree = 0;
};
/// Throws DomainError for m < 2.
AppendixInfinity appendix_infinity(int m);

/// Smallest 1 <= M <= Mmax with |prod_j (u_j / conj(u_j))^(M k_j) - 1| <= tol,
/// or nullopt. Throws DomainError on a zero u_j or mismatched lengths.
std::optional<int> unit_condition(const std::vector<std::complex<double>>& u, const std::vector<std::int64_t>& k,
                                  int Mmax, double tol = 1e-9);

/// "(k;w)" entries separated by commas, optionally in braces: "{(3;3), (-3;3)}".
ArchParameter parse_arch(std::string_view text);
std::string format_arch(const ArchParameter& a);
std::string format_arch(const ArchChar& c);

}  // namespace gl6
