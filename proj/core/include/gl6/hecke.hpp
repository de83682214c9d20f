#pragma once
// Hecke eigenvalue tables over Q or a quadratic field, tensor coefficients,
// the non-selfduality witness scan, the conductor of the product, and an
// optional HTTP client for JSON coefficient documents with an on-disk cache.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "gl6/lfactor.hpp"

namespace gl6 {

/// Q (disc 0), Q(i) (disc -1), or Q(sqrt(D)) for a non-square D.
struct CoefficientField {
    std::int64_t disc = 0;

    bool rational() const noexcept { return disc == 0; }
    /// Complex conjugation acts nontrivially.
    bool imaginary() const noexcept { return disc < 0; }
    friend bool operator==(const CoefficientField&, const CoefficientField&) = default;
};

/// "Q", "Q(i)", "Q(sqrt(-11))". Throws ParseError.
CoefficientField parse_field(std::string_view text);
std::string format_field(const CoefficientField& f);

/// x + y sqrt(disc), with sqrt(-1) = i.
struct FieldValue {
    boost::rational<std::int64_t> x{0}, y{0};
    friend bool operator==(const FieldValue&, const FieldValue&) = default;
};

FieldValue field_add(const CoefficientField& f, const FieldValue& a, const FieldValue& b);
FieldValue field_mul(const CoefficientField& f, const FieldValue& a, const FieldValue& b);
/// Complex conjugation: negates y over an imaginary field, identity otherwise.
FieldValue field_conj(const CoefficientField& f, const FieldValue& a);
std::complex<double> field_to_complex(const CoefficientField& f, const FieldValue& a);
bool is_zero(const FieldValue& a);
/// "1+1*i", "-3/2", "2-1*sqrt(-11)".
std::string format_value(const CoefficientField& f, const FieldValue& a);

enum class FormGroup { GL2, GL3 };

struct HeckeTable {
    std::string label;
    FormGroup group = FormGroup::GL2;
    std::int64_t level = 1;
    std::int64_t weight = 0;
    CoefficientField field;
    std::map<std::int64_t, FieldValue> ap;

    bool ramified(std::int64_t p) const { return level % p == 0; }
    /// Primes of the table dividing the level.
    std::set<std::int64_t> ramified_primes() const;
};

/// Header `label=... group=GL2|GL3 level=N weight=k field=...`, then lines
/// `p a_x [a_y]`; '#' starts a comment. Throws ParseError (with line numbers)
/// and InconsistentInput for duplicate or non-prime keys or values outside Q
/// on a rational field.
HeckeTable parse_table(std::string_view text);
HeckeTable load_table(const std::filesystem::path& path);
std::string serialize_table(const HeckeTable& t);

/// a_p(t3) a_p(t2) in the compositum field (Q or the shared quadratic field).
/// Throws DomainError for a ramified or missing prime, wrong groups, or
/// incompatible fields.
FieldValue tensor_ap(const HeckeTable& t3, const HeckeTable& t2, std::int64_t p);
CoefficientField tensor_field(const HeckeTable& t3, const HeckeTable& t2);

struct WitnessReport {
    std::int64_t p = 0;
    FieldValue ap_gl2, ap_gl3, ap_gl3_conj;
    bool nu_nonzero = true;  // p is outside the ramification set of nu
    std::string verdict;
};

/// First prime p (ascending, present in both tables, coprime to both levels
/// and outside nu_ramification) with a_p(t2) != 0 and conj(a_p(t3)) != a_p(t3).
/// Throws DomainError when t3's field is not imaginary.
std::optional<WitnessReport> nonselfdual_witness(const HeckeTable& t3, const HeckeTable& t2,
                                                 const std::set<std::int64_t>& nu_ramification);

/// N^3 q^2. Throws DomainError unless gcd(N, q) = 1 and both are positive,
/// OverflowError past int64.
std::int64_t conductor_product(std::int64_t N, std::int64_t q);

struct ReferenceConstants {
    std::vector<std::int64_t> t1, t2;
    std::vector<std::pair<std::int64_t, std::string>> rationality_fields;
    std::vector<std::int64_t> weight4_levels;
};
/// The level sets, rationality fields and rational weight-4 levels used for
/// the degree-6 examples.
const ReferenceConstants& reference_constants();
/// One line per table, e.g. "T1 = {53, 61, 79, 89}".
std::string format_constants(const ReferenceConstants& c);

// ---- lfactor bridge ---------------------------------------------------------

/// Roots of the Hecke polynomial at an unramified p, computed numerically:
/// GL2: X^2 - a X + p^(k-1); GL3: X^3 - a X^2 + p conj(a) X - p^3.
EulerFactor satake_factor(const HeckeTable& t, std::int64_t p);

struct BridgeReport {
    std::size_t primes_checked = 0;
    double max_error = 0;
    bool agree = false;
};

/// For every prime shared by both tables and unramified in both, compares
/// tensor_ap with the p-th Dirichlet coefficient of the Rankin-Selberg factor
/// built from numerically extracted Satake roots.
BridgeReport bridge_check(const HeckeTable& t3, const HeckeTable& t2, double tol = 1e-9);

// ---- remote fetch -----------------------------------------------------------

struct RemoteSource {
    /// "http://host:port/prefix"; documents live at {prefix}/{label}.json.
    std::string base_url;
    std::filesystem::path cache_dir;
    bool offline = false;
    int timeout_seconds = 10;
};

/// $GL6CUSP_CACHE_DIR, else $XDG_CACHE_HOME/gl6cusp, else $HOME/.cache/gl6cusp,
/// else ./.gl6cusp-cache.
std::filesystem::path default_cache_dir();

/// Decodes a JSON coefficient document. Throws SchemaError.
HeckeTable table_from_json(std::string_view json_text);
std::string table_to_json(const HeckeTable& t);

/// Cache first; otherwise GET, validate and cache atomically. Throws
/// UnavailableError (offline, cold cache), NetworkError, SchemaError, and
/// DomainError for labels outside [A-Za-z0-9._-].
HeckeTable fetch_remote(const RemoteSource& source, const std::string& label);

}  // namespace gl6
