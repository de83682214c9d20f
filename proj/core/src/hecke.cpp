#include "gl6/hecke.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include <unsupported/Eigen/Polynomials>
#include <httplib.h>
#include <json.hpp>

#include "checked.hpp"
#include "gl6/error.hpp"

namespace gl6 {

using Q = boost::rational<std::int64_t>;
using json = nlohmann::json;

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d <= n / d; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t parse_int(std::string_view s) {
    const std::string t(s);
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(t, &pos);
    } catch (const std::exception&) {
        throw ParseError("bad integer '" + t + "'");
    }
    if (pos != t.size() || t.empty()) throw ParseError("bad integer '" + t + "'");
    return v;
}

Q parse_q(std::string_view s) {
    const auto slash = s.find('/');
    const auto num = parse_int(s.substr(0, slash));
    const std::int64_t den = slash == std::string_view::npos ? 1 : parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return Q(num, den);
}

std::string format_q(const Q& q) {
    return q.denominator() == 1 ? std::to_string(q.numerator())
                                : std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

bool is_square(std::int64_t d) {
    if (d < 0) return false;
    const auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(d))));
    for (auto c = std::max<std::int64_t>(0, r - 1); c <= r + 1; ++c)
        if (c * c == d) return true;
    return false;
}

std::string group_name(FormGroup g) { return g == FormGroup::GL2 ? "GL2" : "GL3"; }

FormGroup parse_group_name(const std::string& s) {
    if (s == "GL2") return FormGroup::GL2;
    if (s == "GL3") return FormGroup::GL3;
    throw ParseError("group must be GL2 or GL3, got '" + s + "'");
}

void check_value_in_field(const CoefficientField& f, const FieldValue& v, std::int64_t p) {
    if (f.rational() && v.y != Q(0))
        throw InconsistentInput("a_" + std::to_string(p) + " has an irrational part but the field is Q");
}

}  // namespace

CoefficientField parse_field(std::string_view text) {
    const auto t = trim(text);
    if (t == "Q") return {0};
    if (t == "Q(i)") return {-1};
    const std::string pre = "Q(sqrt(", post = "))";
    if (t.size() > pre.size() + post.size() && t.rfind(pre, 0) == 0 && t.compare(t.size() - 2, 2, post) == 0) {
        const auto d = parse_int(std::string_view(t).substr(pre.size(), t.size() - pre.size() - post.size()));
        if (d == 0 || is_square(d)) throw ParseError("Q(sqrt(" + std::to_string(d) + ")) is not a quadratic field");
        return {d};
    }
    throw ParseError("unknown coefficient field '" + t + "'");
}

std::string format_field(const CoefficientField& f) {
    if (f.disc == 0) return "Q";
    if (f.disc == -1) return "Q(i)";
    return "Q(sqrt(" + std::to_string(f.disc) + "))";
}

FieldValue field_add(const CoefficientField&, const FieldValue& a, const FieldValue& b) { return {a.x + b.x, a.y + b.y}; }

FieldValue field_mul(const CoefficientField& f, const FieldValue& a, const FieldValue& b) {
    return {a.x * b.x + Q(f.disc) * a.y * b.y, a.x * b.y + a.y * b.x};
}

FieldValue field_conj(const CoefficientField& f, const FieldValue& a) {
    return f.imaginary() ? FieldValue{a.x, -a.y} : a;
}

std::complex<double> field_to_complex(const CoefficientField& f, const FieldValue& a) {
    const double x = boost::rational_cast<double>(a.x), y = boost::rational_cast<double>(a.y);
    if (f.disc < 0) return {x, y * std::sqrt(static_cast<double>(-f.disc))};
    return {x + y * std::sqrt(static_cast<double>(f.disc)), 0.0};
}

bool is_zero(const FieldValue& a) { return a.x == Q(0) && a.y == Q(0); }

std::string format_value(const CoefficientField& f, const FieldValue& a) {
    if (a.y == Q(0)) return format_q(a.x);
    const std::string unit = f.disc == -1 ? "i" : "sqrt(" + std::to_string(f.disc) + ")";
    std::string out = a.x == Q(0) ? "" : format_q(a.x);
    if (a.y > Q(0) && !out.empty()) out += "+";
    return out + format_q(a.y) + "*" + unit;
}

std::set<std::int64_t> HeckeTable::ramified_primes() const {
    std::set<std::int64_t> out;
    for (const auto& [p, _] : ap)
        if (ramified(p)) out.insert(p);
    return out;
}

HeckeTable parse_table(std::string_view text) {
    HeckeTable t;
    bool have_header = false;
    std::size_t lineno = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        if (const auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
        const auto line = trim(raw);
        if (line.empty()) continue;
        std::istringstream words(line);
        std::vector<std::string> tok;
        for (std::string w; words >> w;) tok.push_back(w);
        try {
            if (!have_header) {
                std::map<std::string, std::string> kv;
                for (const auto& w : tok) {
                    const auto eq = w.find('=');
                    if (eq == std::string::npos) throw ParseError("header entries must be key=value");
                    kv[w.substr(0, eq)] = w.substr(eq + 1);
                }
                for (const char* key : {"label", "group", "level", "weight", "field"})
                    if (!kv.count(key)) throw ParseError(std::string("header is missing ") + key);
                if (kv.size() != 5) throw ParseError("unknown header key");
                t.label = kv["label"];
                t.group = parse_group_name(kv["group"]);
                t.level = parse_int(kv["level"]);
                t.weight = parse_int(kv["weight"]);
                t.field = parse_field(kv["field"]);
                if (t.level < 1) throw ParseError("level must be positive");
                have_header = true;
                continue;
            }
            if (tok.size() < 2 || tok.size() > 3) throw ParseError("expected `p a_x a_y`");
            const auto p = parse_int(tok[0]);
            FieldValue v{parse_q(tok[1]), tok.size() == 3 ? parse_q(tok[2]) : Q(0)};
            if (!is_prime(p)) throw InconsistentInput("line " + std::to_string(lineno) + ": " + tok[0] + " is not prime");
            if (t.ap.count(p)) throw InconsistentInput("line " + std::to_string(lineno) + ": duplicate prime " + tok[0]);
            check_value_in_field(t.field, v, p);
            t.ap.emplace(p, v);
        } catch (const ParseError& e) {
            if (e.line() != 0) throw;
            throw ParseError(e.what(), lineno);
        }
    }
    if (!have_header) throw ParseError("missing header line");
    return t;
}

HeckeTable load_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_table(ss.str());
}

std::string serialize_table(const HeckeTable& t) {
    std::ostringstream out;
    out << "label=" << t.label << " group=" << group_name(t.group) << " level=" << t.level << " weight=" << t.weight
        << " field=" << format_field(t.field) << '\n';
    for (const auto& [p, v] : t.ap) out << p << ' ' << format_q(v.x) << ' ' << format_q(v.y) << '\n';
    return out.str();
}

CoefficientField tensor_field(const HeckeTable& t3, const HeckeTable& t2) {
    if (t3.field.rational()) return t2.field;
    if (t2.field.rational() || t2.field == t3.field) return t3.field;
    throw DomainError("coefficient fields " + format_field(t3.field) + " and " + format_field(t2.field) + " differ");
}

FieldValue tensor_ap(const HeckeTable& t3, const HeckeTable& t2, std::int64_t p) {
    if (t3.group != FormGroup::GL3 || t2.group != FormGroup::GL2) throw DomainError("tensor_ap expects a GL3 and a GL2 table");
    const auto f = tensor_field(t3, t2);
    if (t3.ramified(p) || t2.ramified(p)) throw DomainError("p = " + std::to_string(p) + " divides a level");
    const auto a = t3.ap.find(p), b = t2.ap.find(p);
    if (a == t3.ap.end() || b == t2.ap.end()) throw DomainError("p = " + std::to_string(p) + " is missing from a table");
    return field_mul(f, a->second, b->second);
}

std::optional<WitnessReport> nonselfdual_witness(const HeckeTable& t3, const HeckeTable& t2,
                                                 const std::set<std::int64_t>& nu_ramification) {
    if (!t3.field.imaginary())
        throw DomainError("coefficient field " + format_field(t3.field) + " is not imaginary; conjugation is trivial");
    for (const auto& [p, a3] : t3.ap) {
        if (t3.ramified(p) || t2.ramified(p) || nu_ramification.count(p)) continue;
        const auto it = t2.ap.find(p);
        if (it == t2.ap.end() || is_zero(it->second)) continue;
        const auto c = field_conj(t3.field, a3);
        if (c == a3) continue;
        WitnessReport r;
        r.p = p;
        r.ap_gl2 = it->second;
        r.ap_gl3 = a3;
        r.ap_gl3_conj = c;
        r.verdict = "not essentially selfdual by a twist unramified at " + std::to_string(p) + ": a_p(" + t3.label +
                    ") = " + format_value(t3.field, a3) + " differs from its conjugate " + format_value(t3.field, c) +
                    " while a_p(" + t2.label + ") = " + format_value(t2.field, it->second) + " is nonzero";
        return r;
    }
    return std::nullopt;
}

std::int64_t conductor_product(std::int64_t N, std::int64_t q) {
    if (N < 1 || q < 1) throw DomainError("levels must be positive");
    if (const auto g = std::gcd(N, q); g != 1)
        throw DomainError("levels " + std::to_string(N) + " and " + std::to_string(q) + " are not coprime (gcd " +
                          std::to_string(g) + ")");
    return detail::mul(detail::mul(detail::mul(N, N), N), detail::mul(q, q));
}

const ReferenceConstants& reference_constants() {
    static const ReferenceConstants c{
        {53, 61, 79, 89},
        {128, 160, 205},
        {{53, "Q(sqrt(-11))"},
         {61, "Q(sqrt(-3))"},
         {79, "Q(sqrt(-15))"},
         {89, "Q(i)"},
         {128, "Q(i)"},
         {160, "Q(i)"},
         {205, "Q(i)"}},
        {5, 7, 13, 17, 19, 23},
    };
    return c;
}

std::string format_constants(const ReferenceConstants& c) {
    const auto set = [](const std::vector<std::int64_t>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
        return s + "}";
    };
    std::string out = "T1 = " + set(c.t1) + "\nT2 = " + set(c.t2) + "\n";
    for (const auto& [q, f] : c.rationality_fields) out += "Q(pi(" + std::to_string(q) + ")) = " + f + "\n";
    out += "weight-4 rational levels = " + set(c.weight4_levels) + "\n";
    return out;
}

// ---- lfactor bridge ---------------------------------------------------------

EulerFactor satake_factor(const HeckeTable& t, std::int64_t p) {
    if (t.ramified(p)) throw DomainError("p = " + std::to_string(p) + " divides the level of " + t.label);
    const auto it = t.ap.find(p);
    if (it == t.ap.end()) throw DomainError("p = " + std::to_string(p) + " is missing from " + t.label);
    const auto a = field_to_complex(t.field, it->second);
    const double pd = static_cast<double>(p);
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, 1> coeffs;
    if (t.group == FormGroup::GL2) {
        coeffs.resize(3);
        coeffs << std::pow(pd, static_cast<double>(t.weight - 1)), -a, 1.0;
    } else {
        coeffs.resize(4);
        coeffs << -pd * pd * pd, pd * std::conj(a), -a, 1.0;
    }
    Eigen::PolynomialSolver<std::complex<double>, Eigen::Dynamic> solver(coeffs);
    std::vector<SatakeValue> roots;
    for (Eigen::Index i = 0; i < solver.roots().size(); ++i) roots.emplace_back(solver.roots()[i]);
    return EulerFactor(std::move(roots));
}

BridgeReport bridge_check(const HeckeTable& t3, const HeckeTable& t2, double tol) {
    BridgeReport r;
    const auto f = tensor_field(t3, t2);
    r.agree = true;
    for (const auto& [p, _] : t3.ap) {
        if (t3.ramified(p) || t2.ramified(p) || !t2.ap.count(p)) continue;
        const auto direct = field_to_complex(f, tensor_ap(t3, t2, p));
        const auto rs = rankin_selberg_factor(satake_factor(t3, p), satake_factor(t2, p));
        const auto via_factor = prime_power_coefficients(rs, 1).at(1);
        const double err = std::abs(direct - via_factor) / std::max(1.0, std::abs(direct));
        r.max_error = std::max(r.max_error, err);
        if (err > tol) r.agree = false;
        ++r.primes_checked;
    }
    if (r.primes_checked == 0) r.agree = false;
    return r;
}

// ---- remote fetch -----------------------------------------------------------

std::filesystem::path default_cache_dir() {
    if (const char* d = std::getenv("GL6CUSP_CACHE_DIR"); d && *d) return d;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "gl6cusp";
    if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "gl6cusp";
    return ".gl6cusp-cache";
}

namespace {

Q json_rational(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Q(v.get<std::int64_t>());
    if (v.is_string()) {
        try {
            return parse_q(v.get<std::string>());
        } catch (const ParseError& e) {
            throw SchemaError(where + ": " + e.what());
        }
    }
    throw SchemaError(where + ": expected an integer or a rational string");
}

json rational_json(const Q& q) {
    if (q.denominator() == 1) return q.numerator();
    return format_q(q);
}

template <class T>
T required(const json& doc, const char* key, const char* type) {
    if (!doc.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception&) {
        throw SchemaError(std::string("field '") + key + "' is not " + type);
    }
}

}  // namespace

HeckeTable table_from_json(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("not JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("document is not an object");
    HeckeTable t;
    t.label = required<std::string>(doc, "label", "a string");
    try {
        t.group = parse_group_name(required<std::string>(doc, "group", "a string"));
        t.field = parse_field(required<std::string>(doc, "field", "a string"));
    } catch (const ParseError& e) {
        throw SchemaError(e.what());
    }
    t.level = required<std::int64_t>(doc, "level", "an integer");
    t.weight = required<std::int64_t>(doc, "weight", "an integer");
    if (t.level < 1) throw SchemaError("level must be positive");
    if (!doc.contains("coefficients") || !doc["coefficients"].is_array()) throw SchemaError("missing array 'coefficients'");
    for (const auto& e : doc["coefficients"]) {
        if (!e.is_object() || !e.contains("p") || !e.contains("a")) throw SchemaError("coefficient entries need 'p' and 'a'");
        if (!e["p"].is_number_integer()) throw SchemaError("'p' must be an integer");
        const auto p = e["p"].get<std::int64_t>();
        const auto& a = e["a"];
        if (!a.is_array() || a.size() != 2) throw SchemaError("'a' must be a pair [x, y]");
        const std::string where = "a_" + std::to_string(p);
        FieldValue v{json_rational(a[0], where), json_rational(a[1], where)};
        if (!is_prime(p)) throw SchemaError(std::to_string(p) + " is not prime");
        if (t.ap.count(p)) throw SchemaError("duplicate prime " + std::to_string(p));
        if (t.field.rational() && v.y != Q(0)) throw SchemaError(where + " is irrational over Q");
        t.ap.emplace(p, v);
    }
    return t;
}

std::string table_to_json(const HeckeTable& t) {
    json doc;
    doc["label"] = t.label;
    doc["group"] = group_name(t.group);
    doc["level"] = t.level;
    doc["weight"] = t.weight;
    doc["field"] = format_field(t.field);
    doc["coefficients"] = json::array();
    for (const auto& [p, v] : t.ap) doc["coefficients"].push_back({{"p", p}, {"a", {rational_json(v.x), rational_json(v.y)}}});
    return doc.dump(2) + "\n";
}

namespace {

void check_label(const std::string& label) {
    if (label.empty() || label.front() == '.') throw DomainError("invalid label '" + label + "'");
    for (const char c : label)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_' || c == '-'))
            throw DomainError("invalid label '" + label + "'");
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_atomically(const std::filesystem::path& target, const std::string& body) {
    std::filesystem::create_directories(target.parent_path());
    std::random_device rd;
    auto tmp = target;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << body;
        if (!out) throw Error("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace

HeckeTable fetch_remote(const RemoteSource& source, const std::string& label) {
    check_label(label);
    const auto cached = source.cache_dir / (label + ".json");
    if (std::filesystem::exists(cached)) return table_from_json(read_file(cached));
    if (source.offline) throw UnavailableError("offline and '" + label + "' is not cached in " + source.cache_dir.string());

    const std::string scheme = "http://";
    if (source.base_url.rfind(scheme, 0) != 0) throw NetworkError("only http:// sources are supported: " + source.base_url);
    const auto slash = source.base_url.find('/', scheme.size());
    const std::string host = source.base_url.substr(0, slash);
    std::string prefix = slash == std::string::npos ? "" : source.base_url.substr(slash);
    while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();

    httplib::Client client(host);
    client.set_connection_timeout(source.timeout_seconds, 0);
    client.set_read_timeout(source.timeout_seconds, 0);
    const auto res = client.Get(prefix + "/" + label + ".json");
    if (!res) throw NetworkError("request to " + host + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200) throw NetworkError("GET " + prefix + "/" + label + ".json returned HTTP " + std::to_string(res->status));

    auto table = table_from_json(res->body);
    if (table.label != label) throw SchemaError("document label '" + table.label + "' does not match '" + label + "'");
    write_atomically(cached, res->body);
    return table;
}

}  // namespace gl6
