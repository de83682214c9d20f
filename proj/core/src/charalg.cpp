#include "gl6/charalg.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "gl6/error.hpp"

namespace gl6 {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Minimal whitespace-skipping cursor for the literal grammars.
class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool peek_ident() {
        skip_ws();
        return pos_ < s_.size() && is_ident_start(s_[pos_]);
    }
    std::string ident() {
        skip_ws();
        if (pos_ >= s_.size() || !is_ident_start(s_[pos_])) fail("expected identifier");
        std::size_t start = pos_;
        while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }
    std::int64_t integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
            skip_ws();
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
        std::int64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > (INT64_MAX - 9) / 10) fail("integer too large");
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

GeneratorBasis::GeneratorBasis(std::vector<Generator> gens) : gens_(std::move(gens)) {
    std::set<std::string> seen;
    for (const auto& g : gens_) {
        if (g.name.empty()) throw DomainError("generator name must be nonempty");
        if (!seen.insert(g.name).second) throw DomainError("duplicate generator name '" + g.name + "'");
        if (g.order && *g.order < 2) throw DomainError("finite order of '" + g.name + "' must be >= 2");
    }
}

std::optional<std::size_t> GeneratorBasis::find(std::string_view name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    return std::nullopt;
}

std::size_t GeneratorBasis::index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw ParseError("unknown generator '" + std::string(name) + "'");
}

BasisPtr make_basis(std::vector<GeneratorBasis::Generator> gens) {
    return std::make_shared<const GeneratorBasis>(std::move(gens));
}

bool same_basis(const BasisPtr& a, const BasisPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

Character::Character(BasisPtr basis) : basis_(std::move(basis)), exps_(basis_ ? basis_->size() : 0, 0) {}

Character::Character(BasisPtr basis, Exponents exps) : basis_(std::move(basis)), exps_(std::move(exps)) {
    if (!basis_ || exps_.size() != basis_->size())
        throw DomainError("exponent vector length does not match the basis");
    reduce();
}

Character Character::generator(const BasisPtr& basis, std::string_view name, std::int32_t power) {
    Character c(basis);
    c.exps_[basis->index_of(name)] = power;
    c.reduce();
    return c;
}

void Character::reduce() {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (const auto& ord = (*basis_)[i].order) exps_[i] = static_cast<std::int32_t>(floor_mod(exps_[i], *ord));
    }
}

bool Character::is_trivial() const noexcept {
    for (auto e : exps_)
        if (e != 0) return false;
    return true;
}

std::optional<std::int64_t> Character::order() const {
    std::int64_t result = 1;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        const auto& ord = (*basis_)[i].order;
        if (!ord) return std::nullopt;
        std::int64_t o = *ord / std::gcd<std::int64_t>(*ord, exps_[i]);
        result = std::lcm(result, o);
    }
    return result;
}

Character Character::pow(std::int64_t k) const {
    Character r = *this;
    for (auto& e : r.exps_) {
        std::int64_t v = static_cast<std::int64_t>(e) * k;
        if (v > INT32_MAX || v < INT32_MIN) throw OverflowError("character exponent overflow");
        e = static_cast<std::int32_t>(v);
    }
    r.reduce();
    return r;
}

Character char_mul(const Character& a, const Character& b) {
    if (!same_basis(a.basis(), b.basis())) throw BasisMismatch("characters over different generator bases");
    Exponents e(a.exponents());
    for (std::size_t i = 0; i < e.size(); ++i) {
        std::int64_t v = static_cast<std::int64_t>(e[i]) + b.exponent(i);
        if (v > INT32_MAX || v < INT32_MIN) throw OverflowError("character exponent overflow");
        e[i] = static_cast<std::int32_t>(v);
    }
    return Character(a.basis(), std::move(e));
}

Character char_inv(const Character& a) { return a.pow(-1); }

Turn normalize_turn(Turn t) {
    std::int64_t n = t.numerator(), d = t.denominator();
    return Turn(floor_mod(n, d), d);
}

std::complex<double> turn_to_complex(Turn t) {
    t = normalize_turn(t);
    // Exact values at the quarter turns keep sign tests clean.
    if (t.numerator() == 0) return {1.0, 0.0};
    if (t == Turn(1, 2)) return {-1.0, 0.0};
    if (t == Turn(1, 4)) return {0.0, 1.0};
    if (t == Turn(3, 4)) return {0.0, -1.0};
    double angle = 2.0 * std::numbers::pi * static_cast<double>(t.numerator()) / static_cast<double>(t.denominator());
    return std::polar(1.0, angle);
}

NumericEmbedding::NumericEmbedding(BasisPtr basis, double tolerance)
    : basis_(std::move(basis)), values_(basis_->size()), tol_(tolerance) {}

void NumericEmbedding::assign(std::string_view name, Value v) {
    std::size_t i = basis_->index_of(name);
    const auto& gen = (*basis_)[i];
    if (auto* t = std::get_if<Turn>(&v)) {
        *t = normalize_turn(*t);
        if (gen.order && ((*t) * Turn(*gen.order)).denominator() != 1)
            throw DomainError("root assigned to '" + gen.name + "' is not a root of unity of order dividing " +
                              std::to_string(*gen.order));
    } else {
        auto z = std::get<std::complex<double>>(v);
        if (std::abs(z) == 0.0 || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw DomainError("generator '" + gen.name + "' must map to a finite nonzero value");
        if (gen.order) {
            auto zd = std::pow(z, static_cast<double>(*gen.order));
            if (std::abs(zd - 1.0) > tol_)
                throw DomainError("value assigned to '" + gen.name + "' is not a root of unity of order " +
                                  std::to_string(*gen.order));
        }
    }
    values_[i] = v;
}

NumericEmbedding NumericEmbedding::random(const BasisPtr& basis, std::mt19937_64& rng) {
    NumericEmbedding e(basis);
    std::uniform_real_distribution<double> modulus(0.5, 2.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    for (std::size_t i = 0; i < basis->size(); ++i) {
        const auto& g = (*basis)[i];
        if (g.order) {
            std::uniform_int_distribution<std::int64_t> k(0, *g.order - 1);
            e.values_[i] = Turn(k(rng), *g.order);
        } else {
            double r = modulus(rng);
            double th = phase(rng);
            e.values_[i] = std::polar(r, th);
        }
    }
    return e;
}

std::complex<double> char_eval(const Character& a, const NumericEmbedding& e) {
    if (!same_basis(a.basis(), e.basis())) throw BasisMismatch("embedding over a different generator basis");
    std::complex<double> z{1.0, 0.0};
    Turn exact(0);
    for (std::size_t i = 0; i < a.exponents().size(); ++i) {
        const auto k = a.exponent(i);
        if (k == 0) continue;
        const auto& v = e.value(i);
        if (!v) throw DomainError("no value assigned to generator '" + (*a.basis())[i].name + "'");
        if (auto* t = std::get_if<Turn>(&*v))
            exact += (*t) * Turn(k);
        else
            z *= std::pow(std::get<std::complex<double>>(*v), k);
    }
    return z * turn_to_complex(exact);
}

std::optional<Turn> char_eval_exact(const Character& a, const NumericEmbedding& e) {
    if (!same_basis(a.basis(), e.basis())) throw BasisMismatch("embedding over a different generator basis");
    Turn exact(0);
    for (std::size_t i = 0; i < a.exponents().size(); ++i) {
        const auto k = a.exponent(i);
        if (k == 0) continue;
        const auto& v = e.value(i);
        if (!v) throw DomainError("no value assigned to generator '" + (*a.basis())[i].name + "'");
        auto* t = std::get_if<Turn>(&*v);
        if (!t) return std::nullopt;
        exact += (*t) * Turn(k);
    }
    return normalize_turn(exact);
}

BasisPtr parse_basis(std::string_view text) {
    Cursor cur(text);
    if (cur.ident() != "basis") cur.fail("expected 'basis'");
    std::vector<GeneratorBasis::Generator> gens;
    if (!cur.accept(';')) {
        do {
            GeneratorBasis::Generator g{cur.ident(), std::nullopt};
            if (cur.accept(':')) g.order = cur.integer();
            gens.push_back(std::move(g));
        } while (cur.accept(','));
        cur.expect(';');
    }
    if (!cur.done()) cur.fail("trailing input after basis");
    try {
        return make_basis(std::move(gens));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

std::string format_basis(const GeneratorBasis& basis) {
    std::string out = "basis";
    for (std::size_t i = 0; i < basis.size(); ++i) {
        out += i == 0 ? " " : ", ";
        out += basis[i].name;
        if (basis[i].order) out += ":" + std::to_string(*basis[i].order);
    }
    out += ";";
    return out;
}

Character parse_character(const BasisPtr& basis, std::string_view text) {
    Cursor cur(text);
    Exponents e(basis->size(), 0);
    if (!cur.peek_ident()) {
        if (cur.integer() != 1) cur.fail("only the literal 1 denotes the trivial character");
        if (!cur.done()) cur.fail("trailing input after character");
        return Character(basis);
    }
    do {
        std::string name = cur.ident();
        auto idx = basis->find(name);
        if (!idx) cur.fail("unknown generator '" + name + "'");
        std::int64_t k = 1;
        if (cur.accept('^')) {
            bool paren = cur.accept('(');
            k = cur.integer();
            if (paren) cur.expect(')');
        }
        std::int64_t v = e[*idx] + k;
        if (v > INT32_MAX || v < INT32_MIN) cur.fail("exponent out of range");
        e[*idx] = static_cast<std::int32_t>(v);
    } while (cur.accept('*'));
    if (!cur.done()) cur.fail("trailing input after character");
    return Character(basis, std::move(e));
}

std::string format_character(const Character& c) {
    std::string out;
    const auto& basis = *c.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto k = c.exponent(i);
        if (k == 0) continue;
        if (!out.empty()) out += "*";
        out += basis[i].name;
        if (k != 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? "1" : out;
}

NumericEmbedding parse_embedding(const BasisPtr& basis, std::string_view text) {
    NumericEmbedding emb(basis);
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string name;
        if (!(ls >> name)) continue;
        std::string second;
        if (!(ls >> second)) throw ParseError("missing value for '" + name + "'", lineno);
        try {
            if (second == "root") {
                std::int64_t k = 0, n = 0;
                if (!(ls >> k >> n) || n <= 0) throw ParseError("expected 'root k n'", lineno);
                emb.assign_root(name, k, n);
            } else {
                double re = std::stod(second);
                double im = 0.0;
                if (!(ls >> im)) throw ParseError("expected two decimal fields", lineno);
                emb.assign(name, std::complex<double>(re, im));
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::invalid_argument&) {
            throw ParseError("malformed number '" + second + "'", lineno);
        } catch (const Error& e) {
            throw ParseError(e.what(), lineno);
        }
        std::string extra;
        if (ls >> extra) throw ParseError("trailing field '" + extra + "'", lineno);
    }
    return emb;
}

}  // namespace gl6
