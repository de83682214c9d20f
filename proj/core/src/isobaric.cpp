#include "gl6/isobaric.hpp"

#include <algorithm>
#include <cmath>

#include "gl6/error.hpp"

namespace gl6 {

namespace {

const BasisPtr& common_basis(const LocalParameter& a, const LocalParameter& b) {
    if (!same_basis(a.basis(), b.basis())) throw BasisMismatch("parameters over different generator bases");
    return a.basis();
}

void require_degree(const LocalParameter& a, std::size_t d, const char* what) {
    if (a.degree() != d)
        throw DomainError(std::string(what) + " requires a parameter of degree " + std::to_string(d) + ", got " +
                          std::to_string(a.degree()));
}

// Walks all size-k index multisets (with_repetition) or subsets of the slots,
// keeping a running product per depth so each leaf costs one multiplication.
void enumerate_products(const std::vector<Character>& slots, unsigned k, bool with_repetition,
                        std::vector<Character>& out) {
    std::vector<Character> partial(k + 1);
    partial[0] = Character(slots.empty() ? BasisPtr{} : slots.front().basis());
    auto rec = [&](auto&& self, std::size_t start, unsigned depth) -> void {
        if (depth == k) {
            out.push_back(partial[depth]);
            return;
        }
        for (std::size_t i = start; i < slots.size(); ++i) {
            partial[depth + 1] = char_mul(partial[depth], slots[i]);
            self(self, with_repetition ? i : i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
}

std::vector<std::string> format_all(const std::vector<Character>& cs) {
    std::vector<std::string> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(format_character(c));
    return out;
}

IdentityReport compare(std::string name, const LocalParameter& lhs, const LocalParameter& rhs) {
    IdentityReport r;
    r.name = std::move(name);
    r.lhs_degree = lhs.degree();
    r.rhs_degree = rhs.degree();
    auto diff = multiset_diff(lhs, rhs);
    r.holds = diff.empty();
    r.only_lhs = format_all(diff.only_left);
    r.only_rhs = format_all(diff.only_right);
    return r;
}

LocalParameter singleton(const Character& c) { return LocalParameter(c.basis(), {c}); }

}  // namespace

LocalParameter::LocalParameter(BasisPtr basis, std::vector<Character> entries)
    : basis_(std::move(basis)), entries_(std::move(entries)) {
    for (const auto& c : entries_)
        if (!same_basis(c.basis(), basis_)) throw BasisMismatch("parameter entry over a different generator basis");
    std::sort(entries_.begin(), entries_.end());
}

LocalParameter::LocalParameter(std::initializer_list<Character> entries)
    : LocalParameter(entries.size() ? entries.begin()->basis() : BasisPtr{}, std::vector<Character>(entries)) {}

std::size_t LocalParameter::multiplicity(const Character& c) const {
    auto [lo, hi] = std::equal_range(entries_.begin(), entries_.end(), c);
    return static_cast<std::size_t>(hi - lo);
}

LocalParameter boxplus(const LocalParameter& a, const LocalParameter& b) {
    const auto& basis = common_basis(a, b);
    std::vector<Character> out;
    out.reserve(a.degree() + b.degree());
    std::merge(a.entries().begin(), a.entries().end(), b.entries().begin(), b.entries().end(),
               std::back_inserter(out));
    return LocalParameter(basis, std::move(out));
}

LocalParameter boxtimes(const LocalParameter& a, const LocalParameter& b) {
    const auto& basis = common_basis(a, b);
    std::vector<Character> out;
    out.reserve(a.degree() * b.degree());
    for (const auto& x : a.entries())
        for (const auto& y : b.entries()) out.push_back(char_mul(x, y));
    return LocalParameter(basis, std::move(out));
}

LocalParameter dual(const LocalParameter& a) {
    std::vector<Character> out;
    out.reserve(a.degree());
    for (const auto& x : a.entries()) out.push_back(char_inv(x));
    return LocalParameter(a.basis(), std::move(out));
}

LocalParameter twist(const LocalParameter& a, const Character& c) {
    if (!same_basis(a.basis(), c.basis())) throw BasisMismatch("twisting character over a different basis");
    std::vector<Character> out;
    out.reserve(a.degree());
    for (const auto& x : a.entries()) out.push_back(char_mul(x, c));
    return LocalParameter(a.basis(), std::move(out));
}

Character central_char(const LocalParameter& a) {
    Character w(a.basis());
    for (const auto& x : a.entries()) w = char_mul(w, x);
    return w;
}

LocalParameter sym_k(const LocalParameter& a, unsigned k) {
    std::vector<Character> out;
    if (k == 0) return LocalParameter(a.basis(), {Character(a.basis())});
    enumerate_products(a.entries(), k, true, out);
    return LocalParameter(a.basis(), std::move(out));
}

LocalParameter ext_k(const LocalParameter& a, unsigned k) {
    std::vector<Character> out;
    if (k == 0) return LocalParameter(a.basis(), {Character(a.basis())});
    if (k > a.degree()) return LocalParameter(a.basis());
    enumerate_products(a.entries(), k, false, out);
    return LocalParameter(a.basis(), std::move(out));
}

LocalParameter adjoint(const LocalParameter& a) {
    require_degree(a, 2, "adjoint");
    return twist(sym_k(a, 2), char_inv(central_char(a)));
}

LocalParameter a4(const LocalParameter& a) {
    require_degree(a, 2, "a4");
    return twist(sym_k(a, 4), central_char(a).pow(-2));
}

LocalParameter parse_parameter(const BasisPtr& basis, std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    auto last = text.find_last_not_of(" \t\r\n");
    if (first == std::string_view::npos || text[first] != '[' || text[last] != ']')
        throw ParseError("parameter literal must be enclosed in [ ]: '" + std::string(text) + "'");
    auto body = text.substr(first + 1, last - first - 1);
    std::vector<Character> entries;
    if (body.find_first_not_of(" \t\r\n") != std::string_view::npos) {
        std::size_t start = 0;
        while (true) {
            auto comma = body.find(',', start);
            auto piece = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            if (piece.find_first_not_of(" \t\r\n") == std::string_view::npos)
                throw ParseError("empty entry in parameter literal '" + std::string(text) + "'");
            entries.push_back(parse_character(basis, piece));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    return LocalParameter(basis, std::move(entries));
}

std::string format_parameter(const LocalParameter& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.entries().size(); ++i) {
        if (i) out += ", ";
        out += format_character(p.entries()[i]);
    }
    return out + "]";
}

MultisetDiff multiset_diff(const LocalParameter& left, const LocalParameter& right) {
    MultisetDiff d;
    std::set_difference(left.entries().begin(), left.entries().end(), right.entries().begin(), right.entries().end(),
                        std::back_inserter(d.only_left));
    std::set_difference(right.entries().begin(), right.entries().end(), left.entries().begin(), left.entries().end(),
                        std::back_inserter(d.only_right));
    return d;
}

bool numerically_equal(const LocalParameter& left, const LocalParameter& right, const NumericEmbedding& e) {
    if (left.degree() != right.degree()) return false;
    std::vector<std::complex<double>> a, b;
    for (const auto& c : left.entries()) a.push_back(char_eval(c, e));
    for (const auto& c : right.entries()) b.push_back(char_eval(c, e));
    std::vector<bool> used(b.size(), false);
    for (const auto& z : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            double scale = std::max({1.0, std::abs(z), std::abs(b[j])});
            if (std::abs(z - b[j]) <= e.tolerance() * scale) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::string IdentityReport::detail() const {
    std::string out = "deg " + std::to_string(lhs_degree) + " vs " + std::to_string(rhs_degree);
    for (const auto& [step, ok] : steps)
        if (!ok) out += "; step failed: " + step;
    auto list = [](const std::vector<std::string>& xs) {
        std::string s;
        for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
        return s;
    };
    if (!only_lhs.empty()) out += "; only in lhs: [" + list(only_lhs) + "]";
    if (!only_rhs.empty()) out += "; only in rhs: [" + list(only_rhs) + "]";
    return out;
}

IdentityReport verify_clebsch_gordan(const LocalParameter& a) {
    require_degree(a, 2, "Clebsch-Gordan check");
    auto lhs = boxtimes(sym_k(a, 2), a);
    auto rhs = boxplus(sym_k(a, 3), twist(a, central_char(a)));
    auto r = compare("clebsch_gordan", lhs, rhs);
    r.inputs = {{"a", format_parameter(a)}};
    return r;
}

LocalParameter exterior_cube_terms(const LocalParameter& a2, const LocalParameter& a3) {
    require_degree(a2, 2, "exterior cube terms");
    require_degree(a3, 3, "exterior cube terms");
    const auto& basis = common_basis(a2, a3);
    const auto w2 = central_char(a2);
    std::vector<Character> out;
    for (const auto& alpha : a2.entries()) out.push_back(alpha.pow(3));
    for (int copy = 0; copy < 4; ++copy)
        for (const auto& alpha : a2.entries()) out.push_back(alpha * w2);
    const auto& b = a3.entries();
    for (const auto& alpha : a2.entries())
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                if (j != k) out.push_back(alpha * w2 * b[j] * char_inv(b[k]));
    return LocalParameter(basis, std::move(out));
}

IdentityReport verify_exterior_cube_product(const LocalParameter& a2, const LocalParameter& a3) {
    require_degree(a2, 2, "exterior cube product identity");
    require_degree(a3, 3, "exterior cube product identity");
    const auto w2 = central_char(a2);
    const auto w3 = central_char(a3);
    auto product = boxtimes(a2, a3);
    auto lhs = boxplus(twist(ext_k(product, 3), char_inv(w3)), twist(a2, w2));
    auto rhs = boxplus(sym_k(a2, 3), twist(boxtimes(product, dual(a3)), w2));
    auto r = compare("exterior_cube_product", lhs, rhs);
    r.inputs = {{"a2", format_parameter(a2)}, {"a3", format_parameter(a3)}};
    auto terms = exterior_cube_terms(a2, a3);
    r.steps.emplace_back("lhs matches 2+8+12 term expansion", lhs == terms);
    r.steps.emplace_back("rhs matches 2+8+12 term expansion", rhs == terms);
    r.steps.emplace_back("both sides have degree 22", lhs.degree() == 22 && rhs.degree() == 22);
    for (const auto& [_, ok] : r.steps) r.holds = r.holds && ok;
    return r;
}

IdentityReport verify_exterior_cube_of_sum(const LocalParameter& s1, const LocalParameter& s2, const Character& c) {
    require_degree(s1, 3, "exterior cube of sum");
    require_degree(s2, 3, "exterior cube of sum");
    common_basis(s1, s2);
    const auto e1 = central_char(s1);
    const auto e2 = central_char(s2);
    auto lhs = twist(ext_k(boxplus(s1, s2), 3), c);
    auto rhs = boxplus(boxplus(singleton(e1 * c), singleton(e2 * c)),
                       boxplus(twist(boxtimes(s1, dual(s2)), e2 * c), twist(boxtimes(s2, dual(s1)), e1 * c)));
    auto r = compare("exterior_cube_of_sum", lhs, rhs);
    r.inputs = {{"s1", format_parameter(s1)}, {"s2", format_parameter(s2)}, {"c", format_character(c)}};
    // The two GL(3) facts the expansion rests on.
    for (const auto* s : {&s1, &s2}) {
        const auto eta = central_char(*s);
        r.steps.emplace_back("ext2 == dual (x) central", ext_k(*s, 2) == twist(dual(*s), eta));
        r.steps.emplace_back("ext3 == central", ext_k(*s, 3) == singleton(eta));
    }
    for (const auto& [_, ok] : r.steps) r.holds = r.holds && ok;
    return r;
}

IdentityReport verify_twist_pair_sym3(const LocalParameter& a2, const LocalParameter& a3, const Character& chi1,
                                      const Character& chi2) {
    require_degree(a2, 2, "twist-pair sym3 check");
    require_degree(a3, 3, "twist-pair sym3 check");
    common_basis(a2, a3);
    auto product = boxtimes(a2, a3);
    auto split = boxplus(twist(a3, chi1), twist(a3, chi2));
    if (product != split) {
        auto d = multiset_diff(product, split);
        throw HypothesisError("hypothesis fails: a2 x a3 != a3 (x) chi1 + a3 (x) chi2 (" +
                              std::to_string(d.only_left.size()) + " unmatched entries)");
    }
    auto lhs = sym_k(a2, 3);
    auto rhs = boxplus(twist(a2, central_char(a2)), boxplus(singleton(chi1.pow(3)), singleton(chi2.pow(3))));
    auto r = compare("twist_pair_sym3", lhs, rhs);
    r.inputs = {{"a2", format_parameter(a2)},
                {"a3", format_parameter(a3)},
                {"chi1", format_character(chi1)},
                {"chi2", format_character(chi2)}};
    return r;
}

IdentityReport verify_cubic_selftwist_sym3(const LocalParameter& a2, const LocalParameter& a3, const Character& chi) {
    require_degree(a2, 2, "cubic self-twist check");
    require_degree(a3, 3, "cubic self-twist check");
    const auto& basis = common_basis(a2, a3);
    if (!same_basis(chi.basis(), basis)) throw BasisMismatch("cubic character over a different basis");
    if (chi.order() != std::optional<std::int64_t>(3))
        throw DomainError("shape violation: twisting character must have order exactly 3");
    const LocalParameter orbit(basis, {Character(basis), chi, char_inv(chi)});
    std::optional<Character> beta;
    for (const auto& b : a3.entries())
        if (twist(orbit, b) == a3) {
            beta = b;
            break;
        }
    if (!beta) throw DomainError("shape violation: a3 is not of the form beta (1 + chi + chi^-1)");

    IdentityReport r;
    r.name = "cubic_selftwist_sym3";
    r.inputs = {{"a2", format_parameter(a2)}, {"a3", format_parameter(a3)}, {"chi", format_character(chi)}};

    const auto w2 = central_char(a2);
    const auto w3 = central_char(a3);
    const auto product = boxtimes(a2, a3);
    r.steps.emplace_back("a2 x a3 == a2 (x) beta (x) (1 + chi + chi^-1)",
                         product == boxtimes(twist(a2, *beta), orbit));
    r.steps.emplace_back("beta^3 == central(a3)", beta->pow(3) == w3);

    std::vector<Character> etas;
    LocalParameter pieces(basis);
    for (const auto& alpha : a2.entries()) {
        const auto theta = alpha * *beta;
        const auto sigma = twist(orbit, theta);
        etas.push_back(central_char(sigma));
        r.steps.emplace_back("central(sigma) == theta^3", etas.back() == theta.pow(3));
        pieces = pieces.is_empty() ? sigma : boxplus(pieces, sigma);
    }
    r.steps.emplace_back("sigma1 + sigma2 == a2 x a3", pieces == product);

    std::vector<Character> cubes;
    for (const auto& alpha : a2.entries()) cubes.push_back(alpha.pow(3) * w3);
    r.steps.emplace_back("{alpha_i^3 w3} == {eta_1, eta_2}",
                         LocalParameter(basis, cubes) == LocalParameter(basis, etas));

    auto lhs = sym_k(a2, 3);
    auto rhs = boxplus(LocalParameter(basis, {etas[0] * char_inv(w3), etas[1] * char_inv(w3)}), twist(a2, w2));
    auto diff = multiset_diff(lhs, rhs);
    r.lhs_degree = lhs.degree();
    r.rhs_degree = rhs.degree();
    r.only_lhs = format_all(diff.only_left);
    r.only_rhs = format_all(diff.only_right);
    r.holds = diff.empty();
    for (const auto& [_, ok] : r.steps) r.holds = r.holds && ok;
    return r;
}

}  // namespace gl6
