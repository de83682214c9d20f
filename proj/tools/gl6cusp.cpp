// gl6cusp: command line driver for the identity checks, the finite-group
// oracle, the decision rules, the power-sum sweeps, archimedean types and
// Hecke tables. Exit codes: 0 all checks passed, 1 a check failed, 2 usage
// error, 3 bad input or runtime failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gl6/arch.hpp"
#include "gl6/catalog.hpp"
#include "gl6/criterion.hpp"
#include "gl6/error.hpp"
#include "gl6/galois.hpp"
#include "gl6/hecke.hpp"
#include "gl6/isobaric.hpp"
#include "gl6/lfactor.hpp"
#include "gl6/numlemma.hpp"
#include "gl6/suite.hpp"
#include "report.hpp"

namespace gl6::cli {
namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string fmt_double(double x) {
    if (std::abs(x) < 5e-13) x = 0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string fmt_complex(std::complex<double> z) {
    const auto re = fmt_double(z.real()), im = fmt_double(std::abs(z.imag()));
    if (im == "0") return re;
    return re + (z.imag() < 0 ? "-" : "+") + im + "i";
}

template <class T>
std::string join(const std::vector<T>& xs, const std::string& sep = ", ") {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? sep : "") << xs[i];
    return out.str();
}

// ---- basis files ------------------------------------------------------------

/// `basis ...;` followed by `name = literal` lines; '#' starts a comment.
struct BasisFile {
    BasisPtr basis;
    std::map<std::string, std::string> bindings;
};

BasisFile parse_basis_file(const std::string& text) {
    const auto semi = text.find(';');
    if (semi == std::string::npos) throw ParseError("basis file needs a 'basis ...;' statement");
    BasisFile f;
    f.basis = parse_basis(text.substr(0, semi + 1));
    std::istringstream rest(text.substr(semi + 1));
    int line_no = 0;
    for (std::string line; std::getline(rest, line);) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'name = literal' after the basis, got: " + line);
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        f.bindings[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return f;
}

// ---- identities -------------------------------------------------------------

void add_identity(RunReport& r, const IdentityReport& id) {
    std::string in;
    for (const auto& [k, v] : id.inputs) in += (in.empty() ? "" : " ") + k + "=" + v;
    r.check("identity." + id.name, "identity", id.holds, id.detail() + (in.empty() ? "" : "; inputs " + in));
}

void run_identities(RunReport& r, const std::optional<std::string>& basis_path, const SuiteOptions& opt) {
    if (!basis_path) {
        for (int k = 1; k <= 3; ++k)
            for (auto& c : run_group(k, opt)) r.records.push_back(std::move(c));
        return;
    }
    r.input("basis", *basis_path);
    const auto f = parse_basis_file(read_file(*basis_path));
    const auto has = [&](const char* k) { return f.bindings.count(k) > 0; };
    const auto P = [&](const char* k) { return parse_parameter(f.basis, f.bindings.at(k)); };
    const auto C = [&](const char* k) { return parse_character(f.basis, f.bindings.at(k)); };
    for (const auto& [k, v] : f.bindings) r.input(k, v);
    bool any = false;
    if (has("a2")) {
        add_identity(r, verify_clebsch_gordan(P("a2")));
        any = true;
    }
    if (has("a2") && has("a3")) add_identity(r, verify_exterior_cube_product(P("a2"), P("a3")));
    if (has("s1") && has("s2")) {
        add_identity(r, verify_exterior_cube_of_sum(P("s1"), P("s2"), has("c") ? C("c") : Character(f.basis)));
        any = true;
    }
    if (has("a2") && has("a3") && has("chi1") && has("chi2"))
        add_identity(r, verify_twist_pair_sym3(P("a2"), P("a3"), C("chi1"), C("chi2")));
    if (has("a2") && has("a3") && has("chi")) add_identity(r, verify_cubic_selftwist_sym3(P("a2"), P("a3"), C("chi")));
    if (!any) throw UsageError("basis file binds none of a2, a3, s1, s2");
}

// ---- lfactor ----------------------------------------------------------------

void run_lfactor(RunReport& r, const std::string& literal, const std::string& basis_path,
                 const std::optional<std::string>& embedding_path, int terms, double tol, std::uint64_t seed) {
    r.input("parameter", literal);
    r.input("basis", basis_path);
    const auto f = parse_basis_file(read_file(basis_path));
    const auto p = parse_parameter(f.basis, literal);
    NumericEmbedding e;
    if (embedding_path) {
        r.input("embedding", *embedding_path);
        e = parse_embedding(f.basis, read_file(*embedding_path));
    } else {
        r.input("embedding", "random, seed " + std::to_string(seed));
        std::mt19937_64 rng(seed);
        e = NumericEmbedding::random(f.basis, rng);
    }
    const auto factor = factor_from_param(p, e);
    std::vector<std::string> satake, denom, coeffs;
    for (const auto& v : factor.satake()) satake.push_back(fmt_complex(satake_to_complex(v)));
    for (const auto& c : DenomPolynomial(factor).numeric()) denom.push_back(fmt_complex(c));
    const auto cs = prime_power_coefficients(factor, static_cast<unsigned>(terms));
    for (const auto& c : cs) coeffs.push_back(fmt_complex(c));
    r.value("degree", std::to_string(factor.degree()));
    r.value("satake", "[" + join(satake) + "]");
    r.value("denominator (X^0 first)", "[" + join(denom) + "]");
    r.value("coefficients of X^k, k = 0.." + std::to_string(terms), "[" + join(coeffs) + "]");
    std::complex<double> trace = 0;
    for (const auto& c : p.entries()) trace += char_eval(c, e);
    const bool ok = std::abs(cs.at(1) - trace) <= tol * std::max(1.0, std::abs(trace));
    r.check("lfactor.linear-coefficient-is-trace", "identity", ok, "c_p = " + fmt_complex(cs.at(1)));
}

// ---- galois -----------------------------------------------------------------

GroupPtr load_group(const std::optional<std::string>& name, const std::optional<std::string>& path) {
    if (name && path) throw UsageError("give either --group or --group-file");
    if (path) return parse_group(read_file(*path), *path);
    if (name) return catalog_group(*name);
    throw UsageError("galois needs --group NAME or --group-file PATH");
}

const ClassFunction& irr_at(const std::vector<ClassFunction>& irr, int i) {
    if (i < 0 || static_cast<std::size_t>(i) >= irr.size())
        throw DomainError("no irreducible #" + std::to_string(i) + " (group has " + std::to_string(irr.size()) + ")");
    return irr[static_cast<std::size_t>(i)];
}

std::string describe_constituents(const std::vector<Constituent>& cs) {
    std::vector<std::string> parts;
    for (const auto& c : cs)
        parts.push_back((c.multiplicity > 1 ? std::to_string(c.multiplicity) + "*" : "") + "#" + std::to_string(c.index) +
                        "(deg " + std::to_string(c.degree) + ")");
    return parts.empty() ? "0" : join(parts, " + ");
}

void run_galois(RunReport& r, const std::string& action, const GroupPtr& g, const std::vector<int>& chars,
                const std::vector<int>& subgroup_gens) {
    r.input("group", g->name());
    r.input("action", action);
    const auto irr = irreducibles(g);
    const auto need = [&](std::size_t n) {
        if (chars.size() < n) throw UsageError(action + " needs " + std::to_string(n) + " --char indices");
    };
    if (action == "table") {
        r.value("order", std::to_string(g->order()));
        r.value("classes", std::to_string(g->num_classes()));
        std::string rows;
        for (std::size_t i = 0; i < irr.size(); ++i) rows += "#" + std::to_string(i) + " " + irr[i].to_string() + "\n";
        r.value("character table", rows);
    } else if (action == "classify") {
        int n = 0;
        for (std::size_t i = 0; i < irr.size(); ++i) {
            if (irr[i].integer_degree() != 2) continue;
            const auto c = classify_2dim(irr[i]);
            r.value("#" + std::to_string(i), c.tag() + (c.note.empty() ? "" : " (" + c.note + ")"));
            ++n;
        }
        if (n == 0) r.value("degree-2 irreducibles", "none");
    } else if (action == "decompose") {
        need(1);
        ClassFunction x = irr_at(irr, chars[0]);
        for (std::size_t i = 1; i < chars.size(); ++i) x = x * irr_at(irr, chars[i]);
        r.input("product of", join(chars, " x "));
        r.value("degree", std::to_string(x.integer_degree()));
        r.value("constituents", describe_constituents(decompose(x)));
    } else if (action == "bruteforce") {
        for (std::size_t i = 0; i < irr.size(); ++i) {
            if (irr[i].integer_degree() != 3) continue;
            for (std::size_t j = 0; j < irr.size(); ++j) {
                if (irr[j].integer_degree() != 2) continue;
                const auto pt = product_type_bruteforce(irr[i], irr[j]);
                r.value("#" + std::to_string(i) + " x #" + std::to_string(j),
                        to_string(pt.outcome) + ": " + describe_constituents(pt.constituents));
            }
        }
    } else if (action == "induce" || action == "restrict") {
        need(1);
        if (subgroup_gens.empty()) throw UsageError(action + " needs --subgroup generators");
        const auto h = Subgroup::generated(g, subgroup_gens);
        r.input("subgroup generators", join(subgroup_gens));
        r.value("subgroup order", std::to_string(h.order()));
        if (action == "restrict") {
            const auto res = restriction(irr_at(irr, chars[0]), h);
            r.value("restriction", res.to_string());
            r.value("constituents in the subgroup", describe_constituents(decompose(res)));
        } else {
            const auto hirr = irreducibles(h.group());
            const auto ind = induce(h, irr_at(hirr, chars[0]));
            r.value("induced", ind.to_string());
            r.value("constituents", describe_constituents(decompose(ind)));
        }
    } else {
        throw UsageError("unknown galois action '" + action + "' (table, classify, decompose, bruteforce, induce, restrict)");
    }
}

// ---- decide -----------------------------------------------------------------

std::string format_verdict(const Verdict& v) {
    return to_string(v.outcome) + " by " + v.rule + (v.witnesses.empty() ? "" : "; witnesses " + join(v.witnesses));
}

void run_decide_file(RunReport& r, const std::string& path) {
    r.input("descriptors", path);
    const auto d = parse_descriptors(read_file(path));
    bool any = false;
    if (d.gl3 && d.gl2) {
        r.value("verdict", format_verdict(decide_cuspidality(*d.gl3, *d.gl2)));
        any = true;
        if (d.gl2->kind == GL2Kind::General && !d.gl3->essentially_selfdual) {
            const auto g = decide_nonpolyhedral_product(*d.gl3, *d.gl2);
            r.value("cuspidal", g.cuspidal ? "yes" : "no");
            r.value("no self-twist", g.no_selftwist ? "yes" : "no");
            r.value("not induced from a cubic extension", g.not_cubic_induced ? "yes" : "no");
            r.value("not solvably induced", g.not_solvably_induced ? "yes" : "no");
            r.value("monomial case excluded", g.monomial_excluded ? "yes" : "no");
        }
    }
    if (d.gl2 && d.gl2b) {
        r.value("adjoint-pair verdict", format_verdict(decide_adjoint_pair(*d.gl2, *d.gl2b)));
        any = true;
    }
    if (!any) throw UsageError("descriptor file needs [gl3] with [gl2], or [gl2] with [gl2b]");
}

void run_cross_validate(RunReport& r, const std::optional<std::string>& group) {
    std::vector<GroupPtr> groups;
    if (group) {
        groups.push_back(catalog_group(*group));
        r.input("group", *group);
    } else {
        groups = extended_catalog();
        r.input("groups", "extended catalog (" + std::to_string(groups.size()) + ")");
    }
    for (const auto& g : groups) {
        const GroupModel m(g);
        std::map<std::string, int> rules;
        int agree = 0, total = 0;
        for (const auto& c : cross_validate(m)) {
            ++total;
            agree += c.agree && c.witnesses_twist_equivalent;
            ++rules[c.decided.rule];
            if (!c.agree)
                r.check("decide." + g->name() + "." + c.left + "." + c.right, "galois", false,
                        "rule says " + format_verdict(c.decided) + ", decomposition says " + to_string(c.brute.outcome));
        }
        int pair_agree = 0, pair_total = 0;
        for (const auto& c : cross_validate_adjoint_pairs(m)) {
            ++pair_total;
            pair_agree += c.agree;
            ++rules["pair:" + c.decided.rule];
            if (!c.agree)
                r.check("decide-pair." + g->name() + "." + c.left + "." + c.right, "galois", false,
                        "rule says " + format_verdict(c.decided) + ", decomposition says " + to_string(c.brute.outcome));
        }
        std::string hist;
        for (const auto& [rule, n] : rules) hist += (hist.empty() ? "" : ", ") + rule + " " + std::to_string(n);
        r.check("decide." + g->name(), "galois", agree == total && pair_agree == pair_total,
                std::to_string(agree) + "/" + std::to_string(total) + " products, " + std::to_string(pair_agree) + "/" +
                    std::to_string(pair_total) + " adjoint pairs" + (hist.empty() ? "" : "; " + hist));
    }
}

// ---- lemma ------------------------------------------------------------------

void run_lemma(RunReport& r, const std::string& mode, const SuiteOptions& opt, std::int64_t samples,
               const std::optional<std::string>& instance) {
    r.input("mode", mode);
    if (mode == "sweep") {
        r.input("order", std::to_string(opt.order));
        const auto s = root_of_unity_sweep(opt.order);
        r.value("period", std::to_string(s.period));
        r.value("septuples", std::to_string(s.septuples));
        r.value("equal cube products", std::to_string(s.cube_prefilter));
        r.value("hypothesis satisfied", std::to_string(s.hypothesis_satisfying));
        r.value("side fact: A^9+B^9+C^9 = 0", std::to_string(s.ninth_power_sum_zero));
        r.value("side fact: second and sixth power sums zero", std::to_string(s.second_and_sixth_power_sums_zero));
        r.check("lemma.sweep", "lemma", s.counterexamples == 0,
                std::to_string(s.counterexamples) + " counterexamples" +
                    (s.first_counterexample ? "; first " + format_septuple(*s.first_counterexample) : ""));
    } else if (mode == "random") {
        r.input("samples", std::to_string(samples));
        r.input("seed", std::to_string(opt.seed));
        r.input("nmax", std::to_string(opt.nmax));
        const auto s = random_constructed_samples(samples, opt.seed, opt.nmax, opt.tolerance);
        r.value("hypothesis satisfied", std::to_string(s.hypothesis_satisfying));
        r.check("lemma.random", "lemma", s.counterexamples == 0 && s.hypothesis_satisfying == s.samples,
                std::to_string(s.counterexamples) + " counterexamples" +
                    (s.first_counterexample ? "; first " + format_septuple(*s.first_counterexample) : ""));
    } else if (mode == "claim") {
        r.input("triples", std::to_string(samples));
        r.input("seed", std::to_string(opt.seed));
        const auto s = claim_sweep(samples, opt.seed, opt.tolerance);
        r.value("zero-sum triples", std::to_string(s.zero_sum_triples));
        r.check("lemma.claim", "lemma", s.failures == 0, std::to_string(s.failures) + " failures");
    } else if (mode == "single") {
        if (!instance) throw UsageError("--mode single needs --instance 'U=... V=... X=... Y=... A=... B=... C=...'");
        const auto s = parse_septuple(*instance);
        r.input("instance", format_septuple(s));
        const auto h = power_sum_cube_hypothesis(s, opt.nmax, opt.tolerance);
        const bool concl = power_sum_cube_conclusion(s, opt.tolerance);
        r.value("hypothesis", std::string(h.holds ? "holds" : "fails") + (h.complete ? " (complete)" : "") +
                                  ", checked up to n = " + std::to_string(h.checked_up_to));
        r.value("conclusion", concl ? "holds" : "fails");
        r.check("lemma.single", "lemma", !h.holds || concl,
                h.holds ? (concl ? "cube multisets agree" : "counterexample: " + format_septuple(s))
                        : "hypothesis fails, nothing to check");
    } else {
        throw UsageError("--mode must be sweep, random, claim or single");
    }
}

// ---- arch -------------------------------------------------------------------

void run_arch(RunReport& r, std::optional<int> n, std::optional<int> m, const std::optional<std::string>& gl2) {
    if (!n && !m && !gl2) n = 6;
    if (n) {
        r.input("n", std::to_string(*n));
        const auto w = degree_window(*n);
        const auto t = cohomological_type(*n);
        r.value("window", "(" + std::to_string(w.d) + ", " + std::to_string(w.hi) + ")");
        r.value("cohomological type", format_arch(t));
        r.check("arch.cohomological-regular", "arch", is_regular(t), "n = " + std::to_string(*n));
    }
    if (m) {
        r.input("m", std::to_string(*m));
        const auto a = appendix_infinity(*m);
        r.value("induced type", format_arch(a.induced));
        r.value("k", join(a.k));
        r.check("arch.induced-regular", "arch", a.regular, "degree " + std::to_string(a.degree));
    }
    if (gl2) {
        r.input("gl2", *gl2);
        const auto d = tensor_with_gl3(parse_arch(*gl2));
        r.value("product with the GL(3) cohomological type", format_arch(d.product));
        std::vector<std::string> coll;
        for (const auto& c : d.collisions) coll.push_back(format_arch(c));
        r.value("regular", d.regular ? "yes" : "no, repeated " + join(coll));
        r.value("cohomological for GL(6)", d.matches_cohomological ? "yes" : "no");
    }
}

// ---- hecke ------------------------------------------------------------------

struct HeckeArgs {
    std::vector<std::string> tables;
    bool witness = false;
    std::vector<std::int64_t> conductor;
    std::optional<std::string> fetch;
    std::string url;
    bool offline = false;
    bool constants = false;
    std::vector<std::int64_t> nu_ramified;
};

void run_hecke(RunReport& r, const HeckeArgs& a, double tol) {
    bool any = false;
    std::optional<HeckeTable> t2, t3;
    for (const auto& path : a.tables) {
        auto t = load_table(path);
        r.input("table", path);
        r.value(t.label, std::string(t.group == FormGroup::GL2 ? "GL2" : "GL3") + " level " + std::to_string(t.level) +
                             " over " + format_field(t.field) + ", " + std::to_string(t.ap.size()) + " primes");
        (t.group == FormGroup::GL2 ? t2 : t3) = std::move(t);
        any = true;
    }
    if (a.fetch) {
        RemoteSource src{a.url, default_cache_dir(), a.offline, 10};
        r.input("fetch", *a.fetch);
        auto t = fetch_remote(src, *a.fetch);
        r.value(t.label, std::string(t.group == FormGroup::GL2 ? "GL2" : "GL3") + " level " + std::to_string(t.level) +
                             " over " + format_field(t.field) + ", " + std::to_string(t.ap.size()) + " primes");
        (t.group == FormGroup::GL2 ? t2 : t3) = std::move(t);
        any = true;
    }
    if (!a.conductor.empty()) {
        if (a.conductor.size() != 2) throw UsageError("--conductor takes N q");
        r.input("conductor", std::to_string(a.conductor[0]) + " " + std::to_string(a.conductor[1]));
        r.value("N^3 q^2", std::to_string(conductor_product(a.conductor[0], a.conductor[1])));
        any = true;
    }
    if (a.constants) {
        r.value("constants", format_constants(reference_constants()));
        any = true;
    }
    if (t2 && t3) {
        const auto b = bridge_check(*t3, *t2, tol);
        r.check("hecke.tensor-ap-matches-euler-factor", "hecke", b.agree,
                std::to_string(b.primes_checked) + " primes, max relative error " + fmt_double(b.max_error));
    }
    if (a.witness) {
        if (!t2 || !t3) throw UsageError("--witness needs a GL2 and a GL3 table");
        const std::set<std::int64_t> nu(a.nu_ramified.begin(), a.nu_ramified.end());
        const auto w = nonselfdual_witness(*t3, *t2, nu);
        r.value("witness", w ? "p = " + std::to_string(w->p) + ": " + w->verdict : "none among the tabulated primes");
    }
    if (!any) throw UsageError("hecke needs --table, --fetch, --conductor or --constants");
}

}  // namespace
}  // namespace gl6::cli

int main(int argc, char** argv) {
    using namespace gl6;
    using namespace gl6::cli;

    CLI::App app{"Checks for cuspidality of GL(2) x GL(3) products and the supporting identities"};
    app.require_subcommand(1);
    app.fallthrough();

    SuiteOptions opt;
    bool json = false;
    std::optional<std::string> basis_path;
    std::vector<std::string> tables;
    app.add_option("--seed", opt.seed, "random seed")->capture_default_str();
    app.add_flag("--json", json, "print a JSON report");
    app.add_option("--tolerance", opt.tolerance, "relative tolerance for floating comparisons")->capture_default_str();
    app.add_option("--nmax", opt.nmax, "largest power sum exponent checked")->capture_default_str();
    app.add_option("--order", opt.order, "root-of-unity order for the lemma sweep")->capture_default_str();
    app.add_option("--basis", basis_path, "basis file: 'basis ...;' then 'name = literal' lines");
    app.add_option("--table", tables, "Hecke table file (repeatable)");

    auto* identities = app.add_subcommand("identities", "multiset identities of local parameters");

    auto* lfactor = app.add_subcommand("lfactor", "Euler factor of a parameter under an embedding");
    std::string literal;
    std::optional<std::string> embedding_path;
    int terms = 4;
    lfactor->add_option("parameter", literal, "parameter literal, e.g. [alpha1, alpha2]")->required();
    lfactor->add_option("--embedding", embedding_path, "embedding file: 'name re im' or 'name root k n' lines");
    lfactor->add_option("--terms", terms, "number of prime power coefficients")->capture_default_str()->check(CLI::Range(1, 64));

    auto* galois = app.add_subcommand("galois", "finite-group character computations");
    std::string action;
    std::optional<std::string> group_name, group_file;
    std::vector<int> chars, subgroup;
    galois->add_option("action", action, "table | classify | decompose | bruteforce | induce | restrict")->required();
    galois->add_option("--group", group_name, "catalog group name");
    galois->add_option("--group-file", group_file, "group file: 'order n classes k' and a multiplication table");
    galois->add_option("--char", chars, "irreducible indices (repeatable)");
    galois->add_option("--subgroup", subgroup, "subgroup generators as element indices")->delimiter(',');

    auto* decide = app.add_subcommand("decide", "decision rules on descriptor files");
    std::optional<std::string> descriptor_path, cv_group;
    bool cross = false;
    decide->add_option("file", descriptor_path, "descriptor file");
    decide->add_flag("--cross-validate", cross, "compare the rules with brute-force decomposition over the catalog");
    decide->add_option("--group", cv_group, "restrict --cross-validate to one catalog group");

    auto* lemma = app.add_subcommand("lemma", "power-sum cube lemma sweeps");
    std::string mode = "sweep";
    std::int64_t samples = 100'000;
    std::optional<std::string> instance;
    lemma->add_option("--mode", mode, "sweep | random | claim | single")->capture_default_str();
    lemma->add_option("--samples", samples, "samples for random and claim modes")->capture_default_str()->check(CLI::PositiveNumber);
    lemma->add_option("--instance", instance, "septuple for single mode");

    auto* arch = app.add_subcommand("arch", "archimedean types, regularity and degree windows");
    std::optional<int> n, m;
    std::optional<std::string> gl2_type;
    arch->add_option("--n", n, "degree n for the cohomological type and window")->check(CLI::Range(2, 1000));
    arch->add_option("--m", m, "m for the induced type of degree 2m")->check(CLI::Range(2, 1000));
    arch->add_option("--gl2", gl2_type, "GL(2) type to tensor with the GL(3) cohomological type, e.g. '{(3;3), (-3;3)}'");

    auto* hecke = app.add_subcommand("hecke", "Hecke tables, witnesses, conductors");
    HeckeArgs ha;
    hecke->add_flag("--witness", ha.witness, "search for a non-selfduality witness");
    hecke->add_option("--conductor", ha.conductor, "N q")->expected(2);
    hecke->add_option("--fetch", ha.fetch, "fetch a table by label");
    hecke->add_option("--url", ha.url, "base URL for --fetch");
    hecke->add_flag("--offline", ha.offline, "use only the cache for --fetch");
    hecke->add_flag("--constants", ha.constants, "print the reference level sets and fields");
    hecke->add_option("--nu-ramified", ha.nu_ramified, "primes excluded from the witness search")->delimiter(',');

    auto* all = app.add_subcommand("all", "full acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    RunReport report;
    try {
        if (*identities) {
            report.subcommand = "identities";
            run_identities(report, basis_path, opt);
        } else if (*lfactor) {
            report.subcommand = "lfactor";
            if (!basis_path) throw UsageError("lfactor needs --basis");
            run_lfactor(report, literal, *basis_path, embedding_path, terms, opt.tolerance, opt.seed);
        } else if (*galois) {
            report.subcommand = "galois";
            run_galois(report, action, load_group(group_name, group_file), chars, subgroup);
        } else if (*decide) {
            report.subcommand = "decide";
            if (cross == descriptor_path.has_value()) throw UsageError("decide takes a descriptor file or --cross-validate");
            if (cross)
                run_cross_validate(report, cv_group);
            else
                run_decide_file(report, *descriptor_path);
        } else if (*lemma) {
            report.subcommand = "lemma";
            run_lemma(report, mode, opt, samples, instance);
        } else if (*arch) {
            report.subcommand = "arch";
            run_arch(report, n, m, gl2_type);
        } else if (*hecke) {
            report.subcommand = "hecke";
            ha.tables = tables;
            run_hecke(report, ha, opt.tolerance);
        } else if (*all) {
            report.subcommand = "all";
            report.input("seed", std::to_string(opt.seed));
            report.input("tolerance", fmt_double(opt.tolerance));
            report.input("nmax", std::to_string(opt.nmax));
            report.input("order", std::to_string(opt.order));
            report.records = run_suite(opt);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    std::cout << (json ? render_json(report) : render_text(report));
    return report.exit_status();
}
