#include "gl6/numlemma.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "checked.hpp"
#include "gl6/error.hpp"

namespace gl6 {

std::complex<double> to_complex(const LemmaValue& v) {
    if (const auto* r = std::get_if<ScaledRoot>(&v))
        return boost::rational_cast<double>(r->modulus) * turn_to_complex(r->angle);
    return std::get<std::complex<double>>(v);
}

bool SeptupleInstance::exact() const {
    return std::all_of(v.begin(), v.end(), [](const LemmaValue& x) { return std::holds_alternative<ScaledRoot>(x); });
}

bool SeptupleInstance::roots_of_unity() const {
    return std::all_of(v.begin(), v.end(), [](const LemmaValue& x) {
        const auto* r = std::get_if<ScaledRoot>(&x);
        return r != nullptr && r->modulus == Rational(1);
    });
}

// ---- parsing --------------------------------------------------------------

namespace {

constexpr std::array<const char*, 7> kNames{"U", "V", "X", "Y", "A", "B", "C"};

Rational parse_rational(std::string_view s) {
    const auto slash = s.find('/');
    const auto num = s.substr(0, slash);
    std::int64_t p = 0, q = 1;
    auto parse_int = [](std::string_view t) {
        if (t.empty()) throw ParseError("empty number");
        std::size_t pos = 0;
        std::int64_t x = 0;
        try {
            x = std::stoll(std::string(t), &pos);
        } catch (const std::exception&) {
            throw ParseError("bad number '" + std::string(t) + "'");
        }
        if (pos != t.size()) throw ParseError("bad number '" + std::string(t) + "'");
        return x;
    };
    p = parse_int(num);
    if (slash != std::string_view::npos) q = parse_int(s.substr(slash + 1));
    if (q == 0) throw ParseError("zero denominator");
    return Rational(p, q);
}

LemmaValue parse_value(std::string_view s) {
    if (s.rfind("c:", 0) == 0) {
        const auto body = std::string(s.substr(2));
        const auto comma = body.find(',');
        if (comma == std::string::npos) throw ParseError("floating value needs `c:re,im`");
        try {
            std::size_t p1 = 0, p2 = 0;
            const std::string re = body.substr(0, comma), im = body.substr(comma + 1);
            const double x = std::stod(re, &p1), y = std::stod(im, &p2);
            if (p1 != re.size() || p2 != im.size()) throw ParseError("bad floating value '" + body + "'");
            return std::complex<double>(x, y);
        } catch (const std::logic_error&) {
            throw ParseError("bad floating value '" + body + "'");
        }
    }
    ScaledRoot r;
    const auto at = s.find('@');
    r.modulus = parse_rational(s.substr(0, at));
    if (r.modulus.numerator() <= 0) throw ParseError("exact modulus must be positive");
    if (at != std::string_view::npos) r.angle = normalize_turn(parse_rational(s.substr(at + 1)));
    return r;
}

std::string format_value(const LemmaValue& v) {
    std::ostringstream out;
    if (const auto* r = std::get_if<ScaledRoot>(&v)) {
        out << r->modulus.numerator();
        if (r->modulus.denominator() != 1) out << '/' << r->modulus.denominator();
        if (r->angle.numerator() != 0) out << '@' << r->angle.numerator() << '/' << r->angle.denominator();
    } else {
        const auto c = std::get<std::complex<double>>(v);
        out.precision(17);
        out << "c:" << c.real() << ',' << c.imag();
    }
    return out.str();
}

}  // namespace

SeptupleInstance parse_septuple(std::string_view text) {
    SeptupleInstance s;
    std::array<bool, 7> seen{};
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("expected NAME=VALUE, got '" + tok + "'");
        const auto name = tok.substr(0, eq);
        const auto it = std::find(kNames.begin(), kNames.end(), name);
        if (it == kNames.end()) throw ParseError("unknown entry '" + name + "'");
        const auto i = static_cast<std::size_t>(it - kNames.begin());
        if (seen[i]) throw ParseError("entry " + name + " given twice");
        seen[i] = true;
        s.v[i] = parse_value(std::string_view(tok).substr(eq + 1));
    }
    for (std::size_t i = 0; i < 7; ++i)
        if (!seen[i]) throw ParseError(std::string("missing entry ") + kNames[i]);
    return s;
}

std::string format_septuple(const SeptupleInstance& s) {
    std::string out;
    for (std::size_t i = 0; i < 7; ++i) {
        if (i) out += ' ';
        out += kNames[i];
        out += '=';
        out += format_value(s.v[i]);
    }
    return out;
}

std::vector<int> lemma_exponents(int nmax) {
    std::vector<int> ns{1, 2, 3, 6, 9};
    for (int n = 1; n <= nmax; ++n) ns.push_back(n);
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    return ns;
}

// ---- exact arithmetic on exponents ------------------------------------------

namespace {

void require_nonzero(const SeptupleInstance& s) {
    for (std::size_t i = 0; i < 7; ++i) {
        const auto& x = s.v[i];
        const bool zero = std::holds_alternative<ScaledRoot>(x) ? std::get<ScaledRoot>(x).modulus.numerator() == 0
                                                                 : std::get<std::complex<double>>(x) == 0.0;
        if (zero) throw DomainError(std::string("entry ") + kNames[i] + " is zero");
    }
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
    const auto r = a % m;
    return r < 0 ? r + m : r;
}

// Canonical code for zeta_L^x + zeta_L^y: -1 when the sum vanishes, else the
// sorted pair. Two unit vectors with a given nonzero sum are unique up to order.
std::int64_t pair_code(std::int64_t x, std::int64_t y, std::int64_t L) {
    if (L % 2 == 0 && mod(x - y, L) == L / 2) return -1;
    if (x > y) std::swap(x, y);
    return x * L + y;
}

// zeta^x + zeta^y + zeta^z == 0 exactly when the three points are equilateral.
bool triple_vanishes(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t L) {
    if (L % 3 != 0) return false;
    const auto t = L / 3;
    const auto dy = mod(y - x, L), dz = mod(z - x, L);
    return (dy == t && dz == 2 * t) || (dy == 2 * t && dz == t);
}

struct UnitExponents {
    std::int64_t L = 1;
    std::array<std::int64_t, 7> e{};
};

UnitExponents unit_exponents(const SeptupleInstance& s) {
    UnitExponents u;
    for (const auto& x : s.v) u.L = detail::lcm(u.L, std::get<ScaledRoot>(x).angle.denominator());
    for (std::size_t i = 0; i < 7; ++i) {
        const auto a = std::get<ScaledRoot>(s.v[i]).angle;
        u.e[i] = mod(detail::mul(a.numerator(), u.L / a.denominator()), u.L);
    }
    return u;
}

bool unit_hypothesis_at(const UnitExponents& u, std::int64_t n) {
    const auto L = u.L;
    std::array<std::int64_t, 7> x{};
    for (std::size_t i = 0; i < 7; ++i) x[i] = mod(static_cast<std::int64_t>((static_cast<__int128>(u.e[i]) * n) % L), L);
    if (triple_vanishes(x[4], x[5], x[6], L)) return true;
    return pair_code(x[0], x[1], L) == pair_code(x[2], x[3], L);
}

Cyclotomic exact_power(const ScaledRoot& r, std::int64_t n, int conductor) {
    std::int64_t p = 1, q = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        p = detail::mul(p, r.modulus.numerator());
        q = detail::mul(q, r.modulus.denominator());
    }
    const auto k = detail::mul(r.angle.numerator(), conductor / r.angle.denominator());
    return Cyclotomic::rational(p, q) * Cyclotomic::zeta(conductor, mod(detail::mul(k, n), conductor));
}

constexpr std::int64_t kMaxExactConductor = 2048;

}  // namespace

HypothesisResult power_sum_cube_hypothesis(const SeptupleInstance& s, int nmax, double tol) {
    require_nonzero(s);
    if (nmax < 1) throw DomainError("nmax must be positive");
    HypothesisResult r;
    const auto ns = lemma_exponents(nmax);

    if (s.roots_of_unity()) {
        const auto u = unit_exponents(s);
        const auto cube = [&](std::size_t i, std::size_t j) { return mod(3 * (u.e[i] + u.e[j]), u.L); };
        if (cube(0, 1) != cube(2, 3)) return r;
        if (u.L <= kMaxCompletePeriod) {
            r.complete = true;
            r.checked_up_to = u.L;
            for (std::int64_t n = 1; n <= u.L; ++n)
                if (!unit_hypothesis_at(u, n)) return r;
        } else {
            r.checked_up_to = ns.back();
            for (int n : ns)
                if (!unit_hypothesis_at(u, n)) return r;
        }
        r.holds = true;
        return r;
    }

    if (s.exact()) {
        std::int64_t conductor = 1;
        for (const auto& x : s.v) conductor = detail::lcm(conductor, std::get<ScaledRoot>(x).angle.denominator());
        if (conductor > kMaxExactConductor)
            throw DomainError("angle denominators too large for exact evaluation (lcm " + std::to_string(conductor) + ")");
        const int L = static_cast<int>(conductor);
        const auto& U = std::get<ScaledRoot>(s.U());
        const auto& V = std::get<ScaledRoot>(s.V());
        const auto& X = std::get<ScaledRoot>(s.X());
        const auto& Y = std::get<ScaledRoot>(s.Y());
        if (!(exact_power(U, 3, L) * exact_power(V, 3, L) == exact_power(X, 3, L) * exact_power(Y, 3, L))) return r;
        r.checked_up_to = ns.back();
        for (int n : ns) {
            Cyclotomic P = 0;
            for (std::size_t i = 4; i < 7; ++i) P += exact_power(std::get<ScaledRoot>(s.v[i]), n, L);
            if (P.is_zero()) continue;
            if (!(exact_power(U, n, L) + exact_power(V, n, L) == exact_power(X, n, L) + exact_power(Y, n, L))) return r;
        }
        r.holds = true;
        return r;
    }

    std::array<std::complex<double>, 7> z{};
    for (std::size_t i = 0; i < 7; ++i) z[i] = to_complex(s.v[i]);
    const auto close = [tol](std::complex<double> a, std::complex<double> b, double scale) {
        return std::abs(a - b) <= tol * std::max(1.0, scale);
    };
    const auto c = [&](std::size_t i) { return z[i] * z[i] * z[i]; };
    if (!close(c(0) * c(1), c(2) * c(3), std::abs(c(0) * c(1)) + std::abs(c(2) * c(3)))) return r;
    r.checked_up_to = ns.back();
    for (int n : ns) {
        std::array<std::complex<double>, 7> p{};
        double scale_uv = 0, scale_abc = 0;
        for (std::size_t i = 0; i < 7; ++i) {
            p[i] = std::pow(z[i], n);
            (i < 4 ? scale_uv : scale_abc) += std::abs(p[i]);
        }
        const auto P = p[4] + p[5] + p[6];
        const auto lhs = (p[0] + p[1]) * P, rhs = (p[2] + p[3]) * P;
        if (!close(lhs, rhs, scale_uv * scale_abc)) return r;
    }
    r.holds = true;
    return r;
}

bool power_sum_cube_conclusion(const SeptupleInstance& s, double tol) {
    require_nonzero(s);
    if (s.exact()) {
        const auto cube = [&](std::size_t i) {
            const auto& r = std::get<ScaledRoot>(s.v[i]);
            const auto m = r.modulus * r.modulus * r.modulus;
            return std::make_pair(m, normalize_turn(r.angle * 3));
        };
        auto a = std::array{cube(0), cube(1)}, b = std::array{cube(2), cube(3)};
        const auto less = [](const auto& x, const auto& y) {
            return x.first != y.first ? x.first < y.first : x.second < y.second;
        };
        std::sort(a.begin(), a.end(), less);
        std::sort(b.begin(), b.end(), less);
        return a == b;
    }
    const auto c = [&](std::size_t i) {
        const auto z = to_complex(s.v[i]);
        return z * z * z;
    };
    const auto close = [tol](std::complex<double> a, std::complex<double> b) {
        return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
    };
    return (close(c(0), c(2)) && close(c(1), c(3))) || (close(c(0), c(3)) && close(c(1), c(2)));
}

bool claim_check(std::complex<double> a, std::complex<double> b, std::complex<double> c, double tol) {
    if (a == 0.0 || b == 0.0 || c == 0.0) throw DomainError("claim_check needs nonzero entries");
    const double s1 = std::abs(a) + std::abs(b) + std::abs(c);
    const double s3 = std::pow(std::abs(a), 3) + std::pow(std::abs(b), 3) + std::pow(std::abs(c), 3);
    const bool sum_zero = std::abs(a + b + c) <= tol * s1;
    const bool cubes_zero = std::abs(a * a * a + b * b * b + c * c * c) <= tol * s3;
    return !sum_zero || !cubes_zero;
}

bool claim_check(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c) {
    if (a.is_zero() || b.is_zero() || c.is_zero()) throw DomainError("claim_check needs nonzero entries");
    return !(a + b + c).is_zero() || !(a * a * a + b * b * b + c * c * c).is_zero();
}

CirclePair statement_check(double R, std::complex<double> Z) {
    if (!(R > 0)) throw DomainError("R must be positive");
    const double m = std::abs(Z);
    if (m == 0) throw DomainError("Z = 0: every antipodal pair qualifies");
    if (m >= 2 * R) throw DomainError("|Z| >= 2R: the circles |z| = R and |Z - z| = R do not cross in two points");
    // In coordinates along Z the two circles meet on the line Re = |Z|/2.
    const auto dir = Z / m;
    const double x = m / 2;
    const double y = std::sqrt((R - x) * (R + x));
    CirclePair p;
    p.z1 = dir * std::complex<double>(x, y);
    p.z2 = dir * std::complex<double>(x, -y);
    p.residual = std::max({std::abs(std::abs(p.z1) - R), std::abs(std::abs(p.z2) - R), std::abs(p.z1 + p.z2 - Z)});
    return p;
}

// ---- sweeps ---------------------------------------------------------------

SweepReport root_of_unity_sweep(int order) {
    if (order < 1 || order > 12) throw DomainError("sweep order must be between 1 and 12");
    SweepReport rep;
    rep.order = order;
    std::int64_t L = 1;
    for (int k = 2; k <= order; ++k) L = std::lcm(L, static_cast<std::int64_t>(k));
    rep.period = L;

    std::vector<std::int64_t> vals;
    for (std::int64_t e = 0; e < L; ++e)
        if (L / std::gcd(e, L) <= order) vals.push_back(e);
    const auto nv = static_cast<std::int64_t>(vals.size());
    rep.values = nv;
    rep.septuples = nv * nv * nv * nv * nv * nv * nv;

    const auto words = static_cast<std::size_t>((L + 63) / 64);
    using Bits = std::vector<std::uint64_t>;

    // Zero masks of A^n + B^n + C^n over n = 1..L (bit n-1), grouped with
    // ordered multiplicities.
    struct MaskGroup {
        Bits mask;
        std::int64_t ordered = 0;
        std::array<std::int64_t, 3> example{};
    };
    std::vector<MaskGroup> masks;
    {
        std::unordered_map<std::string, std::size_t> index;
        for (std::int64_t i = 0; i < nv; ++i)
            for (std::int64_t j = i; j < nv; ++j)
                for (std::int64_t k = j; k < nv; ++k) {
                    Bits m(words, 0);
                    for (std::int64_t n = 1; n <= L; ++n)
                        if (triple_vanishes(vals[i] * n % L, vals[j] * n % L, vals[k] * n % L, L))
                            m[(n - 1) / 64] |= std::uint64_t{1} << ((n - 1) % 64);
                    const std::int64_t mult = (i == j && j == k) ? 1 : (i == j || j == k) ? 3 : 6;
                    std::string key(reinterpret_cast<const char*>(m.data()), m.size() * sizeof(std::uint64_t));
                    auto [it, fresh] = index.emplace(std::move(key), masks.size());
                    if (fresh) masks.push_back({std::move(m), 0, {vals[i], vals[j], vals[k]}});
                    masks[it->second].ordered += mult;
                }
    }
    const auto bit = [](const Bits& m, std::int64_t n) { return (m[(n - 1) / 64] >> ((n - 1) % 64)) & 1U; };

    struct Pair {
        std::int64_t a, b, ordered, cube_product;
        std::array<std::int64_t, 2> cubes;
    };
    std::vector<Pair> pairs;
    for (std::int64_t i = 0; i < nv; ++i)
        for (std::int64_t j = i; j < nv; ++j) {
            std::array<std::int64_t, 2> cubes{3 * vals[i] % L, 3 * vals[j] % L};
            std::sort(cubes.begin(), cubes.end());
            pairs.push_back({vals[i], vals[j], i == j ? 1 : 2, 3 * (vals[i] + vals[j]) % L, cubes});
        }

    std::unordered_map<std::int64_t, std::vector<std::size_t>> by_cube;
    for (std::size_t p = 0; p < pairs.size(); ++p) by_cube[pairs[p].cube_product].push_back(p);

    std::vector<std::int64_t> keys;
    for (const auto& [k, _] : by_cube) keys.push_back(k);
    std::sort(keys.begin(), keys.end());

    Bits diff(words);
    for (const auto key : keys) {
        const auto& group = by_cube[key];
        for (const auto pi : group)
            for (const auto qi : group) {
                const auto& p = pairs[pi];
                const auto& q = pairs[qi];
                rep.cube_prefilter += p.ordered * q.ordered * nv * nv * nv;
                std::fill(diff.begin(), diff.end(), 0);
                for (std::int64_t n = 1; n <= L; ++n)
                    if (pair_code(p.a * n % L, p.b * n % L, L) != pair_code(q.a * n % L, q.b * n % L, L))
                        diff[(n - 1) / 64] |= std::uint64_t{1} << ((n - 1) % 64);
                const bool same_cubes = p.cubes == q.cubes;
                for (const auto& g : masks) {
                    bool covered = true;
                    for (std::size_t w = 0; w < words && covered; ++w) covered = (diff[w] & ~g.mask[w]) == 0;
                    if (!covered) continue;
                    const auto count = p.ordered * q.ordered * g.ordered;
                    rep.hypothesis_satisfying += count;
                    if (bit(g.mask, 9)) rep.ninth_power_sum_zero += count;
                    if (bit(g.mask, 2) && bit(g.mask, 6)) rep.second_and_sixth_power_sums_zero += count;
                    if (!same_cubes) {
                        rep.counterexamples += count;
                        if (!rep.first_counterexample) {
                            SeptupleInstance s;
                            const std::array<std::int64_t, 7> e{p.a, p.b, q.a, q.b, g.example[0], g.example[1], g.example[2]};
                            for (std::size_t i = 0; i < 7; ++i) s.v[i] = ScaledRoot{1, normalize_turn(Turn(e[i], L))};
                            rep.first_counterexample = s;
                        }
                    }
                }
            }
    }
    return rep;
}

namespace {

std::complex<double> random_nonzero(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> logr(std::log(0.5), std::log(2.0));
    std::uniform_real_distribution<double> turn(0.0, 1.0);
    return std::polar(std::exp(logr(rng)), 2 * M_PI * turn(rng));
}

}  // namespace

RandomReport random_constructed_samples(std::int64_t count, std::uint64_t seed, int nmax, double tol) {
    RandomReport rep;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> kind(0, 3), third(0, 2);
    const auto omega = std::polar(1.0, 2 * M_PI / 3);
    for (std::int64_t i = 0; i < count; ++i) {
        SeptupleInstance s;
        const auto U = random_nonzero(rng), V = random_nonzero(rng);
        std::complex<double> X, Y, A = random_nonzero(rng), B = random_nonzero(rng), C = random_nonzero(rng);
        switch (kind(rng)) {
            case 0: X = V, Y = U; break;
            case 1: X = U, Y = V; break;
            default: {
                // Rotating by cube roots of unity keeps the cubes; the power sums
                // only have to agree for 3 | n because A, B, C are equilateral.
                const int i1 = third(rng), i2 = third(rng);
                X = U * std::pow(omega, i1);
                Y = V * std::pow(omega, i2);
                if (third(rng) == 0) std::swap(X, Y);
                B = A * omega;
                C = A * omega * omega;
                break;
            }
        }
        s.v = {U, V, X, Y, A, B, C};
        ++rep.samples;
        if (!power_sum_cube_hypothesis(s, nmax, tol).holds) continue;
        ++rep.hypothesis_satisfying;
        if (!power_sum_cube_conclusion(s, tol)) {
            ++rep.counterexamples;
            if (!rep.first_counterexample) rep.first_counterexample = s;
        }
    }
    return rep;
}

ClaimReport claim_sweep(std::int64_t count, std::uint64_t seed, double tol) {
    ClaimReport rep;
    std::mt19937_64 rng(seed);
    for (std::int64_t i = 0; i < count; ++i) {
        const auto a = random_nonzero(rng), b = random_nonzero(rng);
        std::complex<double> c;
        if (i % 2 == 0) {
            c = -a - b;
            if (c == 0.0) c = random_nonzero(rng);
            else ++rep.zero_sum_triples;
        } else {
            c = random_nonzero(rng);
        }
        ++rep.triples;
        if (!claim_check(a, b, c, tol)) ++rep.failures;
    }
    return rep;
}

std::optional<SeptupleInstance> counterexample_search(int order, std::int64_t random_budget, std::uint64_t seed) {
    auto sweep = root_of_unity_sweep(order);
    if (sweep.first_counterexample) return sweep.first_counterexample;
    return random_constructed_samples(random_budget, seed).first_counterexample;
}

}  // namespace gl6
