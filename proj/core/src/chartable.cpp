// Burnside-Dixon: the vectors (h_i chi(g_i) / chi(1))_i are the common
// eigenvectors of the class multiplication matrices. Working over F_p with
// p = 1 mod exponent, they are split off with random combinations of those
// matrices, then lifted to exact cyclotomic values through the eigenvalue
// multiplicities of each group element.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <tuple>

#include "gl6/error.hpp"
#include "gl6/group.hpp"

namespace gl6 {

namespace {

using u64 = std::uint64_t;
using Mat = std::vector<std::vector<u64>>;

struct Fp {
    u64 p;
    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 mul(u64 a, u64 b) const { return a * b % p; }
    u64 pow(u64 a, u64 k) const {
        u64 r = 1;
        a %= p;
        while (k) {
            if (k & 1) r = mul(r, a);
            a = mul(a, a);
            k >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
};

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

u64 primitive_root(u64 p) {
    std::vector<u64> factors;
    u64 m = p - 1;
    for (u64 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) factors.push_back(m);
    Fp f{p};
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (u64 q : factors) ok = ok && f.pow(g, (p - 1) / q) != 1;
        if (ok) return g;
    }
    throw Error("no primitive root found");
}

// Row-reduces the vectors (as rows) into reduced echelon form; returns the
// pivot columns. Zero rows are dropped.
std::vector<int> rref(Mat& rows, const Fp& f) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const int ncols = static_cast<int>(rows[0].size());
    std::size_t r = 0;
    for (int c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const u64 inv = f.inv(rows[r][c]);
        for (auto& x : rows[r]) x = f.mul(x, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const u64 m = rows[i][c];
            for (int j = 0; j < ncols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(m, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

// Basis of {u : A u = 0}.
Mat nullspace(Mat a, const Fp& f) {
    const int n = static_cast<int>(a.size());
    const int m = n ? static_cast<int>(a[0].size()) : 0;
    auto piv = rref(a, f);
    std::vector<char> is_piv(m, 0);
    for (int c : piv) is_piv[c] = 1;
    Mat out;
    for (int free = 0; free < m; ++free) {
        if (is_piv[free]) continue;
        std::vector<u64> u(m, 0);
        u[free] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) u[piv[r]] = f.sub(0, a[r][free]);
        out.push_back(std::move(u));
    }
    return out;
}

// Characteristic polynomial det(xI - A), lowest degree first, via Hessenberg form.
std::vector<u64> charpoly(Mat a, const Fp& f) {
    const int n = static_cast<int>(a.size());
    for (int j = 0; j + 2 < n; ++j) {
        int piv = -1;
        for (int i = j + 1; i < n; ++i)
            if (a[i][j]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != j + 1) {
            std::swap(a[piv], a[j + 1]);
            for (int i = 0; i < n; ++i) std::swap(a[i][piv], a[i][j + 1]);
        }
        const u64 inv = f.inv(a[j + 1][j]);
        for (int i = j + 2; i < n; ++i) {
            if (!a[i][j]) continue;
            const u64 m = f.mul(a[i][j], inv);
            for (int k = 0; k < n; ++k) a[i][k] = f.sub(a[i][k], f.mul(m, a[j + 1][k]));
            for (int k = 0; k < n; ++k) a[k][j + 1] = f.add(a[k][j + 1], f.mul(m, a[k][i]));
        }
    }
    std::vector<std::vector<u64>> polys(n + 1);
    polys[0] = {1};
    for (int k = 0; k < n; ++k) {
        // p_{k+1} = (x - a_kk) p_k - sum_{i<k} a_ik (prod_{m=i+1..k} a_{m,m-1}) p_i
        std::vector<u64> next(k + 2, 0);
        for (int d = 0; d <= k; ++d) {
            next[d + 1] = f.add(next[d + 1], polys[k][d]);
            next[d] = f.sub(next[d], f.mul(a[k][k], polys[k][d]));
        }
        u64 prod = 1;
        for (int i = k - 1; i >= 0; --i) {
            prod = f.mul(prod, a[i + 1][i]);
            const u64 coef = f.mul(a[i][k], prod);
            if (!coef) continue;
            for (std::size_t d = 0; d < polys[i].size(); ++d) next[d] = f.sub(next[d], f.mul(coef, polys[i][d]));
        }
        polys[k + 1] = std::move(next);
    }
    return polys[n];
}

struct Dixon {
    const FiniteGroup& g;
    int r;
    Fp f;
    std::vector<int> c;  // c[(i*r + j)*r + k]
    std::mt19937_64 rng{0x9e3779b97f4a7c15ULL};

    Dixon(const FiniteGroup& grp, u64 p) : g(grp), r(grp.num_classes()), f{p}, c(static_cast<std::size_t>(r) * r * r, 0) {
        for (int k = 0; k < r; ++k) {
            const int z = g.classes()[k].representative;
            for (int x = 0; x < g.order(); ++x) {
                const int i = g.class_of(x);
                const int j = g.class_of(g.mul(g.inv(x), z));
                ++c[(static_cast<std::size_t>(i) * r + j) * r + k];
            }
        }
    }

    Mat random_combination() {
        std::uniform_int_distribution<u64> pick(0, f.p - 1);
        std::vector<u64> coef(r);
        for (auto& x : coef) x = pick(rng);
        Mat m(r, std::vector<u64>(r, 0));
        for (int i = 0; i < r; ++i) {
            if (!coef[i]) continue;
            for (int j = 0; j < r; ++j)
                for (int k = 0; k < r; ++k) {
                    const int v = c[(static_cast<std::size_t>(i) * r + j) * r + k];
                    if (v) m[j][k] = f.add(m[j][k], f.mul(coef[i], static_cast<u64>(v) % f.p));
                }
        }
        return m;
    }

    // `basis` rows are in reduced echelon form (pivots given): an invariant subspace.
    std::vector<Mat> split(const Mat& basis, const std::vector<int>& piv) {
        const int d = static_cast<int>(basis.size());
        for (int attempt = 0; attempt < 64; ++attempt) {
            const Mat m = random_combination();
            // A[t][s]: coordinate t of M v_s.
            Mat a(d, std::vector<u64>(d, 0));
            for (int s = 0; s < d; ++s)
                for (int t = 0; t < d; ++t) {
                    u64 acc = 0;
                    const auto& row = m[piv[t]];
                    for (int k = 0; k < r; ++k)
                        if (basis[s][k]) acc = f.add(acc, f.mul(row[k], basis[s][k]));
                    a[t][s] = acc;
                }
            const auto cp = charpoly(a, f);
            std::vector<Mat> pieces;
            int total = 0;
            for (u64 lambda = 0; lambda < f.p && total < d; ++lambda) {
                u64 val = 0;
                for (auto it = cp.rbegin(); it != cp.rend(); ++it) val = f.add(f.mul(val, lambda), *it);
                if (val) continue;
                Mat shifted = a;
                for (int t = 0; t < d; ++t) shifted[t][t] = f.sub(shifted[t][t], lambda);
                auto null = nullspace(shifted, f);
                Mat vecs;
                for (const auto& u : null) {
                    std::vector<u64> v(r, 0);
                    for (int s = 0; s < d; ++s)
                        if (u[s])
                            for (int k = 0; k < r; ++k) v[k] = f.add(v[k], f.mul(u[s], basis[s][k]));
                    vecs.push_back(std::move(v));
                }
                total += static_cast<int>(vecs.size());
                pieces.push_back(std::move(vecs));
            }
            if (total != d) throw Error("class algebra not diagonalizable mod " + std::to_string(f.p));
            if (pieces.size() > 1) return pieces;
        }
        throw Error("failed to split a common eigenspace of the class algebra");
    }

    std::vector<std::vector<u64>> eigenvectors() {
        std::vector<std::vector<u64>> done;
        Mat id(r, std::vector<u64>(r, 0));
        for (int i = 0; i < r; ++i) id[i][i] = 1;
        std::vector<Mat> work{id};
        while (!work.empty()) {
            Mat cur = std::move(work.back());
            work.pop_back();
            auto piv = rref(cur, f);
            if (cur.size() == 1) {
                done.push_back(cur[0]);
                continue;
            }
            for (auto& piece : split(cur, piv)) work.push_back(std::move(piece));
        }
        return done;
    }
};

}  // namespace

void sort_table_rows(TableRows& rows) {
    using Key = std::tuple<std::int64_t, bool, std::vector<std::pair<long long, long long>>>;
    auto key = [](const std::vector<Cyclotomic>& row) {
        bool trivial = true;
        std::vector<std::pair<long long, long long>> vals;
        for (const auto& v : row) {
            trivial = trivial && v == Cyclotomic(1);
            auto z = v.to_complex();
            vals.emplace_back(std::llround(z.real() * 1e8), std::llround(z.imag() * 1e8));
        }
        return Key{row.empty() ? 0 : row[0].as_integer(), !trivial, std::move(vals)};
    };
    std::vector<std::pair<Key, std::size_t>> keyed;
    for (std::size_t i = 0; i < rows.size(); ++i) keyed.emplace_back(key(rows[i]), i);
    std::sort(keyed.begin(), keyed.end());
    TableRows out;
    for (auto& [_, i] : keyed) out.push_back(std::move(rows[i]));
    rows = std::move(out);
}

TableRows compute_character_table(const FiniteGroup& g) {
    const int n = g.order();
    const int e = g.exponent();
    const int r = g.num_classes();

    u64 p = static_cast<u64>(e) + 1;
    const double floor_p = std::max(2.0 * std::sqrt(static_cast<double>(n)), 3.0);
    while (!is_prime(p) || static_cast<double>(p) <= floor_p) p += static_cast<u64>(e);
    const Fp f{p};
    const u64 z_e = f.pow(primitive_root(p), (p - 1) / static_cast<u64>(e));

    Dixon dixon(g, p);
    auto vecs = dixon.eigenvectors();
    if (static_cast<int>(vecs.size()) != r) throw Error("found " + std::to_string(vecs.size()) + " characters, expected " +
                                                        std::to_string(r));

    std::vector<std::vector<int>> powers(r);
    for (int i = 0; i < r; ++i) {
        const int o = g.element_order(g.classes()[i].representative);
        for (int j = 0; j < o; ++j) powers[i].push_back(g.class_power(i, j));
    }

    TableRows rows;
    for (auto& v : vecs) {
        // Normalise so the identity class has eigenvalue 1.
        const u64 s0 = f.inv(v[0]);
        for (auto& x : v) x = f.mul(x, s0);
        u64 sum = 0;
        for (int i = 0; i < r; ++i)
            sum = f.add(sum, f.mul(f.mul(v[i], v[g.class_inverse(i)]), f.inv(static_cast<u64>(g.class_size(i)))));
        const u64 d2 = f.mul(static_cast<u64>(n) % p, f.inv(sum));
        u64 degree = 0;
        for (u64 d = 1; d * d <= static_cast<u64>(n); ++d)
            if (d * d % p == d2) {
                degree = d;
                break;
            }
        if (!degree) throw Error("could not recover a character degree mod " + std::to_string(p));

        std::vector<u64> chi(r);
        for (int i = 0; i < r; ++i)
            chi[i] = f.mul(f.mul(v[i], degree), f.inv(static_cast<u64>(g.class_size(i))));

        std::vector<Cyclotomic> row;
        for (int i = 0; i < r; ++i) {
            const int o = static_cast<int>(powers[i].size());
            const u64 z_o = f.pow(z_e, static_cast<u64>(e / o));
            const u64 z_o_inv = f.inv(z_o);
            const u64 o_inv = f.inv(static_cast<u64>(o));
            std::vector<std::int64_t> coeffs(e, 0);
            for (int k = 0; k < o; ++k) {
                u64 acc = 0;
                const u64 step = f.pow(z_o_inv, static_cast<u64>(k));
                u64 w = 1;
                for (int j = 0; j < o; ++j) {
                    acc = f.add(acc, f.mul(chi[powers[i][j]], w));
                    w = f.mul(w, step);
                }
                const u64 mult = f.mul(acc, o_inv);
                if (mult > degree) throw Error("eigenvalue multiplicity out of range while lifting a character");
                coeffs[static_cast<std::size_t>(k) * (e / o)] = static_cast<std::int64_t>(mult);
            }
            row.push_back(Cyclotomic::from_powers(e, coeffs));
        }
        rows.push_back(std::move(row));
    }
    sort_table_rows(rows);

    // Numeric sanity check of row orthonormality; the tests check it exactly.
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = a; b < rows.size(); ++b) {
            std::complex<double> s = 0;
            for (int i = 0; i < r; ++i)
                s += static_cast<double>(g.class_size(i)) * rows[a][i].to_complex() * std::conj(rows[b][i].to_complex());
            s /= static_cast<double>(n);
            if (std::abs(s - (a == b ? 1.0 : 0.0)) > 1e-6)
                throw Error("computed character table of " + g.name() + " fails orthonormality");
        }
    return rows;
}

}  // namespace gl6
