#pragma once

// Independent brute-force oracles. Nothing here calls the library's
// evaluators; inputs are plain tables.

#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Table = std::vector<std::vector<int>>;
using Int = boost::multiprecision::cpp_int;

struct Ring {
    int n;
    Table add, mul;
    int one;  // -1 when absent
};

inline int neg_of(const Table& add, int a) {
    for (int b = 0; b < static_cast<int>(add.size()); ++b)
        if (add[a][b] == 0) return b;
    return -1;
}

/// Ring axioms by enumeration (0 is the additive identity by convention).
inline bool is_ring(const Ring& r) {
    const int n = r.n;
    for (int a = 0; a < n; ++a) {
        if (r.add[a][0] != a || neg_of(r.add, a) < 0) return false;
        if (r.one >= 0 && (r.mul[r.one][a] != a || r.mul[a][r.one] != a)) return false;
        for (int b = 0; b < n; ++b) {
            if (r.add[a][b] != r.add[b][a]) return false;
            for (int c = 0; c < n; ++c) {
                if (r.add[r.add[a][b]][c] != r.add[a][r.add[b][c]]) return false;
                if (r.mul[r.mul[a][b]][c] != r.mul[a][r.mul[b][c]]) return false;
                if (r.mul[a][r.add[b][c]] != r.add[r.mul[a][b]][r.mul[a][c]]) return false;
                if (r.mul[r.add[a][b]][c] != r.add[r.mul[a][c]][r.mul[b][c]]) return false;
            }
        }
    }
    return true;
}

/// Coefficients: an abelian group plus left/right actions of a ring.
struct Module {
    Ring R;
    Table add;
    Table left, right;  // left[x][a] = xa, right[x][a] = ax
    int order() const { return static_cast<int>(add.size()); }
    int plus(int a, int b) const { return add[a][b]; }
    int minus(int a) const { return neg_of(add, a); }
    int sum(std::initializer_list<int> v) const {
        int s = 0;
        for (int x : v) s = add[s][x];
        return s;
    }
};

/// The ring on A x R with (a,x)+(b,y) = (a+b+f(x,y), x+y) and
/// (a,x)(b,y) = (xb+ay+g(x,y), xy); element (a,x) has index a + |A| x.
inline Ring crossed_ring(const Module& m, const Table& f, const Table& g) {
    const int na = m.order(), nr = m.R.n, n = na * nr;
    Ring s{n, Table(n, std::vector<int>(n)), Table(n, std::vector<int>(n)), na * m.R.one};
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            const int a = p % na, x = p / na, b = q % na, y = q / na;
            s.add[p][q] = m.sum({a, b, f[x][y]}) + na * m.R.add[x][y];
            s.mul[p][q] = m.sum({m.left[x][b], m.right[y][a], g[x][y]}) + na * m.R.mul[x][y];
        }
    return s;
}

/// (f, g) is a factor set iff the crossed ring is a ring with zero (0,0)
/// and identity (0,1).
inline bool is_factor_set(const Module& m, const Table& f, const Table& g) {
    return is_ring(crossed_ring(m, f, g));
}

/// Class count of normalized factor sets: |Z2| / |B2| by enumeration, where
/// B2 is the image of t -> (t(x)+t(y)-t(x+y), xt(y)-t(xy)+t(x)y).
struct H2Count {
    std::size_t cocycles = 0, coboundaries = 0;
};
inline H2Count h2_count(const Module& m) {
    const int nr = m.R.n, na = m.order(), one = m.R.one;
    std::vector<std::pair<int, int>> fslots, gslots;
    for (int x = 1; x < nr; ++x)
        for (int y = 1; y < nr; ++y) {
            fslots.push_back({x, y});
            if (x != one && y != one) gslots.push_back({x, y});
        }
    const std::size_t total = fslots.size() + gslots.size();
    std::vector<int> v(total, 0);
    H2Count out;
    while (true) {
        Table f(nr, std::vector<int>(nr, 0)), g = f;
        for (std::size_t i = 0; i < fslots.size(); ++i) f[fslots[i].first][fslots[i].second] = v[i];
        for (std::size_t i = 0; i < gslots.size(); ++i) g[gslots[i].first][gslots[i].second] = v[fslots.size() + i];
        if (is_factor_set(m, f, g)) ++out.cocycles;
        std::size_t i = total;
        while (i > 0 && ++v[i - 1] == na) v[--i] = 0;
        if (i == 0) break;
    }
    std::set<std::pair<Table, Table>> b;
    std::vector<int> free_pos;
    for (int x = 1; x < nr; ++x)
        if (x != one) free_pos.push_back(x);
    std::vector<int> t(nr, 0);
    while (true) {
        Table f(nr, std::vector<int>(nr)), g = f;
        for (int x = 0; x < nr; ++x)
            for (int y = 0; y < nr; ++y) {
                f[x][y] = m.sum({t[x], t[y], m.minus(t[m.R.add[x][y]])});
                g[x][y] = m.sum({m.left[x][t[y]], m.minus(t[m.R.mul[x][y]]), m.right[y][t[x]]});
            }
        b.insert({f, g});
        std::size_t i = free_pos.size();
        while (i > 0 && ++t[free_pos[i - 1]] == na) t[free_pos[--i]] = 0;
        if (i == 0) break;
    }
    out.coboundaries = b.size();
    return out;
}

/// Degree-3 tuple data as dictionaries over argument tuples.
struct Family {
    std::map<std::vector<int>, int> xi, eta, alpha, lambda, rho;
};

inline Family zero_family(int n) {
    Family k;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            k.eta[{x, y}] = 0;
            for (int z = 0; z < n; ++z) k.xi[{x, y, z}] = k.alpha[{x, y, z}] = k.lambda[{x, y, z}] = k.rho[{x, y, z}] = 0;
        }
    return k;
}

/// Coboundary of (nu, mu), transcribed directly.
inline Family delta2(const Module& m, const Table& nu, const Table& mu) {
    const auto& A = m.R.add;
    const auto& P = m.R.mul;
    auto L = [&](int x, int a) { return m.left[x][a]; };
    auto Rt = [&](int a, int x) { return m.right[x][a]; };
    auto N = [&](int a) { return m.minus(a); };
    Family k;
    const int n = m.R.n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            k.eta[{x, y}] = m.sum({mu[x][y], N(mu[y][x])});
            for (int z = 0; z < n; ++z) {
                k.xi[{x, y, z}] = m.sum({mu[y][z], N(mu[A[x][y]][z]), mu[x][A[y][z]], N(mu[x][y])});
                k.alpha[{x, y, z}] = m.sum({L(x, nu[y][z]), N(nu[P[x][y]][z]), nu[x][P[y][z]], N(Rt(nu[x][y], z))});
                k.lambda[{x, y, z}] =
                    m.sum({nu[x][A[y][z]], N(nu[x][y]), N(nu[x][z]), L(x, mu[y][z]), N(mu[P[x][y]][P[x][z]])});
                k.rho[{x, y, z}] =
                    m.sum({nu[A[x][y]][z], N(nu[x][z]), N(nu[y][z]), Rt(mu[x][y], z), N(mu[P[x][z]][P[y][z]])});
            }
        }
    return k;
}

/// Numbers of the failing relations among 1..18.
inline std::set<int> failing_relations(const Module& m, const Family& k) {
    const int n = m.R.n, one = m.R.one;
    const auto& A = m.R.add;
    const auto& P = m.R.mul;
    auto L = [&](int x, int a) { return m.left[x][a]; };
    auto Rt = [&](int a, int x) { return m.right[x][a]; };
    auto N = [&](int a) { return m.minus(a); };
    auto xi = [&](int a, int b, int c) { return k.xi.at({a, b, c}); };
    auto eta = [&](int a, int b) { return k.eta.at({a, b}); };
    auto al = [&](int a, int b, int c) { return k.alpha.at({a, b, c}); };
    auto la = [&](int a, int b, int c) { return k.lambda.at({a, b, c}); };
    auto rho = [&](int a, int b, int c) { return k.rho.at({a, b, c}); };
    std::set<int> bad;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (x == 0 || y == 0 || z == 0) {
                    if (xi(x, y, z)) bad.insert(2);
                    if (al(x, y, z)) bad.insert(16);
                }
                if (x == one || y == one || z == one)
                    if (al(x, y, z)) bad.insert(15);
                if (x == one || x == 0 || y == 0 || z == 0)
                    if (la(x, y, z)) bad.insert(17);
                if (z == one || x == 0 || y == 0 || z == 0)
                    if (rho(x, y, z)) bad.insert(18);
                for (int t = 0; t < n; ++t) {
                    if (m.sum({xi(y, z, t), N(xi(A[x][y], z, t)), xi(x, A[y][z], t), N(xi(x, y, A[z][t])), xi(x, y, z)}))
                        bad.insert(1);
                    if (m.sum({xi(x, y, z), N(xi(x, z, y)), xi(z, x, y), N(eta(x, z)), eta(A[x][y], z), N(eta(y, z))}))
                        bad.insert(3);
                    if (m.sum({eta(x, y), eta(y, x)})) bad.insert(4);
                    if (eta(x, x)) bad.insert(5);
                    if (m.sum({L(x, eta(y, z)), N(eta(P[x][y], P[x][z])), N(la(x, y, z)), la(x, z, y)})) bad.insert(6);
                    if (m.sum({Rt(eta(x, y), z), N(eta(P[x][z], P[y][z])), N(rho(x, y, z)), rho(y, x, z)})) bad.insert(7);
                    if (m.sum({L(x, xi(y, z, t)), N(xi(P[x][y], P[x][z], P[x][t])),
                               N(m.sum({la(x, z, t), N(la(x, A[y][z], t)), la(x, y, A[z][t]), N(la(x, y, z))}))}))
                        bad.insert(8);
                    if (m.sum({Rt(xi(x, y, z), t), N(xi(P[x][t], P[y][t], P[z][t])),
                               N(m.sum({rho(y, z, t), N(rho(A[x][y], z, t)), rho(x, A[y][z], t), N(rho(x, y, t))}))}))
                        bad.insert(9);
                    const int xz = P[x][z], xt = P[x][t], yz = P[y][z], yt = P[y][t];
                    const int lhs = m.sum({rho(x, y, A[z][t]), N(rho(x, y, z)), N(rho(x, y, t)), la(x, z, t), la(y, z, t),
                                           N(la(A[x][y], z, t))});
                    const int rhs = m.sum({N(xi(A[xz][xt], yz, yt)), xi(xz, xt, yz), N(eta(xt, yz)), xi(A[xz][yz], xt, yt),
                                           N(xi(xz, yz, xt))});
                    if (lhs != rhs) bad.insert(10);
                    if (m.sum({al(x, y, A[z][t]), N(al(x, y, z)), N(al(x, y, t)),
                               N(m.sum({L(x, la(y, z, t)), la(x, yz, yt), N(la(P[x][y], z, t))}))}))
                        bad.insert(11);
                    if (m.sum({al(x, A[y][z], t), N(al(x, y, t)), N(al(x, z, t)),
                               N(m.sum({L(x, rho(y, z, t)), N(rho(P[x][y], P[x][z], t)), la(x, P[y][t], P[z][t]),
                                        N(Rt(la(x, y, z), t))}))}))
                        bad.insert(12);
                    if (m.sum({al(A[x][y], z, t), N(al(x, z, t)), N(al(y, z, t)),
                               N(m.sum({N(Rt(rho(x, y, z), t)), N(rho(xz, yz, t)), rho(x, y, P[z][t])}))}))
                        bad.insert(13);
                    if (m.sum({L(x, al(y, z, t)), N(al(P[x][y], z, t)), al(x, P[y][z], t), N(al(x, y, P[z][t])),
                               Rt(al(x, y, z), t)}))
                        bad.insert(14);
                }
            }
    return bad;
}

inline Family negate_lambda(const Module& m, Family k) {
    for (auto& [key, v] : k.lambda) v = m.minus(v);
    return k;
}

/// All zero-normalized families (every argument nonzero), in slot order
/// xi, eta, alpha, lambda, rho with lexicographic arguments.
inline void for_each_normalized_family(const Module& m, const std::function<void(const Family&)>& visit) {
    const int n = m.R.n;
    std::vector<std::pair<int, std::vector<int>>> slots;  // (table, args)
    for (int which : {0, 1, 2, 3, 4})
        for (int x = 1; x < n; ++x)
            for (int y = 1; y < n; ++y) {
                if (which == 1) {
                    slots.push_back({1, {x, y}});
                    continue;
                }
                for (int z = 1; z < n; ++z) slots.push_back({which, {x, y, z}});
            }
    std::vector<int> v(slots.size(), 0);
    while (true) {
        Family k = zero_family(n);
        for (std::size_t i = 0; i < slots.size(); ++i) {
            auto* tab = std::array<std::map<std::vector<int>, int>*, 5>{&k.xi, &k.eta, &k.alpha, &k.lambda, &k.rho}[slots[i].first];
            (*tab)[slots[i].second] = v[i];
        }
        visit(k);
        std::size_t i = v.size();
        while (i > 0 && ++v[i - 1] == m.order()) v[--i] = 0;
        if (i == 0) break;
    }
}

/// All normalized (nu, mu): mu vanishes on 0, nu on 0 and 1.
inline void for_each_normalized_pair(const Module& m, const std::function<void(const Table&, const Table&)>& visit) {
    const int n = m.R.n, one = m.R.one;
    std::vector<std::pair<int, std::pair<int, int>>> slots;
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y) slots.push_back({0, {x, y}});
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y)
            if (x != one && y != one) slots.push_back({1, {x, y}});
    std::vector<int> v(slots.size(), 0);
    while (true) {
        Table mu(n, std::vector<int>(n, 0)), nu = mu;
        for (std::size_t i = 0; i < slots.size(); ++i)
            (slots[i].first == 0 ? mu : nu)[slots[i].second.first][slots[i].second.second] = v[i];
        visit(nu, mu);
        std::size_t i = v.size();
        while (i > 0 && ++v[i - 1] == m.order()) v[--i] = 0;
        if (i == 0) break;
    }
}

inline std::vector<int> flatten(const Family& k) {
    std::vector<int> out;
    for (const auto* t : {&k.xi, &k.eta, &k.alpha, &k.lambda, &k.rho})
        for (const auto& [key, v] : *t) out.push_back(v);
    return out;
}

/// |Z3|, |B3| of the Shukla-form complex by enumeration: cocycles are
/// normalized families whose -lambda image passes all 18 relations,
/// coboundaries the -lambda images of delta2.
struct H3Count {
    std::size_t cocycles = 0, coboundaries = 0;
};
inline H3Count h3_count(const Module& m) {
    H3Count out;
    for_each_normalized_family(m, [&](const Family& k) {
        if (failing_relations(m, negate_lambda(m, k)).empty()) ++out.cocycles;
    });
    std::set<std::vector<int>> b;
    for_each_normalized_pair(m, [&](const Table& nu, const Table& mu) { b.insert(flatten(negate_lambda(m, delta2(m, nu, mu)))); });
    out.coboundaries = b.size();
    return out;
}

/// Laplace-expansion determinant (small matrices only).
inline Int determinant(const std::vector<std::vector<Int>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Int d = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Int>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Int> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(a[r][j]);
            minor.push_back(row);
        }
        const Int term = a[0][c] * determinant(minor);
        d += (c % 2 == 0) ? term : Int(-term);
    }
    return d;
}

/// k-th determinantal divisor: gcd of all k x k minors.
inline Int determinantal_divisor(const std::vector<std::vector<Int>>& a, std::size_t k) {
    const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
    Int g = 0;
    std::vector<std::size_t> rs(k), cs(k);
    std::function<void(std::size_t, std::size_t)> pick_cols;
    std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t i, std::size_t from) {
        if (i == k) {
            pick_cols(0, 0);
            return;
        }
        for (std::size_t r = from; r < rows; ++r) {
            rs[i] = r;
            pick_rows(i + 1, r + 1);
        }
    };
    pick_cols = [&](std::size_t i, std::size_t from) {
        if (i == k) {
            std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
            for (std::size_t p = 0; p < k; ++p)
                for (std::size_t q = 0; q < k; ++q) m[p][q] = a[rs[p]][cs[q]];
            Int d = determinant(m);
            if (d < 0) d = -d;
            g = boost::multiprecision::gcd(g, d);
            return;
        }
        for (std::size_t c = from; c < cols; ++c) {
            cs[i] = c;
            pick_cols(i + 1, c + 1);
        }
    };
    pick_rows(0, 0);
    return g;
}

/// Rank over F_p by elimination on a copy.
inline std::size_t rank_mod_p(const std::vector<std::vector<Int>>& a, long long p) {
    std::vector<std::vector<long long>> m;
    for (const auto& row : a) {
        std::vector<long long> r;
        for (const auto& v : row) {
            Int x = v % p;
            if (x < 0) x += p;
            r.push_back(static_cast<long long>(x));
        }
        m.push_back(r);
    }
    auto power = [p](long long b, long long e) {
        long long r = 1;
        for (b %= p; e > 0; e >>= 1, b = b * b % p)
            if (e & 1) r = r * b % p;
        return r;
    };
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        const long long inv = power(m[rank][c], p - 2);
        for (auto& v : m[rank]) v = v * inv % p;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const long long f = m[r][c];
            for (std::size_t j = 0; j < cols; ++j) m[r][j] = ((m[r][j] - f * m[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

/// F_p coordinates of every element of an elementary abelian p-group, from
/// a greedily chosen basis.
inline std::vector<std::vector<int>> coordinates_mod_p(const Table& add, int p) {
    const int n = static_cast<int>(add.size());
    std::vector<int> basis;
    std::map<int, std::vector<int>> coords{{0, {}}};
    for (int e = 1; e < n; ++e) {
        if (coords.count(e)) continue;
        basis.push_back(e);
        std::map<int, std::vector<int>> next;
        for (const auto& [v, c] : coords) {
            int w = v;
            for (int j = 0; j < p; ++j) {
                auto cc = c;
                cc.push_back(j);
                next[w] = cc;
                w = add[w][e];
            }
        }
        coords = std::move(next);
    }
    std::vector<std::vector<int>> out(n);
    for (auto& [v, c] : coords) {
        c.resize(basis.size(), 0);
        out[v] = c;
    }
    return out;
}

/// Is the family in the span of delta2 of normalized pairs? Rank test over
/// F_p on one generator per slot and basis element.
inline bool is_coboundary_mod_p(const Module& m, const Family& target, int p) {
    const auto coords = coordinates_mod_p(m.add, p);
    auto vec = [&](const Family& k) {
        std::vector<Int> v;
        for (int e : flatten(k))
            for (int c : coords[e]) v.push_back(c);
        return v;
    };
    const int n = m.R.n, one = m.R.one;
    std::vector<std::vector<Int>> rows;
    for (int which = 0; which < 2; ++which)
        for (int x = 1; x < n; ++x)
            for (int y = 1; y < n; ++y) {
                if (which == 1 && (x == one || y == one)) continue;
                for (int e = 1; e < m.order(); ++e) {
                    Table nu(n, std::vector<int>(n, 0)), mu = nu;
                    (which == 0 ? mu : nu)[x][y] = e;
                    rows.push_back(vec(delta2(m, nu, mu)));
                }
            }
    const auto base = rank_mod_p(rows, p);
    rows.push_back(vec(target));
    return rank_mod_p(rows, p) == base;
}

/// Extensions on A x R with (a,x)+(b,y) = (a+b+f(x,y), x+y) and
/// (a,x)(b,y) = (ab+phi_x(b)+psi_y(a)+g(x,y), xy) for all normalized f, g,
/// counted up to (a,x) -> (a+t(x), x).
inline std::size_t extension_class_count(const Ring& r, const Ring& a, const Table& phi, const Table& psi) {
    const int nr = r.n, na = a.n, n = nr * na, one = r.one;
    auto sum = [&](std::initializer_list<int> v) {
        int s = 0;
        for (int e : v) s = a.add[s][e];
        return s;
    };
    std::vector<std::pair<int, int>> fs, gs;
    for (int x = 1; x < nr; ++x)
        for (int y = 1; y < nr; ++y) {
            fs.push_back({x, y});
            if (x != one && y != one) gs.push_back({x, y});
        }
    std::vector<Ring> found;
    std::vector<int> v(fs.size() + gs.size(), 0);
    while (true) {
        Table f(nr, std::vector<int>(nr, 0)), g = f;
        for (std::size_t i = 0; i < fs.size(); ++i) f[fs[i].first][fs[i].second] = v[i];
        for (std::size_t i = 0; i < gs.size(); ++i) g[gs[i].first][gs[i].second] = v[fs.size() + i];
        Ring s{n, Table(n, std::vector<int>(n)), Table(n, std::vector<int>(n)), na * one};
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                const int ea = p % na, x = p / na, eb = q % na, y = q / na;
                s.add[p][q] = sum({ea, eb, f[x][y]}) + na * r.add[x][y];
                s.mul[p][q] = sum({a.mul[ea][eb], phi[x][eb], psi[y][ea], g[x][y]}) + na * r.mul[x][y];
            }
        if (is_ring(s)) found.push_back(s);
        std::size_t i = v.size();
        while (i > 0 && ++v[i - 1] == na) v[--i] = 0;
        if (i == 0) break;
    }
    // classes under theta(a,x) = (a + t(x), x), t(0) = t(1) = 0
    auto iso = [&](const Ring& s1, const Ring& s2) {
        std::vector<int> t(nr, 0);
        while (true) {
            auto th = [&](int p) { return a.add[p % na][t[p / na]] + na * (p / na); };
            bool ok = true;
            for (int p = 0; p < n && ok; ++p)
                for (int q = 0; q < n && ok; ++q)
                    ok = th(s1.add[p][q]) == s2.add[th(p)][th(q)] && th(s1.mul[p][q]) == s2.mul[th(p)][th(q)];
            if (ok) return true;
            int i = nr - 1;
            while (i > 0 && (i == one || ++t[i] == na)) {
                if (i != one) t[i] = 0;
                --i;
            }
            if (i == 0) return false;
        }
    };
    std::vector<Ring> reps;
    for (const auto& s : found) {
        bool seen = false;
        for (const auto& rep : reps)
            if (iso(s, rep)) {
                seen = true;
                break;
            }
        if (!seen) reps.push_back(s);
    }
    return reps.size();
}

}  // namespace oracle
