#pragma once

// Bridges from library types to the plain tables the oracles take.

#include "oracles.hpp"
#include "ringext/bimodule.hpp"
#include "ringext/catalog.hpp"
#include "ringext/obstruction.hpp"
#include "ringext/tuple_family.hpp"

namespace support {

inline oracle::Ring to_oracle(const ringext::FinRing& r) {
    return {r.order(), r.group().add_table(), r.mul_table(), r.has_one() ? r.one() : -1};
}

inline oracle::Module to_oracle(const ringext::BimoduleAction& m) {
    return {to_oracle(m.ring()), m.group().add_table(), m.left_table(), m.right_table()};
}

inline oracle::Family to_oracle(const ringext::TupleFamily& k) {
    oracle::Family out;
    const int n = k.n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            out.eta[{x, y}] = k.eta[k.i2(x, y)];
            for (int z = 0; z < n; ++z) {
                const auto i = k.i3(x, y, z);
                out.xi[{x, y, z}] = k.xi[i];
                out.alpha[{x, y, z}] = k.alpha[i];
                out.lambda[{x, y, z}] = k.lambda[i];
                out.rho[{x, y, z}] = k.rho[i];
            }
        }
    return out;
}

inline oracle::Table square(const std::vector<int>& flat, int n) {
    oracle::Table t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = flat[static_cast<std::size_t>(x) * n + y];
    return t;
}

/// Bimodule axioms by enumeration, including 1a = a = a1.
inline bool is_bimodule(const oracle::Module& m) {
    const auto& R = m.R;
    const int n = R.n, na = m.order();
    for (int a = 0; a < na; ++a) {
        if (m.left[R.one][a] != a || m.right[R.one][a] != a) return false;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (m.left[R.add[x][y]][a] != m.plus(m.left[x][a], m.left[y][a])) return false;
                if (m.right[R.add[x][y]][a] != m.plus(m.right[x][a], m.right[y][a])) return false;
                if (m.left[R.mul[x][y]][a] != m.left[x][m.left[y][a]]) return false;
                if (m.right[R.mul[x][y]][a] != m.right[y][m.right[x][a]]) return false;
                if (m.right[y][m.left[x][a]] != m.left[x][m.right[y][a]]) return false;
            }
        for (int b = 0; b < na; ++b)
            for (int x = 0; x < n; ++x) {
                if (m.left[x][m.plus(a, b)] != m.plus(m.left[x][a], m.left[x][b])) return false;
                if (m.right[x][m.plus(a, b)] != m.plus(m.right[x][a], m.right[x][b])) return false;
            }
    }
    return true;
}

/// Every bimodule structure of R on the group, by exhaustive search over
/// additive self-maps for each row (tiny cases only).
inline std::vector<oracle::Module> all_bimodules(const oracle::Ring& r, const oracle::Table& add) {
    const int na = static_cast<int>(add.size());
    std::vector<std::vector<int>> endos;
    std::vector<int> f(na, 0);
    while (true) {
        bool ok = true;
        for (int a = 0; a < na && ok; ++a)
            for (int b = 0; b < na && ok; ++b) ok = f[add[a][b]] == add[f[a]][f[b]];
        if (ok) endos.push_back(f);
        int i = na - 1;
        while (i >= 0 && ++f[i] == na) f[i--] = 0;
        if (i < 0) break;
    }
    std::vector<oracle::Module> out;
    const std::size_t slots = 2 * static_cast<std::size_t>(r.n);
    std::vector<std::size_t> pick(slots, 0);
    while (true) {
        oracle::Module m{r, add, {}, {}};
        for (int x = 0; x < r.n; ++x) {
            m.left.push_back(endos[pick[x]]);
            m.right.push_back(endos[pick[r.n + x]]);
        }
        if (is_bimodule(m)) out.push_back(m);
        std::size_t i = slots;
        while (i > 0 && ++pick[i - 1] == endos.size()) pick[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

/// The F2-linear map on bit masks with e_i -> images[i].
inline ringext::AdditiveEndo linear_endo(int dim, const std::vector<int>& images) {
    std::vector<int> map(1u << dim, 0);
    for (int m = 0; m < (1 << dim); ++m)
        for (int i = 0; i < dim; ++i)
            if (m >> i & 1) map[m] ^= images[i];
    return {map};
}

/// A pre-extension of A by R = F2[e] with no extension. A = F2^4 on
/// g, u, k, v with g^2 = k the only nonzero product; e acts by
/// phi_e: g -> v -> k and psi_e: g -> u -> k. Then phi_e^2 = l_g,
/// psi_e^2 = r_g and the obstruction is alpha(e,e,e) = phi_e(g) - psi_e(g)
/// = u + v, not a coboundary.
inline ringext::PreExtension obstructed_pre_extension() {
    using namespace ringext;
    const auto r = catalog::dual_numbers_f2();
    const auto a = catalog::f2_algebra(4, {{4, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}, -1, "A");
    const auto phi = linear_endo(4, {8, 0, 0, 4});
    const auto psi = linear_endo(4, {2, 4, 0, 0});
    const auto id = identity_endo(16);
    return {r, a, {zero_endo(16), id, phi, endo_add(a.group(), id, phi)},
            {zero_endo(16), id, psi, endo_add(a.group(), id, psi)}, {}, {}};
}

}  // namespace support
