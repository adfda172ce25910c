#include "ringext/tuple_family.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fp_linear.hpp"

namespace ringext {

TupleFamily TupleFamily::zero(int n) {
    const auto n3 = static_cast<std::size_t>(n) * n * n, n2 = static_cast<std::size_t>(n) * n;
    return {n, std::vector<int>(n3, 0), std::vector<int>(n2, 0), std::vector<int>(n3, 0),
            std::vector<int>(n3, 0), std::vector<int>(n3, 0)};
}

std::vector<int> TupleFamily::flat() const {
    std::vector<int> out;
    out.reserve(xi.size() * 4 + eta.size());
    for (const auto* t : {&xi, &eta, &alpha, &lambda, &rho}) out.insert(out.end(), t->begin(), t->end());
    return out;
}

CoboundaryPair CoboundaryPair::zero(int n) {
    const auto n2 = static_cast<std::size_t>(n) * n;
    return {n, std::vector<int>(n2, 0), std::vector<int>(n2, 0)};
}

void check_shape(const BimoduleAction& m, const TupleFamily& k) {
    const int n = m.ring().order(), order = m.group().order();
    const auto n3 = static_cast<std::size_t>(n) * n * n, n2 = static_cast<std::size_t>(n) * n;
    if (k.n != n || k.xi.size() != n3 || k.alpha.size() != n3 || k.lambda.size() != n3 || k.rho.size() != n3 ||
        k.eta.size() != n2)
        throw StructureError("family tables do not match |R| = " + std::to_string(n));
    for (const auto* t : {&k.xi, &k.eta, &k.alpha, &k.lambda, &k.rho})
        for (int v : *t)
            if (v < 0 || v >= order) throw StructureError("family value outside the coefficient group");
}

void check_shape(const BimoduleAction& m, const CoboundaryPair& c) {
    const int n = m.ring().order(), order = m.group().order();
    const auto n2 = static_cast<std::size_t>(n) * n;
    if (c.n != n || c.nu.size() != n2 || c.mu.size() != n2)
        throw StructureError("(nu, mu) tables do not match |R| = " + std::to_string(n));
    for (const auto* t : {&c.nu, &c.mu})
        for (int v : *t)
            if (v < 0 || v >= order) throw StructureError("(nu, mu) value outside the coefficient group");
}

namespace {

template <class Op>
TupleFamily zip(const TupleFamily& a, const TupleFamily& b, Op op) {
    if (a.n != b.n) throw StructureError("families over different rings");
    TupleFamily out = a;
    auto apply = [&](std::vector<int>& o, const std::vector<int>& y) {
        for (std::size_t i = 0; i < o.size(); ++i) o[i] = op(o[i], y[i]);
    };
    apply(out.xi, b.xi);
    apply(out.eta, b.eta);
    apply(out.alpha, b.alpha);
    apply(out.lambda, b.lambda);
    apply(out.rho, b.rho);
    return out;
}

}  // namespace

TupleFamily family_add(const BimoduleAction& m, const TupleFamily& a, const TupleFamily& b) {
    const auto& g = m.group();
    return zip(a, b, [&](int u, int v) { return g.add(u, v); });
}

TupleFamily family_sub(const BimoduleAction& m, const TupleFamily& a, const TupleFamily& b) {
    const auto& g = m.group();
    return zip(a, b, [&](int u, int v) { return g.sub(u, v); });
}

CoboundaryPair pair_add(const BimoduleAction& m, const CoboundaryPair& a, const CoboundaryPair& b) {
    CoboundaryPair out = a;
    for (std::size_t i = 0; i < out.nu.size(); ++i) {
        out.nu[i] = m.group().add(a.nu[i], b.nu[i]);
        out.mu[i] = m.group().add(a.mu[i], b.mu[i]);
    }
    return out;
}

CoboundaryPair pair_neg(const BimoduleAction& m, const CoboundaryPair& a) {
    CoboundaryPair out = a;
    for (auto& v : out.nu) v = m.group().neg(v);
    for (auto& v : out.mu) v = m.group().neg(v);
    return out;
}

TupleFamily negate_lambda(const BimoduleAction& m, const TupleFamily& k) {
    TupleFamily out = k;
    for (auto& v : out.lambda) v = m.group().neg(v);
    return out;
}

TupleFamily delta2(const BimoduleAction& m, const CoboundaryPair& c) {
    check_shape(m, c);
    const FinRing& r = m.ring();
    const FinAbGroup& g = m.group();
    const int n = r.order();
    auto nu = [&](int x, int y) { return c.nu[c.i2(x, y)]; };
    auto mu = [&](int x, int y) { return c.mu[c.i2(x, y)]; };
    TupleFamily k = TupleFamily::zero(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            k.eta[k.i2(x, y)] = g.sub(mu(x, y), mu(y, x));
            for (int z = 0; z < n; ++z) {
                const auto i = k.i3(x, y, z);
                k.xi[i] = g.add(g.sub(mu(y, z), mu(r.add(x, y), z)), g.sub(mu(x, r.add(y, z)), mu(x, y)));
                k.alpha[i] = g.add(g.sub(m.left(x, nu(y, z)), nu(r.mul(x, y), z)),
                                   g.sub(nu(x, r.mul(y, z)), m.right(nu(x, y), z)));
                k.lambda[i] = g.add(g.sub(g.sub(nu(x, r.add(y, z)), nu(x, y)), nu(x, z)),
                                    g.sub(m.left(x, mu(y, z)), mu(r.mul(x, y), r.mul(x, z))));
                k.rho[i] = g.add(g.sub(g.sub(nu(r.add(x, y), z), nu(x, z)), nu(y, z)),
                                 g.sub(m.right(mu(x, y), z), mu(r.mul(x, z), r.mul(y, z))));
            }
        }
    return k;
}

std::string relation_name(int number) {
    static const char* names[] = {
        "",
        "relation 1: ξ(y,z,t)-ξ(x+y,z,t)+ξ(x,y+z,t)-ξ(x,y,z+t)+ξ(x,y,z)=0",
        "relation 2: ξ(0,y,z)=ξ(x,0,z)=ξ(x,y,0)=0",
        "relation 3: ξ(x,y,z)-ξ(x,z,y)+ξ(z,x,y)-η(x,z)+η(x+y,z)-η(y,z)=0",
        "relation 4: η(x,y)+η(y,x)=0",
        "relation 5: η(x,x)=0",
        "relation 6: xη(y,z)-η(xy,xz)=λ(x,y,z)-λ(x,z,y)",
        "relation 7: η(x,y)z-η(xz,yz)=ρ(x,y,z)-ρ(y,x,z)",
        "relation 8: xξ(y,z,t)-ξ(xy,xz,xt)=λ(x,z,t)-λ(x,y+z,t)+λ(x,y,z+t)-λ(x,y,z)",
        "relation 9: ξ(x,y,z)t-ξ(xt,yt,zt)=ρ(y,z,t)-ρ(x+y,z,t)+ρ(x,y+z,t)-ρ(x,y,t)",
        "relation 10: ρ(x,y,z+t)-ρ(x,y,z)-ρ(x,y,t)+λ(x,z,t)+λ(y,z,t)-λ(x+y,z,t)"
        "=-ξ(xz+xt,yz,yt)+ξ(xz,xt,yz)-η(xt,yz)+ξ(xz+yz,xt,yt)-ξ(xz,yz,xt)",
        "relation 11: α(x,y,z+t)-α(x,y,z)-α(x,y,t)=xλ(y,z,t)+λ(x,yz,yt)-λ(xy,z,t)",
        "relation 12: α(x,y+z,t)-α(x,y,t)-α(x,z,t)=xρ(y,z,t)-ρ(xy,xz,t)+λ(x,yt,zt)-λ(x,y,z)t",
        "relation 13: α(x+y,z,t)-α(x,z,t)-α(y,z,t)=-ρ(x,y,z)t-ρ(xz,yz,t)+ρ(x,y,zt)",
        "relation 14: xα(y,z,t)-α(xy,z,t)+α(x,yz,t)-α(x,y,zt)+α(x,y,z)t=0",
        "relation 15: α(1,y,z)=α(x,1,z)=α(x,y,1)=0",
        "relation 16: α(0,y,z)=α(x,0,z)=α(x,y,0)=0",
        "relation 17: λ(1,y,z)=λ(0,y,z)=λ(x,0,z)=λ(x,y,0)=0",
        "relation 18: ρ(x,y,1)=ρ(0,y,z)=ρ(x,0,z)=ρ(x,y,0)=0",
    };
    if (number < 1 || number > 18) throw StructureError("no relation numbered " + std::to_string(number));
    return names[number];
}

void evaluate_relations(const BimoduleAction& m, const TupleFamily& k,
                        const std::function<void(int, const std::vector<int>&, int)>& emit) {
    check_shape(m, k);
    const FinRing& r = m.ring();
    const FinAbGroup& g = m.group();
    const int n = r.order(), one = r.one();
    auto xi = [&](int x, int y, int z) { return k.xi[k.i3(x, y, z)]; };
    auto eta = [&](int x, int y) { return k.eta[k.i2(x, y)]; };
    auto al = [&](int x, int y, int z) { return k.alpha[k.i3(x, y, z)]; };
    auto la = [&](int x, int y, int z) { return k.lambda[k.i3(x, y, z)]; };
    auto rho = [&](int x, int y, int z) { return k.rho[k.i3(x, y, z)]; };
    auto L = [&](int x, int a) { return m.left(x, a); };
    auto Rt = [&](int a, int x) { return m.right(a, x); };
    auto A = [&](int x, int y) { return r.add(x, y); };
    auto Mu = [&](int x, int y) { return r.mul(x, y); };
    // signed sum of group elements
    auto S = [&](std::initializer_list<std::pair<int, int>> terms) {
        int acc = 0;
        for (const auto& [sign, v] : terms) acc = sign > 0 ? g.add(acc, v) : g.sub(acc, v);
        return acc;
    };

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            emit(4, {x, y}, g.add(eta(x, y), eta(y, x)));
            if (x == y) emit(5, {x}, eta(x, x));
        }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const std::vector<int> w{x, y, z};
                const bool has0 = x == 0 || y == 0 || z == 0;
                if (has0) emit(2, w, xi(x, y, z));
                emit(3, w,
                     S({{+1, xi(x, y, z)}, {-1, xi(x, z, y)}, {+1, xi(z, x, y)}, {-1, eta(x, z)},
                        {+1, eta(A(x, y), z)}, {-1, eta(y, z)}}));
                emit(6, w,
                     S({{+1, L(x, eta(y, z))}, {-1, eta(Mu(x, y), Mu(x, z))}, {-1, la(x, y, z)}, {+1, la(x, z, y)}}));
                emit(7, w,
                     S({{+1, Rt(eta(x, y), z)}, {-1, eta(Mu(x, z), Mu(y, z))}, {-1, rho(x, y, z)}, {+1, rho(y, x, z)}}));
                if (x == one || y == one || z == one) emit(15, w, al(x, y, z));
                if (has0) emit(16, w, al(x, y, z));
                if (has0 || x == one) emit(17, w, la(x, y, z));
                if (has0 || z == one) emit(18, w, rho(x, y, z));
            }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int t = 0; t < n; ++t) {
                    const std::vector<int> w{x, y, z, t};
                    const int xz = Mu(x, z), xt = Mu(x, t), yz = Mu(y, z), yt = Mu(y, t);
                    emit(1, w,
                         S({{+1, xi(y, z, t)}, {-1, xi(A(x, y), z, t)}, {+1, xi(x, A(y, z), t)},
                            {-1, xi(x, y, A(z, t))}, {+1, xi(x, y, z)}}));
                    emit(8, w,
                         S({{+1, L(x, xi(y, z, t))}, {-1, xi(Mu(x, y), xz, xt)}, {-1, la(x, z, t)},
                            {+1, la(x, A(y, z), t)}, {-1, la(x, y, A(z, t))}, {+1, la(x, y, z)}}));
                    emit(9, w,
                         S({{+1, Rt(xi(x, y, z), t)}, {-1, xi(xt, yt, Mu(z, t))}, {-1, rho(y, z, t)},
                            {+1, rho(A(x, y), z, t)}, {-1, rho(x, A(y, z), t)}, {+1, rho(x, y, t)}}));
                    const int lhs10 = S({{+1, rho(x, y, A(z, t))}, {-1, rho(x, y, z)}, {-1, rho(x, y, t)},
                                         {+1, la(x, z, t)}, {+1, la(y, z, t)}, {-1, la(A(x, y), z, t)}});
                    const int rhs10 = S({{-1, xi(A(xz, xt), yz, yt)}, {+1, xi(xz, xt, yz)}, {-1, eta(xt, yz)},
                                         {+1, xi(A(xz, yz), xt, yt)}, {-1, xi(xz, yz, xt)}});
                    emit(10, w, g.sub(lhs10, rhs10));
                    emit(11, w,
                         S({{+1, al(x, y, A(z, t))}, {-1, al(x, y, z)}, {-1, al(x, y, t)}, {-1, L(x, la(y, z, t))},
                            {-1, la(x, yz, yt)}, {+1, la(Mu(x, y), z, t)}}));
                    emit(12, w,
                         S({{+1, al(x, A(y, z), t)}, {-1, al(x, y, t)}, {-1, al(x, z, t)}, {-1, L(x, rho(y, z, t))},
                            {+1, rho(Mu(x, y), xz, t)}, {-1, la(x, yt, Mu(z, t))}, {+1, Rt(la(x, y, z), t)}}));
                    emit(13, w,
                         S({{+1, al(A(x, y), z, t)}, {-1, al(x, z, t)}, {-1, al(y, z, t)}, {+1, Rt(rho(x, y, z), t)},
                            {+1, rho(xz, yz, t)}, {-1, rho(x, y, Mu(z, t))}}));
                    emit(14, w,
                         S({{+1, L(x, al(y, z, t))}, {-1, al(Mu(x, y), z, t)}, {+1, al(x, Mu(y, z), t)},
                            {-1, al(x, y, Mu(z, t))}, {+1, Rt(al(x, y, z), t)}}));
                }
}

bool RelationReport::structure_ok() const {
    return std::all_of(failing.begin(), failing.end(), [](int r) { return r == 5; });
}

bool RelationReport::regular() const { return std::find(failing.begin(), failing.end(), 5) == failing.end(); }

RelationReport check_relations(const BimoduleAction& m, const TupleFamily& k) {
    std::map<int, std::pair<std::vector<int>, std::size_t>> first;
    evaluate_relations(m, k, [&](int rel, const std::vector<int>& w, int residual) {
        if (residual == 0) return;
        auto [it, inserted] = first.emplace(rel, std::make_pair(w, std::size_t{0}));
        ++it->second.second;
    });
    RelationReport out;
    for (const auto& [rel, data] : first) {
        out.failing.push_back(rel);
        out.violations.push_back(
            {relation_name(rel), data.first, std::to_string(data.second) + " failing instance(s)"});
    }
    return out;
}

std::size_t zero_normalized_slot_count(int n) {
    const auto m = static_cast<std::size_t>(n - 1);
    return 4 * m * m * m + m * m;
}

TupleFamily family_from_slots(int n, const std::vector<int>& values) {
    if (values.size() != zero_normalized_slot_count(n)) throw StructureError("wrong number of slot values");
    TupleFamily k = TupleFamily::zero(n);
    std::size_t pos = 0;
    auto fill3 = [&](std::vector<int>& t) {
        for (int x = 1; x < n; ++x)
            for (int y = 1; y < n; ++y)
                for (int z = 1; z < n; ++z) t[k.i3(x, y, z)] = values[pos++];
    };
    fill3(k.xi);
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y) k.eta[k.i2(x, y)] = values[pos++];
    fill3(k.alpha);
    fill3(k.lambda);
    fill3(k.rho);
    return k;
}

std::size_t pair_slot_count(int n) {
    const auto a = static_cast<std::size_t>(n - 1), b = static_cast<std::size_t>(std::max(n - 2, 0));
    return a * a + b * b;
}

CoboundaryPair pair_from_slots(int n, int one, const std::vector<int>& values) {
    if (values.size() != pair_slot_count(n)) throw StructureError("wrong number of (nu, mu) slot values");
    CoboundaryPair c = CoboundaryPair::zero(n);
    std::size_t pos = 0;
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y) c.mu[c.i2(x, y)] = values[pos++];
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y)
            if (x != one && y != one) c.nu[c.i2(x, y)] = values[pos++];
    return c;
}

namespace {

// Odometer over m^k values, last position fastest (lexicographic order).
bool next_values(std::vector<int>& v, int m) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (++v[i] < m) return true;
        v[i] = 0;
    }
    return false;
}

}  // namespace

namespace {

// delta2 is additive in (nu, mu), so over an elementary abelian M the
// search becomes a linear system over F_p. Free slots are set to 0.
std::optional<CoboundaryPair> solve_coboundary(const BimoduleAction& m, const TupleFamily& target,
                                               const CyclicDecomposition& dec, int p) {
    const FinAbGroup& g = m.group();
    const int n = m.ring().order(), one = m.ring().one();
    const std::size_t k = dec.orders.size(), slots = pair_slot_count(n), dim = slots * k;

    auto coords = [&](const TupleFamily& f) {
        std::vector<int> v;
        for (int e : f.flat())
            for (std::size_t j = 0; j < k; ++j) v.push_back(dec.coordinates[e][j]);
        return v;
    };
    std::vector<std::vector<int>> columns;
    for (std::size_t s = 0; s < slots; ++s)
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<int> values(slots, 0);
            values[s] = dec.generators[j];
            columns.push_back(coords(delta2(m, pair_from_slots(n, one, values))));
        }
    const auto rhs = coords(target);
    std::vector<std::vector<int>> rows(rhs.size(), std::vector<int>(dim + 1));
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        for (std::size_t c = 0; c < dim; ++c) rows[i][c] = columns[c][i];
        rows[i][dim] = rhs[i];
    }
    const auto pivots = detail::rref_mod_p(rows, p);
    if (!pivots.empty() && pivots.back() == dim) return std::nullopt;

    std::vector<int> x(dim, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][dim];
    std::vector<int> values(slots, 0);
    for (std::size_t s = 0; s < slots; ++s)
        for (std::size_t j = 0; j < k; ++j)
            values[s] = g.add(values[s], g.multiple(x[s * k + j], dec.generators[j]));
    auto c = pair_from_slots(n, one, values);
    if (delta2(m, c) != target) throw std::logic_error("linear coboundary solve produced a wrong witness");
    return c;
}

}  // namespace

std::optional<CoboundaryPair> find_coboundary(const BimoduleAction& m, const TupleFamily& target,
                                              const Limits& limits) {
    check_shape(m, target);
    const int n = m.ring().order(), one = m.ring().one(), order = m.group().order();
    const std::size_t mu_slots = static_cast<std::size_t>(n - 1) * (n - 1);
    const std::size_t nu_slots = pair_slot_count(n) - mu_slots;
    const auto count = saturating_pow(order, mu_slots + nu_slots);
    if (count > limits.max_candidates) {
        const auto dec = cyclic_decomposition(m.group());
        if (const int p = detail::elementary_prime(dec)) return solve_coboundary(m, target, dec, p);
    }
    check_search_size("(nu, mu) search", count, limits);

    std::vector<int> mu_vals(mu_slots, 0);
    do {
        std::vector<int> values(mu_vals);
        values.resize(mu_slots + nu_slots, 0);
        // xi and eta only see mu
        const auto base = delta2(m, pair_from_slots(n, one, values));
        if (base.xi != target.xi || base.eta != target.eta) continue;
        std::vector<int> nu_vals(nu_slots, 0);
        do {
            std::copy(nu_vals.begin(), nu_vals.end(), values.begin() + static_cast<std::ptrdiff_t>(mu_slots));
            const auto c = pair_from_slots(n, one, values);
            if (delta2(m, c) == target) return c;
        } while (next_values(nu_vals, order));
    } while (next_values(mu_vals, order));
    return std::nullopt;
}

}  // namespace ringext
