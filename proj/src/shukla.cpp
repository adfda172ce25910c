#include "ringext/shukla.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fp_linear.hpp"

namespace ringext {

using zlinalg::BigInt;
using zlinalg::FormalSum;
using zlinalg::IntMatrix;

int degree_of(Level level) {
    switch (level) {
        case Level::U0: return 0;
        case Level::U1: return 1;
        case Level::U2Triple:
        case Level::U2Pair: return 2;
        default: return 3;
    }
}

int arity_of(Level level) {
    switch (level) {
        case Level::U0: return 1;
        case Level::U1: return 2;
        case Level::U2Triple: return 3;
        case Level::U2Pair: return 2;
        case Level::U3Quad: return 4;
        case Level::U3Triple: return 3;
        case Level::U3Pair: return 2;
        case Level::U3Single: return 1;
    }
    return 0;
}

std::string level_name(Level level) {
    switch (level) {
        case Level::U0: return "U0";
        case Level::U1: return "U1";
        case Level::U2Triple: return "U2-triple";
        case Level::U2Pair: return "U2-pair";
        case Level::U3Quad: return "U3-quad";
        case Level::U3Triple: return "U3-triple";
        case Level::U3Pair: return "U3-pair";
        case Level::U3Single: return "U3-single";
    }
    return "?";
}

std::string GeneratorId::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(entries[i]);
    }
    return s + "]";
}

Chain ResolutionData::bracket(Level level, const std::vector<int>& entries) const {
    const int deg = degree_of(level);
    Chain c{deg, {}};
    if (std::any_of(entries.begin(), entries.end(), [](int e) { return e == 0; })) return c;
    const auto it = index[deg].find(GeneratorId{level, entries});
    if (it == index[deg].end()) throw StructureError("no generator " + level_name(level));
    c.sum = FormalSum::generator(it->second);
    return c;
}

const IntMatrix& ResolutionData::d(int degree) const {
    switch (degree) {
        case 1: return d1;
        case 2: return d2;
        case 3: return d3;
        default: throw StructureError("no differential in degree " + std::to_string(degree));
    }
}

Chain ResolutionData::differential(const Chain& c) const {
    if (c.degree == 0) return Chain{-1, {}};
    return Chain{c.degree - 1, d(c.degree).apply(c.sum)};
}

std::string ResolutionData::describe(const Chain& c) const {
    if (c.sum.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, coeff] : c.sum.terms()) {
        BigInt k = coeff;
        if (first) {
            if (k < 0) { out << "-"; k = -k; }
        } else {
            out << (k < 0 ? " - " : " + ");
            if (k < 0) k = -k;
        }
        if (k != 1) out << k;
        out << bases[c.degree][g].to_string();
        first = false;
    }
    return out.str();
}

namespace {

// All tuples of nonzero elements of the given length, lexicographic.
std::vector<std::vector<int>> nonzero_tuples(int n, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> t(len, 1);
    if (n < 2) return out;
    while (true) {
        out.push_back(t);
        int i = len - 1;
        while (i >= 0 && t[i] == n - 1) t[i--] = 1;
        if (i < 0) break;
        ++t[i];
    }
    return out;
}

void accumulate(FormalSum& s, const Chain& c, int sign) {
    if (sign > 0) s += c.sum;
    else s -= c.sum;
}

}  // namespace

ResolutionData build_resolution(const FinRing& r, const Limits& limits) {
    if (!r.has_one()) throw StructureError("the resolution needs a ring with identity");
    if (r.order() > limits.max_resolution_ring)
        throw GuardError("resolution ring order", static_cast<std::uint64_t>(r.order()),
                         static_cast<std::uint64_t>(limits.max_resolution_ring));
    const int n = r.order();
    ResolutionData res;
    res.R = r;

    const std::vector<std::vector<Level>> layout = {
        {Level::U0}, {Level::U1}, {Level::U2Triple, Level::U2Pair},
        {Level::U3Quad, Level::U3Triple, Level::U3Pair, Level::U3Single}};
    for (int deg = 0; deg < 4; ++deg)
        for (Level lv : layout[deg])
            for (auto& t : nonzero_tuples(n, arity_of(lv))) {
                res.index[deg][GeneratorId{lv, t}] = res.bases[deg].size();
                res.bases[deg].push_back(GeneratorId{lv, std::move(t)});
            }
    for (const auto& g : res.bases[0]) res.epsilon.push_back(g.entries[0]);

    auto add = [&](int a, int b) { return r.add(a, b); };
    auto B = [&](Level lv, std::vector<int> e) { return res.bracket(lv, e); };

    std::vector<FormalSum> cols;
    for (const auto& g : res.bases[1]) {
        const int x = g.entries[0], y = g.entries[1];
        FormalSum s;
        accumulate(s, B(Level::U0, {y}), 1);
        accumulate(s, B(Level::U0, {add(x, y)}), -1);
        accumulate(s, B(Level::U0, {x}), 1);
        cols.push_back(s);
    }
    res.d1 = IntMatrix::from_columns(cols, res.bases[0].size());

    cols.clear();
    for (const auto& g : res.bases[2]) {
        const auto& e = g.entries;
        FormalSum s;
        if (g.level == Level::U2Triple) {
            const int x = e[0], y = e[1], z = e[2];
            accumulate(s, B(Level::U1, {y, z}), 1);
            accumulate(s, B(Level::U1, {add(x, y), z}), -1);
            accumulate(s, B(Level::U1, {x, add(y, z)}), 1);
            accumulate(s, B(Level::U1, {x, y}), -1);
        } else {
            accumulate(s, B(Level::U1, {e[0], e[1]}), 1);
            accumulate(s, B(Level::U1, {e[1], e[0]}), -1);
        }
        cols.push_back(s);
    }
    res.d2 = IntMatrix::from_columns(cols, res.bases[1].size());

    cols.clear();
    for (const auto& g : res.bases[3]) {
        const auto& e = g.entries;
        FormalSum s;
        switch (g.level) {
            case Level::U3Quad: {
                const int x = e[0], y = e[1], z = e[2], t = e[3];
                accumulate(s, B(Level::U2Triple, {y, z, t}), 1);
                accumulate(s, B(Level::U2Triple, {add(x, y), z, t}), -1);
                accumulate(s, B(Level::U2Triple, {x, add(y, z), t}), 1);
                accumulate(s, B(Level::U2Triple, {x, y, add(z, t)}), -1);
                accumulate(s, B(Level::U2Triple, {x, y, z}), 1);
                break;
            }
            case Level::U3Triple: {
                const int x = e[0], y = e[1], z = e[2];
                accumulate(s, B(Level::U2Triple, {x, y, z}), 1);
                accumulate(s, B(Level::U2Triple, {x, z, y}), -1);
                accumulate(s, B(Level::U2Triple, {z, x, y}), 1);
                accumulate(s, B(Level::U2Pair, {y, z}), -1);
                accumulate(s, B(Level::U2Pair, {add(x, y), z}), 1);
                accumulate(s, B(Level::U2Pair, {x, z}), -1);
                break;
            }
            case Level::U3Pair:
                accumulate(s, B(Level::U2Pair, {e[0], e[1]}), 1);
                accumulate(s, B(Level::U2Pair, {e[1], e[0]}), 1);
                break;
            default:
                accumulate(s, B(Level::U2Pair, {e[0], e[0]}), 1);
                break;
        }
        cols.push_back(s);
    }
    res.d3 = IntMatrix::from_columns(cols, res.bases[2].size());
    res.u4_basis = zlinalg::kernel_basis(res.d3);

    const auto problems = verify_resolution(res);
    if (!problems.empty()) throw std::logic_error("resolution invariant failed: " + to_string(problems.front()));
    return res;
}

Report verify_resolution(const ResolutionData& res) {
    Report out;
    if (!(res.d1 * res.d2).is_zero()) out.push_back({"d1∘d2=0", {}, ""});
    if (!(res.d2 * res.d3).is_zero()) out.push_back({"d2∘d3=0", {}, ""});
    for (std::size_t i = 0; i < res.u4_basis.size(); ++i)
        if (!res.d3.apply(res.u4_basis[i]).is_zero()) {
            out.push_back({"d3∘d4=0", {static_cast<int>(i)}, ""});
            break;
        }
    const FinRing& r = res.R;
    for (std::size_t c = 0; c < res.d1.cols(); ++c) {
        int total = 0;
        const auto col = res.d1.column(c);
        for (const auto& [g, coeff] : col.terms())
            total = r.add(total, r.group().multiple(static_cast<long long>(coeff), res.epsilon[g]));
        if (total != 0) {
            out.push_back({"ε∘d1=0", res.bases[1][c].entries, ""});
            break;
        }
    }
    return out;
}

std::vector<JunctionResult> check_exactness(const ResolutionData& res, int up_to) {
    std::vector<JunctionResult> out;
    const std::size_t n0 = res.bases[0].size();

    // ker epsilon against the presentation of (R,+) by its cyclic decomposition
    {
        const auto dec = cyclic_decomposition(res.R.group());
        const std::size_t k = dec.orders.size();
        IntMatrix e(k, n0 + k);
        for (std::size_t g = 0; g < n0; ++g)
            for (std::size_t j = 0; j < k; ++j) e.at(j, g) = dec.coordinates[res.epsilon[g]][j];
        for (std::size_t j = 0; j < k; ++j) e.at(j, n0 + j) = dec.orders[j];
        std::vector<FormalSum> ker;
        for (const auto& v : zlinalg::kernel_basis(e)) {
            FormalSum p;
            for (const auto& [i, c] : v.terms())
                if (i < n0) p.add_term(i, c);
            ker.push_back(p);
        }
        const auto im = res.d1.columns();
        out.push_back({"U0", zlinalg::subgroup_equal(im, ker, n0), im.size(), ker.size()});
    }
    for (int i = 1; i <= std::min(up_to, 3); ++i) {
        const auto ker = zlinalg::kernel_basis(res.d(i));
        const auto im = i < 3 ? res.d(i + 1).columns() : res.u4_basis;
        out.push_back({"U" + std::to_string(i),
                       zlinalg::subgroup_equal(im, ker, res.bases[i].size()), im.size(), ker.size()});
    }
    return out;
}

ProductEngine::ProductEngine(const ResolutionData& res) : res_(res) {}

zlinalg::LinearSolver& ProductEngine::solver(int degree) {
    auto& s = solvers_[degree];
    if (!s) s = std::make_unique<zlinalg::LinearSolver>(res_.d(degree));
    return *s;
}

namespace {

Chain scalar_product(const ResolutionData& res, const Chain& c, int x, bool on_left) {
    Chain out{c.degree, {}};
    for (const auto& [g, coeff] : c.sum.terms()) {
        const auto& gen = res.bases[c.degree][g];
        std::vector<int> e = gen.entries;
        for (int& v : e) v = on_left ? res.R.mul(x, v) : res.R.mul(v, x);
        out.sum += res.bracket(gen.level, e).sum.scaled(coeff);
    }
    return out;
}

}  // namespace

Chain ProductEngine::product_u0(int x, const Chain& c) const { return scalar_product(res_, c, x, true); }

Chain ProductEngine::chain_times_u0(const Chain& c, int x) const { return scalar_product(res_, c, x, false); }

Chain ProductEngine::generator_product(const GeneratorId& g, const GeneratorId& h) {
    const int i = degree_of(g.level), j = degree_of(h.level);
    if (i + j > 3) throw StructureError("product degree " + std::to_string(i + j) + " exceeds 3");
    const auto key = std::make_pair(g, h);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Chain out;
    if (i == 0) {
        out = product_u0(g.entries[0], res_.bracket(h.level, h.entries));
    } else if (j == 0) {
        out = chain_times_u0(res_.bracket(g.level, g.entries), h.entries[0]);
    } else {
        const Chain a = res_.bracket(g.level, g.entries), b = res_.bracket(h.level, h.entries);
        Chain rhs = product_general(res_.differential(a), b);
        const Chain right = product_general(a, res_.differential(b));
        if (i % 2 == 0) rhs.sum += right.sum;
        else rhs.sum -= right.sum;
        const auto lift = solver(i + j).solve(rhs.sum);
        if (!lift) throw std::logic_error("product lift infeasible for " + g.to_string() + h.to_string());
        out = Chain{i + j, *lift};
    }
    memo_.emplace(key, out);
    return out;
}

Chain ProductEngine::product_general(const Chain& a, const Chain& b) {
    if (a.degree + b.degree > 3) throw StructureError("product degree exceeds 3");
    Chain out{a.degree + b.degree, {}};
    for (const auto& [ga, ca] : a.sum.terms())
        for (const auto& [gb, cb] : b.sum.terms())
            out.sum += generator_product(res_.bases[a.degree][ga], res_.bases[b.degree][gb]).sum.scaled(ca * cb);
    return out;
}

FormalSum ProductEngine::product_u1_u1(int x, int y, int z, int t) {
    return product_general(res_.bracket(Level::U1, {x, y}), res_.bracket(Level::U1, {z, t})).sum;
}

FormalSum ProductEngine::leibniz_u1_u1(int x, int y, int z, int t) {
    const Chain a = res_.bracket(Level::U1, {x, y}), b = res_.bracket(Level::U1, {z, t});
    return product_general(res_.differential(a), b).sum - product_general(a, res_.differential(b)).sum;
}

FormalSum printed_product_candidate(const ResolutionData& res, int x, int y, int z, int t) {
    const FinRing& r = res.R;
    auto m = [&](int a, int b) { return r.mul(a, b); };
    const int xz = m(x, z), yz = m(y, z), xt = m(x, t), yt = m(y, t);
    FormalSum s;
    s += res.bracket(Level::U2Triple, {xz, yz, xt}).sum;
    s += res.bracket(Level::U2Triple, {r.add(xz, xt), yz, yt}).sum;
    s -= res.bracket(Level::U2Triple, {xz, xt, yz}).sum;
    s += res.bracket(Level::U2Pair, {xt, yz}).sum;
    return s;
}

FormalSum relation10_product_candidate(const ResolutionData& res, int x, int y, int z, int t) {
    const FinRing& r = res.R;
    auto m = [&](int a, int b) { return r.mul(a, b); };
    const int xz = m(x, z), yz = m(y, z), xt = m(x, t), yt = m(y, t);
    FormalSum s;
    s -= res.bracket(Level::U2Triple, {r.add(xz, xt), yz, yt}).sum;
    s += res.bracket(Level::U2Triple, {xz, xt, yz}).sum;
    s -= res.bracket(Level::U2Pair, {xt, yz}).sum;
    s += res.bracket(Level::U2Triple, {r.add(xz, yz), xt, yt}).sum;
    s -= res.bracket(Level::U2Triple, {xz, yz, xt}).sum;
    return s;
}

std::vector<ProductComparison> product_comparison(ProductEngine& engine) {
    const auto& res = engine.resolution();
    std::vector<ProductComparison> out;
    for (const auto& a : nonzero_tuples(res.R.order(), 4)) {
        ProductComparison pc;
        pc.args = a;
        pc.lift = engine.product_u1_u1(a[0], a[1], a[2], a[3]);
        pc.leibniz_rhs = engine.leibniz_u1_u1(a[0], a[1], a[2], a[3]);
        const auto p = res.d2.apply(printed_product_candidate(res, a[0], a[1], a[2], a[3]));
        const auto q = res.d2.apply(relation10_product_candidate(res, a[0], a[1], a[2], a[3]));
        pc.printed_match = p == pc.leibniz_rhs;
        pc.printed_match_negated = p == -pc.leibniz_rhs;
        pc.relation10_match = q == pc.leibniz_rhs;
        pc.relation10_match_negated = q == -pc.leibniz_rhs;
        out.push_back(std::move(pc));
    }
    return out;
}

RelationReport cocycle3_check(const TupleFamily& k, const BimoduleAction& m) {
    return check_relations(m, negate_lambda(m, k));
}

TupleFamily shukla_coboundary(const BimoduleAction& m, const CoboundaryPair& c) {
    return negate_lambda(m, delta2(m, c));
}

namespace {

std::vector<int> slots_of(const TupleFamily& k) {
    const int n = k.n;
    std::vector<int> out;
    auto take3 = [&](const std::vector<int>& t) {
        for (int x = 1; x < n; ++x)
            for (int y = 1; y < n; ++y)
                for (int z = 1; z < n; ++z) out.push_back(t[k.i3(x, y, z)]);
    };
    take3(k.xi);
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y) out.push_back(k.eta[k.i2(x, y)]);
    take3(k.alpha);
    take3(k.lambda);
    take3(k.rho);
    return out;
}

bool next_values(std::vector<int>& v, int m) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (++v[i] < m) return true;
        v[i] = 0;
    }
    return false;
}

bool is_cocycle(const BimoduleAction& m, const TupleFamily& k) {
    bool ok = true;
    evaluate_relations(m, negate_lambda(m, k), [&](int, const std::vector<int>&, int residual) {
        if (residual != 0) ok = false;
    });
    return ok;
}

H3Result h3_enumerate(const FinRing& r, const BimoduleAction& m, const Limits& limits, std::size_t max_reps) {
    const int n = r.order(), order = m.group().order();
    const std::size_t slots = zero_normalized_slot_count(n), pslots = pair_slot_count(n);
    check_search_size("(nu, mu) enumeration", saturating_pow(order, pslots), limits);

    std::set<std::vector<int>> boundaries;
    std::vector<int> pv(pslots, 0);
    do {
        boundaries.insert(slots_of(shukla_coboundary(m, pair_from_slots(n, r.one(), pv))));
    } while (next_values(pv, order));

    H3Result out;
    out.method = "enumeration";
    out.slots = slots;
    std::set<std::vector<int>> covered;
    std::vector<int> v(slots, 0);
    BigInt z = 0, classes = 0;
    do {
        const auto k = family_from_slots(n, v);
        if (!is_cocycle(m, k)) continue;
        ++z;
        if (covered.count(v)) continue;
        ++classes;
        if (out.representatives.size() < max_reps) out.representatives.push_back(k);
        else out.truncated = true;
        for (const auto& b : boundaries) covered.insert(slots_of(family_add(m, k, family_from_slots(n, b))));
    } while (next_values(v, order));
    for (const auto& b : boundaries)
        if (!is_cocycle(m, family_from_slots(n, b)))
            throw std::logic_error("a coboundary fails the cocycle relations");
    out.z_order = z;
    out.b_order = boundaries.size();
    out.h_order = classes;
    return out;
}

H3Result h3_linear(const FinRing& r, const BimoduleAction& m, std::size_t max_reps) {
    const FinAbGroup& g = m.group();
    const auto dec = cyclic_decomposition(g);
    const int p = detail::elementary_prime(dec);
    if (p == 0) throw GuardError("h3 linear path needs an elementary abelian coefficient group", 0, 0);

    const int n = r.order();
    const std::size_t k = dec.orders.size(), slots = zero_normalized_slot_count(n);
    const std::size_t dim = slots * k;

    auto element_of = [&](const std::vector<int>& coords) {
        int e = 0;
        for (std::size_t j = 0; j < k; ++j) e = g.add(e, g.multiple(coords[j], dec.generators[j]));
        return e;
    };
    auto to_coords = [&](const std::vector<int>& slot_values) {
        std::vector<int> v;
        v.reserve(dim);
        for (int s : slot_values)
            for (std::size_t j = 0; j < k; ++j) v.push_back(dec.coordinates[s][j]);
        return v;
    };
    auto family_of = [&](const std::vector<int>& v) {
        std::vector<int> values(slots);
        for (std::size_t s = 0; s < slots; ++s)
            values[s] = element_of(std::vector<int>(v.begin() + static_cast<std::ptrdiff_t>(s * k),
                                                    v.begin() + static_cast<std::ptrdiff_t>((s + 1) * k)));
        return family_from_slots(n, values);
    };

    // Relation map: one column per (slot, coordinate) basis vector.
    std::vector<std::vector<int>> columns;
    for (std::size_t b = 0; b < dim; ++b) {
        std::vector<int> e(dim, 0);
        e[b] = 1;
        std::vector<int> col;
        evaluate_relations(m, negate_lambda(m, family_of(e)), [&](int, const std::vector<int>&, int residual) {
            for (std::size_t j = 0; j < k; ++j) col.push_back(dec.coordinates[residual][j]);
        });
        columns.push_back(std::move(col));
    }
    std::vector<std::vector<int>> rel(columns.empty() ? 0 : columns[0].size(), std::vector<int>(dim));
    for (std::size_t c = 0; c < dim; ++c)
        for (std::size_t i = 0; i < rel.size(); ++i) rel[i][c] = columns[c][i];
    const auto pivots = detail::rref_mod_p(rel, p);

    // Kernel basis from the free columns.
    std::vector<std::vector<int>> z_basis;
    std::vector<bool> is_pivot(dim, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < dim; ++f) {
        if (is_pivot[f]) continue;
        std::vector<int> v(dim, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - rel[i][f]) % p;
        z_basis.push_back(std::move(v));
    }

    // Coboundary span.
    const std::size_t pslots = pair_slot_count(n);
    std::vector<std::vector<int>> b_rows;
    for (std::size_t s = 0; s < pslots; ++s)
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<int> values(pslots, 0);
            values[s] = dec.generators[j];
            b_rows.push_back(to_coords(slots_of(shukla_coboundary(m, pair_from_slots(n, r.one(), values)))));
        }
    auto b_echelon = b_rows;
    const auto b_pivots = detail::rref_mod_p(b_echelon, p);
    const std::size_t dim_b = b_pivots.size();

    // Complement of B in Z: greedy extension of B's echelon basis.
    auto echelon = b_echelon;
    std::vector<std::vector<int>> complement;
    for (const auto& v : z_basis) {
        auto trial = echelon;
        trial.push_back(v);
        auto reduced = trial;
        if (detail::rref_mod_p(reduced, p).size() > echelon.size()) {
            complement.push_back(v);
            echelon = std::move(reduced);
        }
    }
    auto reduce_mod_b = [&](std::vector<int> v) {
        for (std::size_t i = 0; i < b_pivots.size(); ++i) {
            const int f = v[b_pivots[i]];
            if (f == 0) continue;
            for (std::size_t c = 0; c < dim; ++c) v[c] = ((v[c] - f * b_echelon[i][c]) % p + p) % p;
        }
        return v;
    };

    H3Result out;
    out.method = "linear algebra mod p";
    out.slots = slots;
    out.z_order = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(z_basis.size()));
    out.b_order = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(dim_b));
    out.h_order = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(complement.size()));
    if (dim_b > z_basis.size()) throw std::logic_error("coboundary space exceeds cocycle space");

    std::vector<int> coeffs(complement.size(), 0);
    do {
        if (out.representatives.size() >= max_reps) {
            out.truncated = true;
            break;
        }
        std::vector<int> v(dim, 0);
        for (std::size_t i = 0; i < complement.size(); ++i)
            for (std::size_t c = 0; c < dim; ++c) v[c] = (v[c] + coeffs[i] * complement[i][c]) % p;
        out.representatives.push_back(family_of(reduce_mod_b(std::move(v))));
    } while (next_values(coeffs, p));
    return out;
}

}  // namespace

H3Result h3_small(const FinRing& r, const BimoduleAction& m, const Limits& limits, std::size_t max_representatives) {
    if (!(m.ring() == r)) throw StructureError("bimodule is over a different ring");
    const int n = r.order(), order = m.group().order();
    const std::size_t slots = zero_normalized_slot_count(n);
    if (order == 1) {
        H3Result out;
        out.method = "enumeration";
        out.slots = slots;
        out.z_order = out.b_order = out.h_order = 1;
        out.representatives.push_back(TupleFamily::zero(n));
        return out;
    }
    const auto count = saturating_pow(order, slots);
    if (count <= limits.max_candidates &&
        saturating_pow(order, pair_slot_count(n)) <= limits.max_candidates)
        return h3_enumerate(r, m, limits, max_representatives);
    if (detail::elementary_prime(cyclic_decomposition(m.group())) == 0)
        check_search_size("h3 tuple enumeration", count, limits);
    return h3_linear(r, m, max_representatives);
}

}  // namespace ringext
