#include "ringext/factor_sets.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ringext/catalog.hpp"

namespace ringext {

namespace {

std::vector<int> flatten(const Table& t, int n, int m, const char* what) {
    if (static_cast<int>(t.size()) != n) throw StructureError(std::string(what) + " needs " + std::to_string(n) + " rows");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : t) {
        if (static_cast<int>(row.size()) != n) throw StructureError(std::string(what) + " rows need " + std::to_string(n) + " entries");
        for (int v : row) {
            if (v < 0 || v >= m) throw StructureError(std::string(what) + " entry out of range");
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace

TwoCochain TwoCochain::zero(const BimoduleAction& bm) {
    const auto n = static_cast<std::size_t>(bm.ring().order());
    return {bm, std::vector<int>(n * n, 0), std::vector<int>(n * n, 0)};
}

TwoCochain TwoCochain::from_tables(const BimoduleAction& bm, const Table& f, const Table& g) {
    const int n = bm.ring().order(), m = bm.group().order();
    return {bm, flatten(f, n, m, "f"), flatten(g, n, m, "g")};
}

std::vector<int> TwoCochain::flat() const {
    std::vector<int> out = f;
    out.insert(out.end(), g.begin(), g.end());
    return out;
}

OneCochain::OneCochain(BimoduleAction bm, std::vector<int> t, bool relaxed)
    : bm_(std::move(bm)), t_(std::move(t)), relaxed_(relaxed) {
    const int n = bm_.ring().order(), m = bm_.group().order();
    if (static_cast<int>(t_.size()) != n) throw StructureError("t needs one value per element of R");
    for (int v : t_)
        if (v < 0 || v >= m) throw StructureError("t value out of range");
    if (t_[0] != 0) throw StructureError("t(0) must be 0");
    if (!relaxed_ && t_[bm_.ring().one()] != 0) throw StructureError("t(1) must be 0 (sections keep u(1)=1_S)");
}

OneCochain OneCochain::negated() const {
    std::vector<int> t(t_.size());
    for (std::size_t i = 0; i < t_.size(); ++i) t[i] = bm_.group().neg(t_[i]);
    return OneCochain(bm_, std::move(t), relaxed_);
}

Report check_factor_set(const TwoCochain& c) {
    const FinRing& r = c.bimodule.ring();
    const FinAbGroup& a = c.bimodule.group();
    const auto& bm = c.bimodule;
    const int n = r.order(), one = r.one();
    Report report;
    auto f = [&](int x, int y) { return c.f_at(x, y); };
    auto g = [&](int x, int y) { return c.g_at(x, y); };

    for (int x = 0; x < n; ++x) {
        if (f(x, 0) != 0) report.push_back({"relation (2): f(x,0)=0", {x}, ""});
        if (f(0, x) != 0) report.push_back({"relation (2): f(0,y)=0", {x}, ""});
        if (g(x, 0) != 0) report.push_back({"relation (2): g(x,0)=0", {x}, ""});
        if (g(0, x) != 0) report.push_back({"relation (2): g(0,y)=0", {x}, ""});
        if (g(one, x) != 0) report.push_back({"relation (2): g(1,y)=0", {x}, ""});
        if (g(x, one) != 0) report.push_back({"relation (2): g(y,1)=0", {x}, ""});
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (f(x, y) != f(y, x)) report.push_back({"relation (3): f(x,y)=f(y,x)", {x, y}, ""});
            for (int z = 0; z < n; ++z) {
                int v = a.add(a.sub(f(y, z), f(r.add(x, y), z)), a.sub(f(x, r.add(y, z)), f(x, y)));
                if (v != 0) report.push_back({"relation (4): f(y,z)-f(x+y,z)+f(x,y+z)-f(x,y)=0", {x, y, z}, ""});

                v = a.add(a.sub(bm.left(x, g(y, z)), g(r.mul(x, y), z)),
                          a.sub(g(x, r.mul(y, z)), bm.right(g(x, y), z)));
                if (v != 0) report.push_back({"relation (5): xg(y,z)-g(xy,z)+g(x,yz)-g(x,y)z=0", {x, y, z}, ""});

                const int lhs = a.sub(bm.left(x, f(y, z)), f(r.mul(x, y), r.mul(x, z)));
                const int rhs = a.sub(a.add(g(x, y), g(x, z)), g(x, r.add(y, z)));
                if (lhs != rhs)
                    report.push_back({"relation (6): xf(y,z)-f(xy,xz)=g(x,y)+g(x,z)-g(x,y+z)", {x, y, z}, ""});

                const int lhs2 = a.sub(bm.right(f(x, y), z), f(r.mul(x, z), r.mul(y, z)));
                const int rhs2 = a.sub(a.add(g(x, z), g(y, z)), g(r.add(x, y), z));
                if (lhs2 != rhs2)
                    report.push_back({"relation (6): f(x,y)z-f(xz,yz)=g(x,z)+g(y,z)-g(x+y,z)", {x, y, z}, ""});
            }
        }
    return report;
}

TwoCochain coboundary1(const OneCochain& t) {
    const auto& bm = t.bimodule();
    const FinRing& r = bm.ring();
    const FinAbGroup& a = bm.group();
    const int n = r.order();
    TwoCochain c = TwoCochain::zero(bm);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto i = static_cast<std::size_t>(x) * n + y;
            c.f[i] = a.add(a.neg(t(r.add(x, y))), a.add(t(x), t(y)));
            c.g[i] = a.add(a.sub(bm.left(x, t(y)), t(r.mul(x, y))), bm.right(t(x), y));
        }
    return c;
}

TwoCochain shift(const TwoCochain& c, const OneCochain& t) {
    if (!(c.bimodule == t.bimodule())) throw StructureError("cochain and 1-cochain live over different bimodules");
    const auto d = coboundary1(t);
    const FinAbGroup& a = c.bimodule.group();
    TwoCochain out = c;
    for (std::size_t i = 0; i < out.f.size(); ++i) {
        out.f[i] = a.add(c.f[i], d.f[i]);
        out.g[i] = a.add(c.g[i], d.g[i]);
    }
    return out;
}

namespace {

// Calls visit(t) for every 1-cochain with t(0)=0, t(1)=0.
template <class Visit>
bool for_each_one_cochain(const BimoduleAction& bm, const Limits& limits, Visit visit) {
    const int n = bm.ring().order(), m = bm.group().order(), one = bm.ring().one();
    const int free = limits.relaxed_t ? n - 1 : n - 2;
    check_search_size("1-cochain search", saturating_pow(m, free), limits);
    std::vector<int> t(n, 0);
    while (true) {
        if (visit(OneCochain(bm, t, limits.relaxed_t))) return true;
        int x = 1;
        for (; x < n; ++x) {
            if (x == one && !limits.relaxed_t) continue;
            if (++t[x] < m) break;
            t[x] = 0;
        }
        if (x >= n) return false;
    }
}

}  // namespace

std::optional<OneCochain> are_equivalent(const TwoCochain& c1, const TwoCochain& c2, const Limits& limits) {
    if (!(c1.bimodule == c2.bimodule)) throw StructureError("cochains live over different bimodules");
    std::optional<OneCochain> found;
    for_each_one_cochain(c1.bimodule, limits, [&](const OneCochain& t) {
        const auto s = shift(c1, t);
        if (s.f == c2.f && s.g == c2.g) {
            found = t;
            return true;
        }
        return false;
    });
    return found;
}

H2Result h2_classes(const BimoduleAction& bm, const Limits& limits) {
    const int n = bm.ring().order(), m = bm.group().order(), one = bm.ring().one();
    std::vector<std::size_t> f_slots, g_slots;
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y) {
            f_slots.push_back(static_cast<std::size_t>(x) * n + y);
            if (x != one && y != one) g_slots.push_back(static_cast<std::size_t>(x) * n + y);
        }
    const std::size_t slots = f_slots.size() + g_slots.size();
    check_search_size("normalized 2-cochains", saturating_pow(m, slots), limits);

    std::vector<TwoCochain> coboundaries;
    for_each_one_cochain(bm, limits, [&](const OneCochain& t) {
        coboundaries.push_back(coboundary1(t));
        return false;
    });

    H2Result result;
    result.coboundary_count = 0;
    {
        std::map<std::vector<int>, int> distinct;
        for (const auto& b : coboundaries) distinct.emplace(b.flat(), 0);
        result.coboundary_count = distinct.size();
    }
    std::map<std::vector<int>, int> assigned;
    std::vector<int> pick(slots, 0);
    while (true) {
        TwoCochain c = TwoCochain::zero(bm);
        for (std::size_t i = 0; i < f_slots.size(); ++i) c.f[f_slots[i]] = pick[i];
        for (std::size_t i = 0; i < g_slots.size(); ++i) c.g[g_slots[i]] = pick[f_slots.size() + i];
        if (check_factor_set(c).empty()) {
            ++result.cocycle_count;
            if (!assigned.count(c.flat())) {
                const int id = static_cast<int>(result.representatives.size());
                TwoCochain best = c;
                const FinAbGroup& a = bm.group();
                for (const auto& b : coboundaries) {
                    TwoCochain member = c;
                    for (std::size_t i = 0; i < member.f.size(); ++i) {
                        member.f[i] = a.add(c.f[i], b.f[i]);
                        member.g[i] = a.add(c.g[i], b.g[i]);
                    }
                    if (member.flat() < best.flat()) best = member;
                    assigned.emplace(member.flat(), id);
                }
                result.representatives.push_back(std::move(best));
            }
        }
        std::size_t i = 0;
        while (i < slots && ++pick[i] == m) pick[i++] = 0;
        if (i == slots) break;
    }
    std::sort(result.representatives.begin(), result.representatives.end(),
              [](const TwoCochain& a, const TwoCochain& b) { return a.flat() < b.flat(); });
    return result;
}

Extension build_singular_extension(const TwoCochain& c) {
    auto report = check_factor_set(c);
    if (!report.empty()) throw ConstructionError("not a factor set", std::move(report));
    const auto& bm = c.bimodule;
    const FinRing& r = bm.ring();
    const FinAbGroup& a = bm.group();
    const int nr = r.order(), na = a.order(), ns = na * nr;
    Table add(ns, std::vector<int>(ns)), mul(ns, std::vector<int>(ns));
    for (int s = 0; s < ns; ++s)
        for (int t = 0; t < ns; ++t) {
            const int ai = s % na, x = s / na, bi = t % na, y = t / na;
            add[s][t] = a.add(a.add(ai, bi), c.f_at(x, y)) + na * r.add(x, y);
            mul[s][t] = a.add(a.add(bm.right(ai, y), bm.left(x, bi)), c.g_at(x, y)) + na * r.mul(x, y);
        }
    Extension e;
    e.R = r;
    e.A = catalog::null_ring(a, "A");
    e.S = FinRing::from_tables("S(f,g)", add, mul, na * r.one());
    e.chi.resize(na);
    for (int i = 0; i < na; ++i) e.chi[i] = i;
    e.sigma.resize(ns);
    for (int s = 0; s < ns; ++s) e.sigma[s] = s / na;
    e.section.resize(nr);
    for (int x = 0; x < nr; ++x) e.section[x] = na * x;
    report = validate_ring(e.S, IdentityRequirement::unital_nonzero);
    auto ext_report = validate_extension(e, true);
    report.insert(report.end(), ext_report.begin(), ext_report.end());
    if (!report.empty()) throw ConstructionError("constructed extension fails its laws", std::move(report));
    return e;
}

BimoduleAction induced_bimodule(const Extension& e, const std::vector<int>& u) {
    const auto inv = chi_inverse(e);
    const int nr = e.R.order(), na = e.A.order();
    Table left(nr, std::vector<int>(na)), right(nr, std::vector<int>(na));
    for (int x = 0; x < nr; ++x)
        for (int a = 0; a < na; ++a) {
            left[x][a] = inv[e.S.mul(u[x], e.chi[a])];
            right[x][a] = inv[e.S.mul(e.chi[a], u[x])];
            if (left[x][a] < 0 || right[x][a] < 0) throw StructureError("chi(A) is not an ideal of S");
        }
    return BimoduleAction(e.R, e.A.group(), left, right);
}

TwoCochain extract_factor_set(const Extension& e, const std::vector<int>& u) {
    auto report = validate_section(e, u);
    if (!report.empty()) throw ConstructionError("u is not a section", std::move(report));
    const auto inv = chi_inverse(e);
    const FinRing& s = e.S;
    const FinRing& r = e.R;
    const int n = r.order();
    TwoCochain c = TwoCochain::zero(induced_bimodule(e, u));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto i = static_cast<std::size_t>(x) * n + y;
            c.f[i] = inv[s.sub(s.add(u[x], u[y]), u[r.add(x, y)])];
            c.g[i] = inv[s.sub(s.mul(u[x], u[y]), u[r.mul(x, y)])];
            if (c.f[i] < 0 || c.g[i] < 0) throw StructureError("sigma is not a ring map along u");
        }
    return c;
}

std::vector<std::vector<int>> all_sections(const Extension& e) {
    const int nr = e.R.order(), ns = e.S.order(), one = e.R.one();
    std::vector<std::vector<int>> fibers(nr);
    for (int s = 0; s < ns; ++s) fibers[e.sigma[s]].push_back(s);
    fibers[0] = {0};
    fibers[one] = {e.S.one()};
    std::vector<std::vector<int>> out;
    std::vector<int> pick(nr, 0);
    while (true) {
        std::vector<int> u(nr);
        for (int x = 0; x < nr; ++x) u[x] = fibers[x][pick[x]];
        out.push_back(std::move(u));
        int x = 0;
        while (x < nr && ++pick[x] == static_cast<int>(fibers[x].size())) pick[x++] = 0;
        if (x == nr) break;
    }
    return out;
}

}  // namespace ringext
