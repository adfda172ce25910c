#include "ringext/obstruction.hpp"

#include <algorithm>
#include <string>

namespace ringext {

PreExtension induced_pre_extension(const Extension& e, const std::vector<int>& u) {
    auto report = validate_extension(e);
    auto sec = validate_section(e, u);
    report.insert(report.end(), sec.begin(), sec.end());
    if (!report.empty()) throw ConstructionError("invalid extension or section", std::move(report));
    const auto inv = chi_inverse(e);
    const int nr = e.R.order(), na = e.A.order();
    PreExtension p{e.R, e.A, {}, {}, {}, {}};
    for (int x = 0; x < nr; ++x) {
        AdditiveEndo ph{std::vector<int>(na)}, ps{std::vector<int>(na)};
        for (int a = 0; a < na; ++a) {
            ph.map[a] = inv[e.S.mul(u[x], e.chi[a])];
            ps.map[a] = inv[e.S.mul(e.chi[a], u[x])];
        }
        p.phi.push_back(std::move(ph));
        p.psi.push_back(std::move(ps));
    }
    p.f_hint.resize(static_cast<std::size_t>(nr) * nr);
    p.g_hint.resize(p.f_hint.size());
    for (int x = 0; x < nr; ++x)
        for (int y = 0; y < nr; ++y) {
            const auto i = static_cast<std::size_t>(x) * nr + y;
            p.f_hint[i] = inv[e.S.sub(e.S.add(u[x], u[y]), u[e.R.add(x, y)])];
            p.g_hint[i] = inv[e.S.sub(e.S.mul(u[x], u[y]), u[e.R.mul(x, y)])];
        }
    return p;
}

namespace {

void check_pre_shape(const PreExtension& p) {
    const int nr = p.R.order(), na = p.A.order();
    if (static_cast<int>(p.phi.size()) != nr || static_cast<int>(p.psi.size()) != nr)
        throw StructureError("phi and psi need one endomorphism per element of R");
    for (const auto* fam : {&p.phi, &p.psi})
        for (const auto& e : *fam) {
            if (e.size() != na) throw StructureError("endomorphism table has the wrong size");
            for (int v : e.map)
                if (v < 0 || v >= na) throw StructureError("endomorphism value out of range");
        }
}

}  // namespace

Report validate_pre_extension(const PreExtension& p) {
    check_pre_shape(p);
    Report report;
    const FinRing& r = p.R;
    const FinRing& a = p.A;
    const FinAbGroup& grp = a.group();
    const int nr = r.order(), na = a.order();
    if (!r.has_one() || r.one() == 0) {
        report.push_back({"R has identity 1!=0", {}, ""});
        return report;
    }
    const int one = r.one();
    for (int x = 0; x < nr; ++x) {
        if (!is_additive(grp, p.phi[x].map)) report.push_back({"φ_x additive", {x}, ""});
        if (!is_additive(grp, p.psi[x].map)) report.push_back({"ψ_x additive", {x}, ""});
    }
    if (p.phi[0] != zero_endo(na) || p.psi[0] != zero_endo(na)) report.push_back({"φ₀=ψ₀=0", {}, ""});
    if (p.phi[one] != identity_endo(na) || p.psi[one] != identity_endo(na)) report.push_back({"φ₁=ψ₁=id", {}, ""});

    for (int x = 0; x < nr; ++x) {
        const auto& ph = p.phi[x];
        const auto& ps = p.psi[x];
        for (int s = 0; s < na; ++s) {
            bool l1 = true, l2 = true, l3 = true, l4 = true;
            for (int b = 0; b < na; ++b) {
                l1 = l1 && a.mul(s, ph(b)) == a.mul(ps(s), b);
                l2 = l2 && ph(a.mul(s, b)) == a.mul(ph(s), b);
                l3 = l3 && ps(a.mul(b, s)) == a.mul(b, ps(s));
                l4 = l4 && a.mul(ps(b), s) == a.mul(b, ph(s));
            }
            if (!l1) report.push_back({"l_a∘φ_x=l_{ψ_x(a)}", {x, s}, ""});
            if (!l2) report.push_back({"φ_x∘l_a=l_{φ_x(a)}", {x, s}, ""});
            if (!l3) report.push_back({"ψ_x∘r_a=r_{ψ_x(a)}", {x, s}, ""});
            if (!l4) report.push_back({"r_a∘ψ_x=r_{φ_x(a)}", {x, s}, ""});
        }
    }
    const auto la = left_mults(a);
    const auto ra = right_mults(a);
    for (int x = 0; x < nr; ++x)
        for (int y = 0; y < nr; ++y) {
            if (compose(p.phi[x], p.psi[y]) != compose(p.psi[y], p.phi[x]))
                report.push_back({"φ_x∘ψ_y=ψ_y∘φ_x", {x, y}, ""});
            const auto dl = endo_sub(grp, endo_add(grp, p.phi[x], p.phi[y]), p.phi[r.add(x, y)]);
            if (!la.contains(dl)) report.push_back({"additivity mod L(A)", {x, y}, ""});
            const auto dr = endo_sub(grp, endo_add(grp, p.psi[x], p.psi[y]), p.psi[r.add(x, y)]);
            if (!ra.contains(dr)) report.push_back({"additivity mod R(A)", {x, y}, ""});
            const auto ml = endo_sub(grp, compose(p.phi[x], p.phi[y]), p.phi[r.mul(x, y)]);
            if (!la.contains(ml)) report.push_back({"multiplicativity mod L(A)", {x, y}, ""});
            const auto mr = endo_sub(grp, compose(p.psi[y], p.psi[x]), p.psi[r.mul(x, y)]);
            if (!ra.contains(mr)) report.push_back({"multiplicativity mod R(A)", {x, y}, ""});
        }
    return report;
}

BimoduleAction ka_bimodule(const PreExtension& p) {
    check_pre_shape(p);
    const auto k = bicenter(p.A);
    const int nr = p.R.order(), nk = k.size();
    Table left(nr, std::vector<int>(nk)), right(nr, std::vector<int>(nk));
    for (int x = 0; x < nr; ++x)
        for (int i = 0; i < nk; ++i) {
            left[x][i] = k.position(p.phi[x](k.embed(i)));
            right[x][i] = k.position(p.psi[x](k.embed(i)));
            if (left[x][i] < 0 || right[x][i] < 0)
                throw StructureError("action of x=" + std::to_string(x) + " leaves K_A");
        }
    return BimoduleAction(p.R, k.as_group(), left, right);
}

FGSolutions fg_solutions(const PreExtension& p) {
    check_pre_shape(p);
    const FinRing& r = p.R;
    const FinAbGroup& grp = p.A.group();
    const int nr = r.order(), na = p.A.order(), one = r.one();
    std::vector<AdditiveEndo> l(na), rr(na);
    for (int a = 0; a < na; ++a) {
        l[a] = left_mult(p.A, a);
        rr[a] = right_mult(p.A, a);
    }
    FGSolutions out;
    out.f.resize(static_cast<std::size_t>(nr) * nr);
    out.g.resize(static_cast<std::size_t>(nr) * nr);
    for (int x = 0; x < nr; ++x)
        for (int y = 0; y < nr; ++y) {
            const auto i = static_cast<std::size_t>(x) * nr + y;
            const auto fl = endo_sub(grp, endo_add(grp, p.phi[x], p.phi[y]), p.phi[r.add(x, y)]);
            const auto fr = endo_sub(grp, endo_add(grp, p.psi[x], p.psi[y]), p.psi[r.add(x, y)]);
            const auto gl = endo_sub(grp, compose(p.phi[x], p.phi[y]), p.phi[r.mul(x, y)]);
            const auto gr = endo_sub(grp, compose(p.psi[y], p.psi[x]), p.psi[r.mul(x, y)]);
            for (int a = 0; a < na; ++a) {
                if (l[a] == fl && rr[a] == fr) out.f[i].push_back(a);
                if (l[a] == gl && rr[a] == gr) out.g[i].push_back(a);
            }
            auto normalize = [](std::vector<int>& s) {
                const bool has0 = !s.empty() && s.front() == 0;
                s.assign(has0 ? 1 : 0, 0);
            };
            if (x == 0 || y == 0) normalize(out.f[i]);
            if (x == 0 || y == 0 || x == one || y == one) normalize(out.g[i]);
        }
    return out;
}

FG choose_fg(const PreExtension& p) {
    const auto sol = fg_solutions(p);
    const FinRing& r = p.R;
    const FinAbGroup& grp = p.A.group();
    const int nr = r.order(), na = p.A.order();
    FG out;
    out.f.resize(sol.f.size());
    out.g.resize(sol.g.size());
    Report missing;
    for (int x = 0; x < nr; ++x)
        for (int y = 0; y < nr; ++y) {
            const auto i = static_cast<std::size_t>(x) * nr + y;
            if (sol.f[i].empty()) missing.push_back({"no common f(x,y)", {x, y}, ""});
            else out.f[i] = sol.f[i].front();
            if (sol.g[i].empty()) missing.push_back({"no common g(x,y)", {x, y}, ""});
            else out.g[i] = sol.g[i].front();
            // compare with the one-sided reading
            const auto fl = endo_sub(grp, endo_add(grp, p.phi[x], p.phi[y]), p.phi[r.add(x, y)]);
            const auto gl = endo_sub(grp, compose(p.phi[x], p.phi[y]), p.phi[r.mul(x, y)]);
            std::size_t nf = 0, ng = 0;
            for (int a = 0; a < na; ++a) {
                const auto la = left_mult(p.A, a);
                nf += la == fl;
                ng += la == gl;
            }
            if (!sol.f[i].empty() && nf > sol.f[i].size()) out.one_sided_divergence.push_back({x, y, 0});
            if (!sol.g[i].empty() && ng > sol.g[i].size()) out.one_sided_divergence.push_back({x, y, 1});
        }
    if (!missing.empty()) throw ConstructionError("incoherent pre-extension", std::move(missing));
    if (p.f_hint.size() == out.f.size() && p.g_hint.size() == out.g.size()) {
        bool admissible = true;
        for (std::size_t i = 0; i < out.f.size() && admissible; ++i)
            admissible = std::count(sol.f[i].begin(), sol.f[i].end(), p.f_hint[i]) &&
                         std::count(sol.g[i].begin(), sol.g[i].end(), p.g_hint[i]);
        if (admissible) {
            out.f = p.f_hint;
            out.g = p.g_hint;
        }
    }
    return out;
}

ObstructionFamily compute_obstruction(const PreExtension& p, const std::vector<int>& f, const std::vector<int>& g) {
    const auto target = ka_bimodule(p);
    const auto kset = bicenter(p.A);
    const FinRing& r = p.R;
    const FinAbGroup& a = p.A.group();
    const int n = r.order(), na = p.A.order();
    if (f.size() != static_cast<std::size_t>(n) * n || g.size() != f.size())
        throw StructureError("f and g need |R| x |R| entries");
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] < 0 || f[i] >= na || g[i] < 0 || g[i] >= na) throw StructureError("f or g value out of range");
    auto F = [&](int x, int y) { return f[static_cast<std::size_t>(x) * n + y]; };
    auto G = [&](int x, int y) { return g[static_cast<std::size_t>(x) * n + y]; };
    auto into_k = [&](int v, const char* fn, std::vector<int> args) {
        const int pos = kset.position(v);
        if (pos < 0) {
            std::string t;
            for (int u : args) t += (t.empty() ? "" : ",") + std::to_string(u);
            throw StructureError(std::string(fn) + "(" + t + ") lies outside K_A");
        }
        return pos;
    };
    ObstructionFamily out{target, TupleFamily::zero(n)};
    auto& k = out.k;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            k.eta[k.i2(x, y)] = into_k(a.sub(F(x, y), F(y, x)), "η", {x, y});
            for (int z = 0; z < n; ++z) {
                const auto i = k.i3(x, y, z);
                k.xi[i] = into_k(a.add(a.sub(F(y, z), F(r.add(x, y), z)), a.sub(F(x, r.add(y, z)), F(x, y))), "ξ",
                                 {x, y, z});
                k.alpha[i] = into_k(a.add(a.sub(p.phi[x](G(y, z)), G(r.mul(x, y), z)),
                                          a.sub(G(x, r.mul(y, z)), p.psi[z](G(x, y)))),
                                    "α", {x, y, z});
                k.lambda[i] = into_k(a.add(a.sub(p.phi[x](F(y, z)), F(r.mul(x, y), r.mul(x, z))),
                                           a.sub(a.sub(G(x, r.add(y, z)), G(x, y)), G(x, z))),
                                     "λ", {x, y, z});
                k.rho[i] = into_k(a.add(a.sub(p.psi[z](F(x, y)), F(r.mul(x, z), r.mul(y, z))),
                                        a.sub(a.sub(G(r.add(x, y), z), G(x, z)), G(y, z))),
                                  "ρ", {x, y, z});
            }
        }
    return out;
}

std::vector<int> compute_gamma(const FinRing& r, const FinAbGroup& grp, const std::vector<int>& f) {
    const int n = r.order();
    if (f.size() != static_cast<std::size_t>(n) * n) throw StructureError("f needs |R| x |R| entries");
    auto F = [&](int x, int y) { return f[static_cast<std::size_t>(x) * n + y]; };
    std::vector<int> out(static_cast<std::size_t>(n) * n * n * n);
    std::size_t i = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int t = 0; t < n; ++t) {
                    int v = grp.sub(F(r.add(x, y), r.add(z, t)), F(x, z));
                    v = grp.sub(grp.sub(v, F(y, t)), F(r.add(x, z), r.add(y, t)));
                    out[i++] = grp.add(grp.add(v, F(x, y)), F(z, t));
                }
    return out;
}

RelationReport is_three_cocycle(const ObstructionFamily& k) { return check_relations(k.target, k.k); }

std::optional<CoboundaryPair> are_cohomologous(const ObstructionFamily& k1, const ObstructionFamily& k2,
                                               const Limits& limits) {
    if (!(k1.target == k2.target)) throw StructureError("families have different coefficient bimodules");
    return find_coboundary(k1.target, family_sub(k1.target, k2.k, k1.k), limits);
}

Extension build_extension(const PreExtension& p, const std::vector<int>& f, const std::vector<int>& g) {
    check_pre_shape(p);
    const FinRing& r = p.R;
    const FinRing& a = p.A;
    const int nr = r.order(), na = a.order(), ns = na * nr;
    if (f.size() != static_cast<std::size_t>(nr) * nr || g.size() != f.size())
        throw StructureError("f and g need |R| x |R| entries");
    auto F = [&](int x, int y) { return f[static_cast<std::size_t>(x) * nr + y]; };
    auto G = [&](int x, int y) { return g[static_cast<std::size_t>(x) * nr + y]; };
    Table add(ns, std::vector<int>(ns)), mul(ns, std::vector<int>(ns));
    for (int s = 0; s < ns; ++s)
        for (int t = 0; t < ns; ++t) {
            const int ai = s % na, x = s / na, bi = t % na, y = t / na;
            add[s][t] = a.add(a.add(ai, bi), F(x, y)) + na * r.add(x, y);
            const int v = a.add(a.add(a.mul(ai, bi), p.phi[x](bi)), a.add(p.psi[y](ai), G(x, y)));
            mul[s][t] = v + na * r.mul(x, y);
        }
    Extension e;
    e.R = r;
    e.A = a;
    e.S = FinRing::from_tables("S", add, mul, na * r.one());
    e.chi.resize(na);
    for (int i = 0; i < na; ++i) e.chi[i] = i;
    e.sigma.resize(ns);
    for (int s = 0; s < ns; ++s) e.sigma[s] = s / na;
    e.section.resize(nr);
    for (int x = 0; x < nr; ++x) e.section[x] = na * x;
    auto report = validate_ring(e.S, IdentityRequirement::unital_nonzero);
    if (report.empty()) report = validate_extension(e);
    if (!report.empty()) throw ConstructionError("(f, g) do not define an extension", std::move(report));
    return e;
}

std::optional<Extension> vanish_and_build(const PreExtension& p, const Limits& limits) {
    auto report = validate_pre_extension(p);
    if (!report.empty()) throw ConstructionError("invalid pre-extension", std::move(report));
    const auto fg = choose_fg(p);
    const auto k = compute_obstruction(p, fg.f, fg.g);
    const auto c = find_coboundary(k.target, k.k, limits);
    if (!c) return std::nullopt;
    const auto kset = bicenter(p.A);
    const FinAbGroup& a = p.A.group();
    auto f = fg.f, g = fg.g;
    for (std::size_t i = 0; i < f.size(); ++i) {
        f[i] = a.sub(f[i], kset.embed(c->mu[i]));
        g[i] = a.sub(g[i], kset.embed(c->nu[i]));
    }
    return build_extension(p, f, g);
}

Classification classify_extensions(const PreExtension& p, const Limits& limits) {
    auto report = validate_pre_extension(p);
    if (!report.empty()) throw ConstructionError("invalid pre-extension", std::move(report));
    const auto sol = fg_solutions(p);
    std::vector<const std::vector<int>*> slots;
    for (const auto& s : sol.f) slots.push_back(&s);
    for (const auto& s : sol.g) slots.push_back(&s);
    std::uint64_t total = 1;
    for (const auto* s : slots) {
        if (s->empty()) throw ConstructionError("incoherent pre-extension", {});
        total = total > limits.max_candidates ? total : total * s->size();
    }
    check_search_size("(f, g) enumeration", total, limits);

    Classification out;
    const auto h2 = h2_classes(ka_bimodule(p), limits);
    out.h2_count = h2.class_count();
    const std::size_t half = sol.f.size();
    std::vector<std::size_t> pick(slots.size(), 0);
    while (true) {
        std::vector<int> f(half), g(half);
        for (std::size_t i = 0; i < half; ++i) {
            f[i] = (*slots[i])[pick[i]];
            g[i] = (*slots[half + i])[pick[half + i]];
        }
        const auto k = compute_obstruction(p, f, g);
        if (k.k == TupleFamily::zero(p.R.order())) {
            ++out.compatible_pairs;
            auto e = build_extension(p, f, g);
            bool known = false;
            for (const auto& c : out.classes)
                if (find_equivalence(c, e, limits)) {
                    known = true;
                    break;
                }
            if (!known) out.classes.push_back(std::move(e));
        }
        std::size_t i = 0;
        while (i < slots.size() && ++pick[i] == slots[i]->size()) pick[i++] = 0;
        if (i == slots.size()) break;
    }
    return out;
}

}  // namespace ringext
