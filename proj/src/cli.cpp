#include "ringext/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "ringext/ann.hpp"
#include "ringext/endo.hpp"
#include "ringext/io.hpp"
#include "ringext/shukla.hpp"

namespace ringext::cli {

using io::Json;

const std::vector<Verb>& verb_table() {
    static const std::vector<Verb> table = {
        {"ring-check", "validate a ring; End(A), L(A), R(A), K_A and coset counts",
         {"validate_ring", "additive_endos", "left_mults", "right_mults", "bicenter", "coset_space"}},
        {"bimodule-check", "validate a bimodule", {"validate_bimodule"}},
        {"factorset-check", "check relations (2)-(6); optional shift by a 1-cochain",
         {"check_factor_set", "coboundary1", "shift"}},
        {"ext-build", "singular extension from a factor set", {"build_singular_extension"}},
        {"ext-extract", "factor set of an extension along a section",
         {"extract_factor_set", "are_equivalent"}},
        {"h2", "classes of factor sets", {"h2_classes"}},
        {"pre-check", "validate a pre-extension and its K_A bimodule",
         {"validate_pre_extension", "induced_pre_extension", "ka_bimodule"}},
        {"obstruction", "(f, g), the obstruction family and gamma",
         {"choose_fg", "compute_obstruction", "compute_gamma"}},
        {"cocycle-check", "the 18 relations on a family", {"is_three_cocycle"}},
        {"cohomologous", "search (nu, mu) with k2 - k1 = delta2(nu, mu)", {"are_cohomologous", "delta2"}},
        {"vanish-build", "build an extension when the obstruction vanishes", {"vanish_and_build", "build_extension"}},
        {"classify", "extensions compatible with a pre-extension", {"classify_extensions"}},
        {"resolution-verify", "d^2 = 0 and exactness of U0..U4",
         {"build_resolution", "check_exactness", "smith_form", "kernel_basis", "subgroup_equal"}},
        {"product-report", "products, Leibniz certification and candidate comparison",
         {"product_u0", "chain_times_u0", "product_u1_u1", "product_general", "solve"}},
        {"h3", "H^3 over zero-normalized tuples; optional cocycle check", {"h3_small", "cocycle3_check"}},
        {"ann-check", "Ann-category structure, regularity and the Shukla cocycle",
         {"check_ann_structure", "is_regular", "structure_from_obstruction", "structure_to_shukla_cocycle"}},
        {"ann-functor", "Ann-functor check or search; morphism calculus",
         {"check_ann_functor", "cohomologous_structures", "compose", "oplus", "otimes"}},
    };
    return table;
}

namespace {

struct Context {
    Limits limits;
    std::uint64_t seed = 0;
};

struct Outcome {
    Json body = Json::object();
    int code = 0;
};

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw StructureError("not an integer list: " + s);
        }
    }
    return out;
}

// Reads a file, resolving its references against the file's own directory.
template <class Reader>
auto load_as(Reader read, const std::string& file) {
    const auto doc = io::load_file(file);
    return read(doc.json, doc.dir);
}

void set_status(Outcome& o, bool ok) {
    o.body["ok"] = ok;
    o.code = ok ? 0 : 1;
}

// Extension files carry "sigma"; anything else is read as a pre-extension.
PreExtension load_pre(const io::Document& doc, Outcome& o) {
    if (doc.json.contains("sigma")) {
        const auto e = io::extension_from_json(doc.json, doc.dir);
        const auto rep = validate_extension(e);
        if (!rep.empty()) throw ConstructionError("input is not an extension", rep);
        o.body["source"] = "extension";
        return induced_pre_extension(e, e.section);
    }
    o.body["source"] = "pre-extension";
    return io::pre_extension_from_json(doc.json, doc.dir);
}

Json extension_summary(const Extension& e) {
    Json j;
    j["order"] = e.S.order();
    j["extension"] = io::extension_to_json(e);
    return j;
}

Outcome ring_check(const std::string& file, bool unital, const Context& ctx) {
    Outcome o;
    const auto r = load_as(io::ring_from_json, file);
    const auto rep = validate_ring(r, unital ? IdentityRequirement::unital_nonzero : IdentityRequirement::optional);
    o.body["name"] = r.name();
    o.body["order"] = r.order();
    o.body["violations"] = io::report_to_json(rep);
    if (rep.empty()) {
        const auto kl = left_mults(r), kr = right_mults(r);
        o.body["left_mults"] = kl.size();
        o.body["right_mults"] = kr.size();
        o.body["bicenter"] = bicenter(r).elements();
        if (r.order() <= ctx.limits.max_group_order) {
            const auto end = additive_endos(r.group(), ctx.limits.max_group_order);
            o.body["additive_endos"] = end.size();
            o.body["cosets_mod_left_mults"] = coset_space(end, kl).size();
            o.body["cosets_mod_right_mults"] = coset_space(end, kr).size();
        } else {
            o.body["additive_endos"] = "skipped (order above group guard)";
        }
    }
    set_status(o, rep.empty());
    return o;
}

Outcome bimodule_check(const std::string& file) {
    Outcome o;
    const auto m = load_as(io::bimodule_from_json, file);
    const auto rep = validate_bimodule(m);
    o.body["ring_order"] = m.ring().order();
    o.body["group_order"] = m.group().order();
    o.body["violations"] = io::report_to_json(rep);
    set_status(o, rep.empty());
    return o;
}

Outcome factorset_check(const std::string& file, const std::string& shift_by, const Context& ctx) {
    Outcome o;
    const auto c = load_as(io::cochain_from_json, file);
    const auto rep = check_factor_set(c);
    o.body["violations"] = io::report_to_json(rep);
    if (!shift_by.empty()) {
        const OneCochain t(c.bimodule, parse_ints(shift_by), ctx.limits.relaxed_t);
        const auto d = coboundary1(t);
        const auto s = shift(c, t);
        o.body["coboundary"] = {{"f", io::table_to_json(d.f, d.n())}, {"g", io::table_to_json(d.g, d.n())}};
        o.body["shifted"] = {{"f", io::table_to_json(s.f, s.n())}, {"g", io::table_to_json(s.g, s.n())}};
        o.body["shifted_violations"] = io::report_to_json(check_factor_set(s));
    }
    set_status(o, rep.empty());
    return o;
}

Outcome ext_build(const std::string& file) {
    Outcome o;
    const auto c = load_as(io::cochain_from_json, file);
    const auto e = build_singular_extension(c);
    o.body.update(extension_summary(e));
    set_status(o, true);
    return o;
}

Outcome ext_extract(const std::string& file, const std::string& section, const std::string& compare,
                    const Context& ctx) {
    Outcome o;
    const auto doc = io::load_file(file);
    const auto e = io::extension_from_json(doc.json, doc.dir);
    const auto rep = validate_extension(e, true);
    o.body["violations"] = io::report_to_json(rep);
    if (!rep.empty()) {
        set_status(o, false);
        return o;
    }
    const auto u = section.empty() ? e.section : parse_ints(section);
    const auto c = extract_factor_set(e, u);
    o.body["section"] = u;
    o.body["cochain"] = io::cochain_to_json(c);
    bool ok = true;
    if (!compare.empty()) {
        const auto other = load_as(io::cochain_from_json, compare);
        if (!(other.bimodule == c.bimodule)) throw StructureError("compared cochain lives over a different bimodule");
        const auto t = are_equivalent(c, other, ctx.limits);
        o.body["equivalent"] = t.has_value();
        if (t) o.body["witness_t"] = t->values();
        ok = t.has_value();
    }
    set_status(o, ok);
    return o;
}

Outcome h2(const std::string& file, const Context& ctx) {
    Outcome o;
    const auto m = load_as(io::bimodule_from_json, file);
    const auto rep = validate_bimodule(m);
    if (!rep.empty()) {
        o.body["violations"] = io::report_to_json(rep);
        set_status(o, false);
        return o;
    }
    const auto h = h2_classes(m, ctx.limits);
    o.body["classes"] = h.class_count();
    o.body["cocycles"] = h.cocycle_count;
    o.body["coboundaries"] = h.coboundary_count;
    Json reps = Json::array();
    for (const auto& c : h.representatives)
        reps.push_back({{"f", io::table_to_json(c.f, c.n())}, {"g", io::table_to_json(c.g, c.n())}});
    o.body["representatives"] = reps;
    set_status(o, true);
    return o;
}

Outcome pre_check(const std::string& file) {
    Outcome o;
    const auto p = load_pre(io::load_file(file), o);
    const auto rep = validate_pre_extension(p);
    o.body["violations"] = io::report_to_json(rep);
    if (rep.empty()) {
        const auto k = ka_bimodule(p);
        o.body["ka_order"] = k.group().order();
        o.body["ka_bimodule"] = io::bimodule_to_json(k);
    }
    set_status(o, rep.empty());
    return o;
}

Outcome obstruction(const std::string& file) {
    Outcome o;
    const auto p = load_pre(io::load_file(file), o);
    const auto rep = validate_pre_extension(p);
    if (!rep.empty()) {
        o.body["violations"] = io::report_to_json(rep);
        set_status(o, false);
        return o;
    }
    const auto fg = choose_fg(p);
    const int n = p.R.order();
    o.body["f"] = io::table_to_json(fg.f, n);
    o.body["g"] = io::table_to_json(fg.g, n);
    o.body["one_sided_divergence"] = fg.one_sided_divergence;
    const auto k = compute_obstruction(p, fg.f, fg.g);
    o.body["family"] = io::family_to_json(k.target, k.k);
    o.body["zero"] = k.k == TupleFamily::zero(n);
    o.body["gamma"] = compute_gamma(p.R, p.A.group(), fg.f);
    set_status(o, true);
    return o;
}

Outcome cocycle_check(const std::string& file, int sweep, const Context& ctx) {
    Outcome o;
    const auto fam = load_as(io::family_from_json, file);
    const auto rep = is_three_cocycle(ObstructionFamily{fam.module, fam.k});
    o.body["failing_relations"] = rep.failing;
    o.body["violations"] = io::report_to_json(rep.violations);
    bool ok = rep.ok();
    if (sweep > 0) {
        // delta2 images of seeded random (nu, mu) must pass every relation
        const int n = fam.module.ring().order(), order = fam.module.group().order();
        std::mt19937_64 rng(ctx.seed);
        std::uniform_int_distribution<int> pick(0, order - 1);
        int bad = 0;
        for (int i = 0; i < sweep; ++i) {
            std::vector<int> v(pair_slot_count(n));
            for (auto& x : v) x = pick(rng);
            const auto img = delta2(fam.module, pair_from_slots(n, fam.module.ring().one(), v));
            if (!check_relations(fam.module, img).ok()) ++bad;
        }
        o.body["sweep"] = {{"seed", ctx.seed}, {"samples", sweep}, {"failures", bad}};
        ok = ok && bad == 0;
    }
    set_status(o, ok);
    return o;
}

Outcome cohomologous(const std::string& f1, const std::string& f2, const Context& ctx) {
    Outcome o;
    const auto a = load_as(io::family_from_json, f1);
    const auto b = load_as(io::family_from_json, f2);
    const auto w = are_cohomologous(ObstructionFamily{a.module, a.k}, ObstructionFamily{b.module, b.k}, ctx.limits);
    o.body["cohomologous"] = w.has_value();
    if (w) {
        o.body["witness"] = io::pair_to_json(*w);
        o.body["delta2"] = io::family_tables(delta2(a.module, *w));
    }
    set_status(o, w.has_value());
    return o;
}

Outcome vanish_build(const std::string& file, const std::string& fg_file, const Context& ctx) {
    Outcome o;
    const auto p = load_pre(io::load_file(file), o);
    const auto rep = validate_pre_extension(p);
    if (!rep.empty()) {
        o.body["violations"] = io::report_to_json(rep);
        set_status(o, false);
        return o;
    }
    if (!fg_file.empty()) {
        const auto j = io::load_file(fg_file).json;
        const int n = p.R.order();
        std::vector<int> f, g;
        try {
            for (const auto& row : j.at("f").get<Table>()) f.insert(f.end(), row.begin(), row.end());
            for (const auto& row : j.at("g").get<Table>()) g.insert(g.end(), row.begin(), row.end());
        } catch (const Json::exception& e) {
            throw StructureError(std::string("f/g file: ") + e.what());
        }
        if (static_cast<int>(f.size()) != n * n || static_cast<int>(g.size()) != n * n)
            throw StructureError("f and g must be |R| x |R| tables");
        o.body.update(extension_summary(build_extension(p, f, g)));
        set_status(o, true);
        return o;
    }
    const auto e = vanish_and_build(p, ctx.limits);
    o.body["obstruction_vanishes"] = e.has_value();
    if (e) o.body.update(extension_summary(*e));
    set_status(o, e.has_value());
    return o;
}

Outcome classify(const std::string& file, const Context& ctx) {
    Outcome o;
    const auto p = load_pre(io::load_file(file), o);
    const auto rep = validate_pre_extension(p);
    if (!rep.empty()) {
        o.body["violations"] = io::report_to_json(rep);
        set_status(o, false);
        return o;
    }
    const auto c = classify_extensions(p, ctx.limits);
    o.body["classes"] = c.classes.size();
    o.body["compatible_pairs"] = c.compatible_pairs;
    o.body["h2_order"] = c.h2_count;
    Json list = Json::array();
    for (const auto& e : c.classes) list.push_back(io::extension_to_json(e));
    o.body["extensions"] = list;
    set_status(o, true);
    return o;
}

Outcome resolution_verify(const std::string& file, bool dump, const Context& ctx) {
    Outcome o;
    const auto r = load_as(io::ring_from_json, file);
    const auto res = build_resolution(r, ctx.limits);
    const auto rep = verify_resolution(res);
    o.body["ranks"] = {res.bases[0].size(), res.bases[1].size(), res.bases[2].size(), res.bases[3].size(),
                       res.u4_basis.size()};
    o.body["violations"] = io::report_to_json(rep);
    bool ok = rep.empty();
    Json junctions = Json::object();
    for (const auto& j : check_exactness(res)) {
        junctions[j.junction] = j.exact;
        ok = ok && j.exact;
    }
    o.body["exact"] = junctions;
    Json smith = Json::object();
    for (int d = 1; d <= 3; ++d) {
        Json f = Json::array();
        for (const auto& v : zlinalg::invariant_factors(zlinalg::smith_form(res.d(d)).D)) f.push_back(io::bigint_to_json(v));
        smith["d" + std::to_string(d)] = f;
    }
    o.body["invariant_factors"] = smith;
    if (dump) {
        Json gens = Json::object();
        for (int d = 0; d < 4; ++d) {
            Json list = Json::array();
            for (const auto& g : res.bases[d]) list.push_back({{"level", level_name(g.level)}, {"entries", g.entries}});
            gens["U" + std::to_string(d)] = list;
        }
        o.body["generators"] = gens;
        o.body["d1"] = io::matrix_to_json(res.d1);
        o.body["d2"] = io::matrix_to_json(res.d2);
        o.body["d3"] = io::matrix_to_json(res.d3);
        Json k = Json::array();
        for (const auto& v : zlinalg::kernel_basis(res.d3)) k.push_back(io::formal_sum_to_json(v));
        o.body["u4_basis"] = k;
    }
    set_status(o, ok);
    return o;
}

Outcome product_report(const std::string& file, bool per_tuple, const Context& ctx) {
    Outcome o;
    const auto r = load_as(io::ring_from_json, file);
    const auto res = build_resolution(r, ctx.limits);
    ProductEngine eng(res);

    // Leibniz over every generator pair of total degree <= 3
    std::size_t checked = 0, failures = 0;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j)
            for (const auto& g : res.bases[i])
                for (const auto& h : res.bases[j]) {
                    const auto a = res.bracket(g.level, g.entries), b = res.bracket(h.level, h.entries);
                    const auto ab = eng.product_general(a, b);
                    if (i + j == 0) continue;
                    auto rhs = eng.product_general(res.differential(a), b).sum;
                    const auto right = eng.product_general(a, res.differential(b)).sum;
                    rhs = (i % 2 == 0) ? rhs + right : rhs - right;
                    ++checked;
                    if (!(res.differential(ab).sum == rhs)) ++failures;
                }
    // scalar products agree with the generic engine in degree (0, j) and (i, 0)
    std::size_t scalar_mismatch = 0;
    for (int d = 0; d <= 3; ++d)
        for (const auto& g : res.bases[d])
            for (int x = 1; x < r.order(); ++x) {
                const auto c = res.bracket(g.level, g.entries);
                if (!(eng.product_u0(x, c) == eng.product_general(res.bracket(Level::U0, {x}), c))) ++scalar_mismatch;
                if (!(eng.chain_times_u0(c, x) == eng.product_general(c, res.bracket(Level::U0, {x})))) ++scalar_mismatch;
            }
    o.body["leibniz"] = {{"checked", checked}, {"failures", failures}};
    o.body["scalar_mismatches"] = scalar_mismatch;

    const auto cmp = product_comparison(eng);
    std::size_t pm = 0, pn = 0, rm = 0, rn = 0, lift_ok = 0;
    Json rows = Json::array();
    for (const auto& c : cmp) {
        pm += c.printed_match;
        pn += c.printed_match_negated;
        rm += c.relation10_match;
        rn += c.relation10_match_negated;
        if (res.d2.apply(c.lift) == c.leibniz_rhs) ++lift_ok;
        if (per_tuple)
            rows.push_back({{"args", c.args},
                            {"lift", res.describe(Chain{2, c.lift})},
                            {"printed", c.printed_match ? "match" : (c.printed_match_negated ? "negated" : "mismatch")},
                            {"relation10",
                             c.relation10_match ? "match" : (c.relation10_match_negated ? "negated" : "mismatch")}});
    }
    o.body["u1_u1"] = {{"tuples", cmp.size()},
                       {"lift_certified", lift_ok},
                       {"printed_match", pm},
                       {"printed_negated", pn},
                       {"relation10_match", rm},
                       {"relation10_negated", rn}};
    if (per_tuple) o.body["comparison"] = rows;
    set_status(o, failures == 0 && scalar_mismatch == 0 && lift_ok == cmp.size());
    return o;
}

Outcome h3(const std::string& file, const std::string& family, std::size_t max_reps, const Context& ctx) {
    Outcome o;
    const auto m = load_as(io::bimodule_from_json, file);
    const auto rep = validate_bimodule(m);
    if (!rep.empty()) {
        o.body["violations"] = io::report_to_json(rep);
        set_status(o, false);
        return o;
    }
    const auto h = h3_small(m.ring(), m, ctx.limits, max_reps);
    o.body["method"] = h.method;
    o.body["slots"] = h.slots;
    o.body["Z3"] = io::bigint_to_json(h.z_order);
    o.body["B3"] = io::bigint_to_json(h.b_order);
    o.body["H3"] = io::bigint_to_json(h.h_order);
    Json reps = Json::array();
    for (const auto& k : h.representatives) reps.push_back(io::family_tables(k));
    o.body["representatives"] = reps;
    o.body["truncated"] = h.truncated;
    bool ok = true;
    if (!family.empty()) {
        const auto fam = load_as(io::family_from_json, family);
        if (!(fam.module == m)) throw StructureError("family lives over a different bimodule");
        const auto c = cocycle3_check(fam.k, m);
        o.body["family_violations"] = io::report_to_json(c.violations);
        ok = c.ok();
    }
    set_status(o, ok);
    return o;
}

Outcome ann_check(const std::string& file) {
    Outcome o;
    const auto doc = io::load_file(file);
    AnnStructure s;
    if (doc.json.contains("xi")) {
        const auto fam = io::family_from_json(doc.json, doc.dir);
        s = AnnStructure{fam.module, fam.k};
        o.body["source"] = "structure";
    } else {
        Outcome tmp;
        const auto p = load_pre(doc, tmp);
        const auto rep = validate_pre_extension(p);
        if (!rep.empty()) throw ConstructionError("input is not a pre-extension", rep);
        const auto fg = choose_fg(p);
        s = structure_from_obstruction(compute_obstruction(p, fg.f, fg.g));
        o.body["source"] = "obstruction";
    }
    const auto rep = check_ann_structure(s);
    const bool regular = is_regular(s);
    o.body["violations"] = io::report_to_json(rep);
    o.body["regular"] = regular;
    if (rep.empty() && regular) o.body["shukla_cocycle"] = io::family_tables(structure_to_shukla_cocycle(s));
    set_status(o, rep.empty());
    return o;
}

Outcome ann_functor(const std::string& f1, const std::string& f2, const std::string& functor,
                    const std::string& morphisms, const Context& ctx) {
    Outcome o;
    const auto a = load_as(io::family_from_json, f1);
    const auto b = load_as(io::family_from_json, f2);
    const AnnStructure s{a.module, a.k}, s2{b.module, b.k};
    bool ok;
    if (!functor.empty()) {
        const auto d = io::functor_from_json(io::load_file(functor).json, a.module.ring().order());
        const auto rep = check_ann_functor(d, s, s2);
        o.body["violations"] = io::report_to_json(rep);
        ok = rep.empty();
    } else {
        const auto d = cohomologous_structures(s, s2, ctx.limits);
        o.body["cohomologous"] = d.has_value();
        if (d) o.body["functor"] = io::functor_to_json(*d);
        ok = d.has_value();
    }
    if (!morphisms.empty()) {
        const auto v = parse_ints(morphisms);
        if (v.size() != 4) throw StructureError("--morphisms expects r,u,s,v");
        const int nr = a.module.ring().order(), na = a.module.group().order();
        if (v[0] < 0 || v[0] >= nr || v[2] < 0 || v[2] >= nr || v[1] < 0 || v[1] >= na || v[3] < 0 || v[3] >= na)
            throw StructureError("morphism out of range");
        const Morphism m1{v[0], v[1]}, m2{v[2], v[3]};
        auto js = [](const Morphism& m) { return Json::array({m.object, m.label}); };
        Json calc;
        if (m1.object == m2.object) calc["compose"] = js(compose(a.module, m1, m2));
        calc["oplus"] = js(oplus(a.module, m1, m2));
        calc["otimes"] = js(otimes(a.module, m1, m2));
        o.body["morphisms"] = calc;
    }
    set_status(o, ok);
    return o;
}

void render_text(const Json& j, std::ostream& out) {
    for (const auto& [key, value] : j.items()) {
        if (key == "schema") continue;
        if (key == "violations" || key == "shifted_violations" || key == "family_violations") {
            if (value.empty()) {
                out << key << ": none\n";
                continue;
            }
            out << key << ":\n";
            for (const auto& v : value) {
                out << "  " << v.at("law").get<std::string>() << " at " << v.at("witness").dump();
                if (v.contains("detail")) out << " (" << v.at("detail").get<std::string>() << ")";
                out << "\n";
            }
        } else if (value.is_string()) {
            out << key << ": " << value.get<std::string>() << "\n";
        } else {
            out << key << ": " << value.dump() << "\n";
        }
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite ring extension workbench"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    std::uint64_t guard = 0;
    int ring_guard = 0;
    Context ctx;
    ctx.limits.max_resolution_ring = 4;
    if (const char* env = std::getenv("WORKBENCH_GUARD")) {
        try {
            ctx.limits.max_candidates = std::stoull(env);
        } catch (const std::exception&) {
            err << "WORKBENCH_GUARD is not a number\n";
            return 2;
        }
    }
    app.add_flag("--json", json, "JSON output");
    app.add_option("--guard", guard, "search bound (candidates)");
    app.add_option("--ring-guard", ring_guard, "largest ring for the resolution");
    app.add_option("--seed", ctx.seed, "seed for randomized sweeps");

    std::string f1, f2, opt, opt2;
    bool flag = false;
    int count = 0;
    std::size_t max_reps = 64;
    std::function<Outcome()> action;

    auto sub = [&](const std::string& name) {
        const auto& table = verb_table();
        const auto it = std::find_if(table.begin(), table.end(), [&](const Verb& v) { return v.name == name; });
        return app.add_subcommand(name, it->summary);
    };

    auto* s = sub("ring-check");
    s->add_option("ring", f1)->required();
    s->add_flag("--unital", flag, "require an identity 1 != 0");
    s->final_callback([&] { action = [&] { return ring_check(f1, flag, ctx); }; });

    s = sub("bimodule-check");
    s->add_option("bimodule", f1)->required();
    s->final_callback([&] { action = [&] { return bimodule_check(f1); }; });

    s = sub("factorset-check");
    s->add_option("cochain", f1)->required();
    s->add_option("--shift", opt, "1-cochain t as a comma list t(0),...,t(n-1)");
    s->add_flag("--relaxed-t", ctx.limits.relaxed_t, "allow t(1) != 0");
    s->final_callback([&] { action = [&] { return factorset_check(f1, opt, ctx); }; });

    s = sub("ext-build");
    s->add_option("cochain", f1)->required();
    s->final_callback([&] { action = [&] { return ext_build(f1); }; });

    s = sub("ext-extract");
    s->add_option("extension", f1)->required();
    s->add_option("--section", opt, "section u as a comma list (default: the file's u)");
    s->add_option("--compare", opt2, "cochain file to test for equivalence");
    s->final_callback([&] { action = [&] { return ext_extract(f1, opt, opt2, ctx); }; });

    s = sub("h2");
    s->add_option("bimodule", f1)->required();
    s->final_callback([&] { action = [&] { return h2(f1, ctx); }; });

    s = sub("pre-check");
    s->add_option("input", f1, "pre-extension or extension file")->required();
    s->final_callback([&] { action = [&] { return pre_check(f1); }; });

    s = sub("obstruction");
    s->add_option("input", f1, "pre-extension or extension file")->required();
    s->final_callback([&] { action = [&] { return obstruction(f1); }; });

    s = sub("cocycle-check");
    s->add_option("family", f1)->required();
    s->add_option("--sweep", count, "also check delta2 of this many seeded random (nu, mu)");
    s->final_callback([&] { action = [&] { return cocycle_check(f1, count, ctx); }; });

    s = sub("cohomologous");
    s->add_option("family1", f1)->required();
    s->add_option("family2", f2)->required();
    s->final_callback([&] { action = [&] { return cohomologous(f1, f2, ctx); }; });

    s = sub("vanish-build");
    s->add_option("input", f1, "pre-extension or extension file")->required();
    s->add_option("--fg", opt, "build directly from a file with \"f\" and \"g\" tables");
    s->final_callback([&] { action = [&] { return vanish_build(f1, opt, ctx); }; });

    s = sub("classify");
    s->add_option("input", f1, "pre-extension or extension file")->required();
    s->final_callback([&] { action = [&] { return classify(f1, ctx); }; });

    s = sub("resolution-verify");
    s->add_option("ring", f1)->required();
    s->add_flag("--dump", flag, "include generators, matrices and the U4 basis");
    s->final_callback([&] { action = [&] { return resolution_verify(f1, flag, ctx); }; });

    s = sub("product-report");
    s->add_option("ring", f1)->required();
    s->add_flag("--per-tuple", flag, "include the per-tuple comparison table");
    s->final_callback([&] { action = [&] { return product_report(f1, flag, ctx); }; });

    s = sub("h3");
    s->add_option("bimodule", f1)->required();
    s->add_option("--family", opt, "family file to run the cocycle check on");
    s->add_option("--max-reps", max_reps, "representatives to list");
    s->final_callback([&] { action = [&] { return h3(f1, opt, max_reps, ctx); }; });

    s = sub("ann-check");
    s->add_option("input", f1, "structure file, or a pre-extension/extension for its obstruction")->required();
    s->final_callback([&] { action = [&] { return ann_check(f1); }; });

    s = sub("ann-functor");
    s->add_option("structure1", f1)->required();
    s->add_option("structure2", f2)->required();
    s->add_option("--functor", opt, "functor file with F_plus and F_times (otherwise search)");
    s->add_option("--morphisms", opt2, "r,u,s,v: evaluate compose/oplus/otimes on (r,u), (s,v)");
    s->final_callback([&] { action = [&] { return ann_functor(f1, f2, opt, opt2, ctx); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    if (guard > 0) ctx.limits.max_candidates = guard;
    if (ring_guard > 0) ctx.limits.max_resolution_ring = ring_guard;

    Outcome result;
    try {
        result = action();
    } catch (const ConstructionError& e) {
        result.body["error"] = e.what();
        result.body["violations"] = io::report_to_json(e.report());
        result.body["ok"] = false;
        result.code = 1;
    } catch (const GuardError& e) {
        err << "guard exceeded: " << e.what() << "\n";
        return 2;
    } catch (const StructureError& e) {
        err << "malformed input: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }

    Json doc;
    doc["schema"] = "v1";
    doc["verb"] = app.get_subcommands().front()->get_name();
    doc.update(result.body);
    if (json) out << doc.dump(2) << "\n";
    else render_text(doc, out);
    return result.code;
}

}  // namespace ringext::cli
