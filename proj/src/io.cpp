#include "ringext/io.hpp"

#include <fstream>
#include <limits>

namespace ringext::io {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw StructureError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

template <typename F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw StructureError(std::string(what) + ": " + e.what());
    }
}

Table table_from(const Json& j) { return j.get<Table>(); }

std::vector<int> flat_table(const Json& j, int rows, int cols, const char* name) {
    const auto t = table_from(j);
    if (static_cast<int>(t.size()) != rows) throw StructureError(std::string(name) + " has the wrong number of rows");
    std::vector<int> out;
    for (const auto& row : t) {
        if (static_cast<int>(row.size()) != cols) throw StructureError(std::string(name) + " has a ragged row");
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

std::vector<int> flat_cube(const Json& j, int n, const char* name) {
    const auto t = j.get<std::vector<std::vector<std::vector<int>>>>();
    std::vector<int> out;
    if (static_cast<int>(t.size()) != n) throw StructureError(std::string(name) + " must be an n x n x n array");
    for (const auto& a : t) {
        if (static_cast<int>(a.size()) != n) throw StructureError(std::string(name) + " must be an n x n x n array");
        for (const auto& b : a) {
            if (static_cast<int>(b.size()) != n) throw StructureError(std::string(name) + " must be an n x n x n array");
            out.insert(out.end(), b.begin(), b.end());
        }
    }
    return out;
}

Json cube_to_json(const std::vector<int>& flat, int n) {
    Json out = Json::array();
    for (int x = 0; x < n; ++x) {
        Json plane = Json::array();
        for (int y = 0; y < n; ++y) {
            Json row = Json::array();
            for (int z = 0; z < n; ++z) row.push_back(flat[(static_cast<std::size_t>(x) * n + y) * n + z]);
            plane.push_back(row);
        }
        out.push_back(plane);
    }
    return out;
}

Json endo_list(const std::vector<AdditiveEndo>& maps) {
    Json out = Json::array();
    for (const auto& e : maps) out.push_back(e.map);
    return out;
}

}  // namespace

Document load_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw StructureError("cannot read " + path.string());
    try {
        return {Json::parse(in), path.parent_path()};
    } catch (const Json::exception& e) {
        throw StructureError(path.string() + ": " + e.what());
    }
}

Document resolve(const Json& value, const fs::path& dir) {
    if (value.is_string()) return load_file(dir / value.get<std::string>());
    return {value, dir};
}

FinAbGroup group_from_json(const Json& j) {
    return guarded("group", [&] {
        const auto add = table_from(field(j, "add"));
        if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(add.size()))
            throw StructureError("group order does not match its table");
        return FinAbGroup::from_table(add);
    });
}

Json group_to_json(const FinAbGroup& g) {
    Json out;
    out["order"] = g.order();
    out["add"] = g.add_table();
    return out;
}

FinRing ring_from_json(const Json& j, const fs::path& dir) {
    const auto doc = resolve(j, dir);
    return guarded("ring", [&] {
        const auto& r = doc.json;
        const auto add = table_from(field(r, "add"));
        const auto mul = table_from(field(r, "mul"));
        if (r.contains("order") && r.at("order").get<int>() != static_cast<int>(add.size()))
            throw StructureError("ring order does not match its tables");
        std::optional<int> one;
        if (r.contains("one") && !r.at("one").is_null()) one = r.at("one").get<int>();
        return FinRing::from_tables(r.value("name", std::string{}), add, mul, one);
    });
}

Json ring_to_json(const FinRing& r) {
    Json out;
    out["name"] = r.name();
    out["order"] = r.order();
    out["add"] = r.group().add_table();
    out["mul"] = r.mul_table();
    out["one"] = r.has_one() ? Json(r.one()) : Json(nullptr);
    return out;
}

BimoduleAction bimodule_from_json(const Json& j, const fs::path& dir) {
    const auto doc = resolve(j, dir);
    return guarded("bimodule", [&] {
        const auto& b = doc.json;
        auto ring = ring_from_json(field(b, "ring"), doc.dir);
        auto group = group_from_json(field(b, "group"));
        return BimoduleAction(std::move(ring), std::move(group), table_from(field(b, "left")),
                              table_from(field(b, "right")));
    });
}

Json bimodule_to_json(const BimoduleAction& m) {
    Json out;
    out["ring"] = ring_to_json(m.ring());
    out["group"] = group_to_json(m.group());
    out["left"] = m.left_table();
    out["right"] = m.right_table();
    return out;
}

TwoCochain cochain_from_json(const Json& j, const fs::path& dir) {
    const auto doc = resolve(j, dir);
    return guarded("cochain", [&] {
        const auto bm = bimodule_from_json(field(doc.json, "bimodule"), doc.dir);
        return TwoCochain::from_tables(bm, table_from(field(doc.json, "f")), table_from(field(doc.json, "g")));
    });
}

Json cochain_to_json(const TwoCochain& c) {
    Json out;
    out["bimodule"] = bimodule_to_json(c.bimodule);
    out["f"] = table_to_json(c.f, c.n());
    out["g"] = table_to_json(c.g, c.n());
    return out;
}

Extension extension_from_json(const Json& j, const fs::path& dir) {
    const auto doc = resolve(j, dir);
    return guarded("extension", [&] {
        const auto& e = doc.json;
        const auto s = ring_from_json(field(e, "ring"), doc.dir);
        const auto r = ring_from_json(field(e, "quotient"), doc.dir);
        const auto sigma = field(e, "sigma").get<std::vector<int>>();
        if (static_cast<int>(sigma.size()) != s.order()) throw StructureError("sigma needs one entry per element of S");
        for (int v : sigma)
            if (v < 0 || v >= r.order()) throw StructureError("sigma value out of range");
        Extension out;
        if (e.contains("ideal") || e.contains("chi")) {
            out.S = s;
            out.R = r;
            out.A = ring_from_json(field(e, "ideal"), doc.dir);
            out.chi = field(e, "chi").get<std::vector<int>>();
            out.sigma = sigma;
            if (static_cast<int>(out.chi.size()) != out.A.order()) throw StructureError("chi needs one entry per element of A");
            for (int v : out.chi)
                if (v < 0 || v >= s.order()) throw StructureError("chi value out of range");
        } else {
            out = extension_from_quotient(s, r, sigma);
        }
        if (e.contains("u")) {
            out.section = e.at("u").get<std::vector<int>>();
            if (static_cast<int>(out.section.size()) != r.order()) throw StructureError("u needs one entry per element of R");
            for (int v : out.section)
                if (v < 0 || v >= s.order()) throw StructureError("u value out of range");
        }
        return out;
    });
}

Json extension_to_json(const Extension& e) {
    Json out;
    out["ring"] = ring_to_json(e.S);
    out["quotient"] = ring_to_json(e.R);
    out["ideal"] = ring_to_json(e.A);
    out["chi"] = e.chi;
    out["sigma"] = e.sigma;
    out["u"] = e.section;
    return out;
}

PreExtension pre_extension_from_json(const Json& j, const fs::path& dir) {
    const auto doc = resolve(j, dir);
    return guarded("pre-extension", [&] {
        const auto& p = doc.json;
        PreExtension out;
        out.R = ring_from_json(field(p, "quotient"), doc.dir);
        out.A = ring_from_json(field(p, "ideal"), doc.dir);
        auto maps = [&](const char* key) {
            const auto t = table_from(field(p, key));
            if (static_cast<int>(t.size()) != out.R.order())
                throw StructureError(std::string(key) + " needs one map per element of R");
            std::vector<AdditiveEndo> v;
            for (const auto& row : t) {
                if (static_cast<int>(row.size()) != out.A.order())
                    throw StructureError(std::string(key) + " maps need one entry per element of A");
                for (int x : row)
                    if (x < 0 || x >= out.A.order()) throw StructureError(std::string(key) + " value out of range");
                v.push_back(AdditiveEndo{row});
            }
            return v;
        };
        out.phi = maps("phi");
        out.psi = maps("psi");
        const auto nn = static_cast<std::size_t>(out.R.order()) * out.R.order();
        if (p.contains("f")) out.f_hint = flat_table(p.at("f"), out.R.order(), out.R.order(), "f");
        if (p.contains("g")) out.g_hint = flat_table(p.at("g"), out.R.order(), out.R.order(), "g");
        if ((!out.f_hint.empty() && out.f_hint.size() != nn) || out.f_hint.empty() != out.g_hint.empty())
            throw StructureError("f and g hints must be given together");
        return out;
    });
}

Json pre_extension_to_json(const PreExtension& p) {
    Json out;
    out["quotient"] = ring_to_json(p.R);
    out["ideal"] = ring_to_json(p.A);
    out["phi"] = endo_list(p.phi);
    out["psi"] = endo_list(p.psi);
    if (!p.f_hint.empty()) {
        out["f"] = table_to_json(p.f_hint, p.R.order());
        out["g"] = table_to_json(p.g_hint, p.R.order());
    }
    return out;
}

FamilyFile family_from_json(const Json& j, const fs::path& dir) {
    const auto doc = resolve(j, dir);
    return guarded("family", [&] {
        const auto& f = doc.json;
        FamilyFile out{bimodule_from_json(field(f, "bimodule"), doc.dir), {}};
        const int n = out.module.ring().order();
        out.k.n = n;
        out.k.xi = flat_cube(field(f, "xi"), n, "xi");
        out.k.eta = flat_table(field(f, "eta"), n, n, "eta");
        out.k.alpha = flat_cube(field(f, "alpha"), n, "alpha");
        out.k.lambda = flat_cube(field(f, "lambda"), n, "lambda");
        out.k.rho = flat_cube(field(f, "rho"), n, "rho");
        check_shape(out.module, out.k);
        return out;
    });
}

Json family_tables(const TupleFamily& k) {
    Json out;
    out["xi"] = cube_to_json(k.xi, k.n);
    out["eta"] = table_to_json(k.eta, k.n);
    out["alpha"] = cube_to_json(k.alpha, k.n);
    out["lambda"] = cube_to_json(k.lambda, k.n);
    out["rho"] = cube_to_json(k.rho, k.n);
    return out;
}

Json family_to_json(const BimoduleAction& m, const TupleFamily& k) {
    Json out;
    out["bimodule"] = bimodule_to_json(m);
    out.update(family_tables(k));
    return out;
}

AnnFunctorData functor_from_json(const Json& j, int n) {
    return guarded("functor", [&] {
        AnnFunctorData d{n, flat_table(field(j, "F_plus"), n, n, "F_plus"),
                         flat_table(field(j, "F_times"), n, n, "F_times")};
        return d;
    });
}

Json functor_to_json(const AnnFunctorData& d) {
    Json out;
    out["F_plus"] = table_to_json(d.f_plus, d.n);
    out["F_times"] = table_to_json(d.f_times, d.n);
    return out;
}

Json pair_to_json(const CoboundaryPair& c) {
    Json out;
    out["nu"] = table_to_json(c.nu, c.n);
    out["mu"] = table_to_json(c.mu, c.n);
    return out;
}

Json table_to_json(const std::vector<int>& flat, int n) {
    Json out = Json::array();
    for (int x = 0; x < n; ++x) {
        Json row = Json::array();
        for (int y = 0; y < n; ++y) row.push_back(flat[static_cast<std::size_t>(x) * n + y]);
        out.push_back(row);
    }
    return out;
}

Json report_to_json(const Report& r) {
    Json out = Json::array();
    for (const auto& v : r) {
        Json e;
        e["law"] = v.law;
        e["witness"] = v.witness;
        if (!v.detail.empty()) e["detail"] = v.detail;
        out.push_back(e);
    }
    return out;
}

Json bigint_to_json(const zlinalg::BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return Json(static_cast<long long>(v));
    return Json(v.str());
}

Json formal_sum_to_json(const zlinalg::FormalSum& s) {
    Json out = Json::array();
    for (const auto& [g, c] : s.terms()) out.push_back(Json::array({g, bigint_to_json(c)}));
    return out;
}

Json matrix_to_json(const zlinalg::IntMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(bigint_to_json(m.at(r, c)));
        out.push_back(row);
    }
    return out;
}

}  // namespace ringext::io
