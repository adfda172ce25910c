#include "ringext/extension.hpp"

#include <string>

namespace ringext {

bool Extension::singular() const {
    for (int a : A.mul_flat())
        if (a != 0) return false;
    return true;
}

std::vector<int> chi_inverse(const Extension& e) {
    std::vector<int> inv(e.S.order(), -1);
    for (int a = 0; a < static_cast<int>(e.chi.size()); ++a)
        if (e.chi[a] >= 0 && e.chi[a] < e.S.order()) inv[e.chi[a]] = a;
    return inv;
}

Report validate_section(const Extension& e, const std::vector<int>& u) {
    Report report;
    if (static_cast<int>(u.size()) != e.R.order()) {
        report.push_back({"section shape", {}, "u needs one entry per element of R"});
        return report;
    }
    for (int x = 0; x < e.R.order(); ++x) {
        if (u[x] < 0 || u[x] >= e.S.order()) {
            report.push_back({"section shape", {x}, "entry out of range"});
            return report;
        }
        if (e.sigma[u[x]] != x) report.push_back({"sigma(u(x))=x", {x}, ""});
    }
    if (u[0] != 0) report.push_back({"u(0)=0", {}, ""});
    if (!e.S.has_one() || u[e.R.one()] != e.S.one()) report.push_back({"u(1)=1_S", {}, ""});
    return report;
}

Report validate_extension(const Extension& e, bool require_singular) {
    Report report;
    const int na = e.A.order(), ns = e.S.order(), nr = e.R.order();
    if (static_cast<int>(e.chi.size()) != na || static_cast<int>(e.sigma.size()) != ns)
        throw StructureError("chi needs |A| entries and sigma needs |S| entries");
    for (int v : e.chi)
        if (v < 0 || v >= ns) throw StructureError("chi entry out of range");
    for (int v : e.sigma)
        if (v < 0 || v >= nr) throw StructureError("sigma entry out of range");
    if (!e.R.has_one() || e.R.one() == 0) report.push_back({"R has identity 1!=0", {}, ""});
    if (!e.S.has_one()) report.push_back({"S has identity", {}, ""});
    if (!report.empty()) return report;

    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b) {
            if (e.chi[e.A.add(a, b)] != e.S.add(e.chi[a], e.chi[b])) report.push_back({"chi additive", {a, b}, ""});
            if (e.chi[e.A.mul(a, b)] != e.S.mul(e.chi[a], e.chi[b]))
                report.push_back({"chi multiplicative", {a, b}, ""});
            if (a != b && e.chi[a] == e.chi[b]) report.push_back({"chi injective", {a, b}, ""});
            if (require_singular && e.S.mul(e.chi[a], e.chi[b]) != 0) report.push_back({"A^2=0", {a, b}, ""});
        }
    for (int s = 0; s < ns; ++s)
        for (int t = 0; t < ns; ++t) {
            if (e.sigma[e.S.add(s, t)] != e.R.add(e.sigma[s], e.sigma[t]))
                report.push_back({"sigma additive", {s, t}, ""});
            if (e.sigma[e.S.mul(s, t)] != e.R.mul(e.sigma[s], e.sigma[t]))
                report.push_back({"sigma multiplicative", {s, t}, ""});
        }
    if (e.sigma[e.S.one()] != e.R.one()) report.push_back({"sigma(1_S)=1_R", {}, ""});
    std::vector<bool> hit(nr, false), in_image(ns, false);
    for (int s = 0; s < ns; ++s) hit[e.sigma[s]] = true;
    for (int x = 0; x < nr; ++x)
        if (!hit[x]) report.push_back({"sigma surjective", {x}, ""});
    for (int a = 0; a < na; ++a) in_image[e.chi[a]] = true;
    for (int s = 0; s < ns; ++s)
        if (in_image[s] != (e.sigma[s] == 0)) report.push_back({"im chi = ker sigma", {s}, ""});
    for (int a = 0; a < na; ++a)
        for (int s = 0; s < ns; ++s)
            if (!in_image[e.S.mul(s, e.chi[a])] || !in_image[e.S.mul(e.chi[a], s)])
                report.push_back({"chi(A) two-sided ideal", {a, s}, ""});
    for (const auto& v : validate_section(e, e.section)) report.push_back(v);
    return report;
}

std::optional<std::vector<int>> find_equivalence(const Extension& e1, const Extension& e2, const Limits& limits) {
    if (e1.S.order() != e2.S.order() || e1.A.order() != e2.A.order() || !(e1.R == e2.R)) return std::nullopt;
    const int na = e1.A.order(), nr = e1.R.order(), ns = e1.S.order();
    check_search_size("extension equivalence", saturating_pow(na, nr - 1), limits);
    const auto inv1 = chi_inverse(e1);
    // s = chi1(a) + u1(x)
    std::vector<int> part_a(ns), part_x(ns);
    for (int s = 0; s < ns; ++s) {
        part_x[s] = e1.sigma[s];
        part_a[s] = inv1[e1.S.sub(s, e1.section[part_x[s]])];
        if (part_a[s] < 0) return std::nullopt;
    }
    std::vector<int> t(nr, 0);
    std::vector<int> theta(ns);
    while (true) {
        std::vector<bool> seen(ns, false);
        bool ok = true;
        for (int s = 0; s < ns && ok; ++s) {
            const int x = part_x[s];
            theta[s] = e2.S.add(e2.chi[part_a[s]], e2.S.add(e2.section[x], e2.chi[t[x]]));
            if (seen[theta[s]]) ok = false;
            seen[theta[s]] = true;
        }
        for (int s = 0; s < ns && ok; ++s)
            for (int r = 0; r < ns && ok; ++r)
                ok = theta[e1.S.add(s, r)] == e2.S.add(theta[s], theta[r]) &&
                     theta[e1.S.mul(s, r)] == e2.S.mul(theta[s], theta[r]);
        if (ok) return theta;
        int i = 1;
        while (i < nr && ++t[i] == na) t[i++] = 0;
        if (i >= nr) break;
    }
    return std::nullopt;
}

Extension extension_from_quotient(const FinRing& s, const FinRing& r, const std::vector<int>& sigma) {
    const int ns = s.order(), nr = r.order();
    if (static_cast<int>(sigma.size()) != ns) throw StructureError("sigma needs one entry per element of S");
    std::vector<int> kernel;
    for (int e = 0; e < ns; ++e)
        if (sigma[e] == 0) kernel.push_back(e);
    std::vector<int> pos(ns, -1);
    for (int i = 0; i < static_cast<int>(kernel.size()); ++i) pos[kernel[i]] = i;
    const int na = static_cast<int>(kernel.size());
    Table add(na, std::vector<int>(na)), mul(na, std::vector<int>(na));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            add[i][j] = pos[s.add(kernel[i], kernel[j])];
            mul[i][j] = pos[s.mul(kernel[i], kernel[j])];
            if (add[i][j] < 0 || mul[i][j] < 0) throw StructureError("kernel of sigma is not closed");
        }
    Extension e;
    e.R = r;
    e.A = FinRing::from_tables("ker sigma", add, mul, std::nullopt);
    e.S = s;
    e.chi = kernel;
    e.sigma = sigma;
    e.section.assign(nr, -1);
    for (int x = ns - 1; x >= 0; --x) e.section[sigma[x]] = x;
    if (s.has_one() && r.has_one()) e.section[r.one()] = s.one();
    for (int x = 0; x < nr; ++x)
        if (e.section[x] < 0) throw StructureError("sigma is not surjective");
    return e;
}

std::vector<std::vector<int>> unital_ring_maps(const FinRing& s, const FinRing& r) {
    const auto dec = cyclic_decomposition(s.group());
    const int k = static_cast<int>(dec.generators.size());
    std::vector<std::vector<int>> out;
    std::vector<int> img(k, 0);
    while (true) {
        std::vector<int> h(s.order());
        for (int e = 0; e < s.order(); ++e) {
            int v = 0;
            for (int i = 0; i < k; ++i) v = r.add(v, r.group().multiple(dec.coordinates[e][i], img[i]));
            h[e] = v;
        }
        if (validate_ring_hom(s, r, h, true).empty()) out.push_back(h);
        int i = 0;
        while (i < k && ++img[i] == r.order()) img[i++] = 0;
        if (i == k) break;
    }
    return out;
}

}  // namespace ringext
