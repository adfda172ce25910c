#include "ringext/endo.hpp"

#include <algorithm>

namespace ringext {

AdditiveEndo zero_endo(int n) { return {std::vector<int>(n, 0)}; }

AdditiveEndo identity_endo(int n) {
    AdditiveEndo e{std::vector<int>(n)};
    for (int a = 0; a < n; ++a) e.map[a] = a;
    return e;
}

AdditiveEndo compose(const AdditiveEndo& f, const AdditiveEndo& g) {
    AdditiveEndo out{std::vector<int>(g.size())};
    for (int a = 0; a < g.size(); ++a) out.map[a] = f(g(a));
    return out;
}

AdditiveEndo endo_add(const FinAbGroup& grp, const AdditiveEndo& f, const AdditiveEndo& h) {
    AdditiveEndo out{std::vector<int>(grp.order())};
    for (int a = 0; a < grp.order(); ++a) out.map[a] = grp.add(f(a), h(a));
    return out;
}

AdditiveEndo endo_neg(const FinAbGroup& grp, const AdditiveEndo& f) {
    AdditiveEndo out{std::vector<int>(grp.order())};
    for (int a = 0; a < grp.order(); ++a) out.map[a] = grp.neg(f(a));
    return out;
}

AdditiveEndo endo_sub(const FinAbGroup& grp, const AdditiveEndo& f, const AdditiveEndo& h) {
    return endo_add(grp, f, endo_neg(grp, h));
}

bool is_additive(const FinAbGroup& g, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != g.order()) return false;
    for (int v : map)
        if (v < 0 || v >= g.order()) return false;
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (map[g.add(a, b)] != g.add(map[a], map[b])) return false;
    return true;
}

AdditiveEndo left_mult(const FinRing& a, int elem) {
    AdditiveEndo e{std::vector<int>(a.order())};
    for (int b = 0; b < a.order(); ++b) e.map[b] = a.mul(elem, b);
    return e;
}

AdditiveEndo right_mult(const FinRing& a, int elem) {
    AdditiveEndo e{std::vector<int>(a.order())};
    for (int b = 0; b < a.order(); ++b) e.map[b] = a.mul(b, elem);
    return e;
}

EndoSubring::EndoSubring(FinAbGroup group, std::vector<AdditiveEndo> elements, std::vector<int> witnesses)
    : group_(std::move(group)), elements_(std::move(elements)), witnesses_(std::move(witnesses)) {
    if (!witnesses_.empty() && witnesses_.size() != elements_.size())
        throw StructureError("one witness per endomorphism expected");
    for (int i = 0; i < size(); ++i) {
        if (elements_[i].size() != group_.order()) throw StructureError("endomorphism of the wrong group");
        index_.emplace(elements_[i].map, i);
    }
}

int EndoSubring::index_of(const AdditiveEndo& e) const {
    auto it = index_.find(e.map);
    return it == index_.end() ? -1 : it->second;
}

std::optional<int> EndoSubring::witness_of(const AdditiveEndo& e) const {
    const int i = index_of(e);
    if (i < 0 || witnesses_.empty()) return std::nullopt;
    return witnesses_[i];
}

Report EndoSubring::validate_closure() const {
    Report report;
    if (!contains(zero_endo(group_.order()))) report.push_back({"contains zero", {}, ""});
    for (int i = 0; i < size(); ++i) {
        if (!contains(endo_neg(group_, elements_[i]))) report.push_back({"closed under negation", {i}, ""});
        for (int j = 0; j < size(); ++j) {
            if (!contains(endo_add(group_, elements_[i], elements_[j])))
                report.push_back({"closed under addition", {i, j}, ""});
            if (!contains(compose(elements_[i], elements_[j])))
                report.push_back({"closed under composition", {i, j}, ""});
        }
    }
    return report;
}

EndoSubring additive_endos(const FinAbGroup& a, int bound) {
    if (a.order() > bound)
        throw GuardError("End_Z(A) is only materialized for small groups", a.order(), bound);
    const auto dec = cyclic_decomposition(a);
    const int k = static_cast<int>(dec.generators.size());
    // admissible images for each generator: elements killed by its order
    std::vector<std::vector<int>> images(k);
    for (int i = 0; i < k; ++i)
        for (int b = 0; b < a.order(); ++b)
            if (a.multiple(dec.orders[i], b) == 0) images[i].push_back(b);

    std::vector<AdditiveEndo> out;
    std::vector<int> choice(k, 0);
    while (true) {
        AdditiveEndo e{std::vector<int>(a.order())};
        for (int elem = 0; elem < a.order(); ++elem) {
            int v = 0;
            for (int i = 0; i < k; ++i) v = a.add(v, a.multiple(dec.coordinates[elem][i], images[i][choice[i]]));
            e.map[elem] = v;
        }
        out.push_back(std::move(e));
        int i = 0;
        while (i < k && ++choice[i] == static_cast<int>(images[i].size())) choice[i++] = 0;
        if (i == k) break;
    }
    std::sort(out.begin(), out.end());
    return EndoSubring(a, std::move(out));
}

namespace {

EndoSubring mults(const FinRing& a, bool left) {
    std::vector<AdditiveEndo> elems;
    std::vector<int> wit;
    std::map<std::vector<int>, int> seen;
    for (int x = 0; x < a.order(); ++x) {
        auto e = left ? left_mult(a, x) : right_mult(a, x);
        if (seen.emplace(e.map, x).second) {
            elems.push_back(std::move(e));
            wit.push_back(x);
        }
    }
    return EndoSubring(a.group(), std::move(elems), std::move(wit));
}

}  // namespace

EndoSubring left_mults(const FinRing& a) { return mults(a, true); }
EndoSubring right_mults(const FinRing& a) { return mults(a, false); }

Subgroup bicenter(const FinRing& a) {
    std::vector<int> elems;
    for (int c = 0; c < a.order(); ++c) {
        bool annihilates = true;
        for (int b = 0; b < a.order() && annihilates; ++b)
            annihilates = a.mul(c, b) == 0 && a.mul(b, c) == 0;
        if (annihilates) elems.push_back(c);
    }
    return Subgroup(a.group(), std::move(elems));
}

int CosetSpace::coset_of(const AdditiveEndo& e) const {
    auto it = lookup_.find(e.map);
    return it == lookup_.end() ? -1 : it->second;
}

CosetSpace coset_space(const EndoSubring& ambient, const EndoSubring& sub) {
    for (const auto& s : sub.elements())
        if (!ambient.contains(s)) throw StructureError("subgroup is not contained in the ambient set");
    const auto& grp = ambient.group();
    CosetSpace space;
    for (const auto& e : ambient.elements()) {
        if (space.lookup_.count(e.map)) continue;
        const int id = space.size();
        space.reps_.push_back(e);
        for (const auto& s : sub.elements()) {
            auto member = endo_add(grp, e, s);
            if (!ambient.contains(member))
                throw StructureError("ambient set is not closed under adding the subgroup");
            space.lookup_.emplace(member.map, id);
        }
    }
    return space;
}

}  // namespace ringext
