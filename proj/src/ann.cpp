#include "ringext/ann.hpp"

#include <functional>
#include <map>
#include <string>

namespace ringext {

Morphism compose(const BimoduleAction& a, const Morphism& m1, const Morphism& m2) {
    if (m1.object != m2.object)
        throw StructureError("cannot compose morphisms of objects " + std::to_string(m1.object) + " and " +
                             std::to_string(m2.object));
    return {m1.object, a.group().add(m1.label, m2.label)};
}

Morphism oplus(const BimoduleAction& a, const Morphism& m1, const Morphism& m2) {
    return {a.ring().add(m1.object, m2.object), a.group().add(m1.label, m2.label)};
}

Morphism otimes(const BimoduleAction& a, const Morphism& m1, const Morphism& m2) {
    return {a.ring().mul(m1.object, m2.object),
            a.group().add(a.left(m1.object, m2.label), a.right(m1.label, m2.object))};
}

Report check_ann_structure(const AnnStructure& s) {
    auto rep = check_relations(s.type, s.k);
    Report out;
    const auto regularity = relation_name(5);
    for (auto& v : rep.violations)
        if (v.law != regularity) out.push_back(std::move(v));
    return out;
}

bool is_regular(const AnnStructure& s) { return check_relations(s.type, s.k).regular(); }

AnnStructure structure_from_obstruction(const ObstructionFamily& k) {
    AnnStructure s{k.target, k.k};
    auto rep = check_relations(s.type, s.k);
    if (!rep.ok()) throw ConstructionError("obstruction family is not a regular Ann-category structure", rep.violations);
    return s;
}

TupleFamily structure_to_shukla_cocycle(const AnnStructure& s) {
    auto rep = check_relations(s.type, s.k);
    if (!rep.ok()) throw ConstructionError("structure is not valid and regular", rep.violations);
    return negate_lambda(s.type, s.k);
}

AnnStructure structure_from_shukla_cocycle(const BimoduleAction& a, const TupleFamily& c) {
    check_shape(a, c);
    return {a, negate_lambda(a, c)};
}

AnnFunctorData AnnFunctorData::zero(int n) {
    const auto sz = static_cast<std::size_t>(n) * n;
    return {n, std::vector<int>(sz, 0), std::vector<int>(sz, 0)};
}

CoboundaryPair AnnFunctorData::as_pair() const { return {n, f_times, f_plus}; }

AnnFunctorData AnnFunctorData::from_pair(const CoboundaryPair& c) { return {c.n, c.mu, c.nu}; }

namespace {

// Collects failures per law: first witness plus a count.
class LawLog {
public:
    void check(const std::string& law, bool holds, const std::vector<int>& witness, const std::string& detail = "") {
        if (holds) return;
        auto [it, inserted] = entries_.try_emplace(law, Violation{law, witness, detail});
        if (inserted) order_.push_back(law);
        ++counts_[law];
    }
    Report report() const {
        Report out;
        for (const auto& law : order_) {
            auto v = entries_.at(law);
            const auto c = counts_.at(law);
            if (c > 1) v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(c) + " failing instance(s)";
            out.push_back(v);
        }
        return out;
    }

private:
    std::vector<std::string> order_;
    std::map<std::string, Violation> entries_;
    std::map<std::string, std::size_t> counts_;
};

std::string labels(int a, int b) { return "paths give " + std::to_string(a) + " and " + std::to_string(b); }

}  // namespace

Report check_ann_functor(const AnnFunctorData& d, const AnnStructure& s, const AnnStructure& s2) {
    if (!(s.type == s2.type)) throw StructureError("structures have different types");
    const auto& a = s.type;
    const FinRing& r = a.ring();
    const int n = r.order();
    check_shape(a, s.k);
    check_shape(a, s2.k);
    check_shape(a, d.as_pair());

    const auto& k = s.k;
    const auto& k2 = s2.k;
    auto mu = [&](int x, int y) { return d.f_plus[static_cast<std::size_t>(x) * n + y]; };
    auto nu = [&](int x, int y) { return d.f_times[static_cast<std::size_t>(x) * n + y]; };
    auto id = [](int x) { return Morphism{x, 0}; };
    auto C = [&](const Morphism& p, const Morphism& q) { return compose(a, p, q); };
    auto P = [&](const Morphism& p, const Morphism& q) { return oplus(a, p, q); };
    auto T = [&](const Morphism& p, const Morphism& q) { return otimes(a, p, q); };

    LawLog log;
    const int one = r.one();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == 0 || y == 0) {
                log.check("F_plus normalized", mu(x, y) == 0, {x, y});
                log.check("F_times normalized", nu(x, y) == 0, {x, y});
            } else if (x == one || y == one) {
                log.check("F_times normalized", nu(x, y) == 0, {x, y});
            }
            const int X = r.add(x, y);
            const auto p1 = C(Morphism{X, k.eta[k.i2(x, y)]}, Morphism{X, mu(x, y)});
            const auto p2 = C(Morphism{X, mu(y, x)}, Morphism{X, k2.eta[k2.i2(x, y)]});
            log.check("⊕-symmetry diagram", p1 == p2, {x, y}, labels(p1.label, p2.label));
        }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const auto i = k.i3(x, y, z);
                const std::vector<int> w{x, y, z};
                {
                    const int X = r.add(r.add(x, y), z);
                    const auto p1 = C(C(Morphism{X, k.xi[i]}, Morphism{X, mu(x, r.add(y, z))}),
                                      P(id(x), Morphism{r.add(y, z), mu(y, z)}));
                    const auto p2 = C(C(Morphism{X, mu(r.add(x, y), z)}, P(Morphism{r.add(x, y), mu(x, y)}, id(z))),
                                      Morphism{X, k2.xi[i]});
                    log.check("⊕-associativity diagram", p1 == p2, w, labels(p1.label, p2.label));
                }
                {
                    const int X = r.mul(r.mul(x, y), z);
                    const auto p1 = C(C(Morphism{X, k.alpha[i]}, Morphism{X, nu(x, r.mul(y, z))}),
                                      T(id(x), Morphism{r.mul(y, z), nu(y, z)}));
                    const auto p2 = C(C(Morphism{X, nu(r.mul(x, y), z)}, T(Morphism{r.mul(x, y), nu(x, y)}, id(z))),
                                      Morphism{X, k2.alpha[i]});
                    log.check("⊗-associativity diagram", p1 == p2, w, labels(p1.label, p2.label));
                }
                {
                    const int X = r.mul(x, r.add(y, z));
                    const int xy = r.mul(x, y), xz = r.mul(x, z);
                    const auto p1 = C(C(T(id(x), Morphism{r.add(y, z), mu(y, z)}), Morphism{X, nu(x, r.add(y, z))}),
                                      Morphism{X, k.lambda[i]});
                    const auto p2 = C(C(Morphism{X, k2.lambda[i]}, P(Morphism{xy, nu(x, y)}, Morphism{xz, nu(x, z)})),
                                      Morphism{X, mu(xy, xz)});
                    log.check("left distributivity diagram", p1 == p2, w, labels(p1.label, p2.label));
                }
                {
                    const int X = r.mul(r.add(x, y), z);
                    const int xz = r.mul(x, z), yz = r.mul(y, z);
                    const auto p1 = C(C(T(Morphism{r.add(x, y), mu(x, y)}, id(z)), Morphism{X, nu(r.add(x, y), z)}),
                                      Morphism{X, k.rho[i]});
                    const auto p2 = C(C(Morphism{X, k2.rho[i]}, P(Morphism{xz, nu(x, z)}, Morphism{yz, nu(y, z)})),
                                      Morphism{X, mu(xz, yz)});
                    log.check("right distributivity diagram", p1 == p2, w, labels(p1.label, p2.label));
                }
            }
    return log.report();
}

std::optional<AnnFunctorData> cohomologous_structures(const AnnStructure& s, const AnnStructure& s2,
                                                      const Limits& limits) {
    if (!(s.type == s2.type)) throw StructureError("structures have different types");
    const auto c = find_coboundary(s.type, family_sub(s.type, s2.k, s.k), limits);
    if (!c) return std::nullopt;
    return AnnFunctorData::from_pair(*c);
}

}  // namespace ringext
