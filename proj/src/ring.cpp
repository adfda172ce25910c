#include "ringext/ring.hpp"

namespace ringext {

FinRing::FinRing() : mul_{0}, one_(std::nullopt) {}

FinRing::FinRing(FinAbGroup group, std::vector<int> mul_flat, std::optional<int> one, std::string name)
    : group_(std::move(group)), mul_(std::move(mul_flat)), one_(one), name_(std::move(name)) {
    const auto n = static_cast<std::size_t>(group_.order());
    if (mul_.size() != n * n) throw StructureError("multiplication table has wrong size");
    for (int v : mul_)
        if (v < 0 || v >= group_.order()) throw StructureError("multiplication entry out of range");
    if (one_ && (*one_ < 0 || *one_ >= group_.order()))
        throw StructureError("identity index out of range");
}

FinRing FinRing::from_tables(const std::string& name, const Table& add, const Table& mul,
                             std::optional<int> one) {
    auto g = FinAbGroup::from_table(add);
    const int n = g.order();
    if (static_cast<int>(mul.size()) != n)
        throw StructureError("multiplication table has " + std::to_string(mul.size()) +
                             " rows, expected " + std::to_string(n));
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(mul[a].size()) != n)
            throw StructureError("multiplication table row " + std::to_string(a) + " has wrong length");
        flat.insert(flat.end(), mul[a].begin(), mul[a].end());
    }
    return FinRing(std::move(g), std::move(flat), one, name);
}

int FinRing::one() const {
    if (!one_) throw StructureError("ring '" + name_ + "' has no identity");
    return *one_;
}

Table FinRing::mul_table() const {
    Table t(order(), std::vector<int>(order()));
    for (int a = 0; a < order(); ++a)
        for (int b = 0; b < order(); ++b) t[a][b] = mul(a, b);
    return t;
}

Report validate_ring(const FinRing& r, IdentityRequirement req) {
    Report report = r.group().validate();
    const int n = r.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
                    report.push_back({"multiplicative associativity", {a, b, c}, ""});
                if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
                    report.push_back({"left distributivity", {a, b, c}, ""});
                if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
                    report.push_back({"right distributivity", {a, b, c}, ""});
            }
    if (r.has_one()) {
        const int e = r.one();
        for (int a = 0; a < n; ++a)
            if (r.mul(e, a) != a || r.mul(a, e) != a) report.push_back({"identity law", {a}, ""});
    }
    if (req == IdentityRequirement::unital_nonzero) {
        if (!r.has_one())
            report.push_back({"identity present", {}, "ring must have an identity"});
        else if (r.one() == 0)
            report.push_back({"identity nonzero", {0}, "1 must differ from 0"});
    }
    return report;
}

Report validate_ring_hom(const FinRing& s, const FinRing& t, const std::vector<int>& h, bool unital) {
    if (static_cast<int>(h.size()) != s.order()) throw StructureError("homomorphism table has wrong size");
    for (int v : h)
        if (v < 0 || v >= t.order()) throw StructureError("homomorphism value out of range");
    Report report;
    for (int a = 0; a < s.order(); ++a)
        for (int b = 0; b < s.order(); ++b) {
            if (h[s.add(a, b)] != t.add(h[a], h[b])) report.push_back({"hom additive", {a, b}, ""});
            if (h[s.mul(a, b)] != t.mul(h[a], h[b])) report.push_back({"hom multiplicative", {a, b}, ""});
        }
    if (unital && s.has_one() && t.has_one() && h[s.one()] != t.one())
        report.push_back({"hom unital", {s.one()}, ""});
    return report;
}

}  // namespace ringext
