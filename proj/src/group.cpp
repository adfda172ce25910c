#include "ringext/group.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace ringext {

FinAbGroup::FinAbGroup() : order_(1), add_{0}, neg_{0} {}

FinAbGroup FinAbGroup::from_table(const Table& add) {
    const int n = static_cast<int>(add.size());
    if (n == 0) throw StructureError("addition table is empty");
    FinAbGroup g;
    g.order_ = n;
    g.add_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(add[a].size()) != n)
            throw StructureError("addition table row " + std::to_string(a) + " has length " +
                                 std::to_string(add[a].size()) + ", expected " + std::to_string(n));
        for (int b = 0; b < n; ++b) {
            const int v = add[a][b];
            if (v < 0 || v >= n)
                throw StructureError("addition table entry out of range at (" + std::to_string(a) +
                                     "," + std::to_string(b) + ")");
            g.add_[g.index(a, b)] = v;
        }
    }
    for (int a = 0; a < n; ++a)
        if (g.add(0, a) != a || g.add(a, 0) != a)
            throw StructureError("element 0 must be the additive identity");
    g.neg_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.add(a, b) == 0 && g.add(b, a) == 0) {
                g.neg_[a] = b;
                break;
            }
    return g;
}

FinAbGroup FinAbGroup::cyclic(int n) {
    if (n <= 0) throw StructureError("cyclic group order must be positive");
    Table t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return from_table(t);
}

FinAbGroup FinAbGroup::product(const FinAbGroup& g, const FinAbGroup& h) {
    const int m = g.order(), n = h.order();
    Table t(m * n, std::vector<int>(m * n));
    for (int i = 0; i < m * n; ++i)
        for (int j = 0; j < m * n; ++j)
            t[i][j] = g.add(i % m, j % m) + m * h.add(i / m, j / m);
    return from_table(t);
}

int FinAbGroup::multiple(long long k, int a) const {
    int base = a;
    if (k < 0) {
        base = neg(a);
        k = -k;
    }
    k %= element_order(base);
    int acc = 0;
    for (long long i = 0; i < k; ++i) acc = add(acc, base);
    return acc;
}

int FinAbGroup::element_order(int a) const {
    int acc = a, k = 1;
    while (acc != 0) {
        acc = add(acc, a);
        if (++k > order_) return 0;  // only reachable for non-groups
    }
    return k;
}

Table FinAbGroup::add_table() const {
    Table t(order_, std::vector<int>(order_));
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b) t[a][b] = add(a, b);
    return t;
}

Report FinAbGroup::validate() const {
    Report report;
    for (int a = 0; a < order_; ++a) {
        if (neg_[a] < 0) report.push_back({"additive inverse", {a}, "no element b with a+b=0"});
        for (int b = 0; b < order_; ++b) {
            if (add(a, b) != add(b, a)) report.push_back({"additive commutativity", {a, b}, ""});
            for (int c = 0; c < order_; ++c)
                if (add(add(a, b), c) != add(a, add(b, c)))
                    report.push_back({"additive associativity", {a, b, c}, ""});
        }
    }
    return report;
}

Subgroup::Subgroup(const FinAbGroup& parent, std::vector<int> elements)
    : elements_(std::move(elements)), position_(parent.order(), -1) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    if (elements_.empty() || elements_.front() != 0)
        throw StructureError("a subgroup must contain 0");
    for (int i = 0; i < size(); ++i) {
        if (elements_[i] < 0 || elements_[i] >= parent.order())
            throw StructureError("subgroup element out of range");
        position_[elements_[i]] = i;
    }
    if (!closed_under_addition(parent)) throw StructureError("subset is not closed under addition");
    Table t(size(), std::vector<int>(size()));
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) t[i][j] = position_[parent.add(elements_[i], elements_[j])];
    group_ = FinAbGroup::from_table(t);
}

bool Subgroup::closed_under_addition(const FinAbGroup& parent) const {
    for (int a : elements_)
        for (int b : elements_)
            if (position_[parent.add(a, b)] < 0) return false;
    return true;
}

CyclicDecomposition cyclic_decomposition(const FinAbGroup& g) {
    const int n = g.order();
    CyclicDecomposition best;
    if (n == 1) {
        best.coordinates.assign(1, {});
        return best;
    }
    std::vector<int> orders(n);
    for (int a = 0; a < n; ++a) orders[a] = g.element_order(a);

    for (int k = 1; k <= n; ++k) {
        std::vector<int> pick;
        bool found = false;
        std::function<void(int, long long)> search = [&](int start, long long product) {
            if (found) return;
            if (static_cast<int>(pick.size()) == k) {
                if (product != n) return;
                std::vector<std::vector<int>> coords(n);
                std::vector<int> c(k, 0);
                std::vector<bool> seen(n, false);
                // walk all coefficient vectors
                while (true) {
                    int elem = 0;
                    for (int i = 0; i < k; ++i) elem = g.add(elem, g.multiple(c[i], pick[i]));
                    if (seen[elem]) return;
                    seen[elem] = true;
                    coords[elem] = c;
                    int i = 0;
                    while (i < k && ++c[i] == orders[pick[i]]) c[i++] = 0;
                    if (i == k) break;
                }
                best.generators = pick;
                best.orders.clear();
                for (int p : pick) best.orders.push_back(orders[p]);
                best.coordinates = std::move(coords);
                found = true;
                return;
            }
            for (int a = start; a < n; ++a) {
                if (orders[a] <= 1 || product * orders[a] > n) continue;
                pick.push_back(a);
                search(a + 1, product * orders[a]);
                pick.pop_back();
                if (found) return;
            }
        };
        search(1, 1);
        if (found) return best;
    }
    throw StructureError("no cyclic decomposition found (not an abelian group?)");
}

int cyclic_generator(const FinAbGroup& g) {
    for (int a = 0; a < g.order(); ++a)
        if (g.element_order(a) == g.order()) return a;
    return -1;
}

}  // namespace ringext
