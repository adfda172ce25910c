#include "ringext/catalog.hpp"

#include <numeric>
#include <string>

namespace ringext::catalog {

FinRing zmod(int n) {
    auto g = FinAbGroup::cyclic(n);
    std::vector<int> mul(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = (a * b) % n;
    return FinRing(std::move(g), std::move(mul), n > 1 ? std::optional<int>(1) : std::nullopt,
                   "Z/" + std::to_string(n));
}

FinRing zmod_scaled(int n, int k) {
    auto g = FinAbGroup::cyclic(n);
    std::vector<int> mul(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = (k * a * b) % n;
    return FinRing(std::move(g), std::move(mul), std::nullopt,
                   "Z/" + std::to_string(n) + " with ab:=" + std::to_string(k) + "ab");
}

FinRing null_ring(const FinAbGroup& g, const std::string& name) {
    return FinRing(g, std::vector<int>(static_cast<std::size_t>(g.order()) * g.order(), 0), std::nullopt,
                   name);
}

FinRing product_ring(const FinRing& a, const FinRing& b) {
    auto g = FinAbGroup::product(a.group(), b.group());
    const int m = a.order(), n = g.order();
    std::vector<int> mul(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mul[static_cast<std::size_t>(i) * n + j] = a.mul(i % m, j % m) + m * b.mul(i / m, j / m);
    std::optional<int> one;
    if (a.has_one() && b.has_one()) one = a.one() + m * b.one();
    return FinRing(std::move(g), std::move(mul), one, a.name() + " x " + b.name());
}

FinRing f2_algebra(int dim, const std::vector<std::vector<int>>& basis_products, int one,
                   const std::string& name) {
    const int n = 1 << dim;
    Table add(n, std::vector<int>(n));
    Table mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            add[a][b] = a ^ b;
            int p = 0;
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    if ((a >> i & 1) && (b >> j & 1)) p ^= basis_products[i][j];
            mul[a][b] = p;
        }
    return FinRing::from_tables(name, add, mul, one >= 0 ? std::optional<int>(one) : std::nullopt);
}

FinRing dual_numbers_f2() { return f2_algebra(2, {{1, 2}, {2, 0}}, 1, "F2[e]/(e^2)"); }

FinRing field_f4() { return f2_algebra(2, {{1, 2}, {2, 3}}, 1, "F4"); }

FinRing f2_times_f2() { return f2_algebra(2, {{1, 0}, {0, 2}}, 3, "F2 x F2"); }

std::vector<int> dual_numbers_augmentation() { return {0, 1, 0, 1}; }

namespace {

// Rings with identity on Z/n1 + Z/n2 + ... where the identity is the first
// generator and n1 is the exponent of the group.
void rings_on(const std::vector<int>& orders, std::vector<FinRing>& out) {
    const int k = static_cast<int>(orders.size());
    int n = 1;
    for (int o : orders) n *= o;
    auto coords = [&](int e) {
        std::vector<int> c(k);
        for (int i = 0; i < k; ++i) {
            c[i] = e % orders[i];
            e /= orders[i];
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        int e = 0, w = 1;
        for (int i = 0; i < k; ++i) {
            e += w * (((c[i] % orders[i]) + orders[i]) % orders[i]);
            w *= orders[i];
        }
        return e;
    };
    Table add(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto ca = coords(a), cb = coords(b);
            for (int i = 0; i < k; ++i) ca[i] += cb[i];
            add[a][b] = encode(ca);
        }
    auto g = FinAbGroup::from_table(add);

    // free products: generator pairs (i, j) with i, j >= 1
    std::vector<std::pair<int, int>> slots;
    std::vector<std::vector<int>> choices;
    for (int i = 1; i < k; ++i)
        for (int j = 1; j < k; ++j) {
            const int d = std::gcd(orders[i], orders[j]);
            std::vector<int> ok;
            for (int e = 0; e < n; ++e)
                if (g.multiple(d, e) == 0) ok.push_back(e);
            slots.emplace_back(i, j);
            choices.push_back(std::move(ok));
        }
    std::vector<int> pick(slots.size(), 0);
    while (true) {
        std::vector<std::vector<int>> gen(k, std::vector<int>(k, 0));
        for (int j = 0; j < k; ++j) {
            std::vector<int> unit(k, 0);
            unit[j] = 1;
            gen[0][j] = gen[j][0] = encode(unit);
        }
        for (std::size_t s = 0; s < slots.size(); ++s) gen[slots[s].first][slots[s].second] = choices[s][pick[s]];
        Table mul(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                auto ca = coords(a), cb = coords(b);
                int v = 0;
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) v = g.add(v, g.multiple(static_cast<long long>(ca[i]) * cb[j], gen[i][j]));
                mul[a][b] = v;
            }
        auto r = FinRing::from_tables("unital order-" + std::to_string(n) + " #" + std::to_string(out.size()),
                                      add, mul, 1);
        if (validate_ring(r, IdentityRequirement::unital_nonzero).empty()) out.push_back(std::move(r));
        std::size_t s = 0;
        while (s < slots.size() && ++pick[s] == static_cast<int>(choices[s].size())) pick[s++] = 0;
        if (s == slots.size()) break;
    }
}

}  // namespace

std::vector<FinRing> unital_rings_of_order(int order) {
    std::vector<FinRing> out;
    if (order == 4) {
        rings_on({4}, out);
        rings_on({2, 2}, out);
    } else if (order == 8) {
        rings_on({8}, out);
        rings_on({4, 2}, out);
        rings_on({2, 2, 2}, out);
    } else {
        throw StructureError("inventory is only generated for orders 4 and 8");
    }
    return out;
}

}  // namespace ringext::catalog
