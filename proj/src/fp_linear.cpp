#include "fp_linear.hpp"

namespace ringext::detail {

std::vector<std::size_t> rref_mod_p(std::vector<std::vector<int>>& rows, int p) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t cols = rows[0].size();
    auto inv = [p](int a) {
        for (int b = 1; b < p; ++b)
            if (a * b % p == 1) return b;
        return 0;
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const int s = inv(rows[r][c]);
        for (int& e : rows[r]) e = e * s % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const int f = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] = ((rows[i][j] - f * rows[r][j]) % p + p) % p;
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

int elementary_prime(const CyclicDecomposition& dec) {
    if (dec.orders.empty()) return 0;
    const int p = dec.orders[0];
    if (p < 2) return 0;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return 0;
    for (int o : dec.orders)
        if (o != p) return 0;
    return p;
}

}  // namespace ringext::detail
