#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ringext/catalog.hpp"
#include "ringext/shukla.hpp"
#include "ringext/zlinalg.hpp"

using namespace ringext;
using namespace ringext::zlinalg;

namespace {

std::vector<std::vector<oracle::Int>> plain(const IntMatrix& m) {
    std::vector<std::vector<oracle::Int>> out(m.rows(), std::vector<oracle::Int>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c);
    return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = d(rng);
    return m;
}

BigInt abs_det(const IntMatrix& m) {
    BigInt d = determinant(m);
    return d < 0 ? BigInt(-d) : d;
}

bool unimodular(const IntMatrix& m) { return abs_det(m) == 1; }

// v lies in the kernel and every small kernel vector lies in the span of basis
void check_kernel(const IntMatrix& m, const std::vector<FormalSum>& basis, int box) {
    for (const auto& b : basis) CHECK(m.apply(b).is_zero());
    const std::size_t n = m.cols();
    std::vector<long long> v(n, -box);
    while (true) {
        FormalSum s;
        for (std::size_t i = 0; i < n; ++i) s.add_term(i, v[i]);
        if (m.apply(s).is_zero()) CHECK(in_span(basis, s, n));
        std::size_t i = 0;
        while (i < n && v[i] == box) v[i++] = -box;
        if (i == n) break;
        ++v[i];
    }
}

}  // namespace

TEST_CASE("smith form of [[2,4],[6,8]]") {
    const auto m = IntMatrix::from_rows({{2, 4}, {6, 8}});
    const auto nf = smith_form(m);
    CHECK(nf.D == IntMatrix::from_rows({{2, 0}, {0, 4}}));
    CHECK(nf.U * m * nf.V == nf.D);
    const auto a = plain(m);
    CHECK(oracle::determinantal_divisor(a, 1) == 2);
    CHECK(oracle::determinantal_divisor(a, 2) == 8);
    CHECK(smith_form(IntMatrix::identity(3)).D == IntMatrix::identity(3));
    CHECK(smith_form(IntMatrix(2, 3)).D.is_zero());
}

TEST_CASE("smith form against determinantal divisors on random matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        const auto m = random_matrix(rng, rows, cols, trial % 2 ? 3 : 9);
        const auto nf = smith_form(m);
        CHECK(nf.U * m * nf.V == nf.D);
        CHECK(unimodular(nf.U));
        CHECK(unimodular(nf.V));
        const auto a = plain(m);
        const auto inv = invariant_factors(m);
        oracle::Int prev = 1;
        for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
            const auto dk = oracle::determinantal_divisor(a, k);
            if (dk == 0) {
                CHECK(inv.size() == k - 1);
                break;
            }
            REQUIRE(inv.size() >= k);
            CHECK(inv[k - 1] == dk / prev);
            CHECK(nf.D.at(k - 1, k - 1) == inv[k - 1]);
            prev = dk;
        }
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (r != c) CHECK(nf.D.at(r, c) == 0);
    }
}

TEST_CASE("determinant against Laplace expansion") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const auto m = random_matrix(rng, n, n, 6);
        CHECK(determinant(m) == oracle::determinant(plain(m)));
    }
    CHECK(determinant(IntMatrix::identity(0)) == 1);
}

TEST_CASE("hermite form") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const auto m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, 5);
        const auto h = hermite_form(m);
        CHECK(m * h.V == h.D);
        CHECK(unimodular(h.V));
        CHECK(invariant_factors(h.D).size() == oracle::rank_mod_p(plain(m), 1000003));
    }
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(IntMatrix::from_rows({{2}})).empty());
    const auto k = kernel_basis(IntMatrix::from_rows({{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK((k[0] == FormalSum::from_vector({1, -1}) || k[0] == FormalSum::from_vector({-1, 1})));

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t rows = 1 + rng() % 3, cols = 2 + rng() % 3;
        const auto m = random_matrix(rng, rows, cols, 4);
        const auto basis = kernel_basis(m);
        CHECK(basis.size() == cols - oracle::rank_mod_p(plain(m), 1000003));
        check_kernel(m, basis, 2);
    }
}

TEST_CASE("kernel of d3 for Z/2 is saturated") {
    const auto res = build_resolution(catalog::zmod(2));
    const auto basis = kernel_basis(res.d3);
    CHECK(basis.size() == res.d3.cols() - oracle::rank_mod_p(plain(res.d3), 1000003));
    check_kernel(res.d3, basis, 2);
}

TEST_CASE("solve") {
    const auto m = IntMatrix::from_rows({{2}});
    const auto x = solve(m, FormalSum::from_vector({4}));
    REQUIRE(x);
    CHECK(*x == FormalSum::from_vector({2}));
    CHECK(!solve(m, FormalSum::from_vector({3})));

    const auto res = build_resolution(catalog::zmod(3));
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<BigInt> g(res.d2.cols());
        for (auto& v : g) v = c(rng);
        const auto b = res.d2.apply(FormalSum::from_vector(g));
        const auto pre = solve(res.d2, b);
        REQUIRE(pre);
        CHECK(res.d2.apply(*pre) == b);
    }
}

TEST_CASE("subgroup comparison") {
    CHECK(subgroup_equal({FormalSum::from_vector({2, 0})}, {FormalSum::from_vector({-2, 0})}, 2));
    CHECK(!subgroup_equal({FormalSum::from_vector({1, 0})}, {FormalSum::from_vector({2, 0})}, 2));
    CHECK(subgroup_equal({FormalSum::from_vector({2, 0}), FormalSum::from_vector({0, 3})},
                         {FormalSum::from_vector({2, 3}), FormalSum::from_vector({4, 3})}, 2));

    // im d2 = ker d1 for Z/2, by membership both ways
    const auto res = build_resolution(catalog::zmod(2));
    const auto im = res.d2.columns();
    const auto ker = kernel_basis(res.d1);
    const std::size_t dim = res.d1.cols();
    for (const auto& v : im) CHECK(in_span(ker, v, dim));
    for (const auto& v : ker) CHECK(in_span(im, v, dim));
    CHECK(subgroup_equal(im, ker, dim));
}

TEST_CASE("formal sums") {
    auto s = FormalSum::generator(3, 2);
    s.add_term(3, -2);
    CHECK(s.is_zero());
    const auto a = FormalSum::from_vector({1, 0, -4});
    CHECK(a.coefficient(2) == -4);
    CHECK((a - a).is_zero());
    CHECK(a.scaled(0).is_zero());
    CHECK(a.to_vector(4) == std::vector<BigInt>{1, 0, -4, 0});
}
