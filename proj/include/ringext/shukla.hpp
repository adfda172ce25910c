#pragma once

// The explicit free resolution U0..U4 of a finite ring, its products, and
// desk-scale H^3 in tuple form.

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringext/bimodule.hpp"
#include "ringext/tuple_family.hpp"
#include "ringext/zlinalg.hpp"

namespace ringext {

enum class Level { U0, U1, U2Triple, U2Pair, U3Quad, U3Triple, U3Pair, U3Single };

int degree_of(Level level);
int arity_of(Level level);
std::string level_name(Level level);

struct GeneratorId {
    Level level;
    std::vector<int> entries;  // nonzero elements of R

    auto operator<=>(const GeneratorId&) const = default;
    std::string to_string() const;
};

/// A chain of fixed degree, coefficients on the basis of U_degree.
struct Chain {
    int degree = 0;
    zlinalg::FormalSum sum;

    bool operator==(const Chain&) const = default;
};

struct ResolutionData {
    FinRing R;
    std::array<std::vector<GeneratorId>, 4> bases;
    std::array<std::map<GeneratorId, std::size_t>, 4> index;
    zlinalg::IntMatrix d1, d2, d3;            // d_i : U_i -> U_{i-1}; columns are U_i generators
    std::vector<zlinalg::FormalSum> u4_basis;  // kernel basis of d3 (d4 is its inclusion)
    std::vector<int> epsilon;                  // epsilon[x] = x for U0 generator [x]

    /// The chain [entries] at `level`, or zero when an entry is 0.
    Chain bracket(Level level, const std::vector<int>& entries) const;
    const zlinalg::IntMatrix& d(int degree) const;
    /// d applied to a chain of degree 1..3 (degree 0 maps to the zero chain).
    Chain differential(const Chain& c) const;
    std::string describe(const Chain& c) const;
};

/// Throws GuardError when |R| exceeds limits.max_resolution_ring.
ResolutionData build_resolution(const FinRing& r, const Limits& limits = {});

/// d1 d2 = 0, d2 d3 = 0, d3 d4 = 0, epsilon d1 = 0.
Report verify_resolution(const ResolutionData& res);

struct JunctionResult {
    std::string junction;  // "U0", "U1", "U2", "U3"
    bool exact = false;
    std::size_t image_generators = 0;
    std::size_t kernel_rank = 0;
};

/// im d_{i+1} = ker d_i at U1, U2, U3 and im d1 = ker epsilon at U0.
std::vector<JunctionResult> check_exactness(const ResolutionData& res, int up_to = 3);

/// Products in the DG structure. Lifts through d are deterministic
/// Hermite-reduced solutions, memoized per generator pair.
class ProductEngine {
public:
    explicit ProductEngine(const ResolutionData& res);

    /// [x] * chain, entrywise left multiplication.
    Chain product_u0(int x, const Chain& c) const;
    /// chain * [x].
    Chain chain_times_u0(const Chain& c, int x) const;
    /// [x,y][z,t] in U2, lifted through d2.
    zlinalg::FormalSum product_u1_u1(int x, int y, int z, int t);
    /// The Leibniz right side (d[x,y])[z,t] - [x,y](d[z,t]).
    zlinalg::FormalSum leibniz_u1_u1(int x, int y, int z, int t);
    /// a * b for degrees i + j <= 3.
    Chain product_general(const Chain& a, const Chain& b);

    const ResolutionData& resolution() const { return res_; }

private:
    Chain generator_product(const GeneratorId& g, const GeneratorId& h);
    zlinalg::LinearSolver& solver(int degree);

    const ResolutionData& res_;
    std::map<std::pair<GeneratorId, GeneratorId>, Chain> memo_;
    std::array<std::unique_ptr<zlinalg::LinearSolver>, 4> solvers_;
};

/// Per-tuple comparison of the lifted product with the two printed
/// candidate formulas.
struct ProductComparison {
    std::vector<int> args;  // x, y, z, t
    zlinalg::FormalSum lift;
    zlinalg::FormalSum leibniz_rhs;
    bool printed_match = false;          // d2(printed) = rhs
    bool printed_match_negated = false;  // d2(printed) = -rhs
    bool relation10_match = false;
    bool relation10_match_negated = false;
};

/// The printed candidate (the degree-0 term dropped) and the pattern of
/// relation 10, as U2 chains.
zlinalg::FormalSum printed_product_candidate(const ResolutionData& res, int x, int y, int z, int t);
zlinalg::FormalSum relation10_product_candidate(const ResolutionData& res, int x, int y, int z, int t);

std::vector<ProductComparison> product_comparison(ProductEngine& engine);

/// Shukla-form cocycle check: the 18 relations on (xi, eta, alpha, -lambda, rho).
RelationReport cocycle3_check(const TupleFamily& k, const BimoduleAction& m);

/// The Shukla-form coboundary of (nu, mu).
TupleFamily shukla_coboundary(const BimoduleAction& m, const CoboundaryPair& c);

struct H3Result {
    std::string method;  // "enumeration" or "linear algebra mod p"
    std::size_t slots = 0;
    zlinalg::BigInt z_order, b_order, h_order;
    std::vector<TupleFamily> representatives;  // one per class (possibly truncated)
    bool truncated = false;
};

/// |H^3| over zero-normalized tuples. Enumerates when |M|^slots fits the
/// guard; otherwise uses exact linear algebra when M is elementary abelian.
H3Result h3_small(const FinRing& r, const BimoduleAction& m, const Limits& limits = {},
                  std::size_t max_representatives = 64);

}  // namespace ringext
