#pragma once

// Degree-3 tuple cochains (xi, eta, alpha, lambda, rho) with values in a
// bimodule M, the 18 structure relations, the degree-2 coboundary and the
// coboundary search shared by obstruction and Ann-category code.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ringext/bimodule.hpp"

namespace ringext {

/// Value tables over R = {0..n-1}: ternary tables flattened as x*n*n+y*n+z,
/// eta as x*n+y. Values are element indices of the coefficient group.
struct TupleFamily {
    int n = 0;
    std::vector<int> xi, eta, alpha, lambda, rho;

    static TupleFamily zero(int n);

    std::size_t i3(int x, int y, int z) const { return (static_cast<std::size_t>(x) * n + y) * n + z; }
    std::size_t i2(int x, int y) const { return static_cast<std::size_t>(x) * n + y; }

    /// xi, eta, alpha, lambda, rho concatenated (the lexicographic key).
    std::vector<int> flat() const;
    bool operator==(const TupleFamily&) const = default;
};

/// Degree-2 data (nu, mu), |R| x |R| tables flattened row-major.
struct CoboundaryPair {
    int n = 0;
    std::vector<int> nu, mu;

    static CoboundaryPair zero(int n);
    std::size_t i2(int x, int y) const { return static_cast<std::size_t>(x) * n + y; }
    bool operator==(const CoboundaryPair&) const = default;
};

/// Throws StructureError if the tables do not fit R and M.
void check_shape(const BimoduleAction& m, const TupleFamily& k);
void check_shape(const BimoduleAction& m, const CoboundaryPair& c);

TupleFamily family_add(const BimoduleAction& m, const TupleFamily& a, const TupleFamily& b);
TupleFamily family_sub(const BimoduleAction& m, const TupleFamily& a, const TupleFamily& b);
CoboundaryPair pair_add(const BimoduleAction& m, const CoboundaryPair& a, const CoboundaryPair& b);
CoboundaryPair pair_neg(const BimoduleAction& m, const CoboundaryPair& a);

/// (xi, eta, alpha, -lambda, rho).
TupleFamily negate_lambda(const BimoduleAction& m, const TupleFamily& k);

/// (d1 mu, ant mu, d2 nu, lambda shift, rho shift).
TupleFamily delta2(const BimoduleAction& m, const CoboundaryPair& c);

/// Number of the relation (1..18) and its printed form.
std::string relation_name(int number);

/// Evaluates relation instances; emit(number, witness, residual) is called
/// once per instance with residual = lhs - rhs in M (0 when it holds).
void evaluate_relations(const BimoduleAction& m, const TupleFamily& k,
                        const std::function<void(int, const std::vector<int>&, int)>& emit);

struct RelationReport {
    Report violations;         // one entry per failing relation: first witness, count in detail
    std::vector<int> failing;  // relation numbers, ascending

    bool structure_ok() const;  // all relations except 5
    bool regular() const;       // relation 5
    bool ok() const { return failing.empty(); }
};

/// All 18 relations over all argument tuples.
RelationReport check_relations(const BimoduleAction& m, const TupleFamily& k);

/// Zero-normalized slots: every argument nonzero. For R = Z/2 there are 5.
std::size_t zero_normalized_slot_count(int n);

/// The zero-normalized family with the given slot values, in slot order
/// xi, eta, alpha, lambda, rho (arguments in lexicographic order).
TupleFamily family_from_slots(int n, const std::vector<int>& values);

/// Normalized (nu, mu) slots: mu(x,y) with x,y != 0 and nu(x,y) with
/// x,y not in {0,1}.
std::size_t pair_slot_count(int n);
CoboundaryPair pair_from_slots(int n, int one, const std::vector<int>& values);

/// A normalized (nu, mu) with delta2(nu, mu) = target. Exhaustive within
/// the guard (least witness in slot order); past it, exact linear algebra
/// over F_p when M is elementary abelian, else GuardError.
std::optional<CoboundaryPair> find_coboundary(const BimoduleAction& m, const TupleFamily& target,
                                              const Limits& limits = {});

}  // namespace ringext
