#pragma once

// Ann-categories of type (R, A): the morphism calculus, the structure and
// regularity checks, Ann-functors with F = id, and the bridges to
// obstruction families and Shukla cocycles.

#include <optional>
#include <vector>

#include "ringext/obstruction.hpp"
#include "ringext/tuple_family.hpp"

namespace ringext {

/// A morphism of Hom(r, r) = {r} x A.
struct Morphism {
    int object = 0;
    int label = 0;
    bool operator==(const Morphism&) const = default;
};

/// (r,u) o (r,v) = (r, u+v). StructureError when the objects differ.
Morphism compose(const BimoduleAction& a, const Morphism& m1, const Morphism& m2);
/// (r,u) + (s,v) = (r+s, u+v).
Morphism oplus(const BimoduleAction& a, const Morphism& m1, const Morphism& m2);
/// (r,u) x (s,v) = (rs, rv+us).
Morphism otimes(const BimoduleAction& a, const Morphism& m1, const Morphism& m2);

/// Constraint data over the type (R, A); the unit constraints are the
/// identities and are not stored.
struct AnnStructure {
    BimoduleAction type;
    TupleFamily k;
};

/// Relations 1-4 and 6-18. Empty iff the data is an Ann-category structure.
Report check_ann_structure(const AnnStructure& s);
/// Relation 5: eta(x,x) = 0.
bool is_regular(const AnnStructure& s);

/// Repackages an obstruction family; ConstructionError when it is not a
/// valid regular structure.
AnnStructure structure_from_obstruction(const ObstructionFamily& k);

/// (xi, eta, alpha, -lambda, rho). ConstructionError unless s is valid
/// and regular.
TupleFamily structure_to_shukla_cocycle(const AnnStructure& s);
/// The inverse sign map.
AnnStructure structure_from_shukla_cocycle(const BimoduleAction& a, const TupleFamily& c);

/// An Ann-functor that is the identity on objects: F_plus labels the
/// isomorphisms FX+FY -> F(X+Y), F_times those of FX.FY -> F(XY).
struct AnnFunctorData {
    int n = 0;
    std::vector<int> f_plus, f_times;  // |R| x |R|, row-major

    static AnnFunctorData zero(int n);
    /// (nu, mu) = (F_times, F_plus).
    CoboundaryPair as_pair() const;
    static AnnFunctorData from_pair(const CoboundaryPair& c);
};

/// Normalization plus the five diagrams (two monoidal, one symmetry, two
/// distributivity), evaluated as label equations along both paths.
Report check_ann_functor(const AnnFunctorData& d, const AnnStructure& s, const AnnStructure& s2);

/// Some F with (id, F_plus, F_times) : s -> s2 an Ann-functor.
std::optional<AnnFunctorData> cohomologous_structures(const AnnStructure& s, const AnnStructure& s2,
                                                      const Limits& limits = {});

}  // namespace ringext
