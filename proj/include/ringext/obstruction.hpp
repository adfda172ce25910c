#pragma once

// Pre-extensions, the bicenter bimodule, obstruction families and the
// construction / classification of general extensions.

#include <optional>
#include <vector>

#include "ringext/endo.hpp"
#include "ringext/extension.hpp"
#include "ringext/factor_sets.hpp"
#include "ringext/tuple_family.hpp"

namespace ringext {

/// (R, A, phi, psi): chosen representatives phi_x, psi_x of the coset-valued
/// action maps, one per element of R.
struct PreExtension {
    FinRing R;
    FinRing A;
    std::vector<AdditiveEndo> phi;
    std::vector<AdditiveEndo> psi;
    /// Optional preferred (f, g), e.g. the factor pair read off the section
    /// an induced pre-extension came from. Empty when absent.
    std::vector<int> f_hint, g_hint;
};

/// phi_x = (a -> u(x)a), psi_x = (a -> a u(x)) pulled back along chi.
PreExtension induced_pre_extension(const Extension& e, const std::vector<int>& u);

/// Every invariant of a pre-extension, with witnesses.
Report validate_pre_extension(const PreExtension& p);

/// K_A with x c = phi_x(c), c x = psi_x(c). Elements are indexed densely as
/// in bicenter(A).as_group(). Throws StructureError if the action leaves K_A.
BimoduleAction ka_bimodule(const PreExtension& p);

/// f, g: R^2 -> A, flattened row-major.
struct FG {
    std::vector<int> f, g;
    /// (x, y, which) where the one-sided (l-only) solution set is strictly
    /// larger than the simultaneous one; which = 0 for f, 1 for g.
    std::vector<std::vector<int>> one_sided_divergence;
};

/// Per (x,y), every a with l_a = phi_x+phi_y-phi_{x+y} and
/// r_a = psi_x+psi_y-psi_{x+y} (f), resp. l_a = phi_x phi_y - phi_{xy} and
/// r_a = psi_y psi_x - psi_{xy} (g). Normalized slots hold {0}.
struct FGSolutions {
    std::vector<std::vector<int>> f, g;
};
FGSolutions fg_solutions(const PreExtension& p);

/// The hinted pair when present and admissible, otherwise the least
/// solutions. Throws ConstructionError("incoherent pre-extension")
/// when some slot has no common solution.
FG choose_fg(const PreExtension& p);

struct ObstructionFamily {
    BimoduleAction target;  // K_A
    TupleFamily k;          // values indexed in target.group()
};

/// The five obstruction functions, values mapped into K_A. Throws
/// StructureError naming the tuple if a value falls outside K_A.
ObstructionFamily compute_obstruction(const PreExtension& p, const std::vector<int>& f, const std::vector<int>& g);

/// gamma(x,y,z,t) = f(x+y,z+t)-f(x,z)-f(y,t)-f(x+z,y+t)+f(x,y)+f(z,t), values
/// in `group`, flattened with x most significant.
std::vector<int> compute_gamma(const FinRing& r, const FinAbGroup& group, const std::vector<int>& f);

/// All 18 relations on the family.
RelationReport is_three_cocycle(const ObstructionFamily& k);

/// Some normalized (nu, mu) with k2 - k1 = delta2(nu, mu).
std::optional<CoboundaryPair> are_cohomologous(const ObstructionFamily& k1, const ObstructionFamily& k2,
                                               const Limits& limits = {});

/// S on A x R with (a,x)+(b,y) = (a+b+f(x,y), x+y) and
/// (a,x)(b,y) = (ab+phi_x(b)+psi_y(a)+g(x,y), xy). Throws ConstructionError
/// with the failed axioms when S is not a ring or the sequence is not exact.
Extension build_extension(const PreExtension& p, const std::vector<int>& f, const std::vector<int>& g);

/// Builds an extension when the obstruction is a coboundary, else nullopt.
std::optional<Extension> vanish_and_build(const PreExtension& p, const Limits& limits = {});

struct Classification {
    std::vector<Extension> classes;
    std::size_t compatible_pairs = 0;  // (f, g) with vanishing obstruction
    std::size_t h2_count = 0;          // |H^2(R, K_A)|
};

/// All (f, g) from the solution cosets with zero obstruction, built and
/// partitioned up to equivalence.
Classification classify_extensions(const PreExtension& p, const Limits& limits = {});

}  // namespace ringext
