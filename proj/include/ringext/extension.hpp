#pragma once

// Ring extensions 0 -> A -> S -> R -> 0 as explicit tables, plus the
// equivalence search shared by the singular and general cases.

#include <optional>
#include <vector>

#include "ringext/ring.hpp"

namespace ringext {

/// chi: A -> S, sigma: S -> R, section u: R -> S with u(0)=0, u(1)=1_S.
/// A carries its own ring structure (the zero product for singular
/// extensions).
struct Extension {
    FinRing R;
    FinRing A;
    FinRing S;
    std::vector<int> chi;
    std::vector<int> sigma;
    std::vector<int> section;

    bool singular() const;
};

/// Exactness, ring-map laws, sigma(1_S)=1_R, chi(A) an ideal, section laws.
/// With `require_singular` the product of A must vanish in S.
Report validate_extension(const Extension& e, bool require_singular = false);

/// Checks that u is a section of e (u(0)=0, u(1)=1_S, sigma∘u = id).
Report validate_section(const Extension& e, const std::vector<int>& u);

/// chi^{-1} as a table S -> A, -1 off the image.
std::vector<int> chi_inverse(const Extension& e);

/// A ring isomorphism theta: S1 -> S2 with theta∘chi1 = chi2 and
/// sigma2∘theta = sigma1, as a table; nullopt when none exists. Searches
/// the |A|^(|R|-1) choices of theta(u1(x)).
std::optional<std::vector<int>> find_equivalence(const Extension& e1, const Extension& e2,
                                                 const Limits& limits = {});

/// The extension with S on a subring/ideal pair: given a unital ring S and a
/// surjective unital ring map sigma: S -> R, A = ker sigma with the induced
/// product, chi the inclusion and u(x) the least preimage (u(1) = 1_S).
Extension extension_from_quotient(const FinRing& s, const FinRing& r, const std::vector<int>& sigma);

/// Every unital ring map S -> R (as tables), by exhaustive search over
/// images of a generating set.
std::vector<std::vector<int>> unital_ring_maps(const FinRing& s, const FinRing& r);

}  // namespace ringext
