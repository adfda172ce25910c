#pragma once

// Built-in desk-scale rings and bimodules used by the tests, the
// acceptance suite and the CLI examples.

#include <vector>

#include "ringext/bimodule.hpp"

namespace ringext::catalog {

/// Z/n with the usual product (identity 1 when n > 1).
FinRing zmod(int n);

/// Z/n with product a*b = k*a*b mod n; no identity unless k is a unit
/// making one exist (not searched: `one` is left empty).
FinRing zmod_scaled(int n, int k);

/// The group g with the zero product.
FinRing null_ring(const FinAbGroup& g, const std::string& name = "null");

FinRing product_ring(const FinRing& a, const FinRing& b);

/// F2-algebra on F2^dim: elements are bit masks, basis_products[i][j] is
/// the mask of e_i e_j. `one` is a mask or -1 for none.
FinRing f2_algebra(int dim, const std::vector<std::vector<int>>& basis_products, int one,
                   const std::string& name);

/// F2[e]/(e^2): elements 0, 1, e (=2), 1+e (=3).
FinRing dual_numbers_f2();

/// F4 = F2[w]/(w^2+w+1): elements 0, 1, w (=2), w+1 (=3).
FinRing field_f4();

/// Z/2 x Z/2 as a product of rings; identity is 3.
FinRing f2_times_f2();

/// The ring map R -> F2 sending e to 0 for R = dual_numbers_f2().
std::vector<int> dual_numbers_augmentation();

/// Every unital ring structure with one = generator 0 of a fixed basis on
/// groups of the given order (4 or 8), up to that normalization. Contains
/// duplicates up to isomorphism; used as a generated inventory.
std::vector<FinRing> unital_rings_of_order(int order);

}  // namespace ringext::catalog
