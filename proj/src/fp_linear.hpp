#pragma once

// Row reduction over F_p for elementary abelian coefficient groups.

#include <vector>

#include "ringext/group.hpp"

namespace ringext::detail {

/// In place; returns pivot columns and leaves rows in reduced echelon form.
std::vector<std::size_t> rref_mod_p(std::vector<std::vector<int>>& rows, int p);

/// p when g is elementary abelian of exponent p (and nontrivial), else 0.
int elementary_prime(const CyclicDecomposition& dec);

}  // namespace ringext::detail
