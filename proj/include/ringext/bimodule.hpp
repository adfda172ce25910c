#pragma once

#include <vector>

#include "ringext/ring.hpp"

namespace ringext {

/// A unital R-bimodule structure on a finite abelian group M, as two
/// |R| x |M| tables: left(x, a) = xa and right(a, x) = ax.
class BimoduleAction {
public:
    BimoduleAction() = default;

    /// left[x][a] and right[x][a] are indexed ring-first. Throws
    /// StructureError on shape mismatch or out-of-range entries.
    BimoduleAction(FinRing ring, FinAbGroup group, const Table& left, const Table& right);

    const FinRing& ring() const { return ring_; }
    const FinAbGroup& group() const { return group_; }
    int left(int x, int a) const { return left_[idx(x, a)]; }
    int right(int a, int x) const { return right_[idx(x, a)]; }

    Table left_table() const;
    Table right_table() const;

    bool operator==(const BimoduleAction& other) const {
        return ring_ == other.ring_ && group_ == other.group_ && left_ == other.left_ &&
               right_ == other.right_;
    }

private:
    std::size_t idx(int x, int a) const { return static_cast<std::size_t>(x) * group_.order() + a; }
    FinRing ring_;
    FinAbGroup group_;
    std::vector<int> left_;
    std::vector<int> right_;
};

/// Biadditivity, associativity of the three mixed products, unitality and
/// 0a = a0 = 0, each violation with its witness.
Report validate_bimodule(const BimoduleAction& act);

/// M = additive group of T with xa = h_left(x)a and ax = a h_right(x),
/// products taken in T. With T = R and h = id this is the regular bimodule.
BimoduleAction bimodule_from_ring_hom(const FinRing& r, const FinRing& t, const std::vector<int>& h_left,
                                      const std::vector<int>& h_right);

/// R acting on itself by multiplication.
BimoduleAction regular_bimodule(const FinRing& r);

}  // namespace ringext
