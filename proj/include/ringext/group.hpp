#pragma once

#include <vector>

#include "ringext/report.hpp"

namespace ringext {

using Table = std::vector<std::vector<int>>;

/// A finite abelian group given by its addition table. Elements are the
/// indices 0..order-1 and index 0 is always the neutral element.
class FinAbGroup {
public:
    /// The trivial group {0}.
    FinAbGroup();

    /// Builds from a square table. Throws StructureError when the table is
    /// not square, an entry is out of range, or 0 is not a two-sided
    /// identity row/column. Axioms are not checked here; see validate().
    static FinAbGroup from_table(const Table& add);

    /// Z/n with i + j = (i + j) mod n.
    static FinAbGroup cyclic(int n);

    /// Direct product; element (a, b) has index a + |G|*b.
    static FinAbGroup product(const FinAbGroup& g, const FinAbGroup& h);

    int order() const { return order_; }
    int zero() const { return 0; }
    int add(int a, int b) const { return add_[index(a, b)]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int multiple(long long k, int a) const;
    int element_order(int a) const;

    Table add_table() const;
    const std::vector<int>& add_flat() const { return add_; }

    /// Associativity, commutativity, inverses, by full enumeration.
    Report validate() const;

    bool operator==(const FinAbGroup&) const = default;

private:
    std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * order_ + b; }
    int order_ = 1;
    std::vector<int> add_;
    std::vector<int> neg_;  // -1 when an element has no inverse
};

/// A subgroup of a finite abelian group, kept as a sorted element list
/// (element 0 first) plus a reverse lookup into the parent.
class Subgroup {
public:
    Subgroup(const FinAbGroup& parent, std::vector<int> elements);

    const std::vector<int>& elements() const { return elements_; }
    int size() const { return static_cast<int>(elements_.size()); }
    bool contains(int a) const { return position_[a] >= 0; }
    /// Index of a parent element inside the subgroup, or -1.
    int position(int a) const { return position_[a]; }
    /// Parent element for a subgroup index.
    int embed(int i) const { return elements_[i]; }
    /// The subgroup re-indexed densely as a group in its own right.
    const FinAbGroup& as_group() const { return group_; }
    bool closed_under_addition(const FinAbGroup& parent) const;

private:
    std::vector<int> elements_;
    std::vector<int> position_;
    FinAbGroup group_;
};

/// A decomposition G = Z/n_1 + ... + Z/n_k: generators with their orders,
/// and the coordinates of every element.
struct CyclicDecomposition {
    std::vector<int> generators;
    std::vector<int> orders;
    std::vector<std::vector<int>> coordinates;  // per element
};

/// Brute-force search for a cyclic decomposition (desk-scale groups).
CyclicDecomposition cyclic_decomposition(const FinAbGroup& g);

/// Some generator when the group is cyclic, otherwise -1.
int cyclic_generator(const FinAbGroup& g);

}  // namespace ringext
