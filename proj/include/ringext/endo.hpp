#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ringext/ring.hpp"

namespace ringext {

/// An additive self-map of a finite abelian group, as its value table.
struct AdditiveEndo {
    std::vector<int> map;

    int operator()(int a) const { return map[a]; }
    int size() const { return static_cast<int>(map.size()); }
    auto operator<=>(const AdditiveEndo&) const = default;
};

AdditiveEndo zero_endo(int n);
AdditiveEndo identity_endo(int n);
/// f o g
AdditiveEndo compose(const AdditiveEndo& f, const AdditiveEndo& g);
AdditiveEndo endo_add(const FinAbGroup& g, const AdditiveEndo& f, const AdditiveEndo& h);
AdditiveEndo endo_neg(const FinAbGroup& g, const AdditiveEndo& f);
AdditiveEndo endo_sub(const FinAbGroup& g, const AdditiveEndo& f, const AdditiveEndo& h);
bool is_additive(const FinAbGroup& g, const std::vector<int>& map);

/// l_a : b -> ab and r_a : b -> ba.
AdditiveEndo left_mult(const FinRing& a, int elem);
AdditiveEndo right_mult(const FinRing& a, int elem);

/// A finite set of additive endomorphisms of one group, with an optional
/// witness per element (the a in l_a or r_a).
class EndoSubring {
public:
    EndoSubring(FinAbGroup group, std::vector<AdditiveEndo> elements, std::vector<int> witnesses = {});

    const FinAbGroup& group() const { return group_; }
    const std::vector<AdditiveEndo>& elements() const { return elements_; }
    const std::vector<int>& witnesses() const { return witnesses_; }
    int size() const { return static_cast<int>(elements_.size()); }
    bool contains(const AdditiveEndo& e) const { return index_.count(e.map) != 0; }
    /// Position of e in elements(), or -1.
    int index_of(const AdditiveEndo& e) const;
    /// Witness of e (first a with l_a = e, say), or nullopt.
    std::optional<int> witness_of(const AdditiveEndo& e) const;

    /// Closure under +, -, composition and presence of 0.
    Report validate_closure() const;

private:
    FinAbGroup group_;
    std::vector<AdditiveEndo> elements_;
    std::vector<int> witnesses_;
    std::map<std::vector<int>, int> index_;
};

/// End_Z(A), materialized. Throws GuardError when |A| > bound.
EndoSubring additive_endos(const FinAbGroup& a, int bound = 8);

/// L(A) = {l_a} and R(A) = {r_a}, deduplicated, each with its least witness.
EndoSubring left_mults(const FinRing& a);
EndoSubring right_mults(const FinRing& a);

/// K_A = {c | ca = 0 = ac for all a}.
Subgroup bicenter(const FinRing& a);

/// Quotient of an additive group of endomorphisms by a subgroup.
class CosetSpace {
public:
    const std::vector<AdditiveEndo>& representatives() const { return reps_; }
    int size() const { return static_cast<int>(reps_.size()); }
    /// Index of the representative congruent to e; -1 when e is not in the ambient set.
    int coset_of(const AdditiveEndo& e) const;

private:
    friend CosetSpace coset_space(const EndoSubring& ambient, const EndoSubring& sub);
    std::vector<AdditiveEndo> reps_;
    std::map<std::vector<int>, int> lookup_;
};

/// Throws StructureError when sub is not contained in ambient.
CosetSpace coset_space(const EndoSubring& ambient, const EndoSubring& sub);

}  // namespace ringext
