#pragma once

// Singular extensions: factor sets (f, g), the coboundary action,
// equivalence, H^2 and the cochain <-> extension round trip.

#include <optional>
#include <vector>

#include "ringext/bimodule.hpp"
#include "ringext/extension.hpp"

namespace ringext {

/// Normalized 2-cochain: f, g are |R| x |R| tables into A, flattened
/// row-major (f[x*|R|+y] = f(x,y)).
struct TwoCochain {
    BimoduleAction bimodule;
    std::vector<int> f;
    std::vector<int> g;

    int n() const { return bimodule.ring().order(); }
    int f_at(int x, int y) const { return f[static_cast<std::size_t>(x) * n() + y]; }
    int g_at(int x, int y) const { return g[static_cast<std::size_t>(x) * n() + y]; }

    /// Zero cochain over bm.
    static TwoCochain zero(const BimoduleAction& bm);
    /// From nested tables; throws StructureError on shape or range errors.
    static TwoCochain from_tables(const BimoduleAction& bm, const Table& f, const Table& g);

    /// f followed by g, for lexicographic comparison.
    std::vector<int> flat() const;
};

/// t: R -> A with t(0)=0 and (unless relaxed) t(1)=0.
class OneCochain {
public:
    OneCochain(BimoduleAction bm, std::vector<int> t, bool relaxed = false);

    const BimoduleAction& bimodule() const { return bm_; }
    const std::vector<int>& values() const { return t_; }
    int operator()(int x) const { return t_[x]; }
    OneCochain negated() const;

private:
    BimoduleAction bm_;
    std::vector<int> t_;
    bool relaxed_;
};

/// Relations (2)-(6); each violation names its relation and carries the
/// witnessing arguments.
Report check_factor_set(const TwoCochain& c);

/// (delta1 t, delta2 t).
TwoCochain coboundary1(const OneCochain& t);

/// c + coboundary1(t).
TwoCochain shift(const TwoCochain& c, const OneCochain& t);

/// Some t with c2 = shift(c1, t), or nullopt. Exhaustive over
/// |A|^(|R|-2) candidates.
std::optional<OneCochain> are_equivalent(const TwoCochain& c1, const TwoCochain& c2, const Limits& limits = {});

struct H2Result {
    std::vector<TwoCochain> representatives;  // lexicographically least per class
    std::size_t cocycle_count = 0;
    std::size_t coboundary_count = 0;
    std::size_t class_count() const { return representatives.size(); }
};

/// Enumerates all normalized factor sets and partitions them by
/// equivalence.
H2Result h2_classes(const BimoduleAction& bm, const Limits& limits = {});

/// S on pairs (a, x) (index a + |A| x) with the operations of the
/// singular extension; refuses with ConstructionError when c is not a
/// factor set.
Extension build_singular_extension(const TwoCochain& c);

/// The bimodule induced on A by a singular extension through a section.
BimoduleAction induced_bimodule(const Extension& e, const std::vector<int>& u);

/// The (f, g) solving u(x)+u(y) = f(x,y)+u(x+y), u(x)u(y) = g(x,y)+u(xy).
/// Throws ConstructionError when u is not a section.
TwoCochain extract_factor_set(const Extension& e, const std::vector<int>& u);

/// All sections of e (u(0)=0, u(1)=1_S).
std::vector<std::vector<int>> all_sections(const Extension& e);

}  // namespace ringext
