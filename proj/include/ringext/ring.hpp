#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringext/group.hpp"

namespace ringext {

/// A finite associative ring given by tables. The identity is optional:
/// the ideal A of an extension need not have one, while the quotient R
/// must (and must have 1 != 0).
class FinRing {
public:
    FinRing();  // the zero ring on {0}

    FinRing(FinAbGroup group, std::vector<int> mul_flat, std::optional<int> one, std::string name = "");

    /// Throws StructureError on malformed shapes or out-of-range entries.
    static FinRing from_tables(const std::string& name, const Table& add, const Table& mul,
                               std::optional<int> one);

    const std::string& name() const { return name_; }
    const FinAbGroup& group() const { return group_; }
    int order() const { return group_.order(); }
    int add(int a, int b) const { return group_.add(a, b); }
    int neg(int a) const { return group_.neg(a); }
    int sub(int a, int b) const { return group_.sub(a, b); }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order() + b]; }
    bool has_one() const { return one_.has_value(); }
    int one() const;
    std::optional<int> maybe_one() const { return one_; }

    Table mul_table() const;
    const std::vector<int>& mul_flat() const { return mul_; }

    bool operator==(const FinRing& other) const {
        return group_ == other.group_ && mul_ == other.mul_ && one_ == other.one_;
    }

private:
    FinAbGroup group_;
    std::vector<int> mul_;
    std::optional<int> one_;
    std::string name_;
};

enum class IdentityRequirement { optional, unital_nonzero };

/// Every violated ring axiom with its witness. With unital_nonzero the ring
/// must declare an identity 1 != 0.
Report validate_ring(const FinRing& r, IdentityRequirement req = IdentityRequirement::optional);

/// Ring homomorphism check for a table h: S -> T (additive, multiplicative,
/// and unital when both sides have identities and `unital` is set).
Report validate_ring_hom(const FinRing& s, const FinRing& t, const std::vector<int>& h, bool unital);

}  // namespace ringext
