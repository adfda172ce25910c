#pragma once

// Validation reports and the error types shared by every module.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringext {

/// One violated law, with the elements that witness the failure.
struct Violation {
    std::string law;
    std::vector<int> witness;
    std::string detail;

    bool operator==(const Violation&) const = default;
};

using Report = std::vector<Violation>;

std::string to_string(const Violation& v);

/// True when some violation in the report names the given law.
bool mentions(const Report& report, const std::string& law);

/// Malformed input: wrong table shapes, indices out of range, mismatched
/// operands. Distinct from an axiom violation, which is reported as data.
class StructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured search or size bound would be exceeded.
class GuardError : public std::runtime_error {
public:
    GuardError(const std::string& what, std::uint64_t required, std::uint64_t bound)
        : std::runtime_error(what + " (needs " + std::to_string(required) +
                             ", bound " + std::to_string(bound) + ")"),
          required_(required), bound_(bound) {}

    std::uint64_t required() const { return required_; }
    std::uint64_t bound() const { return bound_; }

private:
    std::uint64_t required_;
    std::uint64_t bound_;
};

/// A construction was refused; the report says which law failed.
class ConstructionError : public std::runtime_error {
public:
    ConstructionError(const std::string& what, Report report)
        : std::runtime_error(what), report_(std::move(report)) {}

    const Report& report() const { return report_; }

private:
    Report report_;
};

/// Bounds for the exhaustive searches. Defaults are desk scale.
struct Limits {
    int max_group_order = 8;          // materialize End_Z(A) up to this order
    int max_resolution_ring = 5;      // (|R|-1)^4 quadruple generators
    std::uint64_t max_candidates = 10'000'000;
    bool relaxed_t = false;           // allow t(1) != 0 in 1-cochains
};

/// |base|^exponent, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent);

/// Throws GuardError when count exceeds limits.max_candidates.
void check_search_size(const std::string& what, std::uint64_t count, const Limits& limits);

}  // namespace ringext
