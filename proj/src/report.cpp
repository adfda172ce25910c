#include "ringext/report.hpp"

#include <limits>
#include <sstream>

namespace ringext {

std::string to_string(const Violation& v) {
    std::ostringstream out;
    out << v.law;
    if (!v.witness.empty()) {
        out << " at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
            if (i) out << ",";
            out << v.witness[i];
        }
        out << ")";
    }
    if (!v.detail.empty()) out << ": " << v.detail;
    return out.str();
}

bool mentions(const Report& report, const std::string& law) {
    for (const auto& v : report)
        if (v.law == law) return true;
    return false;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (base != 0 && result > kMax / base) return kMax;
        result *= base;
    }
    return result;
}

void check_search_size(const std::string& what, std::uint64_t count, const Limits& limits) {
    if (count > limits.max_candidates)
        throw GuardError(what + ": search space too large", count, limits.max_candidates);
}

}  // namespace ringext
