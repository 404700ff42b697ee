#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "extsq/sympoly.hpp"

namespace extsq {

/// First failing coefficient of a symbolic comparison.
struct SymbolicDiscrepancy {
    std::uint32_t x_degree = 0;
    std::uint32_t y_degree = 0;
    SymPoly difference;
};

/// First failing Dirichlet coefficient of a numeric comparison.
struct NumericDiscrepancy {
    std::uint64_t m = 0;
    double relative_error = 0.0;
};

using Discrepancy = std::variant<SymbolicDiscrepancy, NumericDiscrepancy>;

/// Outcome of one identity check. status is pass iff no discrepancy.
struct VerificationReport {
    std::string identity;
    std::vector<std::pair<std::string, std::int64_t>> params;
    bool pass = false;
    std::optional<Discrepancy> discrepancy;
    std::int64_t terms_checked = 0;
    std::chrono::milliseconds elapsed{0};

    /// Single-line canonical JSON object; re-serializing the parse is
    /// byte-identical.
    std::string to_json() const;
    std::string to_table() const;
};

}  // namespace extsq
