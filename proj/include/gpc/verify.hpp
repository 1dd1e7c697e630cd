#pragma once

#include "gpc/options.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gpc {

struct VerifyFailure {
    std::string instance;
    std::string expected;
    std::string got;
};

struct VerifyReport {
    std::string lemma_id;
    std::size_t instances_checked = 0;
    std::vector<VerifyFailure> failures;
    std::chrono::duration<double> elapsed{0};

    bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
    /// Suite-specific bounds; each suite documents its own default.
    std::optional<int> max_n;
    std::optional<int> max_s;
    /// "small" trims the graph pools to cycles and complete graphs.
    std::string pool = "default";
    SearchOptions search;
};

/// Ids accepted by run_verify, in a stable order.
const std::vector<std::string>& verify_suite_ids();

/// Runs one suite. Throws PreconditionError for an unknown id or pool.
VerifyReport run_verify(std::string_view id, const VerifyOptions& options = {});

}  // namespace gpc
