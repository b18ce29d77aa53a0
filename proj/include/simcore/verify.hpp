#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "simcore/format.hpp"
#include "simcore/semigroup.hpp"

namespace simcore {

struct VerifyFailure {
    std::string input;
    std::string expected;
    std::string actual;
};

struct VerifyReport {
    std::string suite;
    std::size_t cases = 0;
    /// Cases left out because their ideal count exceeds the limit.
    std::size_t skipped = 0;
    std::vector<VerifyFailure> failures;
    std::vector<std::string> notes;
    double elapsed_seconds = 0.0;
    double budget_seconds = 0.0;

    bool passed() const noexcept { return failures.empty(); }
    void fail(std::string input, std::string expected, std::string actual) {
        failures.push_back({std::move(input), std::move(expected), std::move(actual)});
    }
    /// Records a failure unless `ok`.
    void expect(bool ok, std::string input, std::string expected, std::string actual) {
        ++cases;
        if (!ok) fail(std::move(input), std::move(expected), std::move(actual));
    }
};

/// Range overrides; unset fields fall back to each suite's default.
struct VerifyOptions {
    std::optional<int> max_sum;    // anderson, maxsize, vandehey: a + b bound
    std::optional<int> max_c;      // cor14: largest coordinate
    std::optional<int> max_coord;  // thm13, prop24, cor28, thm15, prop25: largest coordinate
    std::optional<int> max_k;      // yzz
    std::size_t limit = kDefaultLimit;
};

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Throws std::invalid_argument for an unknown suite.
VerifyReport run_suite(const std::string& name, const VerifyOptions& options = {});

/// Drops the memoized triple classifications shared between suites, so the next suite that
/// needs them pays for the full sweep.
void clear_sweep_cache();

/// Deterministic rendering; elapsed time is left out so output is reproducible.
std::string report_text(const VerifyReport& report);
Json report_json(const VerifyReport& report);

}  // namespace simcore
