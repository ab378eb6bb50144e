#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tenrange/tensor.hpp"

namespace tenrange::checks {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // failing instance or note; empty when clean
};

// Runs the whole invariant battery: each property on `instances` seeded
// random tensors, plus on `input` where its shape qualifies. Near-boundary
// membership comparisons are marked inconclusive in detail, not failed.
std::vector<CheckResult> run_battery(const std::optional<Tensor>& input, std::uint64_t seed,
                                     std::size_t instances = 100);

// PASS/FAIL line per property; mentions the seed for reproducibility.
std::string format_report(const std::vector<CheckResult>& results, std::uint64_t seed);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace tenrange::checks
