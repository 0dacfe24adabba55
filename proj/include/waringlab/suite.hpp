#pragma once

// Acceptance batches shared by the acceptance test binary and `waringlab suite`.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace waringlab {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    /// 0 means "hardware concurrency, capped by WARINGLAB_THREADS".
    unsigned threads = 0;
    /// When set, the round-trip batch writes instance and report files here.
    std::optional<std::filesystem::path> out_dir;
};

/// Threads to use: `requested` if nonzero, else the hardware count; WARINGLAB_THREADS
/// caps either.
unsigned thread_budget(unsigned requested = 0);
/// Runs body(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

/// Criteria 1-8 in order. `report` is called as each criterion finishes.
std::vector<CriterionResult> run_acceptance(const SuiteOptions& opts,
                                            const std::function<void(const CriterionResult&)>& report = {});

std::string format_result(const CriterionResult& r);

}  // namespace waringlab
