#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "minorsign/generate.hpp"
#include "minorsign/spectra.hpp"

namespace minorsign {

struct SuiteOptions {
    int n_max = 4;
    int per_class = 100;  // witnesses requested per (class, n), split general/symmetric
    std::uint64_t seed = 1;
    int cap = default_minor_cap;
    long trials_factor = 40;  // trial budget per requested witness
};

struct SuiteCombo {
    MatrixClass cls;
    int n = 0;
    bool symmetric = false;
    int found = 0;
    int inconsistent = 0;
};

struct SuiteResult {
    SuiteOptions options;
    std::vector<SuiteCombo> combos;
    long matrices_checked = 0;
    long inconsistencies = 0;
    std::vector<std::string> failures;  // first few inconsistent cases, spelled out

    // witnesses found for a class at dimension n, across both modes
    int witnesses(MatrixClass c, int n) const;
};

// The full loop the theorems are tested with: generate witnesses of every
// class at every dimension up to n_max (general and symmetric), run
// check_consistency on each, count violations. A hook, when given, sees
// every (matrix, report) pair.
SuiteResult run_suite(const SuiteOptions& options,
                      const std::function<void(const Matrix&, const ConsistencyReport&)>& hook = {});

std::string render_suite_summary(const SuiteResult& result);

}  // namespace minorsign
