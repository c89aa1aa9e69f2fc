#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "minorsign/classify.hpp"

namespace minorsign {

// splitmix64: the fixed integer recurrence behind every randomized command.
// No floating point, no libc RNG, so corpora reproduce across platforms.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform-ish in [lo, hi], inclusive. Modulo reduction: determinism
    // matters here, distribution niceties do not.
    long next_in(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    bool next_bool() { return next() & 1u; }
};

// Seed for an independent stream: splitmix64 finalizer of
// seed + (stream+1) * golden. Trials and suite combos each get their own.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Entries for rejection sampling: numerator/denominator with the numerator
// uniform in [ceil(lo*den), floor(hi*den)]. Default: integers in [-3, 3].
struct EntryRange {
    Rational lo{-3};
    Rational hi{3};
    long denominator = 1;
};

struct GenSpec {
    MatrixClass target;
    int n = 2;
    bool symmetric = false;
    EntryRange range;
    std::uint64_t seed = 0;
    int count = 1;
    long max_trials = 0;  // 0: defaults to 1000 * count
};

struct GenResult {
    std::vector<Matrix> matrices;  // every one re-verified against the target
    long trials_used = 0;
    bool exhausted = false;  // trials ran out before count was reached
};

// Witness generation: constructive fast paths where a construction is known
// (Gram shifts for P, the I-2J cone for N, exact N-inverses for almost-P,
// aimed diagonal patterns for the almost sum classes, planted zeros for the
// weak/sub-zero classes), seeded rejection sampling otherwise. Every
// candidate is verified with is_class before it is returned.
GenResult generate(const GenSpec& spec, const ClassifyOptions& options = {});

struct CoverageReport {
    int n = 0;
    long budget = 0;
    std::uint64_t seed = 0;
    std::map<MatrixClass, int> witnesses;

    std::vector<MatrixClass> gaps() const;  // classes with zero witnesses
};

CoverageReport coverage_report(int n, long budget, std::uint64_t seed,
                               const ClassifyOptions& options = {});

}  // namespace minorsign
