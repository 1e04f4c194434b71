#pragma once

#include <cstdint>
#include <span>

namespace georag::eval {

/// Two-sided paired bootstrap p-value for the mean difference of two paired
/// score arrays (shift method: differences recentred to zero mean, resampled
/// with replacement; p = (#{|resampled mean| >= |observed mean|} + 1) /
/// (resamples + 1)). Deterministic for a given seed; index draws use a pinned
/// mt19937_64 scheme so results are identical across platforms.
/// Throws std::invalid_argument on length mismatch or n < 2.
double paired_bootstrap(std::span<const double> scores_a, std::span<const double> scores_b,
                        size_t resamples, uint64_t seed);

/// Cliff's delta effect size: (#{a>b} - #{a<b}) / (|a| * |b|) over all pairs.
/// Throws std::invalid_argument when either side is empty.
double cliffs_delta(std::span<const double> scores_a, std::span<const double> scores_b);

} // namespace georag::eval
