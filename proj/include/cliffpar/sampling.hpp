#pragma once

/// Deterministic sample streams for property suites and scans. Streams are
/// keyed by a 64-bit seed; per-trial substreams derive from (seed, trial)
/// so trials are independent of evaluation order.

#include "cliffpar/blendcore.hpp"
#include "cliffpar/projgeom.hpp"

#include <cstdint>
#include <random>

namespace cliffpar {

class SampleStream {
public:
    explicit SampleStream(std::uint64_t seed);

    /// Substream for one trial of a batch run under a master seed.
    static SampleStream for_trial(std::uint64_t seed, std::uint64_t trial);

    /// Uniform draw from [lo, hi]. Bounded draws use a plain reduction of
    /// the raw engine output, so sequences are identical across platforms.
    std::int64_t int_in(std::int64_t lo, std::int64_t hi);

    /// num/den with num in [-bound, bound], den in [1, bound].
    Rat small_rational(int bound = 9);

    Quaternion nonzero_quaternion(const Algebra& alg, int bound = 9);
    Point point(const Algebra& alg, int bound = 9);
    Line line(const Algebra& alg, int bound = 9);
    /// A line containing the scalar point F1.
    Line line_through_one(const Algebra& alg, int bound = 9);
    /// Three pairwise distinct non-collinear points.
    std::array<Point, 3> triangle(const Algebra& alg, int bound = 9);

    FinitePartition partition(int n);
    /// A uniform-ish refinement: each block is split along random labels.
    FinitePartition refinement(const FinitePartition& p);

private:
    std::mt19937_64 rng_;
};

}  // namespace cliffpar
