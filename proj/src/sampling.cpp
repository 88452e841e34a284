#include "cliffpar/sampling.hpp"

namespace cliffpar {

namespace {

std::uint64_t splitmix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

SampleStream::SampleStream(std::uint64_t seed) : rng_(seed) {}

SampleStream SampleStream::for_trial(std::uint64_t seed, std::uint64_t trial) {
    return SampleStream(splitmix(splitmix(seed) + trial));
}

std::int64_t SampleStream::int_in(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::domain_error("int_in: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng_() % span);
}

Rat SampleStream::small_rational(int bound) {
    return Rat(int_in(-bound, bound), int_in(1, bound));
}

Quaternion SampleStream::nonzero_quaternion(const Algebra& alg, int bound) {
    while (true) {
        Quaternion q(alg, Rat(int_in(-bound, bound)), Rat(int_in(-bound, bound)),
                     Rat(int_in(-bound, bound)), Rat(int_in(-bound, bound)));
        if (!q.is_zero()) return q;
    }
}

Point SampleStream::point(const Algebra& alg, int bound) {
    return Point(nonzero_quaternion(alg, bound));
}

Line SampleStream::line(const Algebra& alg, int bound) {
    while (true) {
        try {
            return line_from_span(nonzero_quaternion(alg, bound), nonzero_quaternion(alg, bound));
        } catch (const std::domain_error&) {
            // Dependent draw; retry.
        }
    }
}

Line SampleStream::line_through_one(const Algebra& alg, int bound) {
    while (true) {
        const Quaternion g = nonzero_quaternion(alg, bound);
        if (pure_part(g).is_zero()) continue;
        return line_from_span(Quaternion::one(alg), g);
    }
}

std::array<Point, 3> SampleStream::triangle(const Algebra& alg, int bound) {
    while (true) {
        const Point p0 = point(alg, bound);
        const Point p1 = point(alg, bound);
        const Point p2 = point(alg, bound);
        if (p0 == p1 || p0 == p2 || p1 == p2) continue;
        if (incident(p2, join(p0, p1))) continue;
        return {p0, p1, p2};
    }
}

FinitePartition SampleStream::partition(int n) {
    if (n <= 0) throw std::domain_error("partition: ground size must be positive");
    // Restricted growth string with uniform digit choices.
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    int max_used = 0;
    for (int i = 1; i < n; ++i) {
        const int c = static_cast<int>(int_in(0, max_used + 1));
        rgs[static_cast<std::size_t>(i)] = c;
        max_used = std::max(max_used, c);
    }
    return FinitePartition::from_class_ids(rgs);
}

FinitePartition SampleStream::refinement(const FinitePartition& p) {
    std::vector<int> class_of(static_cast<std::size_t>(p.ground_size()));
    int next = 0;
    for (const auto& block : p.blocks()) {
        // Random labels within the block split it into up to |block| parts.
        std::vector<int> label(block.size());
        for (auto& l : label) l = static_cast<int>(int_in(0, static_cast<int>(block.size()) - 1));
        for (std::size_t i = 0; i < block.size(); ++i)
            class_of[static_cast<std::size_t>(block[i])] = next + label[i];
        next += static_cast<int>(block.size());
    }
    return FinitePartition::from_class_ids(class_of);
}

}  // namespace cliffpar
