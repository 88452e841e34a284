#pragma once

/// Blends of equivalence relations on finite ground sets: joins, the
/// seed construction, seed equivalence, exhaustive enumeration, and the
/// subset property of blend-like triples.

#include "cliffpar/exactnum.hpp"

#include <optional>
#include <set>
#include <vector>

namespace cliffpar {

/// A partition of {0,...,n-1}. Blocks are sorted internally and ordered by
/// their minimum element, so equal partitions compare equal coordinate-wise.
class FinitePartition {
public:
    FinitePartition(int ground_size, std::vector<std::vector<int>> blocks);

    static FinitePartition discrete(int n);
    static FinitePartition single_block(int n);
    /// Builds the partition whose blocks are the fibres of class_of.
    static FinitePartition from_class_ids(const std::vector<int>& class_of);

    int ground_size() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_index_of(int x) const;
    const std::vector<int>& block_of(int x) const;
    bool same_block(int x, int y) const { return block_index_of(x) == block_index_of(y); }
    /// True iff every block of *this lies inside a block of coarser.
    bool refines(const FinitePartition& coarser) const;

    bool operator==(const FinitePartition& other) const {
        return n_ == other.n_ && blocks_ == other.blocks_;
    }
    bool operator!=(const FinitePartition& other) const { return !(*this == other); }
    bool operator<(const FinitePartition& other) const;

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> index_of_;
};

/// A seed subset of the ground set; it selects the join classes on which
/// the first relation wins.
using BlendSeed = std::set<int>;

/// The coarsest common refinement bound from above: the equivalence
/// relation generated by P1 and P2, via union-find.
FinitePartition join_partitions(const FinitePartition& p1, const FinitePartition& p2);

/// True iff every block of P3 is a block of P1 or a block of P2.
bool is_blend(const FinitePartition& p3, const FinitePartition& p1, const FinitePartition& p2);

/// Saturates D to the union B of all join classes meeting it, then uses
/// P1-blocks inside B and P2-blocks outside. The result is always a blend.
FinitePartition blend_from_seed(const BlendSeed& d, const FinitePartition& p1,
                                const FinitePartition& p2);

/// The canonical seed {x : P1-block of x equals P3-block of x} of a blend;
/// feeding it back to blend_from_seed reproduces P3.
BlendSeed seed_from_blend(const FinitePartition& p3, const FinitePartition& p1,
                          const FinitePartition& p2);

/// True iff both seeds generate the same blend: they must meet the same
/// join classes outside the locus where P1- and P2-blocks already agree.
bool seeds_equivalent(const BlendSeed& d1, const BlendSeed& d2, const FinitePartition& p1,
                      const FinitePartition& p2);

/// All blends of P1 and P2, realised as one binary choice per join class.
std::set<FinitePartition> enumerate_blends(const FinitePartition& p1, const FinitePartition& p2,
                                           int ground_bound = 12);

/// Outcome of checking the pairwise implication (every P3-equivalent pair
/// is P1- or P2-equivalent) and the blockwise subset conclusion that it
/// forces (every P3-block inside that element's P1-block or P2-block).
struct SubsetVerdict {
    bool hypothesis_holds;
    bool conclusion_holds;
    /// Element whose block violates the conclusion although the
    /// hypothesis holds; such a witness would falsify the implementation.
    std::optional<int> violator;
};

SubsetVerdict verify_subset_property(const FinitePartition& p1, const FinitePartition& p2,
                                     const FinitePartition& p3);

/// True iff B is a union of blocks of P.
bool is_union_of_blocks(const FinitePartition& p, const std::set<int>& b);

/// Every partition of {0,...,n-1}, enumerated by restricted growth strings.
std::vector<FinitePartition> all_partitions(int n, int ground_bound = 12);

/// 1-based block notation, e.g. {{1,2},{3,4}}.
std::string to_string(const FinitePartition& p);

}  // namespace cliffpar
