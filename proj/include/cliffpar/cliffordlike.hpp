#pragma once

/// Parallelisms blended from the left and right Clifford parallelisms,
/// selected by subfield invariants. A descriptor names a parallelism by
/// the set of invariants routed to the left side; the module builds
/// descriptors from seed lines, decides parallelism and class lines,
/// compares descriptors up to a probe bound, checks the double-space
/// axiom on triangles, and scans the invariants realised at bounded
/// height.

#include "cliffpar/doublespace.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>

namespace cliffpar {

enum class ParallelismKind { LEFT, RIGHT, BLEND };

std::string to_string(ParallelismKind kind);

/// Intensional parallelism. LEFT and RIGHT are the two Clifford
/// parallelisms; BLEND routes a line to the left side when its subfield
/// invariant lies in `chooser` and to the right side otherwise. An empty
/// chooser acts like RIGHT, a chooser covering every realised invariant
/// like LEFT.
struct ParallelismDescriptor {
    ParallelismKind kind;
    std::set<SquareClass> chooser;  // consulted only when kind == BLEND

    static ParallelismDescriptor left();
    static ParallelismDescriptor right();
    static ParallelismDescriptor blend(std::set<SquareClass> chooser);
};

std::string to_string(const ParallelismDescriptor& par);

/// The side par assigns to m: fixed for LEFT and RIGHT, chosen by the
/// subfield invariant of m for BLEND.
Side resolve_side(const ParallelismDescriptor& par, const Line& m);

/// Descriptor whose chooser collects the subfield invariants of the seed
/// lines. Every seed must pass through F1.
ParallelismDescriptor build_parallelism(const std::set<Line>& seed_lines);

/// Whether m and n are parallel under par. Side-parallel lines share
/// their invariant, so resolving the side from m keeps the relation
/// symmetric.
bool are_parallel(const ParallelismDescriptor& par, const Line& m, const Line& n);

/// The unique line through p parallel to m under par.
Line class_line(const ParallelismDescriptor& par, const Line& m, const Point& p);

/// A probe on which two descriptors disagree: the class lines of m
/// through p differ. p lies off m and its polar, where the left and
/// right class lines can never coincide.
struct ProbeWitness {
    Line m;
    Point p;
    Line class1;
    Line class2;
};

/// Verdict of a descriptor comparison at a probe bound. canonical1 and
/// canonical2 are the chooser sets restricted to the invariants realised
/// at generator height up to the bound; the witness is present iff they
/// differ.
struct DescriptorComparison {
    bool equal;
    std::set<SquareClass> canonical1;
    std::set<SquareClass> canonical2;
    std::optional<ProbeWitness> witness;
};

/// Compares two descriptors over the invariants realised in the algebra
/// at generator height up to probe_bound. Invariants outside that range
/// are not examined, so `equal` is relative to the bound.
DescriptorComparison descriptors_equal(const Algebra& alg, const ParallelismDescriptor& par1,
                                       const ParallelismDescriptor& par2, int probe_bound = 10);

/// Double-space probe on a triangle: m1 is the par1-class line of
/// join(p0,p1) through p2, m2 the par2-class line of join(p0,p2) through
/// p1, and holds records whether they meet.
struct DsReport {
    std::array<Point, 3> triangle;
    Line m1;
    Line m2;
    std::optional<Point> common;
    bool holds;
};

DsReport ds_check(const Point& p0, const Point& p1, const Point& p2,
                  const ParallelismDescriptor& par1, const ParallelismDescriptor& par2);

/// Aggregate of a seeded scan: how many trials satisfied the axiom, and
/// the first failing report when one exists. Finding no counterexample
/// is evidence, not proof, that the pair satisfies the axiom.
struct DsScanSummary {
    int trials;
    int holds;
    std::optional<DsReport> counterexample;
    std::optional<int> counterexample_trial;
};

/// Runs ds_check on `trials` seeded random triangles; trial t draws from
/// the (seed, t) substream, so the summary is independent of evaluation
/// order.
DsScanSummary ds_property_scan(const Algebra& alg, const ParallelismDescriptor& par1,
                               const ParallelismDescriptor& par2, int trials, std::uint64_t seed);

/// One pure generator per subfield invariant realised at integer
/// coordinate height up to the bound, keyed by invariant. Earlier finds
/// come from smaller coordinates, so stored generators stay small.
std::map<SquareClass, Quaternion> invariant_generators(const Algebra& alg, int height_bound);

/// The subfield invariants realised at generator height up to the bound.
/// Two or more distinct invariants certify that the algebra carries
/// parallelisms beyond LEFT and RIGHT.
std::set<SquareClass> triviality_scan(const Algebra& alg, int height_bound);

}  // namespace cliffpar
