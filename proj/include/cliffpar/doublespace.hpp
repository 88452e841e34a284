#pragma once

/// The left and right parallelisms of the projective space on a quaternion
/// division algebra: transversal lines through the scalar point, the
/// subfield invariant, left-right equivalence with conjugation
/// certificates, common lines of opposite classes, and regulus sampling.

#include "cliffpar/projgeom.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace cliffpar {

enum class Side { LEFT, RIGHT };

std::string to_string(Side side);

/// The unique line through F1 side-parallel to m: p^-1 * m for LEFT and
/// m * p^-1 for RIGHT, independent of the nonzero p chosen on m. A line
/// already through F1 is its own transversal.
Line transversal(const Line& m, Side side);

/// Side-parallelism, decided by equality of transversals.
bool is_parallel(const Line& m, const Line& n, Side side);

/// Independent route to is_parallel: solves the linear conditions
/// c * m_row in n (LEFT; m_row * c for RIGHT) and returns a nonzero
/// multiplier carrying m onto n, absent when none exists.
std::optional<Quaternion> parallel_multiplier_oracle(const Line& m, const Line& n, Side side);

/// The unique line through p in the side-parallel class of m.
Line class_line_through(const Line& m, const Point& p, Side side);

/// Square class of g^2 for a pure generator g of the left transversal
/// F1 + Fg of m. Classifies the maximal subfield attached to m; side
/// independence is a tested property, not an assumption.
SquareClass subfield_invariant(const Line& m);

/// Witness that conjugation by e carries one transversal subfield onto
/// another: e^-1 * l1 * e = l2, with mu the scalar relating the pure
/// generators (g1 e = mu * e * g2).
struct EquivalenceCertificate {
    Quaternion e;
    Rat mu_scale;
};

/// For lines l1, l2 through F1: a certificate when their invariants agree,
/// absent otherwise. The returned e is the first vector, in echelon order,
/// of the kernel of the conjugation conditions.
std::optional<EquivalenceCertificate> conjugation_certificate(const Line& l1, const Line& l2);

struct LrVerdict {
    bool equivalent;
    /// Certificate for (left transversal of m1, right transversal of m2).
    std::optional<EquivalenceCertificate> certificate;
};

/// Left-right equivalence of lines: equality of subfield invariants.
LrVerdict lr_equivalent(const Line& m1, const Line& m2);

/// The lines simultaneously left-parallel to m1 and right-parallel to m2:
/// empty when the invariants differ, otherwise exactly a line and its
/// polar.
std::set<Line> common_lines(const Line& m1, const Line& m2);

/// Whether u^-1 * l * u = l for a line l through F1.
bool is_line_stabilized(const Line& l, const Quaternion& u);

/// A collineation pair (c,d) with c * p1 * d in F p2 and c * m1 * d = m2,
/// taking the first flag to the second; absent when m1 and m2 are not
/// left-right equivalent.
std::optional<std::pair<Quaternion, Quaternion>> flag_transport(const Point& p1, const Line& m1,
                                                                const Point& p2, const Line& m2);

/// Distinct lines of the side-parallel class of m that meet n, found by
/// sampling points of n from a seeded stream. Requires m and n not
/// side-parallel (a parallel n meets no other class line).
std::vector<Line> regulus_sample(const Line& m, const Line& n, Side side, int count,
                                 std::uint64_t seed);

}  // namespace cliffpar
