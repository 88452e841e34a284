#pragma once

/// Projective 3-space on the rational coordinate space of a quaternion
/// division algebra: points are 1-dimensional and lines 2-dimensional
/// rational subspaces, with incidence, meets, joins, the polarity induced
/// by the norm form, and the two-sided multiplication collineations.

#include "cliffpar/linalg.hpp"
#include "cliffpar/quat.hpp"

#include <optional>

namespace cliffpar {

/// A projective point, stored as the unique representative whose first
/// nonzero coordinate is 1.
class Point {
public:
    explicit Point(const Quaternion& rep);

    const Quaternion& rep() const { return rep_; }
    const Algebra& algebra() const { return rep_.algebra(); }

    bool operator==(const Point& other) const { return rep_ == other.rep_; }
    bool operator!=(const Point& other) const { return rep_ != other.rep_; }
    bool operator<(const Point& other) const;

private:
    Quaternion rep_;
};

/// A projective line, stored as the reduced echelon basis of its
/// 2-dimensional subspace. Equal lines compare equal coordinate-wise.
class Line {
public:
    const Quaternion& row(int index) const { return rows_[static_cast<std::size_t>(index)]; }
    const Algebra& algebra() const { return rows_[0].algebra(); }

    bool operator==(const Line& other) const { return rows_[0] == other.rows_[0] && rows_[1] == other.rows_[1]; }
    bool operator!=(const Line& other) const { return !(*this == other); }
    bool operator<(const Line& other) const;

    friend Line line_from_span(const Quaternion& q1, const Quaternion& q2);

private:
    Line(Quaternion r0, Quaternion r1);

    std::array<Quaternion, 2> rows_;
};

/// The line spanned by two quaternions; throws std::domain_error when they
/// are rationally dependent (rank below 2).
Line line_from_span(const Quaternion& q1, const Quaternion& q2);

bool incident(const Point& p, const Line& l);

/// The common point of two distinct lines, absent when they are skew.
/// Equal lines have no single common point and raise std::domain_error.
std::optional<Point> meet(const Line& l1, const Line& l2);

/// The line through two distinct points; equal points raise std::domain_error.
Line join(const Point& p1, const Point& p2);

/// The image of l under the polarity of the norm form: all u with
/// <u, m> = 0 for every m on l.
Line polar_line(const Line& l);

/// The collineation x -> c x d applied to l; c and d must be nonzero.
Line apply_mu(const Quaternion& c, const Quaternion& d, const Line& l);

std::string to_string(const Point& p);
std::string to_string(const Line& l);

}  // namespace cliffpar
