#include "cliffpar/projgeom.hpp"

#include <utility>

namespace cliffpar {

namespace {

RatVec coords_vec(const Quaternion& q) { return {q[0], q[1], q[2], q[3]}; }

Quaternion from_vec(const Algebra& alg, const RatVec& v) {
    return {alg, v[0], v[1], v[2], v[3]};
}

// Coefficient row of the condition <u, m> = 0 in the unknowns u0..u3.
RatVec polarity_row(const Quaternion& m) {
    const Rat& a = m.algebra().a();
    const Rat& b = m.algebra().b();
    return {m[0], -a * m[1], -b * m[2], a * b * m[3]};
}

}  // namespace

Point::Point(const Quaternion& rep) : rep_(rep) {
    if (rep_.is_zero()) throw std::domain_error("Point: representative must be nonzero");
    for (int c = 0; c < 4; ++c) {
        if (rep_[c] != 0) {
            rep_ = Rat(1) / rep_[c] * rep_;
            break;
        }
    }
}

bool Point::operator<(const Point& other) const {
    return rep_.coords() < other.rep_.coords();
}

Line::Line(Quaternion r0, Quaternion r1) : rows_{std::move(r0), std::move(r1)} {}

bool Line::operator<(const Line& other) const {
    if (rows_[0].coords() != other.rows_[0].coords())
        return rows_[0].coords() < other.rows_[0].coords();
    return rows_[1].coords() < other.rows_[1].coords();
}

Line line_from_span(const Quaternion& q1, const Quaternion& q2) {
    if (q1.algebra() != q2.algebra())
        throw std::domain_error("line_from_span: operands belong to different algebras");
    const Echelon e = reduced_echelon(RatMat{coords_vec(q1), coords_vec(q2)});
    if (e.rank() != 2)
        throw std::domain_error("line_from_span: spanning quaternions are dependent");
    const Algebra& alg = q1.algebra();
    return Line(from_vec(alg, e.rows[0]), from_vec(alg, e.rows[1]));
}

bool incident(const Point& p, const Line& l) {
    if (p.algebra() != l.algebra())
        throw std::domain_error("incident: operands belong to different algebras");
    Echelon e;
    e.rows = {coords_vec(l.row(0)), coords_vec(l.row(1))};
    e.pivots = {};
    // Reconstruct pivot columns from the stored echelon rows.
    for (const auto& row : e.rows) {
        for (int c = 0; c < 4; ++c) {
            if (row[static_cast<std::size_t>(c)] != 0) {
                e.pivots.push_back(c);
                break;
            }
        }
    }
    return in_row_space(e, coords_vec(p.rep()));
}

std::optional<Point> meet(const Line& l1, const Line& l2) {
    if (l1.algebra() != l2.algebra())
        throw std::domain_error("meet: operands belong to different algebras");
    if (l1 == l2) throw std::domain_error("meet: lines are equal");
    // Solve x0 r0 + x1 r1 - y0 s0 - y1 s1 = 0; coordinates give four
    // equations in (x0, x1, y0, y1).
    RatMat system(4, RatVec(4));
    for (int c = 0; c < 4; ++c) {
        system[static_cast<std::size_t>(c)][0] = l1.row(0)[c];
        system[static_cast<std::size_t>(c)][1] = l1.row(1)[c];
        system[static_cast<std::size_t>(c)][2] = -l2.row(0)[c];
        system[static_cast<std::size_t>(c)][3] = -l2.row(1)[c];
    }
    const auto kernel = kernel_basis(system, 4);
    if (kernel.empty()) return std::nullopt;
    const RatVec& w = kernel.front();
    const Quaternion q = w[0] * l1.row(0) + w[1] * l1.row(1);
    return Point(q);
}

Line join(const Point& p1, const Point& p2) {
    if (p1 == p2) throw std::domain_error("join: points are equal");
    return line_from_span(p1.rep(), p2.rep());
}

Line polar_line(const Line& l) {
    const auto kernel = kernel_basis(RatMat{polarity_row(l.row(0)), polarity_row(l.row(1))}, 4);
    // The form is nondegenerate, so the conditions have rank 2.
    const Algebra& alg = l.algebra();
    return line_from_span(from_vec(alg, kernel[0]), from_vec(alg, kernel[1]));
}

Line apply_mu(const Quaternion& c, const Quaternion& d, const Line& l) {
    if (c.is_zero() || d.is_zero())
        throw std::domain_error("apply_mu: multipliers must be nonzero");
    return line_from_span(c * l.row(0) * d, c * l.row(1) * d);
}

std::string to_string(const Point& p) { return to_string(p.rep()); }

std::string to_string(const Line& l) {
    return "[" + to_string(l.row(0)) + ";" + to_string(l.row(1)) + "]";
}

}  // namespace cliffpar
