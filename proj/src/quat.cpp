#include "cliffpar/quat.hpp"

#include <utility>

namespace cliffpar {

Algebra::Algebra(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_ == 0 || b_ == 0) throw std::domain_error("Algebra: parameters must be nonzero");
    if (!is_division(a_, b_))
        throw std::domain_error("Algebra: (" + cliffpar::to_string(a_) + "," +
                                cliffpar::to_string(b_) + ") is split, not division");
}

Quaternion::Quaternion(Algebra alg, Rat x0, Rat x1, Rat x2, Rat x3)
    : alg_(std::move(alg)),
      x_{std::move(x0), std::move(x1), std::move(x2), std::move(x3)} {}

Quaternion::Quaternion(Algebra alg, std::array<Rat, 4> coords)
    : alg_(std::move(alg)), x_(std::move(coords)) {}

Quaternion Quaternion::unit(const Algebra& alg, int index) {
    if (index < 0 || index > 3) throw std::domain_error("Quaternion::unit: index out of range");
    std::array<Rat, 4> c{0, 0, 0, 0};
    c[static_cast<std::size_t>(index)] = 1;
    return {alg, std::move(c)};
}

bool Quaternion::is_zero() const {
    return x_[0] == 0 && x_[1] == 0 && x_[2] == 0 && x_[3] == 0;
}

void Quaternion::require_same_algebra(const Quaternion& other) const {
    if (alg_ != other.alg_)
        throw std::domain_error("Quaternion: operands belong to different algebras");
}

Quaternion Quaternion::operator+(const Quaternion& rhs) const {
    require_same_algebra(rhs);
    return {alg_, x_[0] + rhs.x_[0], x_[1] + rhs.x_[1], x_[2] + rhs.x_[2], x_[3] + rhs.x_[3]};
}

Quaternion Quaternion::operator-(const Quaternion& rhs) const {
    require_same_algebra(rhs);
    return {alg_, x_[0] - rhs.x_[0], x_[1] - rhs.x_[1], x_[2] - rhs.x_[2], x_[3] - rhs.x_[3]};
}

Quaternion Quaternion::operator-() const { return {alg_, -x_[0], -x_[1], -x_[2], -x_[3]}; }

Quaternion Quaternion::operator*(const Quaternion& rhs) const {
    require_same_algebra(rhs);
    const Rat& a = alg_.a();
    const Rat& b = alg_.b();
    const auto& p = x_;
    const auto& q = rhs.x_;
    return {alg_,
            p[0] * q[0] + a * p[1] * q[1] + b * p[2] * q[2] - a * b * p[3] * q[3],
            p[0] * q[1] + p[1] * q[0] - b * p[2] * q[3] + b * p[3] * q[2],
            p[0] * q[2] + p[2] * q[0] + a * p[1] * q[3] - a * p[3] * q[1],
            p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1]};
}

bool Quaternion::operator==(const Quaternion& rhs) const {
    require_same_algebra(rhs);
    return x_ == rhs.x_;
}

Quaternion operator*(const Rat& scalar, const Quaternion& q) {
    return {q.algebra(), scalar * q[0], scalar * q[1], scalar * q[2], scalar * q[3]};
}

Quaternion operator*(const Quaternion& q, const Rat& scalar) { return scalar * q; }

Quaternion conjugate(const Quaternion& q) {
    return {q.algebra(), q[0], -q[1], -q[2], -q[3]};
}

Rat norm(const Quaternion& q) {
    const Rat& a = q.algebra().a();
    const Rat& b = q.algebra().b();
    return q[0] * q[0] - a * q[1] * q[1] - b * q[2] * q[2] + a * b * q[3] * q[3];
}

Rat bilinear(const Quaternion& p, const Quaternion& q) {
    if (p.algebra() != q.algebra())
        throw std::domain_error("bilinear: operands belong to different algebras");
    const Rat& a = p.algebra().a();
    const Rat& b = p.algebra().b();
    return 2 * (p[0] * q[0] - a * p[1] * q[1] - b * p[2] * q[2] + a * b * p[3] * q[3]);
}

Quaternion inverse(const Quaternion& q) {
    if (q.is_zero()) throw std::domain_error("inverse: zero quaternion");
    const Rat n = norm(q);
    return {q.algebra(), q[0] / n, -q[1] / n, -q[2] / n, -q[3] / n};
}

Quaternion pure_part(const Quaternion& q) {
    return {q.algebra(), 0, q[1], q[2], q[3]};
}

std::string to_string(const Quaternion& q) {
    return "(" + to_string(q[0]) + "," + to_string(q[1]) + "," + to_string(q[2]) + "," +
           to_string(q[3]) + ")";
}

std::string to_string(const Algebra& alg) {
    return "a=" + to_string(alg.a()) + " b=" + to_string(alg.b());
}

}  // namespace cliffpar
