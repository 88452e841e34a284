#pragma once

/// Rational quaternion algebras (a,b | Q) restricted to the division case:
/// basis 1, i, j, k with i^2 = a, j^2 = b, ij = -ji = k.

#include "cliffpar/exactnum.hpp"

#include <array>

namespace cliffpar {

/// Structure constants of a quaternion division algebra over Q.
/// Construction rejects parameter pairs that yield a split algebra.
class Algebra {
public:
    Algebra(Rat a, Rat b);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    bool operator==(const Algebra& other) const { return a_ == other.a_ && b_ == other.b_; }
    bool operator!=(const Algebra& other) const { return !(*this == other); }

private:
    Rat a_;
    Rat b_;
};

class Quaternion {
public:
    Quaternion(Algebra alg, Rat x0, Rat x1, Rat x2, Rat x3);
    Quaternion(Algebra alg, std::array<Rat, 4> coords);

    static Quaternion zero(const Algebra& alg) { return {alg, 0, 0, 0, 0}; }
    static Quaternion one(const Algebra& alg) { return {alg, 1, 0, 0, 0}; }
    /// Basis element 1, i, j or k for index 0..3.
    static Quaternion unit(const Algebra& alg, int index);

    const Algebra& algebra() const { return alg_; }
    const Rat& operator[](int index) const { return x_[static_cast<std::size_t>(index)]; }
    const std::array<Rat, 4>& coords() const { return x_; }

    bool is_zero() const;

    Quaternion operator+(const Quaternion& rhs) const;
    Quaternion operator-(const Quaternion& rhs) const;
    Quaternion operator-() const;
    Quaternion operator*(const Quaternion& rhs) const;
    bool operator==(const Quaternion& rhs) const;
    bool operator!=(const Quaternion& rhs) const { return !(*this == rhs); }

private:
    void require_same_algebra(const Quaternion& other) const;

    Algebra alg_;
    std::array<Rat, 4> x_;
};

Quaternion operator*(const Rat& scalar, const Quaternion& q);
Quaternion operator*(const Quaternion& q, const Rat& scalar);

Quaternion conjugate(const Quaternion& q);

/// Multiplicative norm q * conj(q), a rational scalar. Zero only at q = 0
/// because the algebra is division.
Rat norm(const Quaternion& q);

/// Symmetric form <p,q> = p conj(q) + q conj(p), a rational scalar.
Rat bilinear(const Quaternion& p, const Quaternion& q);

/// Two-sided inverse conj(q) / norm(q). Throws std::domain_error at q = 0.
Quaternion inverse(const Quaternion& q);

/// Component orthogonal to 1: the coefficient of 1 is dropped.
Quaternion pure_part(const Quaternion& q);

std::string to_string(const Quaternion& q);
std::string to_string(const Algebra& alg);

}  // namespace cliffpar
