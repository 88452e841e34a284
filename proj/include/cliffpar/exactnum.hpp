#pragma once

/// Exact rational arithmetic, square-class canonicalisation, and the
/// division test for quaternion algebra parameters over Q.
///
/// All arithmetic is exact: integers are arbitrary precision and rationals
/// are kept in lowest terms with positive denominator.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cliffpar {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Trial division could not finish within the configured prime bound.
/// The input is unclassified; it is never silently misclassified.
class FactorBoundError : public std::runtime_error {
public:
    explicit FactorBoundError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An enumeration or scan exceeded its configured size bound.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

inline constexpr long kDefaultPrimeBound = 1'000'000;

/// Prime factorisation of |n| by trial division, as prime -> exponent.
/// Throws std::domain_error for n = 0 and FactorBoundError when a composite
/// cofactor with all prime factors above the bound survives.
std::map<Int, int> factorize(Int n, long prime_bound = kDefaultPrimeBound);

/// A square class of Q*, keyed by its unique signed squarefree representative.
class SquareClass {
public:
    /// Validates that `representative` is nonzero and squarefree.
    explicit SquareClass(Int representative, long prime_bound = kDefaultPrimeBound);

    const Int& value() const { return rep_; }

    bool operator==(const SquareClass& other) const { return rep_ == other.rep_; }
    bool operator!=(const SquareClass& other) const { return rep_ != other.rep_; }
    bool operator<(const SquareClass& other) const { return rep_ < other.rep_; }

private:
    Int rep_;
};

/// The signed squarefree s with r = s * t^2 for some rational t != 0.
/// For r = p/q in lowest terms this is the squarefree part of p*q.
SquareClass squarefree_part(const Rat& r, long prime_bound = kDefaultPrimeBound);

/// True iff r1/r2 is a square in Q*, i.e. both rationals have the same
/// squarefree part.
bool same_square_class(const Rat& r1, const Rat& r2, long prime_bound = kDefaultPrimeBound);

/// True iff the quaternion algebra (a,b | Q) is a division ring, decided by
/// Hilbert symbols at the real place, at 2, and at the odd primes dividing
/// the squarefree parts of a and b.
bool is_division(const Rat& a, const Rat& b, long prime_bound = kDefaultPrimeBound);

/// Hilbert symbol (a,b)_p for squarefree nonzero integers a, b at a prime p
/// (p = 2 allowed). Returns +1 or -1.
int hilbert_symbol(const Int& a, const Int& b, const Int& p);

/// Exhaustive search for a nonzero integer triple (x,y,z) with
/// x^2 - a y^2 - b z^2 = 0 and 0 <= x,y,z <= height_bound, in lexicographic
/// order. Serves as the independent oracle for is_division.
std::optional<std::array<Int, 3>> brute_force_isotropy(const Rat& a, const Rat& b,
                                                       long height_bound);

bool is_square(const Int& n);
bool is_square(const Rat& r);
/// Exact square root when r is a square of a rational; absent otherwise.
std::optional<Rat> rational_sqrt(const Rat& r);

/// Parses the rational literal grammar: optional sign, digits, optional
/// "/" and positive digits (e.g. "-3/7", "5"). The whole string must match.
Rat parse_rational(std::string_view text);

std::string to_string(const Rat& r);
std::string to_string(const SquareClass& s);

}  // namespace cliffpar
