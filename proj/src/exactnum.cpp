#include "cliffpar/exactnum.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace cliffpar {

namespace {

// Advances d through 2, 3, 5, 7, 11, 13, ... (a 6k+-1 wheel after 3).
Int next_trial_divisor(const Int& d) {
    if (d == 2) return 3;
    if (d == 3) return 5;
    if (d % 6 == 5) return d + 2;
    return d + 4;
}

bool odd_parity(const Int& n) { return (n % 2) != 0; }

// Legendre symbol (u | p) for odd prime p and u coprime to p.
int legendre(const Int& u, const Int& p) {
    Int base = ((u % p) + p) % p;
    Int r = boost::multiprecision::powm(base, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

// Character eps: for odd u, eps(u) = (u - 1)/2 mod 2, i.e. u = 3 mod 4.
bool eps(const Int& u) { return odd_parity((u - 1) / 2); }

// Character omega: for odd u, omega(u) = (u^2 - 1)/8 mod 2, i.e. u = 3,5 mod 8.
bool omega(const Int& u) { return odd_parity((u * u - 1) / 8); }

}  // namespace

std::map<Int, int> factorize(Int n, long prime_bound) {
    if (n == 0) throw std::domain_error("factorize: zero has no factorisation");
    std::map<Int, int> factors;
    Int m = abs(n);
    Int d = 2;
    while (d <= prime_bound && d * d <= m) {
        if (m % d == 0) {
            int e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            factors.emplace(d, e);
        }
        d = next_trial_divisor(d);
    }
    if (m > 1) {
        if (d * d > m) {
            // Trial division was complete, so the cofactor is prime.
            factors.emplace(m, 1);
        } else {
            throw FactorBoundError("factorize: cofactor " + m.str() +
                                   " has no prime factor below " + std::to_string(prime_bound));
        }
    }
    return factors;
}

SquareClass::SquareClass(Int representative, long prime_bound) : rep_(std::move(representative)) {
    if (rep_ == 0) throw std::domain_error("SquareClass: representative must be nonzero");
    for (const auto& [p, e] : factorize(rep_, prime_bound)) {
        (void)p;
        if (e != 1) throw std::domain_error("SquareClass: " + rep_.str() + " is not squarefree");
    }
}

SquareClass squarefree_part(const Rat& r, long prime_bound) {
    if (r == 0) throw std::domain_error("squarefree_part: zero has no square class");
    // For r = p/q in lowest terms, r and p*q differ by the square q^2.
    Int n = numerator(r) * denominator(r);
    Int result = n < 0 ? -1 : 1;
    Int m = abs(n);
    Int d = 2;
    while (d <= prime_bound && d * d <= m) {
        if (m % d == 0) {
            int e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            if (e & 1) result *= d;
        }
        d = next_trial_divisor(d);
    }
    if (m > 1) {
        if (d * d > m) {
            result *= m;  // proven prime
        } else if (is_square(m)) {
            // All exponents in the cofactor are even; nothing to contribute.
        } else {
            throw FactorBoundError("squarefree_part: cofactor " + m.str() +
                                   " is neither prime nor square below bound " +
                                   std::to_string(prime_bound));
        }
    }
    return SquareClass(result, prime_bound);
}

bool same_square_class(const Rat& r1, const Rat& r2, long prime_bound) {
    return squarefree_part(r1, prime_bound) == squarefree_part(r2, prime_bound);
}

int hilbert_symbol(const Int& a, const Int& b, const Int& p) {
    if (a == 0 || b == 0) throw std::domain_error("hilbert_symbol: arguments must be nonzero");
    if (p == 2) {
        bool alpha = (a % 2) == 0;
        bool beta = (b % 2) == 0;
        Int u = alpha ? Int(a / 2) : a;
        Int v = beta ? Int(b / 2) : b;
        bool exponent = (eps(u) && eps(v)) ^ (alpha && omega(v)) ^ (beta && omega(u));
        return exponent ? -1 : 1;
    }
    bool alpha = (a % p) == 0;
    bool beta = (b % p) == 0;
    Int u = alpha ? Int(a / p) : a;
    Int v = beta ? Int(b / p) : b;
    int sign = 1;
    if (alpha && beta && p % 4 == 3) sign = -sign;
    if (beta) sign *= legendre(u, p);
    if (alpha) sign *= legendre(v, p);
    return sign;
}

bool is_division(const Rat& a, const Rat& b, long prime_bound) {
    if (a == 0 || b == 0) throw std::domain_error("is_division: parameters must be nonzero");
    const Int sa = squarefree_part(a, prime_bound).value();
    const Int sb = squarefree_part(b, prime_bound).value();
    if (sa < 0 && sb < 0) return true;  // symbol -1 at the real place
    std::vector<Int> places{2};
    for (const auto& [p, e] : factorize(sa, prime_bound)) {
        (void)e;
        if (p > 2) places.push_back(p);
    }
    for (const auto& [p, e] : factorize(sb, prime_bound)) {
        (void)e;
        if (p > 2 && (sa % p) != 0) places.push_back(p);
    }
    for (const Int& p : places) {
        if (hilbert_symbol(sa, sb, p) == -1) return true;
    }
    return false;
}

namespace {

// Shared search body so the fast path and the exact path enumerate in the
// same lexicographic order.
template <typename T>
std::optional<std::array<Int, 3>> isotropy_search(const T& qa, const T& qb, const T& qc,
                                                  long height_bound) {
    std::vector<T> squares(static_cast<std::size_t>(height_bound) + 1);
    for (long v = 0; v <= height_bound; ++v) squares[v] = T(v) * T(v);
    for (long x = 0; x <= height_bound; ++x) {
        const T ax2 = qa * squares[x];
        for (long y = 0; y <= height_bound; ++y) {
            const T lhs = ax2 - qb * squares[y];
            for (long z = 0; z <= height_bound; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                if (lhs == qc * squares[z]) return std::array<Int, 3>{Int(x), Int(y), Int(z)};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::array<Int, 3>> brute_force_isotropy(const Rat& a, const Rat& b,
                                                       long height_bound) {
    if (a == 0 || b == 0) throw std::domain_error("brute_force_isotropy: parameters must be nonzero");
    if (height_bound < 1) throw std::domain_error("brute_force_isotropy: height bound must be positive");
    // Clear denominators: x^2 - a y^2 - b z^2 = 0 scaled by den(a)*den(b)
    // becomes A x^2 - B y^2 - C z^2 = 0 over the integers.
    const Int A = denominator(a) * denominator(b);
    const Int B = numerator(a) * denominator(b);
    const Int C = numerator(b) * denominator(a);
    // Signs of y and z are immaterial, so nonnegative coordinates suffice.
    const Int h(height_bound);
    const Int magnitude = (abs(A) + abs(B) + abs(C)) * h * h;
    if (magnitude < Int(std::numeric_limits<std::int64_t>::max() / 4)) {
        return isotropy_search<std::int64_t>(static_cast<std::int64_t>(A),
                                             static_cast<std::int64_t>(B),
                                             static_cast<std::int64_t>(C), height_bound);
    }
    return isotropy_search<Int>(A, B, C, height_bound);
}

bool is_square(const Int& n) {
    if (n < 0) return false;
    const Int r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

bool is_square(const Rat& r) {
    return r >= 0 && is_square(numerator(r)) && is_square(denominator(r));
}

std::optional<Rat> rational_sqrt(const Rat& r) {
    if (!is_square(r)) return std::nullopt;
    return Rat(boost::multiprecision::sqrt(numerator(r)),
               boost::multiprecision::sqrt(denominator(r)));
}

Rat parse_rational(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw std::domain_error("parse_rational: " + why + " in '" + std::string(text) + "'");
    };
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto digits = [&]() -> Int {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected digits");
        Int value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            ++pos;
        }
        return value;
    };
    Int num = digits();
    Int den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = digits();
        if (den == 0) fail("zero denominator");
    }
    if (pos != text.size()) fail("trailing characters");
    if (negative) num = -num;
    return Rat(num, den);
}

std::string to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

std::string to_string(const SquareClass& s) { return s.value().str(); }

}  // namespace cliffpar
