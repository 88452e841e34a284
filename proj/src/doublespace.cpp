#include "cliffpar/doublespace.hpp"

#include "cliffpar/linalg.hpp"
#include "cliffpar/sampling.hpp"

namespace cliffpar {

namespace {

RatVec coords_vec(const Quaternion& q) { return {q[0], q[1], q[2], q[3]}; }

void require_same_algebra(const Line& m, const Line& n, const char* where) {
    if (m.algebra() != n.algebra())
        throw std::domain_error(std::string(where) + ": operands belong to different algebras");
}

bool contains_one(const Line& l) { return incident(Point(Quaternion::one(l.algebra())), l); }

// Pure generator of a line through F1. Such a line has echelon basis
// (1,0,0,0) and a second row with vanishing scalar coordinate.
Quaternion pure_generator(const Line& l) {
    const Quaternion& g = l.row(1);
    if (l.row(0) != Quaternion::one(l.algebra()) || g[0] != 0)
        throw std::logic_error("pure_generator: line does not contain F1");
    return g;
}

// Scalar g^2 of a pure quaternion g.
Rat pure_square(const Quaternion& g) {
    const Quaternion gg = g * g;
    return gg[0];
}

}  // namespace

std::string to_string(Side side) { return side == Side::LEFT ? "left" : "right"; }

Line transversal(const Line& m, Side side) {
    const Quaternion p_inv = inverse(m.row(0));
    if (side == Side::LEFT) return line_from_span(p_inv * m.row(0), p_inv * m.row(1));
    return line_from_span(m.row(0) * p_inv, m.row(1) * p_inv);
}

bool is_parallel(const Line& m, const Line& n, Side side) {
    require_same_algebra(m, n, "is_parallel");
    return transversal(m, side) == transversal(n, side);
}

std::optional<Quaternion> parallel_multiplier_oracle(const Line& m, const Line& n, Side side) {
    require_same_algebra(m, n, "parallel_multiplier_oracle");
    const Algebra& alg = m.algebra();
    // Membership in n as linear conditions: x lies on n iff x is dot-
    // orthogonal to every kernel vector of n's coordinate matrix.
    const auto normals =
        kernel_basis(RatMat{coords_vec(n.row(0)), coords_vec(n.row(1))}, 4);
    RatMat system;
    for (int r = 0; r < 2; ++r) {
        for (const RatVec& v : normals) {
            RatVec condition(4);
            for (int t = 0; t < 4; ++t) {
                const Quaternion basis_image = side == Side::LEFT
                                                   ? Quaternion::unit(alg, t) * m.row(r)
                                                   : m.row(r) * Quaternion::unit(alg, t);
                Rat dot = 0;
                for (int c = 0; c < 4; ++c) dot += v[static_cast<std::size_t>(c)] * basis_image[c];
                condition[static_cast<std::size_t>(t)] = dot;
            }
            system.push_back(std::move(condition));
        }
    }
    const auto kernel = kernel_basis(system, 4);
    if (kernel.empty()) return std::nullopt;
    const RatVec& c = kernel.front();
    return Quaternion(alg, c[0], c[1], c[2], c[3]);
}

Line class_line_through(const Line& m, const Point& p, Side side) {
    if (m.algebra() != p.algebra())
        throw std::domain_error("class_line_through: operands belong to different algebras");
    const Line t = transversal(m, side);
    if (side == Side::LEFT) return apply_mu(p.rep(), Quaternion::one(m.algebra()), t);
    return apply_mu(Quaternion::one(m.algebra()), p.rep(), t);
}

SquareClass subfield_invariant(const Line& m) {
    const Line l = transversal(m, Side::LEFT);
    const Rat s = pure_square(pure_generator(l));
    return squarefree_part(s);
}

std::optional<EquivalenceCertificate> conjugation_certificate(const Line& l1, const Line& l2) {
    require_same_algebra(l1, l2, "conjugation_certificate");
    if (!contains_one(l1) || !contains_one(l2))
        throw std::domain_error("conjugation_certificate: inputs must contain F1");
    const Algebra& alg = l1.algebra();
    const Quaternion g1 = pure_generator(l1);
    const Quaternion g2 = pure_generator(l2);
    const Rat s1 = pure_square(g1);
    const Rat s2 = pure_square(g2);
    const auto root = rational_sqrt(s1 / s2);
    if (!root) return std::nullopt;  // distinct square classes
    for (const Rat& mu : {*root, Rat(-*root)}) {
        // Solve g1 * e = mu * (e * g2) for e.
        RatMat system(4, RatVec(4));
        for (int t = 0; t < 4; ++t) {
            const Quaternion basis = Quaternion::unit(alg, t);
            const Quaternion lhs = g1 * basis;
            const Quaternion rhs = mu * (basis * g2);
            for (int c = 0; c < 4; ++c)
                system[static_cast<std::size_t>(c)][static_cast<std::size_t>(t)] = lhs[c] - rhs[c];
        }
        const auto kernel = kernel_basis(system, 4);
        if (kernel.empty()) continue;
        const RatVec& v = kernel.front();
        const Quaternion e(alg, v[0], v[1], v[2], v[3]);
        if (apply_mu(inverse(e), e, l1) == l2) return EquivalenceCertificate{e, mu};
    }
    // Equal square classes guarantee a conjugating element.
    throw std::logic_error("conjugation_certificate: no kernel vector verified");
}

LrVerdict lr_equivalent(const Line& m1, const Line& m2) {
    require_same_algebra(m1, m2, "lr_equivalent");
    if (subfield_invariant(m1) != subfield_invariant(m2)) return {false, std::nullopt};
    auto cert = conjugation_certificate(transversal(m1, Side::LEFT), transversal(m2, Side::RIGHT));
    if (!cert) throw std::logic_error("lr_equivalent: equal invariants without certificate");
    return {true, std::move(cert)};
}

std::set<Line> common_lines(const Line& m1, const Line& m2) {
    const LrVerdict verdict = lr_equivalent(m1, m2);
    if (!verdict.equivalent) return {};
    const Quaternion& e = verdict.certificate->e;
    const Line l1 = transversal(m1, Side::LEFT);
    const Quaternion one = Quaternion::one(m1.algebra());
    const Line common = apply_mu(inverse(e), one, l1);
    const Line second = polar_line(common);
    for (const Line& x : {common, second}) {
        if (!is_parallel(x, m1, Side::LEFT) || !is_parallel(x, m2, Side::RIGHT))
            throw std::logic_error("common_lines: constructed line fails a parallel check");
    }
    if (common == second) throw std::logic_error("common_lines: polar pair collapsed");
    return {common, second};
}

bool is_line_stabilized(const Line& l, const Quaternion& u) {
    if (u.algebra() != l.algebra())
        throw std::domain_error("is_line_stabilized: operands belong to different algebras");
    if (u.is_zero()) throw std::domain_error("is_line_stabilized: u must be nonzero");
    if (!contains_one(l)) throw std::domain_error("is_line_stabilized: line must contain F1");
    return apply_mu(inverse(u), u, l) == l;
}

std::optional<std::pair<Quaternion, Quaternion>> flag_transport(const Point& p1, const Line& m1,
                                                                const Point& p2, const Line& m2) {
    if (!incident(p1, m1) || !incident(p2, m2))
        throw std::domain_error("flag_transport: flags must be incident point-line pairs");
    const LrVerdict verdict = lr_equivalent(m1, m2);
    if (!verdict.equivalent) return std::nullopt;
    const Quaternion& e = verdict.certificate->e;
    const Quaternion c = inverse(e) * inverse(p1.rep());
    const Quaternion d = e * p2.rep();
    if (apply_mu(c, d, m1) != m2 || Point(c * p1.rep() * d) != p2)
        throw std::logic_error("flag_transport: certificate does not move the flag");
    return std::make_pair(c, d);
}

std::vector<Line> regulus_sample(const Line& m, const Line& n, Side side, int count,
                                 std::uint64_t seed) {
    require_same_algebra(m, n, "regulus_sample");
    if (count <= 0) throw std::domain_error("regulus_sample: count must be positive");
    if (is_parallel(m, n, side))
        throw std::domain_error("regulus_sample: lines must not be side-parallel");
    SampleStream stream(seed);
    std::set<Line> seen;
    std::vector<Line> out;
    const long attempts_bound = 200 + 40L * count;
    for (long attempt = 0; attempt < attempts_bound && static_cast<int>(out.size()) < count;
         ++attempt) {
        // Points of n: row0 + t*row1 for rational t, plus row1 itself.
        const bool at_infinity = stream.int_in(0, 19) == 0;
        const Quaternion q =
            at_infinity ? n.row(1) : n.row(0) + stream.small_rational() * n.row(1);
        const Line x = class_line_through(m, Point(q), side);
        if (seen.insert(x).second) out.push_back(x);
    }
    if (static_cast<int>(out.size()) < count)
        throw ResourceError("regulus_sample: sample space exhausted before reaching count");
    return out;
}

}  // namespace cliffpar
