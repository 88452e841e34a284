#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cliffpar/projgeom.hpp"

#include <random>

using namespace cliffpar;

namespace {

const Algebra& ham() {
    static const Algebra alg(Rat(-1), Rat(-1));
    return alg;
}

Quaternion rq(const Algebra& alg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coord(-9, 9);
    while (true) {
        Quaternion q(alg, Rat(coord(rng)), Rat(coord(rng)), Rat(coord(rng)), Rat(coord(rng)));
        if (!q.is_zero()) return q;
    }
}

Line random_line(const Algebra& alg, std::mt19937_64& rng) {
    while (true) {
        try {
            return line_from_span(rq(alg, rng), rq(alg, rng));
        } catch (const std::domain_error&) {
        }
    }
}

}  // namespace

TEST_CASE("points are canonical under rational rescaling") {
    const Quaternion q(ham(), 0, 2, -4, 6);
    const Point p(q);
    CHECK(p.rep() == Quaternion(ham(), 0, 1, -2, 3));
    CHECK(p == Point(Rat(-7, 3) * q));
    CHECK(p != Point(Quaternion::one(ham())));
    CHECK_THROWS_AS(Point(Quaternion::zero(ham())), std::domain_error);
}

TEST_CASE("line_from_span produces the canonical echelon basis") {
    const Line l = line_from_span(Quaternion(ham(), 1, 1, 0, 0), Quaternion(ham(), 1, 0, 0, 0));
    CHECK(l.row(0) == Quaternion(ham(), 1, 0, 0, 0));
    CHECK(l.row(1) == Quaternion(ham(), 0, 1, 0, 0));
    // Any basis of the same subspace yields the same object.
    const Line m = line_from_span(Quaternion(ham(), 2, 3, 0, 0), Quaternion(ham(), 5, -1, 0, 0));
    CHECK(l == m);
    CHECK_THROWS_AS(line_from_span(Quaternion(ham(), 1, 2, 0, 0), Quaternion(ham(), 2, 4, 0, 0)),
                    std::domain_error);
}

TEST_CASE("incidence holds exactly for rational combinations of the span") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        const Line l = random_line(ham(), rng);
        std::uniform_int_distribution<int> coeff(-4, 4);
        int s = coeff(rng), t = coeff(rng);
        if (s == 0 && t == 0) s = 1;
        const Quaternion combo = Rat(s) * l.row(0) + Rat(t) * l.row(1);
        CHECK(incident(Point(combo), l));
    }
    const Line l = line_from_span(Quaternion::one(ham()), Quaternion::unit(ham(), 1));
    CHECK(incident(Point(Quaternion::one(ham())), l));
    CHECK_FALSE(incident(Point(Quaternion::unit(ham(), 2)), l));
}

TEST_CASE("meet and join are dual") {
    const Point p0(Quaternion::one(ham()));
    const Point p1(Quaternion::unit(ham(), 1));
    const Point p2(Quaternion::unit(ham(), 2));
    const Line l01 = join(p0, p1);
    const Line l02 = join(p0, p2);
    auto m = meet(l01, l02);
    REQUIRE(m.has_value());
    CHECK(*m == p0);
    CHECK_THROWS_AS(meet(l01, l01), std::domain_error);
    CHECK_THROWS_AS(join(p0, p0), std::domain_error);
}

TEST_CASE("skew lines have no meet") {
    const Line l1 = line_from_span(Quaternion::one(ham()), Quaternion::unit(ham(), 1));
    const Line l2 = line_from_span(Quaternion::unit(ham(), 2), Quaternion::unit(ham(), 3));
    CHECK_FALSE(meet(l1, l2).has_value());
}

TEST_CASE("meet of coplanar lines is incident to both") {
    std::mt19937_64 rng(31);
    int found = 0;
    for (int trial = 0; trial < 200 && found < 40; ++trial) {
        // Lines sharing a random point always meet.
        const Point shared(rq(ham(), rng));
        const Quaternion u = rq(ham(), rng);
        const Quaternion v = rq(ham(), rng);
        try {
            const Line l1 = line_from_span(shared.rep(), u);
            const Line l2 = line_from_span(shared.rep(), v);
            if (l1 == l2) continue;
            auto m = meet(l1, l2);
            REQUIRE(m.has_value());
            CHECK(incident(*m, l1));
            CHECK(incident(*m, l2));
            CHECK(*m == shared);
            ++found;
        } catch (const std::domain_error&) {
        }
    }
    CHECK(found == 40);
}

TEST_CASE("polar line pinned value and involution") {
    const Line l = line_from_span(Quaternion::one(ham()), Quaternion::unit(ham(), 1));
    const Line perp = polar_line(l);
    CHECK(perp == line_from_span(Quaternion::unit(ham(), 2), Quaternion::unit(ham(), 3)));
    std::mt19937_64 rng(37);
    const Algebra alg(Rat(-2), Rat(-3));
    for (int trial = 0; trial < 50; ++trial) {
        const Line m = random_line(alg, rng);
        const Line mp = polar_line(m);
        CHECK(polar_line(mp) == m);
        // Every generator pair is orthogonal for the bilinear form.
        for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 2; ++s) CHECK(bilinear(m.row(r), mp.row(s)) == 0);
    }
}

TEST_CASE("apply_mu is a collineation preserving incidence") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const Line l = random_line(ham(), rng);
        const Quaternion c = rq(ham(), rng);
        const Quaternion d = rq(ham(), rng);
        const Line image = apply_mu(c, d, l);
        std::uniform_int_distribution<int> coeff(-4, 4);
        int s = coeff(rng), t = coeff(rng);
        if (s == 0 && t == 0) s = 1;
        const Quaternion q = Rat(s) * l.row(0) + Rat(t) * l.row(1);
        CHECK(incident(Point(c * q * d), image));
    }
}

TEST_CASE("apply_mu respects composition and identity") {
    std::mt19937_64 rng(43);
    const Quaternion one = Quaternion::one(ham());
    for (int trial = 0; trial < 30; ++trial) {
        const Line l = random_line(ham(), rng);
        CHECK(apply_mu(one, one, l) == l);
        const Quaternion c1 = rq(ham(), rng), d1 = rq(ham(), rng);
        const Quaternion c2 = rq(ham(), rng), d2 = rq(ham(), rng);
        CHECK(apply_mu(c2, d2, apply_mu(c1, d1, l)) == apply_mu(c2 * c1, d1 * d2, l));
        // Rational rescaling of the multipliers fixes the collineation.
        CHECK(apply_mu(Rat(-3) * c1, d1, l) == apply_mu(c1, d1, l));
    }
    CHECK_THROWS_AS(apply_mu(Quaternion::zero(ham()), one, random_line(ham(), rng)),
                    std::domain_error);
}

TEST_CASE("formatting of points and lines") {
    const Line l = line_from_span(Quaternion::one(ham()), Quaternion::unit(ham(), 1));
    CHECK(to_string(l) == "[(1,0,0,0);(0,1,0,0)]");
    CHECK(to_string(Point(Quaternion(ham(), 0, 3, 6, 0))) == "(0,1,2,0)");
}
