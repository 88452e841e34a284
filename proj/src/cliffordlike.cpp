#include "cliffpar/cliffordlike.hpp"

#include "cliffpar/sampling.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cliffpar {

namespace {

// 0, 1, -1, 2, -2, ..., bound, -bound.
std::vector<long> signed_range(int bound) {
    std::vector<long> out{0};
    for (long v = 1; v <= bound; ++v) {
        out.push_back(v);
        out.push_back(-v);
    }
    return out;
}

std::set<SquareClass> realised_chooser(const ParallelismDescriptor& par,
                                       const std::set<SquareClass>& realised) {
    switch (par.kind) {
        case ParallelismKind::LEFT:
            return realised;
        case ParallelismKind::RIGHT:
            return {};
        case ParallelismKind::BLEND:
            break;
    }
    std::set<SquareClass> out;
    for (const SquareClass& inv : par.chooser)
        if (realised.count(inv) != 0) out.insert(inv);
    return out;
}

}  // namespace

std::string to_string(ParallelismKind kind) {
    switch (kind) {
        case ParallelismKind::LEFT:
            return "left";
        case ParallelismKind::RIGHT:
            return "right";
        case ParallelismKind::BLEND:
            return "blend";
    }
    throw std::logic_error("to_string: unknown parallelism kind");
}

std::string to_string(const ParallelismDescriptor& par) {
    if (par.kind != ParallelismKind::BLEND) return to_string(par.kind);
    std::string out = "blend";
    char separator = ':';
    for (const SquareClass& inv : par.chooser) {
        out += separator;
        out += to_string(inv);
        separator = ',';
    }
    return out;
}

ParallelismDescriptor ParallelismDescriptor::left() { return {ParallelismKind::LEFT, {}}; }

ParallelismDescriptor ParallelismDescriptor::right() { return {ParallelismKind::RIGHT, {}}; }

ParallelismDescriptor ParallelismDescriptor::blend(std::set<SquareClass> chooser) {
    return {ParallelismKind::BLEND, std::move(chooser)};
}

Side resolve_side(const ParallelismDescriptor& par, const Line& m) {
    switch (par.kind) {
        case ParallelismKind::LEFT:
            return Side::LEFT;
        case ParallelismKind::RIGHT:
            return Side::RIGHT;
        case ParallelismKind::BLEND:
            break;
    }
    return par.chooser.count(subfield_invariant(m)) != 0 ? Side::LEFT : Side::RIGHT;
}

ParallelismDescriptor build_parallelism(const std::set<Line>& seed_lines) {
    std::set<SquareClass> chooser;
    for (const Line& seed : seed_lines) {
        if (!incident(Point(Quaternion::one(seed.algebra())), seed))
            throw std::domain_error("build_parallelism: seed line misses F1");
        chooser.insert(subfield_invariant(seed));
    }
    return ParallelismDescriptor::blend(std::move(chooser));
}

bool are_parallel(const ParallelismDescriptor& par, const Line& m, const Line& n) {
    return is_parallel(m, n, resolve_side(par, m));
}

Line class_line(const ParallelismDescriptor& par, const Line& m, const Point& p) {
    const Line result = class_line_through(m, p, resolve_side(par, m));
    if (!incident(p, result) || !are_parallel(par, result, m))
        throw std::logic_error("class_line: postcondition failed");
    return result;
}

DescriptorComparison descriptors_equal(const Algebra& alg, const ParallelismDescriptor& par1,
                                       const ParallelismDescriptor& par2, int probe_bound) {
    const auto generators = invariant_generators(alg, probe_bound);
    std::set<SquareClass> realised;
    for (const auto& entry : generators) realised.insert(entry.first);

    DescriptorComparison report{false, realised_chooser(par1, realised),
                                realised_chooser(par2, realised), std::nullopt};
    report.equal = report.canonical1 == report.canonical2;
    if (report.equal) return report;

    // The smallest invariant routed to different sides yields a probe
    // line; any point off that line and its polar separates the class
    // lines, since a line parallel to m on both sides is m or its polar.
    std::vector<SquareClass> disagreement;
    std::set_symmetric_difference(report.canonical1.begin(), report.canonical1.end(),
                                  report.canonical2.begin(), report.canonical2.end(),
                                  std::back_inserter(disagreement));
    const Quaternion one = Quaternion::one(alg);
    const Line m = line_from_span(one, generators.at(disagreement.front()));
    const Line perp = polar_line(m);
    for (long x0 : signed_range(2))
        for (long x1 : signed_range(2))
            for (long x2 : signed_range(2))
                for (long x3 : signed_range(2)) {
                    const Quaternion q(alg, Rat(x0), Rat(x1), Rat(x2), Rat(x3));
                    if (q.is_zero()) continue;
                    const Point p(q);
                    if (incident(p, m) || incident(p, perp)) continue;
                    Line class1 = class_line(par1, m, p);
                    Line class2 = class_line(par2, m, p);
                    if (class1 == class2) continue;
                    report.witness = ProbeWitness{m, p, std::move(class1), std::move(class2)};
                    return report;
                }
    throw std::logic_error("descriptors_equal: no probe witness found");
}

DsReport ds_check(const Point& p0, const Point& p1, const Point& p2,
                  const ParallelismDescriptor& par1, const ParallelismDescriptor& par2) {
    if (p0 == p1 || p0 == p2 || p1 == p2)
        throw std::domain_error("ds_check: triangle points must be distinct");
    const Line j01 = join(p0, p1);
    if (incident(p2, j01)) throw std::domain_error("ds_check: triangle points are collinear");
    const Line j02 = join(p0, p2);
    Line m1 = class_line(par1, j01, p2);
    Line m2 = class_line(par2, j02, p1);
    // m1 == m2 would make both joins pass through all three points.
    std::optional<Point> common = meet(m1, m2);
    const bool holds = common.has_value();
    return DsReport{{p0, p1, p2}, std::move(m1), std::move(m2), std::move(common), holds};
}

DsScanSummary ds_property_scan(const Algebra& alg, const ParallelismDescriptor& par1,
                               const ParallelismDescriptor& par2, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::domain_error("ds_property_scan: trials must be >= 1");
    DsScanSummary summary{trials, 0, std::nullopt, std::nullopt};
    for (int trial = 0; trial < trials; ++trial) {
        SampleStream stream = SampleStream::for_trial(seed, static_cast<std::uint64_t>(trial));
        const auto tri = stream.triangle(alg);
        DsReport report = ds_check(tri[0], tri[1], tri[2], par1, par2);
        if (report.holds) {
            ++summary.holds;
        } else if (!summary.counterexample) {
            summary.counterexample = std::move(report);
            summary.counterexample_trial = trial;
        }
    }
    return summary;
}

std::map<SquareClass, Quaternion> invariant_generators(const Algebra& alg, int height_bound) {
    if (height_bound < 1) throw std::domain_error("invariant_generators: bound must be >= 1");
    const Quaternion one = Quaternion::one(alg);
    std::map<SquareClass, Quaternion> found;
    for (long x1 : signed_range(height_bound))
        for (long x2 : signed_range(height_bound))
            for (long x3 : signed_range(height_bound)) {
                if (x1 == 0 && x2 == 0 && x3 == 0) continue;
                const Quaternion g(alg, Rat(0), Rat(x1), Rat(x2), Rat(x3));
                found.emplace(subfield_invariant(line_from_span(one, g)), g);
            }
    return found;
}

std::set<SquareClass> triviality_scan(const Algebra& alg, int height_bound) {
    std::set<SquareClass> out;
    for (const auto& entry : invariant_generators(alg, height_bound)) out.insert(entry.first);
    return out;
}

}  // namespace cliffpar
