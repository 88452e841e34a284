#include "cliffpar/runner.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

namespace cliffpar {

namespace {

constexpr long kIsotropySearchFloor = 64;

std::string format_seed_set(const BlendSeed& d) {
    std::string out = "{";
    bool first = true;
    for (int element : d) {
        if (!first) out += ',';
        out += std::to_string(element + 1);
        first = false;
    }
    return out + "}";
}

/// Lazy view of a scenario against a config: bindings win over config
/// defaults, and the algebra is only constructed for commands that need
/// one.
class Context {
public:
    Context(const Scenario& scenario, const RunConfig& config)
        : scenario_(scenario), config_(config) {}

    Rat raw_a() const { return rational_or("a", config_.a); }
    Rat raw_b() const { return rational_or("b", config_.b); }

    const Algebra& algebra() {
        if (!alg_) alg_.emplace(raw_a(), raw_b());
        return *alg_;
    }

    bool has(const std::string& name) const { return scenario_.bindings.count(name) != 0; }

    const ScenarioValue& value(const std::string& name) const {
        const auto it = scenario_.bindings.find(name);
        if (it == scenario_.bindings.end())
            throw std::domain_error("missing binding '" + name + "'");
        return it->second;
    }

    Rat rational(const std::string& name) const {
        const auto* r = std::get_if<Rat>(&value(name));
        if (!r) throw std::domain_error("binding '" + name + "' is not a rational");
        return *r;
    }

    Quaternion quaternion(const std::string& name) {
        const ScenarioValue& v = value(name);
        if (const auto* q = std::get_if<RawQuat>(&v))
            return Quaternion(algebra(), (*q)[0], (*q)[1], (*q)[2], (*q)[3]);
        if (const auto* r = std::get_if<Rat>(&v)) return Quaternion(algebra(), *r, 0, 0, 0);
        throw std::domain_error("binding '" + name + "' is not a quaternion");
    }

    Point point(const std::string& name) { return Point(quaternion(name)); }

    Line line(const std::string& name) {
        const auto* rows = std::get_if<RawLine>(&value(name));
        if (!rows) throw std::domain_error("binding '" + name + "' is not a line");
        return materialise_line(*rows);
    }

    Line materialise_line(const RawLine& rows) {
        const RawQuat& r0 = rows[0];
        const RawQuat& r1 = rows[1];
        return line_from_span(Quaternion(algebra(), r0[0], r0[1], r0[2], r0[3]),
                              Quaternion(algebra(), r1[0], r1[1], r1[2], r1[3]));
    }

    const FinitePartition& partition(const std::string& name) const {
        const auto* p = std::get_if<FinitePartition>(&value(name));
        if (!p) throw std::domain_error("binding '" + name + "' is not a partition");
        return *p;
    }

    /// 1-based set literal mapped into {0,...,ground-1}.
    BlendSeed seed_set(const std::string& name, int ground) const {
        const auto* raw = std::get_if<RawIntSet>(&value(name));
        if (!raw) throw std::domain_error("binding '" + name + "' is not an element set");
        BlendSeed d;
        for (int element : *raw) {
            if (element < 1 || element > ground)
                throw std::domain_error("binding '" + name + "' has element " +
                                        std::to_string(element) + " outside 1.." +
                                        std::to_string(ground));
            d.insert(element - 1);
        }
        return d;
    }

    const ParallelismDescriptor& descriptor(const std::string& name) const {
        const auto* par = std::get_if<ParallelismDescriptor>(&value(name));
        if (!par) throw std::domain_error("binding '" + name + "' is not a descriptor");
        return *par;
    }

    Side side_or(const std::string& name, Side fallback) const {
        if (!has(name)) return fallback;
        const ParallelismDescriptor& par = descriptor(name);
        if (par.kind == ParallelismKind::LEFT) return Side::LEFT;
        if (par.kind == ParallelismKind::RIGHT) return Side::RIGHT;
        throw std::domain_error("binding '" + name + "' must be left or right");
    }

    const Scenario& scenario() const { return scenario_; }
    const RunConfig& config() const { return config_; }

private:
    Rat rational_or(const std::string& name, const Rat& fallback) const {
        return has(name) ? rational(name) : fallback;
    }

    const Scenario& scenario_;
    const RunConfig& config_;
    std::optional<Algebra> alg_;
};

class Report {
public:
    void put(const std::string& key, const std::string& value) {
        out_ << key << " = " << value << "\n";
    }
    // Exact match for literals; without it they would decay to bool.
    void put(const std::string& key, const char* value) { put(key, std::string(value)); }
    void put(const std::string& key, bool value) { put(key, value ? "true" : "false"); }
    void put(const std::string& key, long value) { put(key, std::to_string(value)); }

    std::string str() const { return out_.str(); }

private:
    std::ostringstream out_;
};

int run_algebra(const std::string& sub, Context& ctx, Report& out) {
    if (sub != "check") throw std::domain_error("unknown command 'algebra " + sub + "'");
    const Rat a = ctx.raw_a();
    const Rat b = ctx.raw_b();
    out.put("algebra", "a=" + to_string(a) + " b=" + to_string(b));
    if (a == 0 || b == 0) throw std::domain_error("algebra parameters must be nonzero");
    const bool division = is_division(a, b);
    out.put("division", division);
    if (division) return 0;
    const long height = std::max<long>(ctx.config().height, kIsotropySearchFloor);
    out.put("search_height", height);
    if (const auto witness = brute_force_isotropy(a, b, height)) {
        out.put("isotropy", "(" + (*witness)[0].str() + "," + (*witness)[1].str() + "," +
                                (*witness)[2].str() + ")");
    } else {
        out.put("isotropy", "not-found-at-height");
    }
    return 1;
}

int run_line(const std::string& sub, Context& ctx, Report& out) {
    const Line l = ctx.line("L");
    if (sub == "perp") {
        out.put("perp", to_string(polar_line(l)));
        return 0;
    }
    if (sub == "transversal") {
        const Side side = ctx.side_or("side", Side::LEFT);
        out.put("side", to_string(side));
        out.put("transversal", to_string(transversal(l, side)));
        return 0;
    }
    if (sub == "invariant") {
        out.put("invariant", to_string(subfield_invariant(l)));
        return 0;
    }
    throw std::domain_error("unknown command 'line " + sub + "'");
}

int run_equiv(const std::string& sub, Context& ctx, Report& out) {
    if (sub != "test") throw std::domain_error("unknown command 'equiv " + sub + "'");
    const Line l1 = ctx.line("L1");
    const Line l2 = ctx.line("L2");
    const LrVerdict verdict = lr_equivalent(l1, l2);
    out.put("equivalent", verdict.equivalent);
    if (verdict.equivalent) {
        out.put("e", to_string(verdict.certificate->e));
        out.put("mu", to_string(verdict.certificate->mu_scale));
        return 0;
    }
    out.put("invariant1", to_string(subfield_invariant(l1)));
    out.put("invariant2", to_string(subfield_invariant(l2)));
    return 1;
}

int run_common(const std::string& sub, Context& ctx, Report& out) {
    if (sub != "lines") throw std::domain_error("unknown command 'common " + sub + "'");
    const auto lines = common_lines(ctx.line("L1"), ctx.line("L2"));
    out.put("count", static_cast<long>(lines.size()));
    long index = 1;
    for (const Line& l : lines) out.put("line" + std::to_string(index++), to_string(l));
    return lines.empty() ? 1 : 0;
}

int run_par(const std::string& sub, Context& ctx, Report& out) {
    if (sub == "build") {
        std::set<Line> seeds;
        for (const auto& [name, value] : ctx.scenario().bindings)
            if (std::holds_alternative<RawLine>(value)) seeds.insert(ctx.line(name));
        out.put("seeds", static_cast<long>(seeds.size()));
        out.put("descriptor", to_string(build_parallelism(seeds)));
        return 0;
    }
    if (sub == "test") {
        const ParallelismDescriptor& par = ctx.descriptor("par");
        const Line m = ctx.line("M");
        const Line n = ctx.line("N");
        out.put("descriptor", to_string(par));
        out.put("side", to_string(resolve_side(par, m)));
        const bool parallel = are_parallel(par, m, n);
        out.put("parallel", parallel);
        return parallel ? 0 : 1;
    }
    if (sub == "classline") {
        const ParallelismDescriptor& par = ctx.descriptor("par");
        const Line m = ctx.line("M");
        out.put("descriptor", to_string(par));
        out.put("side", to_string(resolve_side(par, m)));
        out.put("classline", to_string(class_line(par, m, ctx.point("p"))));
        return 0;
    }
    throw std::domain_error("unknown command 'par " + sub + "'");
}

void put_ds_report(const DsReport& report, Report& out) {
    out.put("m1", to_string(report.m1));
    out.put("m2", to_string(report.m2));
    out.put("holds", report.holds);
    if (report.common) out.put("common", to_string(*report.common));
}

int run_ds(const std::string& sub, Context& ctx, Report& out) {
    if (sub != "check" && sub != "scan")
        throw std::domain_error("unknown command 'ds " + sub + "'");
    const ParallelismDescriptor& par1 = ctx.descriptor("par1");
    const ParallelismDescriptor& par2 = ctx.descriptor("par2");
    out.put("par1", to_string(par1));
    out.put("par2", to_string(par2));
    if (sub == "check") {
        const auto report = ds_check(ctx.point("p0"), ctx.point("p1"), ctx.point("p2"), par1, par2);
        put_ds_report(report, out);
        return report.holds ? 0 : 1;
    }
    if (sub == "scan") {
        const RunConfig& config = ctx.config();
        const auto summary =
            ds_property_scan(ctx.algebra(), par1, par2, config.trials, config.seed);
        out.put("trials", static_cast<long>(summary.trials));
        out.put("holds", std::to_string(summary.holds) + "/" + std::to_string(summary.trials));
        if (!summary.counterexample) return 0;
        out.put("counterexample_trial", static_cast<long>(*summary.counterexample_trial));
        const DsReport& cx = *summary.counterexample;
        out.put("p0", to_string(cx.triangle[0]));
        out.put("p1", to_string(cx.triangle[1]));
        out.put("p2", to_string(cx.triangle[2]));
        put_ds_report(cx, out);
        return 1;
    }
    throw std::domain_error("unknown command 'ds " + sub + "'");
}

int run_blend(const std::string& sub, Context& ctx, Report& out) {
    if (sub != "join" && sub != "isblend" && sub != "fromseed" && sub != "enumerate")
        throw std::domain_error("unknown command 'blend " + sub + "'");
    const FinitePartition& p1 = ctx.partition("P1");
    const FinitePartition& p2 = ctx.partition("P2");
    if (sub == "join") {
        out.put("join", to_string(join_partitions(p1, p2)));
        return 0;
    }
    if (sub == "isblend") {
        const bool verdict = is_blend(ctx.partition("P3"), p1, p2);
        out.put("isblend", verdict);
        return verdict ? 0 : 1;
    }
    if (sub == "fromseed") {
        const BlendSeed d = ctx.seed_set("D", p1.ground_size());
        const FinitePartition blend = blend_from_seed(d, p1, p2);
        out.put("blend", to_string(blend));
        out.put("canonical_seed", format_seed_set(seed_from_blend(blend, p1, p2)));
        return 0;
    }
    if (sub == "enumerate") {
        const auto blends = enumerate_blends(p1, p2);
        out.put("count", static_cast<long>(blends.size()));
        long index = 1;
        for (const FinitePartition& blend : blends)
            out.put("blend" + std::to_string(index++), to_string(blend));
        return 0;
    }
    throw std::domain_error("unknown command 'blend " + sub + "'");
}

int run_scan(const std::string& sub, Context& ctx, Report& out) {
    if (sub != "invariants") throw std::domain_error("unknown command 'scan " + sub + "'");
    const int height = ctx.config().height;
    out.put("height", static_cast<long>(height));
    const auto generators = invariant_generators(ctx.algebra(), height);
    out.put("count", static_cast<long>(generators.size()));
    long index = 1;
    for (const auto& [invariant, generator] : generators) {
        out.put("invariant" + std::to_string(index), to_string(invariant));
        out.put("generator" + std::to_string(index), to_string(generator));
        ++index;
    }
    return 0;
}

int dispatch(Context& ctx, Report& out) {
    const auto& command = ctx.scenario().command;
    if (command.empty()) throw std::domain_error("no command given");
    const std::string& verb = command.front();
    const std::string sub = command.size() > 1 ? command[1] : "";
    if (verb == "algebra") return run_algebra(sub, ctx, out);
    // Commands below materialise objects in the scenario's algebra; the
    // blend family is purely combinatorial.
    if (verb != "blend" && verb != "algebra")
        out.put("algebra", to_string(ctx.algebra()));
    if (verb == "line") return run_line(sub, ctx, out);
    if (verb == "equiv") return run_equiv(sub, ctx, out);
    if (verb == "common") return run_common(sub, ctx, out);
    if (verb == "par") return run_par(sub, ctx, out);
    if (verb == "ds") return run_ds(sub, ctx, out);
    if (verb == "blend") return run_blend(sub, ctx, out);
    if (verb == "scan") return run_scan(sub, ctx, out);
    throw std::domain_error("unknown command '" + verb + "'");
}

}  // namespace

RunResult run_scenario(const Scenario& scenario, const RunConfig& config) {
    Context ctx(scenario, config);
    Report out;
    out.put("seed", std::to_string(config.seed));
    try {
        const int code = dispatch(ctx, out);
        return {code, out.str()};
    } catch (const std::exception& e) {
        out.put("error", e.what());
        return {2, out.str()};
    }
}

}  // namespace cliffpar
