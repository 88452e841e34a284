#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cliffpar/runner.hpp"

#include <string>

using namespace cliffpar;

namespace {

const Algebra& ham() {
    static const Algebra alg(Rat(-1), Rat(-1));
    return alg;
}

Line span2(const Quaternion& u, const Quaternion& v) { return line_from_span(u, v); }

/// Value of `key = value` in a report, or an empty string.
std::string get_value(const std::string& output, const std::string& key) {
    const std::string prefix = key + " = ";
    std::size_t pos = 0;
    while (pos < output.size()) {
        const std::size_t end = output.find('\n', pos);
        const std::string line = output.substr(pos, end - pos);
        if (line.compare(0, prefix.size(), prefix) == 0) return line.substr(prefix.size());
        if (end == std::string::npos) break;
        pos = end + 1;
    }
    return "";
}

RunResult run_text(const std::string& text, const RunConfig& config = RunConfig{}) {
    return run_scenario(parse_scenario(text), config);
}

Quaternion quat_of(const std::string& literal, const Algebra& alg) {
    const Scenario s = parse_scenario("q=" + literal);
    const auto& raw = std::get<RawQuat>(s.bindings.at("q"));
    return {alg, raw[0], raw[1], raw[2], raw[3]};
}

Line line_of(const std::string& literal, const Algebra& alg) {
    const Scenario s = parse_scenario("L=" + literal);
    const auto& raw = std::get<RawLine>(s.bindings.at("L"));
    return span2(Quaternion(alg, raw[0][0], raw[0][1], raw[0][2], raw[0][3]),
                 Quaternion(alg, raw[1][0], raw[1][1], raw[1][2], raw[1][3]));
}

}  // namespace

TEST_CASE("bindings and command words parse together") {
    const Scenario s = parse_scenario("a=-1 b=-1 L = [(1,0,0,0);(0,1,0,0)]\nequiv test");
    CHECK(s.command == std::vector<std::string>{"equiv", "test"});
    CHECK(std::get<Rat>(s.bindings.at("a")) == -1);
    CHECK(std::get<Rat>(s.bindings.at("b")) == -1);
    const auto& raw = std::get<RawLine>(s.bindings.at("L"));
    CHECK(raw[0] == RawQuat{Rat(1), Rat(0), Rat(0), Rat(0)});
    CHECK(raw[1] == RawQuat{Rat(0), Rat(1), Rat(0), Rat(0)});
}

TEST_CASE("quaternion literals keep exact coordinates") {
    const Scenario s = parse_scenario("q=(1,2/3,0,-1)");
    const auto& raw = std::get<RawQuat>(s.bindings.at("q"));
    CHECK(raw == RawQuat{Rat(1), Rat(2, 3), Rat(0), Rat(-1)});
}

TEST_CASE("partition and element set literals") {
    const Scenario s = parse_scenario("P={{1,2},{3,4}} D={1,3} E={}");
    const auto& p = std::get<FinitePartition>(s.bindings.at("P"));
    CHECK(p.ground_size() == 4);
    CHECK(p.blocks() == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    CHECK(std::get<RawIntSet>(s.bindings.at("D")) == RawIntSet{1, 3});
    CHECK(std::get<RawIntSet>(s.bindings.at("E")).empty());
}

TEST_CASE("descriptor literals reduce invariants to square classes") {
    const Scenario s = parse_scenario("p1=left p2=right p3=blend:-1,-2 p4=blend p5=blend:-4,-12");
    CHECK(std::get<ParallelismDescriptor>(s.bindings.at("p1")).kind == ParallelismKind::LEFT);
    CHECK(std::get<ParallelismDescriptor>(s.bindings.at("p2")).kind == ParallelismKind::RIGHT);
    const auto& p3 = std::get<ParallelismDescriptor>(s.bindings.at("p3"));
    CHECK(p3.kind == ParallelismKind::BLEND);
    CHECK(p3.chooser == std::set<SquareClass>{SquareClass(Int(-1)), SquareClass(Int(-2))});
    CHECK(std::get<ParallelismDescriptor>(s.bindings.at("p4")).chooser.empty());
    // -4 and -12 collapse to the square classes -1 and -3.
    CHECK(std::get<ParallelismDescriptor>(s.bindings.at("p5")).chooser ==
          std::set<SquareClass>{SquareClass(Int(-1)), SquareClass(Int(-3))});
}

TEST_CASE("later bindings override earlier ones") {
    const Scenario s = parse_scenario("x=1 x=2");
    CHECK(std::get<Rat>(s.bindings.at("x")) == 2);
}

TEST_CASE("syntax and shape errors carry positions") {
    CHECK_THROWS_AS(parse_scenario("q=(1,2"), ParseError);
    CHECK_THROWS_AS(parse_scenario("x="), ParseError);
    CHECK_THROWS_AS(parse_scenario("=1"), ParseError);
    CHECK_THROWS_AS(parse_scenario("d=lefty"), ParseError);
    CHECK_THROWS_AS(parse_scenario("P={{1,3}}"), ParseError);
    CHECK_THROWS_AS(parse_scenario("P={{1,2},{2,3}}"), ParseError);
    CHECK_THROWS_AS(parse_scenario("D={0}"), ParseError);
    CHECK_THROWS_AS(parse_scenario("d=blend:0"), ParseError);

    try {
        parse_scenario("x=1\nL=[(1,0,0,0);(2,0,0,0)]");
        FAIL("dependent span accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
        CHECK(std::string(e.what()).find("dependent") != std::string::npos);
    }
}

TEST_CASE("emitted literals re-parse to equal values") {
    const auto one = Quaternion::one(ham());
    const auto i = Quaternion::unit(ham(), 1);
    const Line l = span2(one + i, Quaternion(ham(), 0, Rat(1, 2), 1, 0));
    CHECK(line_of(to_string(l), ham()) == l);
    const Quaternion q(ham(), Rat(1, 3), Rat(-2), Rat(0), Rat(7, 2));
    CHECK(quat_of(to_string(q), ham()) == q);
    const FinitePartition p(5, {{0, 2}, {1}, {3, 4}});
    const Scenario s = parse_scenario("P=" + to_string(p));
    CHECK(std::get<FinitePartition>(s.bindings.at("P")) == p);
    const auto par = ParallelismDescriptor::blend(
        {SquareClass(Int(-1)), SquareClass(Int(-6))});
    const Scenario s2 = parse_scenario("d=" + to_string(par));
    const auto& back = std::get<ParallelismDescriptor>(s2.bindings.at("d"));
    CHECK(back.kind == par.kind);
    CHECK(back.chooser == par.chooser);
    const Scenario s3 = parse_scenario("r=" + to_string(Rat(-22, 7)));
    CHECK(std::get<Rat>(s3.bindings.at("r")) == Rat(-22, 7));
}

TEST_CASE("equiv test reports a re-checkable certificate") {
    const auto result = run_text("equiv test L1=[(1,0,0,0);(0,1,0,0)] L2=[(1,0,0,0);(0,0,0,1)]");
    CHECK(result.exit_code == 0);
    CHECK(result.output ==
          "seed = 0\n"
          "algebra = a=-1 b=-1\n"
          "equivalent = true\n"
          "e = (1,0,1,0)\n"
          "mu = 1\n");

    // Re-parse the certificate and verify the conjugation exactly.
    const Quaternion e = quat_of(get_value(result.output, "e"), ham());
    const Line l1 = line_of("[(1,0,0,0);(0,1,0,0)]", ham());
    const Line l2 = line_of("[(1,0,0,0);(0,0,0,1)]", ham());
    CHECK(apply_mu(inverse(e), e, l1) == l2);
}

TEST_CASE("equiv test reports distinct invariants on failure") {
    const auto result = run_text("equiv test L1=[(1,0,0,0);(0,1,0,0)] L2=[(1,0,0,0);(0,1,1,1)]");
    CHECK(result.exit_code == 1);
    CHECK(get_value(result.output, "equivalent") == "false");
    CHECK(get_value(result.output, "invariant1") == "-1");
    CHECK(get_value(result.output, "invariant2") == "-3");
}

TEST_CASE("ds scan left against right holds on every trial") {
    RunConfig config;
    config.trials = 100;
    config.seed = 42;
    const auto result = run_text("ds scan par1=left par2=right", config);
    CHECK(result.exit_code == 0);
    CHECK(get_value(result.output, "seed") == "42");
    CHECK(get_value(result.output, "holds") == "100/100");
}

TEST_CASE("ds scan counterexamples re-verify from the report") {
    RunConfig config;
    config.trials = 50;
    config.seed = 42;
    const auto result = run_text("ds scan par1=blend:-1 par2=blend:-1", config);
    CHECK(result.exit_code == 1);
    REQUIRE(get_value(result.output, "counterexample_trial") != "");

    const auto par = ParallelismDescriptor::blend({SquareClass(Int(-1))});
    const Point p0(quat_of(get_value(result.output, "p0"), ham()));
    const Point p1(quat_of(get_value(result.output, "p1"), ham()));
    const Point p2(quat_of(get_value(result.output, "p2"), ham()));
    const auto again = ds_check(p0, p1, p2, par, par);
    CHECK_FALSE(again.holds);
    CHECK(to_string(again.m1) == get_value(result.output, "m1"));
    CHECK(to_string(again.m2) == get_value(result.output, "m2"));
}

TEST_CASE("blend enumerate lists blends in canonical order") {
    const auto result = run_text("blend enumerate P1={{1,2},{3,4}} P2={{1,3},{2,4}}");
    CHECK(result.exit_code == 0);
    CHECK(result.output ==
          "seed = 0\n"
          "count = 2\n"
          "blend1 = {{1,2},{3,4}}\n"
          "blend2 = {{1,3},{2,4}}\n");
}

TEST_CASE("blend join fromseed and isblend commands") {
    const auto joined = run_text("blend join P1={{1,2},{3,4}} P2={{1,3},{2,4}}");
    CHECK(joined.exit_code == 0);
    CHECK(get_value(joined.output, "join") == "{{1,2,3,4}}");

    const auto seeded = run_text("blend fromseed P1={{1,2},{3,4}} P2={{1,3},{2,4}} D={1}");
    CHECK(seeded.exit_code == 0);
    CHECK(get_value(seeded.output, "blend") == "{{1,2},{3,4}}");
    CHECK(get_value(seeded.output, "canonical_seed") == "{1,2,3,4}");

    CHECK(run_text("blend isblend P1={{1,2},{3,4}} P2={{1,3},{2,4}} P3={{1,2},{3,4}}").exit_code ==
          0);
    const auto no = run_text("blend isblend P1={{1,2},{3,4}} P2={{1,3},{2,4}} P3={{1,2,3,4}}");
    CHECK(no.exit_code == 1);
    CHECK(get_value(no.output, "isblend") == "false");
}

TEST_CASE("line commands report polar transversal and invariant") {
    const auto perp = run_text("line perp L=[(1,0,0,0);(0,1,0,0)]");
    CHECK(perp.exit_code == 0);
    CHECK(get_value(perp.output, "perp") == "[(0,0,1,0);(0,0,0,1)]");

    const auto trans = run_text("line transversal L=[(1,1,0,0);(0,0,1,1)]");
    CHECK(trans.exit_code == 0);
    CHECK(get_value(trans.output, "side") == "left");
    CHECK(get_value(trans.output, "transversal") == "[(1,0,0,0);(0,0,1,0)]");

    const auto inv = run_text("line invariant L=[(1,0,0,0);(0,1,0,0)]");
    CHECK(inv.exit_code == 0);
    CHECK(get_value(inv.output, "invariant") == "-1");
}

TEST_CASE("par commands build test and classline") {
    const auto built = run_text("par build S1=[(1,0,0,0);(0,1,0,0)] S2=[(1,0,0,0);(0,1,1,0)]");
    CHECK(built.exit_code == 0);
    CHECK(get_value(built.output, "descriptor") == "blend:-2,-1");

    const auto hit = run_text("par test par=blend:-1 M=[(1,0,0,0);(0,1,0,0)] N=[(0,0,1,0);(0,0,0,1)]");
    CHECK(hit.exit_code == 0);
    CHECK(get_value(hit.output, "side") == "left");
    CHECK(get_value(hit.output, "parallel") == "true");

    const auto miss = run_text("par test par=left M=[(1,0,0,0);(0,1,0,0)] N=[(1,0,0,0);(0,1,1,0)]");
    CHECK(miss.exit_code == 1);
    CHECK(get_value(miss.output, "parallel") == "false");

    const auto cls = run_text("par classline par=left M=[(1,0,0,0);(0,1,0,0)] p=(0,0,1,0)");
    CHECK(cls.exit_code == 0);
    CHECK(get_value(cls.output, "classline") == "[(0,0,1,0);(0,0,0,1)]");
}

TEST_CASE("ds check command mirrors the hand-verified instance") {
    const auto result =
        run_text("ds check par1=left par2=right p0=(1,0,0,0) p1=(0,1,0,0) p2=(0,0,1,0)");
    CHECK(result.exit_code == 0);
    CHECK(get_value(result.output, "holds") == "true");
    CHECK(get_value(result.output, "m1") == "[(0,0,1,0);(0,0,0,1)]");
    CHECK(get_value(result.output, "m2") == "[(0,1,0,0);(0,0,0,1)]");
    CHECK(get_value(result.output, "common") == "(0,0,0,1)");
}

TEST_CASE("common lines command counts the polar pair") {
    const auto hit = run_text("common lines L1=[(1,0,0,0);(0,1,0,0)] L2=[(1,0,0,0);(0,0,0,1)]");
    CHECK(hit.exit_code == 0);
    CHECK(get_value(hit.output, "count") == "2");
    CHECK(get_value(hit.output, "line1") != "");
    CHECK(get_value(hit.output, "line2") != "");

    const auto miss = run_text("common lines L1=[(1,0,0,0);(0,1,0,0)] L2=[(1,0,0,0);(0,1,1,1)]");
    CHECK(miss.exit_code == 1);
    CHECK(get_value(miss.output, "count") == "0");
}

TEST_CASE("algebra check reports division or an isotropy witness") {
    const auto division = run_text("algebra check");
    CHECK(division.exit_code == 0);
    CHECK(get_value(division.output, "division") == "true");

    const auto split = run_text("a=1 b=1 algebra check");
    CHECK(split.exit_code == 1);
    CHECK(get_value(split.output, "division") == "false");
    CHECK(get_value(split.output, "isotropy") != "");

    const auto negative_pair = run_text("a=-2 b=-5 algebra check");
    CHECK(negative_pair.exit_code == 0);
    CHECK(get_value(negative_pair.output, "algebra") == "a=-2 b=-5");
}

TEST_CASE("scan invariants reports one generator per class") {
    RunConfig config;
    config.height = 1;
    const auto result = run_text("scan invariants", config);
    CHECK(result.exit_code == 0);
    CHECK(result.output ==
          "seed = 0\n"
          "algebra = a=-1 b=-1\n"
          "height = 1\n"
          "count = 3\n"
          "invariant1 = -3\n"
          "generator1 = (0,1,1,1)\n"
          "invariant2 = -2\n"
          "generator2 = (0,0,1,1)\n"
          "invariant3 = -1\n"
          "generator3 = (0,0,0,1)\n");
}

TEST_CASE("usage and domain errors exit with code 2") {
    CHECK(run_text("equiv test").exit_code == 2);
    CHECK(run_text("frobnicate").exit_code == 2);
    CHECK(run_text("").exit_code == 2);
    CHECK(run_text("ds frobnicate par1=left par2=left").exit_code == 2);
    CHECK(run_text("blend join P1={{1,2}} P2={{1,2},{3,4}}").exit_code == 2);
    CHECK(run_text("a=1 b=1 line perp L=[(1,0,0,0);(0,1,0,0)]").exit_code == 2);
    CHECK(run_text("par classline par=left M=[(1,0,0,0);(0,1,0,0)] p=(0,0,0,0)").exit_code == 2);
    const auto missing = run_text("equiv test L1=[(1,0,0,0);(0,1,0,0)]");
    CHECK(missing.exit_code == 2);
    CHECK(get_value(missing.output, "error") != "");
}

TEST_CASE("identical invocations produce byte-identical output") {
    RunConfig config;
    config.trials = 30;
    config.seed = 9;
    const std::string text = "ds scan par1=blend:-2 par2=left";
    const auto first = run_text(text, config);
    const auto second = run_text(text, config);
    CHECK(first.output == second.output);
    CHECK(first.exit_code == second.exit_code);
}
