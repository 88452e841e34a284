#pragma once

/// Text form of the objects the command line works with: named bindings
/// of rationals, quaternions, lines, partitions, element sets, and
/// parallelism descriptors, followed by command words. Values are stored
/// raw, without an ambient algebra; the runner materialises them once
/// the algebra is known.

#include "cliffpar/blendcore.hpp"
#include "cliffpar/cliffordlike.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace cliffpar {

/// Coordinates of a quaternion literal `(x0,x1,x2,x3)`.
using RawQuat = std::array<Rat, 4>;

/// Spanning rows of a line literal `[(...);(...)]`; rationally
/// independent by construction.
using RawLine = std::array<RawQuat, 2>;

/// Elements of a set literal `{1,3}`, kept 1-based as written.
using RawIntSet = std::set<int>;

using ScenarioValue =
    std::variant<Rat, RawQuat, RawLine, FinitePartition, RawIntSet, ParallelismDescriptor>;

/// Positioned syntax or shape error in scenario text. Lines and columns
/// are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Parsed scenario: bindings by name plus the command words in order.
/// Later bindings of a name override earlier ones, so command-line
/// arguments can adjust a scenario file.
struct Scenario {
    std::map<std::string, ScenarioValue> bindings;
    std::vector<std::string> command;
};

/// Parses bindings `name = literal` and bare command words. Literals:
/// rational `-2/3`, quaternion `(x0,x1,x2,x3)`, line `[(...);(...)]`,
/// partition `{{1,2},{3,4}}` over 1-based elements, element set `{1,3}`,
/// descriptor `left`, `right`, or `blend:-1,-2` with invariants reduced
/// to their square classes.
Scenario parse_scenario(const std::string& text);

}  // namespace cliffpar
