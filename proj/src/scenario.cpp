#include "cliffpar/scenario.hpp"

#include "cliffpar/linalg.hpp"

#include <cctype>
#include <limits>
#include <utility>

namespace cliffpar {

namespace {

ParseError error_at(int line, int column, const std::string& what) {
    return ParseError(line, column, what);
}

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    bool at_end() const { return pos_ >= text_.size(); }

    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    char get() {
        const char c = peek();
        ++pos_;
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) get();
    }

    /// Consumes c or fails with a positioned error.
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    bool try_consume(char c) {
        if (peek() != c) return false;
        get();
        return true;
    }

    [[noreturn]] void fail(const std::string& what) const { throw error_at(line_, column_, what); }

    int line() const { return line_; }
    int column() const { return column_; }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::string read_identifier(Cursor& in) {
    std::string out;
    while (is_ident_char(in.peek())) out += in.get();
    return out;
}

Rat read_rational(Cursor& in) {
    const int line = in.line();
    const int column = in.column();
    std::string digits;
    if (in.peek() == '+' || in.peek() == '-') digits += in.get();
    while (std::isdigit(static_cast<unsigned char>(in.peek()))) digits += in.get();
    if (in.peek() == '/') {
        digits += in.get();
        while (std::isdigit(static_cast<unsigned char>(in.peek()))) digits += in.get();
    }
    try {
        return parse_rational(digits);
    } catch (const std::exception& e) {
        throw error_at(line, column, e.what());
    }
}

long read_long(Cursor& in) {
    const int line = in.line();
    const int column = in.column();
    const Rat r = read_rational(in);
    if (denominator(r) != 1 || numerator(r) < std::numeric_limits<long>::min() ||
        numerator(r) > std::numeric_limits<long>::max())
        throw error_at(line, column, "expected an integer");
    return static_cast<long>(numerator(r));
}

RawQuat read_quaternion(Cursor& in) {
    RawQuat out;
    in.expect('(');
    for (int c = 0; c < 4; ++c) {
        in.skip_space();
        out[static_cast<std::size_t>(c)] = read_rational(in);
        in.skip_space();
        if (c < 3) in.expect(',');
    }
    in.expect(')');
    return out;
}

RawLine read_line(Cursor& in) {
    const int line = in.line();
    const int column = in.column();
    in.expect('[');
    in.skip_space();
    const RawQuat r0 = read_quaternion(in);
    in.skip_space();
    in.expect(';');
    in.skip_space();
    const RawQuat r1 = read_quaternion(in);
    in.skip_space();
    in.expect(']');
    const RatMat rows{{r0[0], r0[1], r0[2], r0[3]}, {r1[0], r1[1], r1[2], r1[3]}};
    if (rank(rows) != 2) throw error_at(line, column, "line rows are rationally dependent");
    return {r0, r1};
}

std::vector<int> read_int_list(Cursor& in) {
    std::vector<int> out;
    while (true) {
        in.skip_space();
        const int line = in.line();
        const int column = in.column();
        const long value = read_long(in);
        if (value < 1) throw error_at(line, column, "elements are 1-based");
        out.push_back(static_cast<int>(value));
        in.skip_space();
        if (!in.try_consume(',')) break;
    }
    return out;
}

/// `{{...},{...}}` is a partition over 1-based elements; `{...}` or `{}`
/// is a plain element set.
ScenarioValue read_braced(Cursor& in) {
    const int line = in.line();
    const int column = in.column();
    in.expect('{');
    in.skip_space();
    if (in.try_consume('}')) return RawIntSet{};
    if (in.peek() != '{') {
        const std::vector<int> elements = read_int_list(in);
        in.skip_space();
        in.expect('}');
        return RawIntSet(elements.begin(), elements.end());
    }
    std::vector<std::vector<int>> blocks;
    int max_element = 0;
    while (true) {
        in.expect('{');
        std::vector<int> block;
        for (int element : read_int_list(in)) {
            block.push_back(element - 1);
            max_element = std::max(max_element, element);
        }
        in.skip_space();
        in.expect('}');
        blocks.push_back(std::move(block));
        in.skip_space();
        if (!in.try_consume(',')) break;
        in.skip_space();
    }
    in.expect('}');
    try {
        return FinitePartition(max_element, std::move(blocks));
    } catch (const std::exception& e) {
        throw error_at(line, column, e.what());
    }
}

ScenarioValue read_descriptor(Cursor& in) {
    const int line = in.line();
    const int column = in.column();
    const std::string word = read_identifier(in);
    if (word == "left") return ParallelismDescriptor::left();
    if (word == "right") return ParallelismDescriptor::right();
    if (word != "blend") throw error_at(line, column, "unknown literal '" + word + "'");
    std::set<SquareClass> chooser;
    if (in.try_consume(':')) {
        while (true) {
            const int vline = in.line();
            const int vcolumn = in.column();
            const Rat value = read_rational(in);
            if (value == 0) throw error_at(vline, vcolumn, "invariant must be nonzero");
            chooser.insert(squarefree_part(value));
            if (!in.try_consume(',')) break;
        }
    }
    return ParallelismDescriptor::blend(std::move(chooser));
}

ScenarioValue read_literal(Cursor& in) {
    in.skip_space();
    const char c = in.peek();
    if (c == '(') return read_quaternion(in);
    if (c == '[') return read_line(in);
    if (c == '{') return read_braced(in);
    if (is_ident_start(c)) return read_descriptor(in);
    if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) return read_rational(in);
    in.fail("expected a literal");
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + " column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

Scenario parse_scenario(const std::string& text) {
    Scenario scenario;
    Cursor in(text);
    while (true) {
        in.skip_space();
        if (in.at_end()) break;
        if (!is_ident_start(in.peek())) in.fail("expected a name or command word");
        const int line = in.line();
        const int column = in.column();
        const std::string name = read_identifier(in);
        Cursor lookahead = in;
        lookahead.skip_space();
        if (lookahead.peek() != '=') {
            scenario.command.push_back(name);
            continue;
        }
        in.skip_space();
        in.expect('=');
        in.skip_space();
        if (in.at_end()) throw error_at(line, column, "binding '" + name + "' has no value");
        scenario.bindings.insert_or_assign(name, read_literal(in));
    }
    return scenario;
}

}  // namespace cliffpar
