#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "multiclone/closure.hpp"

namespace multiclone {

struct ParseError : std::runtime_error {
    int line;

    ParseError(int line_number, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + reason),
          line(line_number) {}
};

struct NamedOp {
    std::string name;
    MultiOp op;
};

struct OpFile {
    Universe universe;
    std::vector<NamedOp> ops;  // declaration order
};

// Text format:
//   universe <k>
//   op <name> arity <n>
//   <a_1> ... <a_n> : <v1,v2,...|->
// Rows appear in ascending index order (first coordinate most significant);
// values are listed ascending, `-` denotes the empty set. Blank lines are
// ignored; names are unique and match [A-Za-z_][A-Za-z0-9_]*.
OpFile parse_opfile(std::string_view text);

std::string emit_opfile(const OpFile& file);

GeneratorSet to_generators(const OpFile& file);

// Convenience for embedding a single operation in a report.
std::string emit_single_op(const std::string& name, const MultiOp& op);

}  // namespace multiclone
