#pragma once

// CPLEX LP file subset: one objective section, Subject To with <=/>=/=,
// a Binary list naming every variable, End. Comment lines start with '\'.

#include <stdexcept>
#include <string>

#include "combip/ilp.hpp"

namespace combip {

struct LpParseError : std::runtime_error {
    int line;
    int column;
    LpParseError(const std::string& message, int line_, int column_)
        : std::runtime_error(message + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

// Deterministic text: variables in index order, constraints in model order.
// `comments` lines are emitted verbatim after a leading "\ " prefix.
std::string export_lp(const IlpModel& model, const std::vector<std::string>& comments = {});

// Inverse of export_lp on the supported subset; throws LpParseError.
IlpModel parse_lp(const std::string& text);

}  // namespace combip
