#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "splitlab/cnf.hpp"

namespace splitlab {

struct ParseError : std::runtime_error {
    int line;

    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Reads DIMACS CNF: optional "c ..." comment lines, a "p cnf <vars> <clauses>"
// header, then zero-terminated clauses. Duplicate literals inside a clause are
// merged silently; tautological clauses are kept as parsed.
Formula parse_dimacs(std::istream& in);
Formula parse_dimacs(const std::string& text);

// Writes "p cnf <n> <m>" followed by one clause per line, literals in
// canonical order, space separated, trailing " 0".
void write_dimacs(const Formula& f, std::ostream& out);
std::string write_dimacs(const Formula& f);

}  // namespace splitlab
