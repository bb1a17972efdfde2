#include "splitlab/dimacs.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace splitlab {

namespace {

struct Cursor {
    std::istream& in;
    int line = 1;

    // Skips whitespace and comment lines, tracking the line count.
    void skip() {
        while (true) {
            int c = in.peek();
            if (c == EOF) return;
            if (c == '\n') {
                ++line;
                in.get();
            } else if (std::isspace(c)) {
                in.get();
            } else if (c == 'c') {
                std::string rest;
                std::getline(in, rest);
                ++line;
            } else {
                return;
            }
        }
    }

    bool read_int(long long& out) {
        skip();
        if (in.peek() == EOF) return false;
        if (!(in >> out)) throw ParseError(line, "expected an integer");
        return true;
    }
};

}  // namespace

Formula parse_dimacs(std::istream& in) {
    Cursor cur{in};
    cur.skip();
    std::string tok;
    if (!(in >> tok) || tok != "p") throw ParseError(cur.line, "missing 'p cnf' header");
    if (!(in >> tok) || tok != "cnf")
        throw ParseError(cur.line, "expected 'cnf' after 'p', got '" + tok + "'");
    long long n = 0, declared_m = 0;
    if (!(in >> n) || n < 0) throw ParseError(cur.line, "bad variable count in header");
    if (!(in >> declared_m) || declared_m < 0)
        throw ParseError(cur.line, "bad clause count in header");

    Formula f;
    f.num_vars = static_cast<int>(n);
    std::vector<Literal> lits;
    bool open_clause = false;
    long long v = 0;
    while (cur.read_int(v)) {
        if (v == 0) {
            f.clauses.push_back(Clause(std::move(lits)));
            lits.clear();
            open_clause = false;
            continue;
        }
        long long var = v < 0 ? -v : v;
        if (var > n)
            throw ParseError(cur.line, "literal " + std::to_string(v) +
                                           " exceeds declared variable count " + std::to_string(n));
        lits.push_back(lit(static_cast<int>(v)));
        open_clause = true;
    }
    if (open_clause) throw ParseError(cur.line, "clause not terminated by 0");
    if (static_cast<long long>(f.clauses.size()) != declared_m)
        throw ParseError(cur.line, "header declares " + std::to_string(declared_m) +
                                       " clauses, file has " + std::to_string(f.clauses.size()));
    return f;
}

Formula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

void write_dimacs(const Formula& f, std::ostream& out) {
    out << "p cnf " << f.num_vars << ' ' << f.m() << '\n';
    for (const Clause& c : f.clauses) {
        for (Literal l : c.literals()) out << to_dimacs(l) << ' ';
        out << "0\n";
    }
}

std::string write_dimacs(const Formula& f) {
    std::ostringstream out;
    write_dimacs(f, out);
    return out.str();
}

}  // namespace splitlab
