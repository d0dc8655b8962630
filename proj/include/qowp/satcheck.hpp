#pragma once

// The 2^n sign-pattern expansion of a contradiction into n-ary CNF clauses
// and a brute-force satisfiability oracle over the full assignment space.
// DIMACS text in and out.

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qowp/core.hpp"

namespace qowp::sat {

struct Literal {
    int var = 0;  // zero-based index
    bool negated = false;

    friend bool operator==(Literal a, Literal b) noexcept {
        return a.var == b.var && a.negated == b.negated;
    }
};

struct CNFFormula {
    int variable_count = 0;
    std::vector<std::vector<Literal>> clauses;

    void validate() const {
        if (variable_count < 0) throw std::domain_error("sat: negative variable count");
        for (const auto& clause : clauses)
            for (Literal l : clause)
                if (l.var < 0 || l.var >= variable_count)
                    throw std::domain_error("sat: literal variable out of range");
    }
};

/// All 2^n sign patterns over n variables; every clause mentions every
/// variable once. At n = 3 these are the eight clauses whose conjunction
/// expands l AND NOT l, and the formula is unsatisfiable for every n.
inline CNFFormula expand_contradiction(int n) {
    if (n < 1 || n > 20) throw std::domain_error("sat: expansion size must be in 1..20");
    CNFFormula f;
    f.variable_count = n;
    const std::uint32_t span = std::uint32_t{1} << n;
    f.clauses.reserve(span);
    for (std::uint32_t pattern = 0; pattern < span; ++pattern) {
        std::vector<Literal> clause;
        clause.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            clause.push_back({v, ((pattern >> (n - 1 - v)) & 1u) != 0});
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

struct SatResult {
    bool satisfiable = false;
    std::optional<std::vector<bool>> witness;  // lowest assignment integer, bit i = variable i
};

/// Exhaustive evaluation of every assignment, counting from zero so the
/// returned witness is deterministic.
inline SatResult brute_force_sat(const CNFFormula& f, int max_vars = Caps{}.sat_max_vars) {
    f.validate();
    if (f.variable_count > max_vars)
        throw resource_error("sat: assignment space exceeds the enumeration cap");
    const std::uint64_t span = std::uint64_t{1} << f.variable_count;
    for (std::uint64_t assignment = 0; assignment < span; ++assignment) {
        bool all = true;
        for (const auto& clause : f.clauses) {
            bool clause_true = false;
            for (Literal l : clause) {
                const bool value = (assignment >> l.var) & 1u;
                if (value != l.negated) {
                    clause_true = true;
                    break;
                }
            }
            if (!clause_true) {
                all = false;
                break;
            }
        }
        if (all) {
            std::vector<bool> w(static_cast<std::size_t>(f.variable_count));
            for (int v = 0; v < f.variable_count; ++v) w[static_cast<std::size_t>(v)] = (assignment >> v) & 1u;
            return {true, w};
        }
    }
    return {false, std::nullopt};
}

// ---- DIMACS ----

inline std::string to_dimacs(const CNFFormula& f) {
    std::ostringstream os;
    os << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (Literal l : clause) os << (l.negated ? -(l.var + 1) : l.var + 1) << ' ';
        os << "0\n";
    }
    return os.str();
}

inline CNFFormula parse_dimacs(std::istream& in) {
    CNFFormula f;
    bool header_seen = false;
    std::size_t declared_clauses = 0;
    std::string line;
    std::vector<Literal> clause;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
        if (line[0] == 'p') {
            std::istringstream hs(line);
            std::string p, cnf;
            long vars = 0, cls = 0;
            if (!(hs >> p >> cnf >> vars >> cls) || cnf != "cnf" || vars < 0 || cls < 0)
                throw std::invalid_argument("sat: malformed DIMACS header");
            f.variable_count = static_cast<int>(vars);
            declared_clauses = static_cast<std::size_t>(cls);
            header_seen = true;
            continue;
        }
        if (!header_seen) throw std::invalid_argument("sat: DIMACS clauses before header");
        std::istringstream ls(line);
        long lit = 0;
        while (ls >> lit) {
            if (lit == 0) {
                f.clauses.push_back(clause);
                clause.clear();
            } else {
                clause.push_back({static_cast<int>(std::abs(lit)) - 1, lit < 0});
            }
        }
    }
    if (!header_seen) throw std::invalid_argument("sat: missing DIMACS header");
    if (!clause.empty()) throw std::invalid_argument("sat: clause not terminated by 0");
    if (f.clauses.size() != declared_clauses)
        throw std::invalid_argument("sat: clause count differs from header");
    f.validate();
    return f;
}

inline CNFFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

}  // namespace qowp::sat
