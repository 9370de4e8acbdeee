#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ltr/board.hpp"  // ParseError

namespace ltr {

struct Literal {
    int var = 0;  // 1-based
    bool negated = false;
    bool operator==(const Literal& o) const { return var == o.var && negated == o.negated; }
};

using Clause = std::vector<Literal>;

struct CnfFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;
};

// Assignment a: a[v-1] is the value of variable v.
using Assignment = std::vector<bool>;

// DIMACS CNF: 'c' comment lines, one 'p cnf <vars> <clauses>' header, then
// whitespace-separated nonzero literals with 0 ending each clause. Clauses of
// any arity are kept; validate_3sat reports the strict-form violations.
CnfFormula parse_dimacs(std::string_view text);
std::string serialize_dimacs(const CnfFormula& f);

std::vector<std::string> validate_3sat(const CnfFormula& f);

bool eval(const CnfFormula& f, const Assignment& a);

enum class SatOutcome : std::uint8_t { Satisfiable, Unsatisfiable, Exhausted };

struct SatResult {
    SatOutcome outcome = SatOutcome::Unsatisfiable;
    std::optional<Assignment> assignment;  // set iff Satisfiable
};

// Try assignments in lexicographic order (variable 1 most significant,
// false before true), checking at most `limit` of them. Unsatisfiable is only
// reported when the whole space fit inside the limit.
SatResult enumerate_sat(const CnfFormula& f, std::uint64_t limit);

}  // namespace ltr
