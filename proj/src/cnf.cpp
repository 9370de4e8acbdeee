#include "ltr/cnf.hpp"

#include <charconv>
#include <set>

namespace ltr {

namespace {

struct Token {
    std::string text;
    int line;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> toks;
    int line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == '\n') {
            ++line;
            ++i;
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++i;
            continue;
        }
        if (ch == 'c' &&
            (i + 1 >= text.size() || text[i + 1] == ' ' || text[i + 1] == '\t' ||
             text[i + 1] == '\r' || text[i + 1] == '\n')) {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' &&
               text[i] != '\n')
            ++i;
        toks.push_back({std::string(text.substr(start, i - start)), line});
    }
    return toks;
}

int parse_int(const Token& t, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
        throw ParseError(std::string("expected ") + what + ", got '" + t.text + "'", t.line);
    return value;
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
    std::vector<Token> toks = tokenize(text);
    std::size_t i = 0;
    if (i >= toks.size() || toks[i].text != "p")
        throw ParseError("missing 'p cnf' header", toks.empty() ? 1 : toks[0].line);
    int header_line = toks[i].line;
    ++i;
    if (i >= toks.size() || toks[i].text != "cnf")
        throw ParseError("header must be 'p cnf <vars> <clauses>'", header_line);
    ++i;
    if (i + 1 >= toks.size()) throw ParseError("header must be 'p cnf <vars> <clauses>'", header_line);
    CnfFormula f;
    f.num_vars = parse_int(toks[i], "variable count");
    int declared_clauses = parse_int(toks[i + 1], "clause count");
    if (f.num_vars < 0 || declared_clauses < 0)
        throw ParseError("header counts must be nonnegative", header_line);
    i += 2;

    Clause current;
    int clause_start_line = 0;
    for (; i < toks.size(); ++i) {
        if (toks[i].text == "p") throw ParseError("duplicate 'p cnf' header", toks[i].line);
        int v = parse_int(toks[i], "literal");
        if (v == 0) {
            f.clauses.push_back(std::move(current));
            current.clear();
            continue;
        }
        if (current.empty()) clause_start_line = toks[i].line;
        int var = v < 0 ? -v : v;
        if (var > f.num_vars)
            throw ParseError("literal " + toks[i].text + " exceeds declared variable count " +
                                 std::to_string(f.num_vars),
                             toks[i].line);
        current.push_back({var, v < 0});
    }
    if (!current.empty())
        throw ParseError("clause not terminated by 0", clause_start_line);
    if (static_cast<int>(f.clauses.size()) != declared_clauses)
        throw ParseError("header declares " + std::to_string(declared_clauses) +
                             " clauses but " + std::to_string(f.clauses.size()) + " present",
                         header_line);
    return f;
}

std::string serialize_dimacs(const CnfFormula& f) {
    std::string out = "p cnf " + std::to_string(f.num_vars) + " " +
                      std::to_string(f.clauses.size()) + "\n";
    for (const Clause& cl : f.clauses) {
        for (const Literal& lit : cl) {
            if (lit.negated) out += '-';
            out += std::to_string(lit.var);
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

std::vector<std::string> validate_3sat(const CnfFormula& f) {
    std::vector<std::string> problems;
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const Clause& cl = f.clauses[i];
        std::string tag = "clause " + std::to_string(i + 1);
        if (cl.size() != 3)
            problems.push_back(tag + " has " + std::to_string(cl.size()) +
                               " literals, expected 3");
        std::set<int> vars;
        for (const Literal& lit : cl) vars.insert(lit.var);
        if (vars.size() != cl.size())
            problems.push_back(tag + " repeats a variable");
    }
    return problems;
}

bool eval(const CnfFormula& f, const Assignment& a) {
    if (static_cast<int>(a.size()) != f.num_vars)
        throw std::invalid_argument("assignment size does not match variable count");
    for (const Clause& cl : f.clauses) {
        bool sat = false;
        for (const Literal& lit : cl)
            if (a[lit.var - 1] != lit.negated) {
                sat = true;
                break;
            }
        if (!sat) return false;
    }
    return true;
}

SatResult enumerate_sat(const CnfFormula& f, std::uint64_t limit) {
    const int n = f.num_vars;
    const bool space_fits = n < 64;
    const std::uint64_t space = space_fits ? (std::uint64_t{1} << n) : 0;
    Assignment a(static_cast<std::size_t>(n), false);
    std::uint64_t tried = 0;
    for (std::uint64_t bits = 0; tried < limit; ++bits, ++tried) {
        if (space_fits && bits >= space) return {SatOutcome::Unsatisfiable, std::nullopt};
        // Variable 1 is the most significant position.
        for (int v = 0; v < n; ++v) a[v] = (bits >> (n - 1 - v)) & 1;
        if (eval(f, a)) return {SatOutcome::Satisfiable, a};
    }
    if (space_fits && tried >= space) return {SatOutcome::Unsatisfiable, std::nullopt};
    return {SatOutcome::Exhausted, std::nullopt};
}

}  // namespace ltr
