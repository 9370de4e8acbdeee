#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ltr/board.hpp"
#include "ltr/cnf.hpp"
#include "ltr/engine.hpp"
#include "ltr/reduce.hpp"

namespace ltr {

struct SearchConfig {
    std::size_t max_states = 1'000'000;  // visited-state budget
    std::optional<int> max_depth;        // script length ceiling
    MovementMode mode = MovementMode::Restricted;
    int jobs = 1;  // worker threads; results are identical for any value
};

struct SolveResult {
    enum class Kind : std::uint8_t { Solved, Unsolvable, Exhausted };
    Kind kind = Kind::Exhausted;
    MoveScript script;            // set iff Solved; a shortest solution
    std::size_t states_explored = 0;  // distinct states visited
};

// Breadth-first search over game states, move order U, D, L, R, F. Returns a
// shortest solution, deterministically the same script on every run.
// Unsolvable is only reported when the reachable space was fully swept.
SolveResult bfs_solve(const Board& b, const SearchConfig& cfg);

struct Exploration {
    std::vector<GameState> states;  // every reachable non-terminal state
    bool complete = false;          // false when a budget cut the sweep short
};

Exploration explore(const Board& b, const SearchConfig& cfg);

// Turn a satisfying assignment into a solving script for compile()'s board,
// using the map to locate firing rows. Throws invalid_argument when the
// assignment does not fit or does not satisfy the formula.
MoveScript synthesize(const CnfFormula& f, const Assignment& a, const ReductionMap& map);

}  // namespace ltr
