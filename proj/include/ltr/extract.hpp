#pragma once

#include "ltr/board.hpp"
#include "ltr/cnf.hpp"
#include "ltr/engine.hpp"
#include "ltr/reduce.hpp"

namespace ltr {

struct ExtractionReport {
    Assignment assignment;      // assignment[v-1]; undecided variables read true
    std::vector<bool> decided;  // decided[v-1]: the solution committed this variable
};

// Replay a script on a compiled board (restricted movement) and read the
// satisfying assignment off the final commitment-block positions. Throws
// invalid_argument when the script is rejected or a block sits nowhere a
// commitment could have left it.
ExtractionReport extract(const Board& b, const ReductionMap& map, const MoveScript& script);

}  // namespace ltr
