#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ltr/board.hpp"
#include "ltr/cnf.hpp"
#include "ltr/engine.hpp"

namespace ltr {

// A gadget template is a small board fragment plus named cells of interest.
// Templates have no tank; fixtures wrap them with a tank column for play.
struct GadgetTemplate {
    std::vector<std::string> rows;           // board-alphabet characters
    std::map<std::string, Coord> ports;      // template-local coordinates
    int height() const { return static_cast<int>(rows.size()); }
    int width() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
};

// One movable block commits a variable: pushed east it answers true and lets
// beams through the true lane, pushed south it answers false and opens the
// false lane. Ports: xin/nxin (beam entry rows), home/east/south (block).
GadgetTemplate build_literal_gadget();

// Three drop-in inputs above, one shared output lane. A beam falling into an
// input drops that column's mirror onto the output lane; a check beam fired
// across the matching lane row then turns up the column, turns east off the
// dropped mirror and leaves through the output port.
GadgetTemplate build_or_gadget();

// A pass-through that can be armed once: beams cross it west-to-east until a
// falling beam drops its mirror, after which crossing beams are sent south
// one column left of the armed mirror. A second arming attempt jams.
GadgetTemplate build_switch();

// Vertical chain of m movable blocks guarding a reflector that turns a check
// beam into the output row. Each input row pushes one block aside; the check
// passes only when every block is gone. m >= 2.
GadgetTemplate build_and_gadget(int fan_in);

enum class GadgetKind : std::uint8_t { And, Or, Literal, Switch };

// A small playable board: the gadget stamped next to an open tank column,
// with feeder mirrors where a gadget expects beams falling from above.
Board gadget_fixture(GadgetKind kind);

// Where compile() put the pieces for one variable.
struct VarSites {
    Coord home;    // the commitment block's starting cell
    Coord east;    // its cell when the variable is true
    Coord south;   // its cell when the variable is false
    int xin_row;   // firing row that commits false / emits true-lane beams
    int nxin_row;  // firing row that commits true / emits false-lane beams
};

// Where compile() put one clause. Arrays are indexed by the literal's
// position in the clause as written in the formula.
struct ClauseSites {
    Coord or_anchor;                 // top-left cell of the clause gadget
    std::array<int, 3> tank_rows;    // firing row checking each literal's lane
    std::array<int, 3> switch_rows;  // firing row arming each literal's switch
};

struct ReductionMap {
    std::vector<VarSites> vars;        // index v-1
    std::vector<ClauseSites> clauses;  // index j (clause order as written)
    Coord and_anchor;                  // reflector cell of the collector chain
    int and_tank_row = 0;              // firing row of the final check
    Coord goal;
    int tank_col = 0;
    MovementMode mode = MovementMode::Restricted;
};

struct ReductionStats {
    int vars = 0;
    int clauses = 0;
    int width = 0;
    int height = 0;
    long tiles = 0;       // non-empty cells
    long size_bound = 0;  // promised ceiling for width*height
};

struct Reduction {
    Board board;
    ReductionMap map;
    ReductionStats stats;
};

// Compile a strict three-literal formula into a board solvable exactly when
// the formula is satisfiable (restricted movement). Throws invalid_argument
// on malformed formulas (wrong arity, repeated variables, no clauses).
Reduction compile(const CnfFormula& f);

// Text form of a ReductionMap; parse accepts ';' comments and blank lines.
std::string serialize_map(const ReductionMap& m);
ReductionMap parse_map(std::string_view text);

// Verify a board is a fresh compile() output matching the map; throws
// invalid_argument describing the first mismatch.
void self_check(const Board& b, const ReductionMap& m);

// Swap every commitment block and collector block for a pushable mirror that
// behaves identically on the lanes the reduction uses. Requires a fresh
// compile() board; the map stays valid for the transformed board.
Board replace_movables(const Board& b, const ReductionMap& m);

// Rebuild the board for full movement: rows interleaved with blank rows and a
// two-column reflector fence sealing the tank column, so facing east is
// forced back by bumping and every eastward shot re-emerges on its row.
Board harden(const Board& b, const ReductionMap& m);

// Lift a restricted-mode solution of the original board to a full-mode
// solution of harden(board): U/D double, fires become bump-east plus a double
// shot, truncated at the solving move. Throws invalid_argument if the lifted
// script does not solve the hardened board.
MoveScript harden_script(const Board& hardened, const MoveScript& restricted);

}  // namespace ltr
