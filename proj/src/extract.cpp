#include "ltr/extract.hpp"

namespace ltr {

namespace {

bool commitment_piece(const Cell& c) {
    // compile() plants movable blocks; replace_movables swaps in pushable
    // mirrors that move along the same lanes.
    return c.kind == PieceKind::Movable ||
           (c.kind == PieceKind::Mirror && c.corner == MirrorCorner::NW);
}

}  // namespace

ExtractionReport extract(const Board& b, const ReductionMap& map, const MoveScript& script) {
    VerifyReport rep = simulate(b, script, MovementMode::Restricted);
    if (!rep.accepted) {
        std::string why = rep.failure ? rep.failure->reason : "script does not solve the board";
        throw std::invalid_argument("script rejected: " + why);
    }
    const Board& final_board = rep.final_state.board;
    ExtractionReport out;
    out.assignment.resize(map.vars.size(), true);
    out.decided.resize(map.vars.size(), false);
    for (std::size_t i = 0; i < map.vars.size(); ++i) {
        const VarSites& v = map.vars[i];
        if (!final_board.in_bounds(v.home) || !final_board.in_bounds(v.east) ||
            !final_board.in_bounds(v.south))
            throw std::invalid_argument("variable " + std::to_string(i + 1) +
                                        " sites fall outside the board");
        const bool at_home = commitment_piece(final_board.at(v.home));
        const bool at_east = commitment_piece(final_board.at(v.east));
        const bool at_south = commitment_piece(final_board.at(v.south));
        if (at_home + at_east + at_south != 1)
            throw std::invalid_argument("variable " + std::to_string(i + 1) +
                                        " has no single commitment block");
        if (at_east) {
            out.assignment[i] = true;
            out.decided[i] = true;
        } else if (at_south) {
            out.assignment[i] = false;
            out.decided[i] = true;
        }
        // At home: the solution never committed it; either value satisfies.
    }
    return out;
}

}  // namespace ltr
