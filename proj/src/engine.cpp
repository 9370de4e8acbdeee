#include "ltr/engine.hpp"

namespace ltr {

GameState GameState::initial(const Board& b) {
    GameState s;
    s.board = b;
    s.tank = b.tank();
    s.facing = b.at(s.tank).facing;
    return s;
}

std::optional<Direction> mirror_action(MirrorCorner corner, Direction travel) {
    // A beam hitting either leg (the sides adjacent to the named corner)
    // pushes the mirror; a beam hitting the hypotenuse reflects 90 degrees.
    switch (corner) {
        case MirrorCorner::NW:
            switch (travel) {
                case Direction::West: return Direction::South;
                case Direction::North: return Direction::East;
                case Direction::East:
                case Direction::South: return std::nullopt;
            }
            break;
        case MirrorCorner::NE:
            switch (travel) {
                case Direction::East: return Direction::South;
                case Direction::North: return Direction::West;
                case Direction::West:
                case Direction::South: return std::nullopt;
            }
            break;
        case MirrorCorner::SE:
            switch (travel) {
                case Direction::East: return Direction::North;
                case Direction::South: return Direction::West;
                case Direction::West:
                case Direction::North: return std::nullopt;
            }
            break;
        case MirrorCorner::SW:
            switch (travel) {
                case Direction::West: return Direction::North;
                case Direction::South: return Direction::East;
                case Direction::East:
                case Direction::North: return std::nullopt;
            }
            break;
    }
    throw std::logic_error("bad mirror/travel");
}

LaserTrace trace_beam(const Board& b, Coord first, Direction dir) {
    LaserTrace t;
    const std::size_t cell_count =
        static_cast<std::size_t>(b.width()) * static_cast<std::size_t>(b.height());
    const std::size_t limit = 4 * cell_count;  // each cell has 4 entry directions
    Coord cur = first;
    Direction travel = dir;
    while (true) {
        if (!b.in_bounds(cur)) {
            t.terminal = TraceTerminal::ExitedBoard;
            return t;
        }
        if (t.events.size() >= limit)
            throw std::logic_error("beam trace exceeded the cell-entry bound");
        t.events.push_back({cur, travel});
        const Cell& cell = b.at(cur);
        switch (cell.kind) {
            case PieceKind::Empty:
                cur = step(cur, travel);
                continue;
            case PieceKind::Solid:
                t.terminal = TraceTerminal::AbsorbedBySolid;
                return t;
            case PieceKind::Goal:
                t.terminal = TraceTerminal::HitGoal;
                return t;
            case PieceKind::Tank:
                t.terminal = TraceTerminal::HitTank;
                return t;
            case PieceKind::Movable:
            case PieceKind::Mirror: {
                if (cell.kind == PieceKind::Mirror) {
                    if (auto out = mirror_action(cell.corner, travel)) {
                        travel = *out;
                        cur = step(cur, travel);
                        continue;
                    }
                }
                Coord behind = step(cur, travel);
                if (b.in_bounds(behind) && b.at(behind).kind == PieceKind::Empty) {
                    t.terminal = cell.kind == PieceKind::Movable ? TraceTerminal::PushedMovable
                                                                 : TraceTerminal::PushedMirror;
                    t.push_from = cur;
                    t.push_to = behind;
                } else {
                    t.terminal = TraceTerminal::BlockedPush;
                }
                return t;
            }
        }
    }
}

FireResult fire(GameState& s) {
    LaserTrace t = trace_beam(s.board, step(s.tank, s.facing), s.facing);
    if (t.push_from) {
        s.board.at(*t.push_to) = s.board.at(*t.push_from);
        s.board.at(*t.push_from) = Cell::empty();
    }
    if (t.terminal == TraceTerminal::HitGoal) s.solved = true;
    if (t.terminal == TraceTerminal::HitTank) s.failed = true;
    return {std::move(t)};
}

StepResult apply_move(GameState& s, Move m, MovementMode mode) {
    if (s.solved) return {MoveError::AfterSolved, std::nullopt};
    if (s.failed) return {MoveError::AfterFailed, std::nullopt};
    if (m == Move::Fire) {
        StepResult r;
        r.trace = fire(s).trace;
        return r;
    }
    Direction d;
    switch (m) {
        case Move::Up: d = Direction::North; break;
        case Move::Down: d = Direction::South; break;
        case Move::Left: d = Direction::West; break;
        case Move::Right: d = Direction::East; break;
        default: throw std::logic_error("bad move");
    }
    if (mode == MovementMode::Restricted &&
        (m == Move::Left || m == Move::Right))
        return {MoveError::ModeForbidden, std::nullopt};
    Coord dest = step(s.tank, d);
    bool open = s.board.in_bounds(dest) && s.board.at(dest).kind == PieceKind::Empty;
    if (!open) {
        if (mode == MovementMode::Restricted) return {MoveError::Blocked, std::nullopt};
        // Full mode: a blocked move still turns the tank in place.
        s.facing = d;
        s.board.at(s.tank) = Cell::tank(s.facing);
        return {};
    }
    s.board.at(s.tank) = Cell::empty();
    s.tank = dest;
    if (mode == MovementMode::Full) s.facing = d;
    s.board.at(s.tank) = Cell::tank(s.facing);
    return {};
}

static std::string move_error_reason(MoveError e, Move m) {
    std::string mv(1, move_char(m));
    switch (e) {
        case MoveError::Blocked: return "move " + mv + " blocked";
        case MoveError::ModeForbidden: return "move " + mv + " forbidden in restricted mode";
        case MoveError::AfterSolved: return "move after solve";
        case MoveError::AfterFailed: return "move after failure";
        case MoveError::None: break;
    }
    throw std::logic_error("bad move error");
}

VerifyReport simulate(const Board& b, const MoveScript& script, MovementMode mode) {
    VerifyReport rep;
    GameState s = GameState::initial(b);
    rep.states_visited = 1;
    for (std::size_t i = 0; i < script.size(); ++i) {
        StepResult r = apply_move(s, script[i], mode);
        if (!r.ok()) {
            rep.failure = {move_error_reason(r.error, script[i]), i};
            break;
        }
        ++rep.states_visited;
        if (r.trace) rep.cell_steps += r.trace->events.size();
        if (s.failed) {
            rep.failure = {"tank hit by its own laser", i};
            break;
        }
        if (s.solved && i + 1 < script.size()) {
            rep.failure = {"move after solve", i + 1};
            break;
        }
    }
    rep.solved = s.solved;
    rep.accepted = rep.solved && !rep.failure;
    rep.final_state = std::move(s);
    return rep;
}

}  // namespace ltr
