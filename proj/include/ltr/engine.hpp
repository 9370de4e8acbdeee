#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltr/board.hpp"

namespace ltr {

// Restricted play forbids Left/Right entirely and never changes facing; it is
// the mode reduction targets. Full play is the source game: moving turns the
// tank to face the move direction, and a blocked move still turns it.
enum class MovementMode : std::uint8_t { Restricted, Full };

struct GameState {
    Board board;      // tank cell kept in sync with tank/facing
    Coord tank;
    Direction facing = Direction::East;
    bool solved = false;
    bool failed = false;

    static GameState initial(const Board& b);
};

enum class TraceTerminal : std::uint8_t {
    ExitedBoard,
    AbsorbedBySolid,
    BlockedPush,
    PushedMovable,
    PushedMirror,
    HitGoal,
    HitTank,
};

struct LaserEvent {
    Coord cell;        // cell the beam entered
    Direction travel;  // direction it was travelling on entry
};

struct LaserTrace {
    std::vector<LaserEvent> events;  // every cell entered, blocking cell included
    TraceTerminal terminal = TraceTerminal::ExitedBoard;
    std::optional<Coord> push_from;  // set for Pushed* terminals
    std::optional<Coord> push_to;
};

// What a mirror does to a beam entering with the given travel direction:
// a direction means the beam leaves that way, nullopt means the beam pushes
// the mirror instead.
std::optional<Direction> mirror_action(MirrorCorner corner, Direction travel);

// Trace a beam without mutating anything. `first` is the first cell the beam
// occupies (already stepped from the emitter), `dir` its travel direction.
LaserTrace trace_beam(const Board& b, Coord first, Direction dir);

struct FireResult {
    LaserTrace trace;
};

// Fire the tank's laser, applying at most one push and latching solved/failed.
FireResult fire(GameState& s);

enum class MoveError : std::uint8_t { None, Blocked, ModeForbidden, AfterSolved, AfterFailed };

struct StepResult {
    MoveError error = MoveError::None;
    std::optional<LaserTrace> trace;  // set when the move was a fire
    bool ok() const { return error == MoveError::None; }
};

StepResult apply_move(GameState& s, Move m, MovementMode mode);

struct VerifyFailure {
    std::string reason;
    std::size_t move_index;  // 0-based index into the script
};

struct VerifyReport {
    bool solved = false;
    bool accepted = false;
    std::size_t states_visited = 0;  // initial state plus each successful move
    std::size_t cell_steps = 0;      // total beam cell entries across all fires
    std::optional<VerifyFailure> failure;
    GameState final_state;
};

// Replay a script from the board's initial state. Any illegal move, a fire
// that hits the tank, or a move left over after solving rejects the script.
VerifyReport simulate(const Board& b, const MoveScript& script, MovementMode mode);

}  // namespace ltr
