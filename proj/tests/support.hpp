#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ltr/engine.hpp"

namespace ltr_test {

inline std::string data_path(const std::string& name) {
    return std::string(LTR_TEST_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Direction the beam was travelling when it left the board, if it did.
inline std::optional<ltr::Direction> exit_direction(const ltr::LaserTrace& t,
                                                    const ltr::Board& b) {
    if (t.terminal != ltr::TraceTerminal::ExitedBoard || t.events.empty()) return std::nullopt;
    const ltr::LaserEvent& last = t.events.back();
    const ltr::Cell& c = b.at(last.cell);
    if (c.kind == ltr::PieceKind::Mirror) return ltr::mirror_action(c.corner, last.travel);
    return last.travel;
}

// True when the trace leaves the board heading east out of (row, width-1).
inline bool exits_east(const ltr::LaserTrace& t, const ltr::Board& b, int row) {
    auto d = exit_direction(t, b);
    return d && *d == ltr::Direction::East && t.events.back().cell.row == row &&
           t.events.back().cell.col == b.width() - 1;
}

// True when the trace leaves the board heading south out of (height-1, col).
inline bool exits_south(const ltr::LaserTrace& t, const ltr::Board& b, int col) {
    auto d = exit_direction(t, b);
    return d && *d == ltr::Direction::South && t.events.back().cell.col == col &&
           t.events.back().cell.row == b.height() - 1;
}

// The beam a state's tank would fire right now, without mutating anything.
inline ltr::LaserTrace peek_fire(const ltr::GameState& s) {
    return ltr::trace_beam(s.board, ltr::step(s.tank, s.facing), s.facing);
}

}  // namespace ltr_test
